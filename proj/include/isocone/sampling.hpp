#pragma once

// Deterministic random generators for matrices, cones and posets.  Every
// sampler takes the engine by reference; all randomness in the project flows
// through explicitly seeded engines.

#include "isocone/cone.hpp"

#include <functional>
#include <random>

namespace isocone {

using Rng = std::mt19937_64;

// GUE-style hermitian with independent gaussian entries, scaled to the given
// Frobenius norm.
Hermitian random_hermitian(Rng& rng, int n, double fro_norm = 1.0);

// Haar-ish unitary from the QR of a complex gaussian matrix, phases fixed.
Mat random_unitary(Rng& rng, int n);

// Rank-r orthogonal projection with Haar-random range.
Projection random_projection(Rng& rng, int n, int rank);

Vec3 random_unit_vec3(Rng& rng);

// Uniform direction in the closed cap of the given center and angle.
Vec3 random_direction_in_cap(Rng& rng, const Vec3& center, double angle);

// Piecewise-linear nondecreasing function with 2..6 knots in [lo, hi],
// values drawn as sorted uniforms, constant extension.
IsotoneFunction random_isotone(Rng& rng, double lo, double hi);

// Random poset on k points: random DAG edges on a shuffled labeling,
// transitively closed.
Poset random_poset(Rng& rng, int k, double edge_prob = 0.4);

// Element sampler used by the axiom checker: draws elements labeled inside
// by the oracle.
using Sampler = std::function<BlockElement(Rng&)>;

// Samples strictly interior elements of a classified cone: blocks offset by
// poset height so every cross-block constraint has slack, block parts drawn
// inside the inner cones (shrunken caps for m2 regions).
Sampler interior_sampler(const ClassifiedIsocone& cone);

// Random classified cone: random poset, inner cones full on blocks of
// dimension != 2 and a random cap (angle in [0.15, 1.4]) or full on 2x2
// blocks.
ClassifiedIsocone random_classified_isocone(Rng& rng, int max_blocks = 4,
                                            int max_block_dim = 3);

}  // namespace isocone
