#pragma once

// Canonical decomposition of a pair of orthogonal projections: the five
// intersection summands, the generic-part operator H with spectrum in (0,1),
// the spectrum of convex combinations t p_L + (1-t) p_N, and the 16-element
// subspace lattice the pair generates.

#include "isocone/hermitian.hpp"
#include "isocone/poset.hpp"

#include <string>
#include <vector>

namespace isocone {

// Orthonormal bases of the canonical summands (possibly zero columns), plus
// the generic-part data.  The L0 basis diagonalizes H (eigenvalues h
// ascending); W = sqrt(h (1 - h)); R maps L0' to L0 and is stored in the
// (l0, l0prime) bases.
struct HalmosData {
    Mat l_and_n;          // L n N
    Mat l_and_nperp;      // L n N^perp
    Mat lperp_and_n;      // L^perp n N
    Mat lperp_and_nperp;  // L^perp n N^perp
    Mat l0, l0prime;      // generic parts, equal dimension d0
    RVec h;               // sigma(H), ascending, inside (0,1)
    Mat r;                // unitary L0' -> L0

    int d0() const { return static_cast<int>(l0.cols()); }
    RVec w() const;  // sqrt(h(1-h))

    Hermitian reconstruct_p_l(int dim) const;
    Hermitian reconstruct_p_n(int dim) const;
    // L0' basis rotated by R* so the generic part splits into 2x2 channels
    // [[1-h_i, w_i], [w_i, h_i]].
    Mat l0prime_adapted() const;
};

// Principal-angle based decomposition.  angle_tol separates intersection
// (cos = 1) and orthogonal (cos = 0) directions from the generic ones.
HalmosData halmos_decompose(const Projection& p_l, const Projection& p_n,
                            double angle_tol = 1e-8);

enum class ComboLabel { zero, s_minus, low_middle, high_middle, s_plus, one };

std::string combo_label_name(ComboLabel label, double t);

struct ComboGroup {
    ComboLabel label;
    std::vector<double> values;  // one per eigenvector column
    Mat vectors;                 // eigenvectors, columns
};

// Labeled eigensystem of t p_L + (1-t) p_N.  Empty groups are omitted; at
// t = 1/2 the two middle groups merge into low_middle with value 1/2.
struct ComboSpectrum {
    double t = 0.5;
    std::vector<ComboGroup> groups;

    bool has(ComboLabel label) const;
    const ComboGroup& group(ComboLabel label) const;
};

ComboSpectrum convex_combo_spectrum(const Projection& p_l, const Projection& p_n, double t,
                                    double angle_tol = 1e-8);

// One node of the generated lattice: O + sum of the chosen generators, where
// O = L n N and the generators are A1 = L n N^perp, A2 = L^perp n N,
// A3 = L0, A4 = N0.
struct LatticeNode {
    unsigned mask = 0;  // bits 0..3 pick A1..A4
    Projection projection;
};

// The 16-element distributive sublattice generated by a non-commuting pair.
// Throws DegenerateLatticeError for commuting inputs and AmbiguityError when
// the nodes fail to be pairwise distinct or the lattice identities
// L0 (+) N0 = W, N0 n L0' = 0, N0' (+) L0 = W fail at tolerance.
std::vector<LatticeNode> generated_lattice16(const Projection& p_l, const Projection& p_n,
                                             double tol = 1e-7);

// Upper bound for the order induced on sigma(t p_L + (1-t) p_N) by any
// isocone containing both projections: six labeled levels, 0 minimum, 1
// maximum, t and 1-t mutually incomparable and incomparable with S+-.
// At t = 1/2 the middle pair collapses to one element (five levels).
struct CororderBound {
    Poset poset{1};
    std::vector<std::string> labels;  // ascending eigenvalue positions
};

CororderBound cororder_bound(double t);

}  // namespace isocone
