#pragma once

// Reconstruction of the classified normal form (block poset + inner cones)
// from a membership oracle, and two-sided agreement checking between an
// oracle and a candidate cone.

#include "isocone/cone.hpp"
#include "isocone/sampling.hpp"

#include <vector>

namespace isocone {

struct ClassifyConfig {
    int trials = 500;     // interior samples for poset recovery
    int grid = 2562;      // sphere grid for inner-cone recovery
    double tol = 1e-9;
    uint64_t seed = 1;
    Sampler sampler;      // must produce elements the oracle labels inside
};

// Smallest enclosing ball of points in R^3 (Welzl).
struct Ball3 {
    Vec3 center = Vec3::Zero();
    double radius = 0.0;
};

Ball3 smallest_enclosing_ball(std::vector<Vec3> points, uint64_t seed = 7);

// Smallest spherical cap containing the given unit directions: center from
// the enclosing-ball direction, angle the largest distance to it.  Returns
// angle > pi/2 when no proper cap contains the set.
struct FittedCap {
    Vec3 center = Vec3::UnitZ();
    double angle = 0.0;
};

FittedCap smallest_enclosing_cap(const std::vector<Vec3>& directions, uint64_t seed = 7);

// Declares x <= y iff every sampled inside element satisfies the max/min
// spectral inequality and the separating probe (x-block 1, y-block 0,
// f^x padding elsewhere) is rejected by the oracle.  Probes are re-run to a
// fixpoint as relations fall away; an inconsistent final relation raises
// AmbiguityError with the offending pairs.
Poset recover_poset(const MembershipOracle& oracle, const BlockAlgebra& a,
                    const ClassifyConfig& cfg);

struct RecoveredInner {
    InnerCone cone;
    std::vector<Vec3> accepted;  // accepted Bloch directions (m2 blocks only)
};

// Blocks of dimension != 2 are full; 2x2 blocks are probed on a sphere grid
// with f^x padding from the given poset, and the accepted directions are
// wrapped in the smallest enclosing cap (over-approximation for polygon
// regions).  Accepted sets reaching past a hemisphere normalize to full.
RecoveredInner recover_inner(const MembershipOracle& oracle, const BlockAlgebra& a, int x,
                             const Poset& poset, const ClassifyConfig& cfg);

struct ClassificationResult {
    Poset poset{1};
    std::vector<RecoveredInner> inner;
    int samples_used = 0;

    ClassifiedIsocone to_isocone(const BlockAlgebra& a) const;
};

ClassificationResult classify_oracle(const MembershipOracle& oracle, const BlockAlgebra& a,
                                     const ClassifyConfig& cfg);

struct DisagreementWitness {
    BlockElement element;
    Verdict oracle_verdict;
    Verdict candidate_verdict;
};

struct AgreementReport {
    int compared = 0;
    int agreed = 0;
    std::vector<DisagreementWitness> witnesses;

    double agreement() const { return compared == 0 ? 1.0 : double(agreed) / compared; }
    bool full_agreement() const { return agreed == compared; }
};

// Two-sided membership comparison on random elements (interior- and
// boundary-biased), all 0/1 block-scalar patterns when the total dimension
// is at most 12, and Bloch-direction probes on 2x2 blocks.  Boundary
// verdicts on either side are not counted as disagreements.
AgreementReport verify_classification(const MembershipOracle& oracle,
                                      const ClassifiedIsocone& candidate,
                                      const ClassifyConfig& cfg);

}  // namespace isocone
