#pragma once

// Cone saturation: grows a finite generator set of Herm(N) under the
// pre-isocone closure operations (sums and nonnegative combinations,
// piecewise-linear isotone functional calculus, layer-cake projections,
// meets/joins of commuting projections) and watches for the triviality
// witness: full linear span plus conic containment of -g for every original
// generator.

#include "isocone/conic.hpp"
#include "isocone/hermitian.hpp"
#include "isocone/sampling.hpp"

#include <vector>

namespace isocone {

struct SaturationConfig {
    int max_rounds = 50;
    uint64_t seed = 1;
    double tol = 1e-9;
    // conic feasibility residual threshold for accepting -g (relative to
    // max(1, |g|))
    double witness_residual = 1e-7;
    int max_generators = 256;
    int max_projections = 128;
    int pair_sweeps_per_round = 400;
    int random_ops_per_round = 40;
};

struct SaturationRound {
    int round = 0;
    int span_dim = 0;
    bool triviality_witnessed = false;
    int generators = 0;
};

struct SaturationReport {
    int dim = 0;
    int span_target = 0;
    std::vector<SaturationRound> history;
    bool span_full = false;
    bool triviality_witnessed = false;
    std::vector<double> witness_residuals;  // one per original generator
    std::string note;
};

SaturationReport saturate(const std::vector<Hermitian>& generators, const SaturationConfig& cfg);

// Membership oracle over the conic hull of a frozen generator snapshot
// (includes +-identity); used to run the axiom checker on saturation cones.
class SaturationCone : public MembershipOracle {
  public:
    SaturationCone(std::vector<Hermitian> generators, double residual_tol = 1e-7);

    const BlockAlgebra& algebra() const override { return algebra_; }
    MembershipResult classify(const BlockElement& a, double tol) const override;
    MembershipResult classify_matrix(const Hermitian& a, double tol) const;

    const std::vector<Hermitian>& generators() const { return generators_; }

  private:
    BlockAlgebra algebra_;
    std::vector<Hermitian> generators_;
    RMat basis_;  // vectorized generators plus +-identity
    double residual_tol_;
};

}  // namespace isocone
