#pragma once

// Orders induced by an isocone: the inner ordering on the eigenvalue indices
// of a non-derogatory element, and the order on states and pure states.

#include "isocone/cone.hpp"
#include "isocone/sampling.hpp"

#include <cstdint>

namespace isocone {

// Non-derogatory element together with its ascending eigensystem: the
// identification of C*(a) with functions on {1..N}.
class SpectralFrame {
  public:
    explicit SpectralFrame(BlockElement element, double gap_tol = 1e-9);

    const BlockElement& element() const { return element_; }
    const SpectralDecomposition& spectral() const { return spectral_; }
    int levels() const { return static_cast<int>(spectral_.eigenvalues.size()); }
    double gap_tol() const { return gap_tol_; }

    // U diag(chi_S) U* sliced back into the block algebra.
    BlockElement indicator(uint32_t mask) const;

  private:
    BlockElement element_;
    SpectralDecomposition spectral_;
    double gap_tol_;
};

// Extracts the order the oracle induces on the eigenvalue indices of the
// frame element by querying all 2^N spectral indicator projections:
// i <= j iff every accepted indicator containing i also contains j.
// The result refines into the natural order of the indices.
Poset inner_order(const MembershipOracle& oracle, const SpectralFrame& frame, double tol);

struct StabilityReport {
    Poset base{1};
    int trials = 0;
    int agree = 0;
    int finer = 0;         // perturbed order strictly finer than the base
    int incompatible = 0;  // neither equal nor finer
    bool inconclusive = false;

    bool stable() const { return !inconclusive && trials > 0 && agree == trials; }
};

// Samples perturbations of the frame element in the ball of the given
// radius (inside the cone, non-derogatory) and compares the recovered
// orders with the base order.
StabilityReport inner_order_stability(const MembershipOracle& oracle, const SpectralFrame& frame,
                                      double radius, int trials, double tol, uint64_t seed);

enum class Comparison { less, greater, equivalent, incomparable };

const char* to_string(Comparison c);

// Pure state: a block index and a unit vector, phase-normalized so the
// first nonzero amplitude is real positive.
class PureState {
  public:
    PureState(int block, CVec psi);

    int block() const { return block_; }
    const CVec& vector() const { return psi_; }
    int dim() const { return static_cast<int>(psi_.size()); }

    // Bloch vector of the induced density matrix (2-dim states).
    Vec3 bloch() const;

    // |<phi|psi>| = 1 within tol
    bool same_state(const PureState& o, double tol = 1e-9) const;

  private:
    int block_;
    CVec psi_;
};

// Order of pure states under a classified cone: across blocks the block
// poset decides; in one block a full cone separates nothing beyond equality
// and an M_2 region decides by the dual-cone test on the Bloch difference.
Comparison pure_state_compare(const ClassifiedIsocone& cone, const PureState& phi,
                              const PureState& psi, double tol = 1e-9);

// Block-diagonal density matrix: positive, total trace one.
class DensityMatrix {
  public:
    explicit DensityMatrix(BlockElement rho, double tol = 1e-9);

    static DensityMatrix pure(const BlockAlgebra& a, const PureState& s);

    const BlockElement& element() const { return rho_; }

  private:
    BlockElement rho_;
};

struct StateCompareConfig {
    double tol = 1e-9;
    int samples = 256;  // polygon boundary discretization
};

// Decides rho <= rho' by testing tr((rho' - rho) a) >= -tol over a
// generating family of the cone: up-set block indicators, inner-cone
// extreme directions (closed form for caps, discretized for polygons) and
// spectrum-adapted probes on full blocks.  Exact for caps and full inner
// cones; sound up to the discretization gap for polygons.
Comparison state_compare(const ClassifiedIsocone& cone, const DensityMatrix& rho,
                         const DensityMatrix& rho_prime, const StateCompareConfig& cfg = {});

}  // namespace isocone
