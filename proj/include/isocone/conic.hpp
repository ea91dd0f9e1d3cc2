#pragma once

// Real vectorization of hermitian elements, incremental span-rank tracking
// and nonnegative least squares for conic feasibility.

#include "isocone/block_algebra.hpp"

#include <vector>

namespace isocone {

// Isometric real coordinates of a hermitian matrix: diagonal entries, then
// sqrt(2) * (Re, Im) of the strictly upper triangle.  Preserves the
// Frobenius inner product, so real spans match hermitian spans.
RVec real_vectorize(const Hermitian& a);
RVec real_vectorize(const BlockElement& a);

// Incremental modified Gram-Schmidt rank tracker.
class SpanTracker {
  public:
    explicit SpanTracker(double rel_tol = 1e-9) : rel_tol_(rel_tol) {}

    // Returns true if the vector increased the rank.
    bool add(const RVec& v);
    int rank() const { return static_cast<int>(basis_.size()); }
    // Norm of the component of v orthogonal to the current span.
    double residual(const RVec& v) const;

  private:
    std::vector<RVec> basis_;  // orthonormal
    double rel_tol_;
};

// Lawson-Hanson nonnegative least squares: minimizes |A x - b| over x >= 0.
struct NnlsResult {
    RVec x;
    double residual = 0.0;
};

NnlsResult nnls(const RMat& a, const RVec& b, int max_iter = 0);

}  // namespace isocone
