#pragma once

// Dense hermitian linear algebra: spectra, continuous functional calculus,
// noncommutative meet/join, projections and their range lattice.

#include "isocone/types.hpp"

#include <functional>
#include <vector>

namespace isocone {

class Hermitian;

// Piecewise-linear nondecreasing real function.  Knots ascending, values
// nondecreasing; behaviour beyond the knot range is constant or linear
// (continuing the end slopes).
class IsotoneFunction {
  public:
    enum class Extension { constant, linear };

    IsotoneFunction(std::vector<double> knots, std::vector<double> values,
                    Extension extension = Extension::constant);

    double operator()(double x) const;

    const std::vector<double>& knots() const { return knots_; }
    const std::vector<double>& values() const { return values_; }
    Extension extension() const { return extension_; }

    static IsotoneFunction identity();
    static IsotoneFunction clamp(double lo, double hi);

  private:
    std::vector<double> knots_;
    std::vector<double> values_;
    Extension extension_;
};

// Self-adjoint N x N matrix.  Construction symmetrizes; asymmetry beyond the
// given tolerance is an input error.
class Hermitian {
  public:
    explicit Hermitian(const Mat& entries, double sym_tol = 1e-8);

    static Hermitian zero(int dim);
    static Hermitian identity(int dim);
    static Hermitian diagonal(const RVec& d);

    int dim() const { return static_cast<int>(mat_.rows()); }
    const Mat& mat() const { return mat_; }

    double norm() const { return mat_.norm(); }  // Frobenius
    double trace() const { return mat_.trace().real(); }

    Hermitian operator+(const Hermitian& o) const;
    Hermitian operator-(const Hermitian& o) const;
    Hermitian operator*(double s) const;
    friend Hermitian operator*(double s, const Hermitian& a) { return a * s; }

  private:
    struct Trusted {};
    Hermitian(Mat m, Trusted) : mat_(std::move(m)) {}
    Mat mat_;

    friend Hermitian hermitian_unchecked(Mat m);
};

// Internal fast path for matrices that are hermitian by construction.
Hermitian hermitian_unchecked(Mat m);

// Eigensystem with ascending eigenvalues and deterministic eigenvector
// phases (first component of largest magnitude made real positive).
struct SpectralDecomposition {
    RVec eigenvalues;   // ascending
    Mat eigenvectors;   // unitary, columns

    Mat reconstruct() const;
};

// Cyclic Jacobi eigensolver for hermitian matrices.  Deterministic; converges
// when the off-diagonal Frobenius mass drops below 1e-12 * ||a||.
SpectralDecomposition eig_hermitian(const Hermitian& a, double tol = 1e-12);

// Continuous functional calculus: U diag(f(lambda)) U*.  Throws
// FunctionDomainError when f evaluates to a non-finite value on the spectrum.
Hermitian apply_function(const std::function<double(double)>& f, const Hermitian& a);
Hermitian apply_function(const IsotoneFunction& f, const Hermitian& a);

Hermitian abs_op(const Hermitian& a);

// a v b = (a + b + |a-b|)/2,  a ^ b = (a + b - |a-b|)/2.
Hermitian join(const Hermitian& a, const Hermitian& b);
Hermitian meet(const Hermitian& a, const Hermitian& b);

// True iff all consecutive eigenvalue gaps exceed gap_tol.
bool is_nonderogatory(const Hermitian& a, double gap_tol = 1e-9);

// Orthogonal projection with its rank.  Construction validates idempotency
// and integer trace.
class Projection {
  public:
    explicit Projection(const Hermitian& matrix, double tol = 1e-7);

    static Projection zero(int dim);
    static Projection identity(int dim);
    // Projection onto the column span of basis (columns need not be
    // orthonormal; rank revealed by singular-value threshold).
    static Projection onto_span(const Mat& basis, double sv_tol = 1e-9);

    int dim() const { return matrix_.dim(); }
    int rank() const { return rank_; }
    const Hermitian& matrix() const { return matrix_; }
    const Mat& mat() const { return matrix_.mat(); }

    // Orthonormal basis of the range (dim x rank), deterministic.
    Mat range_basis(double sv_tol = 1e-9) const;

  private:
    Projection(Hermitian m, int r) : matrix_(std::move(m)), rank_(r) {}
    Hermitian matrix_;
    int rank_;
};

// Orthonormal basis of the column span of m, rank revealed at sv_tol
// (relative to the largest singular value).  Deterministic column phases.
Mat orthonormal_range(const Mat& m, double sv_tol = 1e-9);

// Range lattice: meet projects onto range(p) n range(q), join onto
// range(p) + range(q).
Projection proj_meet(const Projection& p, const Projection& q, double tol = 1e-9);
Projection proj_join(const Projection& p, const Projection& q, double tol = 1e-9);

// Writes a = sum_i lambda_i p_i + lambda * 1 with lambda = smallest
// eigenvalue, lambda_i > 0 the gaps between consecutive distinct eigenvalue
// clusters and p_i the spectral projections onto {eigenvalue >= mu_{i+1}}.
// The p_i form a chain of commuting projections.
struct LayerCake {
    std::vector<Projection> projections;
    std::vector<double> weights;  // positive, same length
    double shift = 0.0;

    Hermitian reconstruct(int dim) const;
};

LayerCake layer_cake(const Hermitian& a, double cluster_tol = 1e-9);

// Spectral projection onto the eigenvalue clusters with value >= threshold.
// Safe for derogatory inputs (only cluster data is used).
Projection spectral_projection_above(const Hermitian& a, double threshold,
                                     double cluster_tol = 1e-9);

}  // namespace isocone
