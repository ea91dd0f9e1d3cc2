#include "isocone/hermitian.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace isocone {

// ---------------------------------------------------------------------------
// IsotoneFunction

IsotoneFunction::IsotoneFunction(std::vector<double> knots, std::vector<double> values,
                                 Extension extension)
    : knots_(std::move(knots)), values_(std::move(values)), extension_(extension) {
    if (knots_.empty() || knots_.size() != values_.size())
        throw InputError("IsotoneFunction: knots and values must be nonempty and equal length");
    for (std::size_t i = 1; i < knots_.size(); ++i) {
        if (!(knots_[i] > knots_[i - 1]))
            throw InputError("IsotoneFunction: knots must be strictly ascending");
        if (values_[i] < values_[i - 1])
            throw InputError("IsotoneFunction: values must be nondecreasing");
    }
}

double IsotoneFunction::operator()(double x) const {
    const std::size_t n = knots_.size();
    if (n == 1) {
        if (extension_ == Extension::constant) return values_[0];
        return values_[0];  // single knot: zero end slope either way
    }
    if (x <= knots_.front()) {
        if (extension_ == Extension::constant) return values_.front();
        const double s = (values_[1] - values_[0]) / (knots_[1] - knots_[0]);
        return values_.front() + s * (x - knots_.front());
    }
    if (x >= knots_.back()) {
        if (extension_ == Extension::constant) return values_.back();
        const double s = (values_[n - 1] - values_[n - 2]) / (knots_[n - 1] - knots_[n - 2]);
        return values_.back() + s * (x - knots_.back());
    }
    const auto it = std::upper_bound(knots_.begin(), knots_.end(), x);
    const std::size_t j = static_cast<std::size_t>(it - knots_.begin());
    const double t = (x - knots_[j - 1]) / (knots_[j] - knots_[j - 1]);
    return values_[j - 1] + t * (values_[j] - values_[j - 1]);
}

IsotoneFunction IsotoneFunction::identity() {
    return IsotoneFunction({0.0, 1.0}, {0.0, 1.0}, Extension::linear);
}

IsotoneFunction IsotoneFunction::clamp(double lo, double hi) {
    if (!(lo < hi)) throw InputError("IsotoneFunction::clamp: need lo < hi");
    return IsotoneFunction({lo, hi}, {lo, hi}, Extension::constant);
}

// ---------------------------------------------------------------------------
// Hermitian

Hermitian::Hermitian(const Mat& entries, double sym_tol) {
    if (entries.rows() != entries.cols() || entries.rows() == 0)
        throw InputError("Hermitian: matrix must be square and nonempty");
    const Mat adj = entries.adjoint();
    const double asym = (entries - adj).norm();
    if (asym > sym_tol * std::max(1.0, entries.norm()))
        throw InputError("Hermitian: input is not conjugate-symmetric (asymmetry " +
                         std::to_string(asym) + ")");
    mat_ = 0.5 * (entries + adj);
    // force exactly real diagonal
    for (Eigen::Index i = 0; i < mat_.rows(); ++i) mat_(i, i) = Complex(mat_(i, i).real(), 0.0);
}

Hermitian hermitian_unchecked(Mat m) { return Hermitian(std::move(m), Hermitian::Trusted{}); }

Hermitian Hermitian::zero(int dim) { return hermitian_unchecked(Mat::Zero(dim, dim)); }

Hermitian Hermitian::identity(int dim) { return hermitian_unchecked(Mat::Identity(dim, dim)); }

Hermitian Hermitian::diagonal(const RVec& d) {
    Mat m = Mat::Zero(d.size(), d.size());
    for (Eigen::Index i = 0; i < d.size(); ++i) m(i, i) = d(i);
    return hermitian_unchecked(std::move(m));
}

Hermitian Hermitian::operator+(const Hermitian& o) const {
    if (dim() != o.dim()) throw InputError("Hermitian: dimension mismatch");
    return hermitian_unchecked(mat_ + o.mat_);
}

Hermitian Hermitian::operator-(const Hermitian& o) const {
    if (dim() != o.dim()) throw InputError("Hermitian: dimension mismatch");
    return hermitian_unchecked(mat_ - o.mat_);
}

Hermitian Hermitian::operator*(double s) const { return hermitian_unchecked(mat_ * s); }

// ---------------------------------------------------------------------------
// Cyclic Jacobi eigensolver

Mat SpectralDecomposition::reconstruct() const {
    return eigenvectors * eigenvalues.asDiagonal().toDenseMatrix().cast<Complex>() *
           eigenvectors.adjoint();
}

namespace {

// Columns of the unitary diagonalizing [[alpha, beta], [conj(beta), gamma]].
// Returns (c, s) such that the eigenvector of the larger eigenvalue is
// (beta, t)/n; assembled by the caller.
struct TwoByTwoEig {
    Complex v_plus_0, v_plus_1;   // eigenvector of the larger eigenvalue
    Complex v_minus_0, v_minus_1;
};

TwoByTwoEig eig2(double alpha, Complex beta, double gamma) {
    const double delta = 0.5 * (gamma - alpha);
    const double ab = std::abs(beta);
    const double r = std::hypot(delta, ab);
    // t = delta + r computed stably when delta < 0
    const double t = (delta >= 0.0) ? delta + r : (ab * ab) / (r - delta);
    const double n = std::sqrt(ab * ab + t * t);
    TwoByTwoEig e;
    if (n == 0.0) {  // beta == 0 and degenerate: identity rotation
        e.v_plus_0 = 0.0; e.v_plus_1 = 1.0;
        e.v_minus_0 = 1.0; e.v_minus_1 = 0.0;
        return e;
    }
    e.v_plus_0 = beta / n;
    e.v_plus_1 = t / n;
    e.v_minus_0 = -t / n;
    e.v_minus_1 = std::conj(beta) / n;
    return e;
}

double offdiag_norm(const Mat& a) {
    double s = 0.0;
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

void fix_column_phase(Mat& u, Eigen::Index col) {
    // first component of largest magnitude made real positive
    const Eigen::Index n = u.rows();
    double best = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) best = std::max(best, std::abs(u(i, col)));
    if (best == 0.0) return;
    Eigen::Index pick = 0;
    for (Eigen::Index i = 0; i < n; ++i) {
        if (std::abs(u(i, col)) >= best - 1e-12 * best) { pick = i; break; }
    }
    const Complex z = u(pick, col);
    const double az = std::abs(z);
    if (az > 0.0) u.col(col) *= std::conj(z) / az;
}

}  // namespace

SpectralDecomposition eig_hermitian(const Hermitian& a, double tol) {
    const int n = a.dim();
    Mat m = a.mat();
    Mat v = Mat::Identity(n, n);
    const double scale = std::max(m.norm(), 1e-300);
    const int max_sweeps = 64;

    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        if (offdiag_norm(m) <= tol * scale) break;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const Complex beta = m(p, q);
                if (std::abs(beta) <= 1e-300) continue;
                const TwoByTwoEig e =
                    eig2(m(p, p).real(), beta, m(q, q).real());
                // J columns: (v_minus, v_plus) acting on the (p,q) plane
                const Complex j00 = e.v_minus_0, j01 = e.v_plus_0;
                const Complex j10 = e.v_minus_1, j11 = e.v_plus_1;
                // m <- J* m J applied to rows/cols p,q
                for (int k = 0; k < n; ++k) {
                    const Complex mkp = m(k, p), mkq = m(k, q);
                    m(k, p) = mkp * j00 + mkq * j10;
                    m(k, q) = mkp * j01 + mkq * j11;
                }
                for (int k = 0; k < n; ++k) {
                    const Complex mpk = m(p, k), mqk = m(q, k);
                    m(p, k) = std::conj(j00) * mpk + std::conj(j10) * mqk;
                    m(q, k) = std::conj(j01) * mpk + std::conj(j11) * mqk;
                }
                m(p, q) = 0.0;
                m(q, p) = 0.0;
                m(p, p) = Complex(m(p, p).real(), 0.0);
                m(q, q) = Complex(m(q, q).real(), 0.0);
                for (int k = 0; k < n; ++k) {
                    const Complex vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = vkp * j00 + vkq * j10;
                    v(k, q) = vkp * j01 + vkq * j11;
                }
            }
        }
    }

    // ascending sort, stable under exact ties
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return m(i, i).real() < m(j, j).real(); });

    SpectralDecomposition out;
    out.eigenvalues = RVec(n);
    out.eigenvectors = Mat(n, n);
    for (int k = 0; k < n; ++k) {
        out.eigenvalues(k) = m(order[k], order[k]).real();
        out.eigenvectors.col(k) = v.col(order[k]);
        fix_column_phase(out.eigenvectors, k);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Functional calculus

Hermitian apply_function(const std::function<double(double)>& f, const Hermitian& a) {
    const SpectralDecomposition s = eig_hermitian(a);
    RVec fv(s.eigenvalues.size());
    for (Eigen::Index i = 0; i < fv.size(); ++i) {
        const double y = f(s.eigenvalues(i));
        if (!std::isfinite(y))
            throw FunctionDomainError("apply_function: f not finite at eigenvalue " +
                                      std::to_string(s.eigenvalues(i)));
        fv(i) = y;
    }
    Mat m = s.eigenvectors * fv.asDiagonal().toDenseMatrix().cast<Complex>() *
            s.eigenvectors.adjoint();
    return hermitian_unchecked(0.5 * (m + Mat(m.adjoint())));
}

Hermitian apply_function(const IsotoneFunction& f, const Hermitian& a) {
    return apply_function([&f](double x) { return f(x); }, a);
}

Hermitian abs_op(const Hermitian& a) {
    return apply_function([](double x) { return std::abs(x); }, a);
}

Hermitian join(const Hermitian& a, const Hermitian& b) {
    if (a.dim() != b.dim()) throw InputError("join: dimension mismatch");
    return (a + b + abs_op(a - b)) * 0.5;
}

Hermitian meet(const Hermitian& a, const Hermitian& b) {
    if (a.dim() != b.dim()) throw InputError("meet: dimension mismatch");
    return (a + b - abs_op(a - b)) * 0.5;
}

bool is_nonderogatory(const Hermitian& a, double gap_tol) {
    const SpectralDecomposition s = eig_hermitian(a);
    for (Eigen::Index i = 1; i < s.eigenvalues.size(); ++i)
        if (s.eigenvalues(i) - s.eigenvalues(i - 1) <= gap_tol) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Projections

Projection::Projection(const Hermitian& matrix, double tol) : matrix_(matrix), rank_(0) {
    const Mat& m = matrix.mat();
    const double scale = std::max(1.0, m.norm());
    if ((m * m - m).norm() > tol * scale)
        throw InputError("Projection: matrix is not idempotent");
    const double tr = matrix.trace();
    rank_ = static_cast<int>(std::lround(tr));
    if (std::abs(tr - rank_) > tol * scale || rank_ < 0 || rank_ > matrix.dim())
        throw InputError("Projection: trace is not a valid rank");
}

Projection Projection::zero(int dim) { return Projection(Hermitian::zero(dim), 0); }

Projection Projection::identity(int dim) { return Projection(Hermitian::identity(dim), dim); }

Mat orthonormal_range(const Mat& m, double sv_tol) {
    if (m.cols() == 0 || m.norm() == 0.0) return Mat(m.rows(), 0);
    Eigen::JacobiSVD<Mat> svd(m, Eigen::ComputeThinU);
    const auto& sv = svd.singularValues();
    const double cut = sv_tol * std::max(1.0, sv(0));
    int r = 0;
    while (r < sv.size() && sv(r) > cut) ++r;
    Mat u = svd.matrixU().leftCols(r);
    for (int c = 0; c < r; ++c) {
        // deterministic phase, same rule as eigenvectors
        Eigen::Index pick = 0;
        double best = 0.0;
        for (Eigen::Index i = 0; i < u.rows(); ++i) best = std::max(best, std::abs(u(i, c)));
        for (Eigen::Index i = 0; i < u.rows(); ++i)
            if (std::abs(u(i, c)) >= best - 1e-12 * best) { pick = i; break; }
        const Complex z = u(pick, c);
        if (std::abs(z) > 0.0) u.col(c) *= std::conj(z) / std::abs(z);
    }
    return u;
}

Projection Projection::onto_span(const Mat& basis, double sv_tol) {
    const Mat q = orthonormal_range(basis, sv_tol);
    Mat p = q * q.adjoint();
    return Projection(hermitian_unchecked(0.5 * (p + Mat(p.adjoint()))),
                      static_cast<int>(q.cols()));
}

Mat Projection::range_basis(double sv_tol) const { return orthonormal_range(mat(), sv_tol); }

Projection proj_join(const Projection& p, const Projection& q, double tol) {
    if (p.dim() != q.dim()) throw InputError("proj_join: dimension mismatch");
    Mat stacked(p.dim(), p.rank() + q.rank());
    stacked << p.range_basis(tol), q.range_basis(tol);
    if (stacked.cols() == 0) return Projection::zero(p.dim());
    return Projection::onto_span(stacked, tol);
}

Projection proj_meet(const Projection& p, const Projection& q, double tol) {
    if (p.dim() != q.dim()) throw InputError("proj_meet: dimension mismatch");
    // range(p) n range(q) = (range(p)^perp + range(q)^perp)^perp
    const int n = p.dim();
    const Hermitian ip = Hermitian::identity(n) - p.matrix();
    const Hermitian iq = Hermitian::identity(n) - q.matrix();
    const Projection pc(ip, 1e-7), qc(iq, 1e-7);
    const Projection j = proj_join(pc, qc, tol);
    Mat m = Mat::Identity(n, n) - j.mat();
    return Projection(hermitian_unchecked(0.5 * (m + Mat(m.adjoint()))), n - j.rank());
}

// ---------------------------------------------------------------------------
// Layer cake

namespace {

// ascending distinct cluster representatives (means) and the index of the
// first eigenvalue of each cluster
struct Clusters {
    std::vector<double> value;
    std::vector<int> start;  // start[i] = first eigenindex of cluster i
};

Clusters cluster_eigenvalues(const RVec& ev, double tol) {
    Clusters c;
    const int n = static_cast<int>(ev.size());
    int i = 0;
    while (i < n) {
        int j = i;
        while (j + 1 < n && ev(j + 1) - ev(j) <= tol) ++j;
        double mean = 0.0;
        for (int k = i; k <= j; ++k) mean += ev(k);
        c.value.push_back(mean / (j - i + 1));
        c.start.push_back(i);
        i = j + 1;
    }
    return c;
}

}  // namespace

Hermitian LayerCake::reconstruct(int dim) const {
    Hermitian out = Hermitian::identity(dim) * shift;
    for (std::size_t i = 0; i < projections.size(); ++i)
        out = out + projections[i].matrix() * weights[i];
    return out;
}

LayerCake layer_cake(const Hermitian& a, double cluster_tol) {
    const SpectralDecomposition s = eig_hermitian(a);
    const double tol = cluster_tol * std::max(1.0, a.norm());
    const Clusters c = cluster_eigenvalues(s.eigenvalues, tol);
    const int n = a.dim();
    LayerCake out;
    out.shift = c.value.front();
    for (std::size_t i = 1; i < c.value.size(); ++i) {
        out.weights.push_back(c.value[i] - c.value[i - 1]);
        RVec ind = RVec::Zero(n);
        for (int k = c.start[i]; k < n; ++k) ind(k) = 1.0;
        Mat p = s.eigenvectors * ind.asDiagonal().toDenseMatrix().cast<Complex>() *
                s.eigenvectors.adjoint();
        out.projections.emplace_back(hermitian_unchecked(0.5 * (p + Mat(p.adjoint()))),
                                     1e-7);
    }
    return out;
}

Projection spectral_projection_above(const Hermitian& a, double threshold,
                                     double cluster_tol) {
    const SpectralDecomposition s = eig_hermitian(a);
    const double tol = cluster_tol * std::max(1.0, a.norm());
    const Clusters c = cluster_eigenvalues(s.eigenvalues, tol);
    const int n = a.dim();
    RVec ind = RVec::Zero(n);
    for (std::size_t i = 0; i < c.value.size(); ++i) {
        if (c.value[i] >= threshold) {
            for (int k = c.start[i]; k < n; ++k) ind(k) = 1.0;
            break;
        }
    }
    Mat p = s.eigenvectors * ind.asDiagonal().toDenseMatrix().cast<Complex>() *
            s.eigenvectors.adjoint();
    return Projection(hermitian_unchecked(0.5 * (p + Mat(p.adjoint()))), 1e-7);
}

}  // namespace isocone
