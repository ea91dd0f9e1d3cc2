#include "isocone/conic.hpp"

#include <Eigen/QR>

#include <cmath>

namespace isocone {

RVec real_vectorize(const Hermitian& a) {
    const int n = a.dim();
    RVec v(n * n);
    int k = 0;
    const Mat& m = a.mat();
    for (int i = 0; i < n; ++i) v(k++) = m(i, i).real();
    const double s = std::sqrt(2.0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            v(k++) = s * m(i, j).real();
            v(k++) = s * m(i, j).imag();
        }
    return v;
}

RVec real_vectorize(const BlockElement& a) {
    RVec v(a.algebra().herm_dim());
    int off = 0;
    for (int x = 0; x < a.algebra().blocks(); ++x) {
        const RVec bx = real_vectorize(a.block(x));
        v.segment(off, bx.size()) = bx;
        off += static_cast<int>(bx.size());
    }
    return v;
}

bool SpanTracker::add(const RVec& v) {
    RVec w = v;
    const double scale = std::max(1.0, w.norm());
    for (const RVec& b : basis_) w -= b.dot(w) * b;
    // second pass for numerical orthogonality
    for (const RVec& b : basis_) w -= b.dot(w) * b;
    if (w.norm() <= rel_tol_ * scale) return false;
    basis_.push_back(w.normalized());
    return true;
}

double SpanTracker::residual(const RVec& v) const {
    RVec w = v;
    for (const RVec& b : basis_) w -= b.dot(w) * b;
    return w.norm();
}

NnlsResult nnls(const RMat& a, const RVec& b, int max_iter) {
    const int m = static_cast<int>(a.rows());
    const int n = static_cast<int>(a.cols());
    if (max_iter <= 0) max_iter = 3 * n + 30;
    RVec x = RVec::Zero(n);
    std::vector<bool> passive(n, false);
    const double wtol = 1e-12 * std::max(1.0, b.norm()) * std::max(1.0, a.norm());

    auto solve_passive = [&](const std::vector<bool>& p) -> RVec {
        int np = 0;
        for (bool f : p) np += f ? 1 : 0;
        RMat ap(m, np);
        std::vector<int> idx;
        for (int j = 0; j < n; ++j)
            if (p[j]) {
                ap.col(static_cast<int>(idx.size())) = a.col(j);
                idx.push_back(j);
            }
        RVec zp = ap.colPivHouseholderQr().solve(b);
        RVec z = RVec::Zero(n);
        for (std::size_t k = 0; k < idx.size(); ++k) z(idx[k]) = zp(static_cast<int>(k));
        return z;
    };

    for (int outer = 0; outer < max_iter; ++outer) {
        const RVec w = a.transpose() * (b - a * x);
        int best = -1;
        double best_w = wtol;
        for (int j = 0; j < n; ++j)
            if (!passive[j] && w(j) > best_w) {
                best_w = w(j);
                best = j;
            }
        if (best < 0) break;
        passive[best] = true;
        RVec z = solve_passive(passive);
        int inner = 0;
        while (true) {
            double zmin = 0.0;
            for (int j = 0; j < n; ++j)
                if (passive[j]) zmin = std::min(zmin, z(j));
            if (zmin > -1e-14 || ++inner > n + 4) break;
            double alpha = 1.0;
            for (int j = 0; j < n; ++j)
                if (passive[j] && z(j) <= 0.0 && x(j) != z(j))
                    alpha = std::min(alpha, x(j) / (x(j) - z(j)));
            x += alpha * (z - x);
            for (int j = 0; j < n; ++j)
                if (passive[j] && x(j) <= 1e-14) {
                    passive[j] = false;
                    x(j) = 0.0;
                }
            z = solve_passive(passive);
        }
        x = z;
        for (int j = 0; j < n; ++j)
            if (x(j) < 0.0) x(j) = 0.0;
    }
    return {x, (a * x - b).norm()};
}

}  // namespace isocone
