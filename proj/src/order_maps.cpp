#include "isocone/order_maps.hpp"

#include <cmath>

namespace isocone {

SpectralFrame::SpectralFrame(BlockElement element, double gap_tol)
    : element_(std::move(element)), gap_tol_(gap_tol) {
    const Hermitian m = embed(element_);
    spectral_ = eig_hermitian(m);
    for (Eigen::Index i = 1; i < spectral_.eigenvalues.size(); ++i) {
        const double gap = spectral_.eigenvalues(i) - spectral_.eigenvalues(i - 1);
        if (gap <= gap_tol)
            throw InputError("SpectralFrame: element is derogatory (eigenvalue gap " +
                             std::to_string(gap) + " at index " + std::to_string(i) + ")");
    }
}

BlockElement SpectralFrame::indicator(uint32_t mask) const {
    const int n = levels();
    RVec chi = RVec::Zero(n);
    for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) chi(i) = 1.0;
    const Mat& u = spectral_.eigenvectors;
    Mat m = u * chi.asDiagonal().toDenseMatrix().cast<Complex>() * u.adjoint();
    const Hermitian h = hermitian_unchecked(0.5 * (m + Mat(m.adjoint())));
    return BlockElement::from_embedded(element_.algebra(), h, 1e-7);
}

Poset inner_order(const MembershipOracle& oracle, const SpectralFrame& frame, double tol) {
    const int n = frame.levels();
    if (n > 20) throw ResourceError("inner_order: indicator enumeration bound is 20 levels");
    const uint32_t total = 1u << n;
    std::vector<uint32_t> accepted;
    for (uint32_t mask = 0; mask < total; ++mask) {
        const BlockElement ind = frame.indicator(mask);
        if (oracle.classify(ind, tol).verdict != Verdict::outside) accepted.push_back(mask);
    }
    std::vector<std::pair<int, int>> rel;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            bool leq = true;
            for (uint32_t s : accepted)
                if ((s & (1u << i)) && !(s & (1u << j))) {
                    leq = false;
                    break;
                }
            if (leq) rel.emplace_back(i, j);
        }
    try {
        return Poset(n, rel);
    } catch (const InputError& e) {
        throw AmbiguityError(std::string("inner_order: accepted indicators do not define a "
                                         "partial order: ") +
                             e.what());
    }
}

StabilityReport inner_order_stability(const MembershipOracle& oracle, const SpectralFrame& frame,
                                      double radius, int trials, double tol, uint64_t seed) {
    StabilityReport report;
    report.base = inner_order(oracle, frame, tol);
    Rng rng(seed);
    const BlockAlgebra& alg = frame.element().algebra();
    int found = 0, attempts = 0;
    const int max_attempts = 50 * trials + 100;
    while (found < trials && attempts < max_attempts) {
        ++attempts;
        std::vector<Hermitian> blocks;
        for (int x = 0; x < alg.blocks(); ++x)
            blocks.push_back(random_hermitian(rng, alg.dim(x), 1.0));
        BlockElement dir(alg, std::move(blocks));
        const double nn = dir.norm();
        if (nn < 1e-12) continue;
        const BlockElement cand = frame.element() + dir * (radius / nn);
        if (oracle.classify(cand, tol).verdict == Verdict::outside) continue;
        try {
            const SpectralFrame pframe(cand, frame.gap_tol());
            const Poset order = inner_order(oracle, pframe, tol);
            ++found;
            if (order == report.base)
                ++report.agree;
            else if (report.base.refines_into(order))
                ++report.finer;
            else
                ++report.incompatible;
        } catch (const InputError&) {
            continue;  // derogatory perturbation, resample
        }
    }
    report.trials = found;
    report.inconclusive = found == 0;
    return report;
}

const char* to_string(Comparison c) {
    switch (c) {
        case Comparison::less: return "less";
        case Comparison::greater: return "greater";
        case Comparison::equivalent: return "equivalent";
        default: return "incomparable";
    }
}

PureState::PureState(int block, CVec psi) : block_(block), psi_(std::move(psi)) {
    if (block_ < 0) throw InputError("PureState: negative block index");
    const double n = psi_.norm();
    if (n < 1e-12) throw InputError("PureState: zero vector");
    psi_ /= n;
    for (Eigen::Index i = 0; i < psi_.size(); ++i) {
        const double a = std::abs(psi_(i));
        if (a > 1e-12) {
            psi_ *= std::conj(psi_(i)) / a;
            break;
        }
    }
}

Vec3 PureState::bloch() const {
    if (dim() != 2) throw InputError("PureState::bloch: state is not 2-dimensional");
    const Mat rho = psi_ * psi_.adjoint();
    const BlochCoordinates c =
        bloch_coordinates(hermitian_unchecked(0.5 * (rho + Mat(rho.adjoint()))));
    return 2.0 * c.m;
}

bool PureState::same_state(const PureState& o, double tol) const {
    if (block_ != o.block_ || dim() != o.dim()) return false;
    return std::abs(1.0 - std::abs(psi_.dot(o.psi_))) <= tol;
}

Comparison pure_state_compare(const ClassifiedIsocone& cone, const PureState& phi,
                              const PureState& psi, double tol) {
    const int x = phi.block(), y = psi.block();
    if (x >= cone.algebra().blocks() || y >= cone.algebra().blocks())
        throw InputError("pure_state_compare: block index out of range");
    if (phi.dim() != cone.algebra().dim(x) || psi.dim() != cone.algebra().dim(y))
        throw InputError("pure_state_compare: state dimension mismatch");
    if (x != y) {
        if (cone.poset().strictly_less(x, y)) return Comparison::less;
        if (cone.poset().strictly_less(y, x)) return Comparison::greater;
        return Comparison::incomparable;
    }
    const InnerCone& inner = cone.inner(x);
    if (inner.kind() == InnerCone::Kind::full)
        return phi.same_state(psi, tol) ? Comparison::equivalent : Comparison::incomparable;
    const Vec3 d = psi.bloch() - phi.bloch();
    const bool fwd = m2_dual_cone_test(inner.region(), d, tol);
    const bool bwd = m2_dual_cone_test(inner.region(), -d, tol);
    if (fwd && bwd) return Comparison::equivalent;
    if (fwd) return Comparison::less;
    if (bwd) return Comparison::greater;
    return Comparison::incomparable;
}

DensityMatrix::DensityMatrix(BlockElement rho, double tol) : rho_(std::move(rho)) {
    double tr = 0.0;
    for (int x = 0; x < rho_.algebra().blocks(); ++x) {
        const SpectralDecomposition s = eig_hermitian(rho_.block(x));
        if (s.eigenvalues(0) < -tol * std::max(1.0, rho_.norm()))
            throw InputError("DensityMatrix: block " + std::to_string(x) +
                             " has negative eigenvalue " + std::to_string(s.eigenvalues(0)));
        tr += rho_.block(x).trace();
    }
    if (std::abs(tr - 1.0) > tol * std::max(1.0, rho_.norm()))
        throw InputError("DensityMatrix: trace is " + std::to_string(tr) + ", expected 1");
}

DensityMatrix DensityMatrix::pure(const BlockAlgebra& a, const PureState& s) {
    if (s.block() >= a.blocks() || a.dim(s.block()) != s.dim())
        throw InputError("DensityMatrix::pure: state does not fit the algebra");
    std::vector<Hermitian> blocks;
    for (int x = 0; x < a.blocks(); ++x) {
        if (x == s.block()) {
            const Mat m = s.vector() * s.vector().adjoint();
            blocks.push_back(hermitian_unchecked(0.5 * (m + Mat(m.adjoint()))));
        } else {
            blocks.push_back(Hermitian::zero(a.dim(x)));
        }
    }
    return DensityMatrix(BlockElement(a, std::move(blocks)));
}

namespace {

// nuclear norm of a hermitian matrix
double trace_norm(const Hermitian& a) {
    const SpectralDecomposition s = eig_hermitian(a);
    double out = 0.0;
    for (Eigen::Index i = 0; i < s.eigenvalues.size(); ++i) out += std::abs(s.eigenvalues(i));
    return out;
}

// min over the generating family of tr(delta . a); negative means the
// forward order fails
double dual_margin(const ClassifiedIsocone& cone, const BlockElement& delta,
                   const StateCompareConfig& cfg) {
    const int k = cone.algebra().blocks();
    std::vector<double> block_trace(k);
    for (int x = 0; x < k; ++x) block_trace[x] = delta.block(x).trace();

    double margin = kInf;

    // up-set indicators
    const UpSetFamily fam = up_sets(cone.poset());
    for (uint32_t mask : fam.sets) {
        double v = 0.0;
        for (int x = 0; x < k; ++x)
            if (mask & (1u << x)) v += block_trace[x];
        margin = std::min(margin, v);
    }

    // per-block probes with the f^x padding: +1 above x, -1 below, 0 parallel
    for (int x = 0; x < k; ++x) {
        double cross = 0.0;
        for (int w = 0; w < k; ++w) {
            if (w == x) continue;
            if (cone.poset().strictly_less(x, w)) cross += block_trace[w];
            if (cone.poset().strictly_less(w, x)) cross -= block_trace[w];
        }
        const InnerCone& inner = cone.inner(x);
        double inner_min;
        if (inner.kind() == InnerCone::Kind::m2region) {
            const BlochCoordinates c = bloch_coordinates(delta.block(x));
            inner_min = 2.0 * inner.region().min_dot(c.m, cfg.samples);
        } else {
            inner_min = -trace_norm(delta.block(x));
        }
        margin = std::min(margin, inner_min + cross);
    }
    return margin;
}

}  // namespace

Comparison state_compare(const ClassifiedIsocone& cone, const DensityMatrix& rho,
                         const DensityMatrix& rho_prime, const StateCompareConfig& cfg) {
    if (rho.element().algebra() != cone.algebra() ||
        rho_prime.element().algebra() != cone.algebra())
        throw InputError("state_compare: density matrices must live on the cone's algebra");
    const BlockElement delta = rho_prime.element() - rho.element();
    const bool fwd = dual_margin(cone, delta, cfg) >= -cfg.tol;
    const bool bwd = dual_margin(cone, delta * -1.0, cfg) >= -cfg.tol;
    if (fwd && bwd) return Comparison::equivalent;
    if (fwd) return Comparison::less;
    if (bwd) return Comparison::greater;
    return Comparison::incomparable;
}

}  // namespace isocone
