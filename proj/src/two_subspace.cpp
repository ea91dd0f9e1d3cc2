#include "isocone/two_subspace.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>

namespace isocone {

namespace {

struct PrincipalSplit {
    Mat intersection;  // directions of the first space lying inside the second
    Mat orthogonal;    // directions of the first space orthogonal to the second
    Mat generic;       // the rest
};

// Splits an orthonormal basis b1 of a subspace against a subspace with
// orthonormal basis b2 by principal angles: full SVD of b1* b2, cosines
// close to 1 give intersection directions, close to 0 orthogonal ones.
PrincipalSplit principal_split(const Mat& b1, const Mat& b2, double angle_tol) {
    PrincipalSplit out;
    const int r1 = static_cast<int>(b1.cols());
    if (r1 == 0) {
        out.intersection = out.orthogonal = out.generic = Mat(b1.rows(), 0);
        return out;
    }
    RVec cos = RVec::Zero(r1);
    Mat u1 = b1;
    if (b2.cols() > 0) {
        const Mat m = b1.adjoint() * b2;
        Eigen::JacobiSVD<Mat> svd(m, Eigen::ComputeFullU);
        const int nsv = static_cast<int>(svd.singularValues().size());
        for (int i = 0; i < std::min(r1, nsv); ++i) cos(i) = svd.singularValues()(i);
        u1 = b1 * svd.matrixU();
    }
    std::vector<int> inter, ortho, gen;
    for (int i = 0; i < r1; ++i) {
        if (cos(i) >= 1.0 - angle_tol)
            inter.push_back(i);
        else if (cos(i) <= angle_tol)
            ortho.push_back(i);
        else
            gen.push_back(i);
    }
    const auto pick = [&](const std::vector<int>& idx) {
        Mat m(b1.rows(), static_cast<Eigen::Index>(idx.size()));
        for (std::size_t k = 0; k < idx.size(); ++k) m.col(static_cast<Eigen::Index>(k)) = u1.col(idx[k]);
        return m;
    };
    out.intersection = pick(inter);
    out.orthogonal = pick(ortho);
    out.generic = pick(gen);
    return out;
}

Mat complement_basis(const Projection& p) {
    const Hermitian c = Hermitian::identity(p.dim()) - p.matrix();
    return orthonormal_range(c.mat());
}

}  // namespace

RVec HalmosData::w() const {
    RVec out(h.size());
    for (Eigen::Index i = 0; i < h.size(); ++i) out(i) = std::sqrt(h(i) * (1.0 - h(i)));
    return out;
}

Mat HalmosData::l0prime_adapted() const { return l0prime * r.adjoint(); }

Hermitian HalmosData::reconstruct_p_l(int dim) const {
    Mat p = Mat::Zero(dim, dim);
    p += l_and_n * l_and_n.adjoint();
    p += l_and_nperp * l_and_nperp.adjoint();
    p += l0 * l0.adjoint();
    return hermitian_unchecked(0.5 * (p + Mat(p.adjoint())));
}

Hermitian HalmosData::reconstruct_p_n(int dim) const {
    Mat p = Mat::Zero(dim, dim);
    p += l_and_n * l_and_n.adjoint();
    p += lperp_and_n * lperp_and_n.adjoint();
    if (d0() > 0) {
        const RVec ww = w();
        const Mat a = l0;
        const Mat b = l0prime_adapted();
        for (int i = 0; i < d0(); ++i) {
            const Mat ai = a.col(i), bi = b.col(i);
            p += (1.0 - h(i)) * ai * ai.adjoint();
            p += ww(i) * (ai * bi.adjoint() + bi * ai.adjoint());
            p += h(i) * bi * bi.adjoint();
        }
    }
    return hermitian_unchecked(0.5 * (p + Mat(p.adjoint())));
}

HalmosData halmos_decompose(const Projection& p_l, const Projection& p_n, double angle_tol) {
    if (p_l.dim() != p_n.dim()) throw InputError("halmos_decompose: dimension mismatch");
    const Mat bl = p_l.range_basis();
    const Mat blp = complement_basis(p_l);
    const Mat bn = p_n.range_basis();

    const PrincipalSplit sl = principal_split(bl, bn, angle_tol);
    const PrincipalSplit slp = principal_split(blp, bn, angle_tol);

    HalmosData d;
    d.l_and_n = sl.intersection;
    d.l_and_nperp = sl.orthogonal;
    d.lperp_and_n = slp.intersection;
    d.lperp_and_nperp = slp.orthogonal;
    d.l0 = sl.generic;
    d.l0prime = slp.generic;

    if (d.l0.cols() != d.l0prime.cols())
        throw AmbiguityError("halmos_decompose: generic parts have unequal dimensions (" +
                             std::to_string(d.l0.cols()) + " vs " +
                             std::to_string(d.l0prime.cols()) +
                             "); principal angles too close to the threshold");

    const int d0 = static_cast<int>(d.l0.cols());
    if (d0 == 0) {
        d.h = RVec(0);
        d.r = Mat(0, 0);
        return d;
    }

    // H = 1 - compression of p_N to L0; rotate the L0 basis to diagonalize it
    Mat hm = Mat::Identity(d0, d0) - d.l0.adjoint() * p_n.mat() * d.l0;
    const SpectralDecomposition hs = eig_hermitian(hermitian_unchecked(0.5 * (hm + Mat(hm.adjoint()))));
    d.h = hs.eigenvalues;
    d.l0 = d.l0 * hs.eigenvectors;
    for (int i = 0; i < d0; ++i) {
        if (d.h(i) <= 0.0 || d.h(i) >= 1.0)
            throw AmbiguityError("halmos_decompose: sigma(H) leaves (0,1): h = " +
                                 std::to_string(d.h(i)));
    }

    // cross block W R, with W = sqrt(H - H^2) diagonal and invertible
    const Mat cross = d.l0.adjoint() * p_n.mat() * d.l0prime;
    const RVec ww = d.w();
    Mat r_raw = cross;
    for (int i = 0; i < d0; ++i) r_raw.row(i) /= ww(i);
    // polar cleanup keeps R exactly unitary
    Eigen::JacobiSVD<Mat> svd(r_raw, Eigen::ComputeFullU | Eigen::ComputeFullV);
    d.r = svd.matrixU() * svd.matrixV().adjoint();
    return d;
}

std::string combo_label_name(ComboLabel label, double t) {
    switch (label) {
        case ComboLabel::zero: return "0";
        case ComboLabel::s_minus: return "S-";
        case ComboLabel::low_middle: return t == 0.5 ? "1/2" : (t < 0.5 ? "t" : "1-t");
        case ComboLabel::high_middle: return t < 0.5 ? "1-t" : "t";
        case ComboLabel::s_plus: return "S+";
        default: return "1";
    }
}

bool ComboSpectrum::has(ComboLabel label) const {
    for (const auto& g : groups)
        if (g.label == label) return true;
    return false;
}

const ComboGroup& ComboSpectrum::group(ComboLabel label) const {
    for (const auto& g : groups)
        if (g.label == label) return g;
    throw InputError("ComboSpectrum: group not present");
}

ComboSpectrum convex_combo_spectrum(const Projection& p_l, const Projection& p_n, double t,
                                    double angle_tol) {
    if (!(t > 0.0 && t < 1.0)) throw InputError("convex_combo_spectrum: t must be in (0,1)");
    const HalmosData d = halmos_decompose(p_l, p_n, angle_tol);

    ComboSpectrum out;
    out.t = t;
    const auto add_flat = [&out](ComboLabel label, double value, const Mat& basis) {
        if (basis.cols() == 0) return;
        ComboGroup g{label, {}, basis};
        g.values.assign(static_cast<std::size_t>(basis.cols()), value);
        out.groups.push_back(std::move(g));
    };

    add_flat(ComboLabel::zero, 0.0, d.lperp_and_nperp);

    // generic channels: 2x2 blocks [[t+(1-t)(1-h), (1-t)w],[(1-t)w, (1-t)h]]
    if (d.d0() > 0) {
        const Mat a = d.l0;
        const Mat b = d.l0prime_adapted();
        const RVec ww = d.w();
        ComboGroup gm{ComboLabel::s_minus, {}, Mat(a.rows(), d.d0())};
        ComboGroup gp{ComboLabel::s_plus, {}, Mat(a.rows(), d.d0())};
        for (int i = 0; i < d.d0(); ++i) {
            const double alpha = t + (1.0 - t) * (1.0 - d.h(i));
            const double gamma = (1.0 - t) * d.h(i);
            const double beta = (1.0 - t) * ww(i);
            const double mid = 0.5 * (alpha + gamma);  // always 1/2
            const double rad = std::hypot(0.5 * (alpha - gamma), beta);
            const double lam_p = mid + rad, lam_m = mid - rad;
            // eigenvector of lam_p: (beta, lam_p - alpha), stable form
            const double dl = 0.5 * (gamma - alpha);
            const double tt = (dl >= 0.0) ? dl + rad : beta * beta / (rad - dl);
            const double nn = std::hypot(beta, tt);
            double vp0 = beta / nn, vp1 = tt / nn;
            if (nn == 0.0) { vp0 = 1.0; vp1 = 0.0; }
            gm.values.push_back(lam_m);
            gm.vectors.col(i) = -vp1 * a.col(i) + vp0 * b.col(i);
            gp.values.push_back(lam_p);
            gp.vectors.col(i) = vp0 * a.col(i) + vp1 * b.col(i);
        }
        out.groups.push_back(std::move(gm));
        out.groups.push_back(std::move(gp));
    }

    if (t == 0.5) {
        Mat merged(d.l_and_nperp.rows(), d.l_and_nperp.cols() + d.lperp_and_n.cols());
        merged << d.l_and_nperp, d.lperp_and_n;
        add_flat(ComboLabel::low_middle, 0.5, merged);
    } else if (t < 0.5) {
        add_flat(ComboLabel::low_middle, t, d.l_and_nperp);
        add_flat(ComboLabel::high_middle, 1.0 - t, d.lperp_and_n);
    } else {
        add_flat(ComboLabel::low_middle, 1.0 - t, d.lperp_and_n);
        add_flat(ComboLabel::high_middle, t, d.l_and_nperp);
    }

    add_flat(ComboLabel::one, 1.0, d.l_and_n);

    std::sort(out.groups.begin(), out.groups.end(),
              [](const ComboGroup& x, const ComboGroup& y) { return x.label < y.label; });
    return out;
}

std::vector<LatticeNode> generated_lattice16(const Projection& p_l, const Projection& p_n,
                                             double tol) {
    const HalmosData d = halmos_decompose(p_l, p_n);
    if (d.d0() == 0)
        throw DegenerateLatticeError(
            "generated_lattice16: projections commute; use boolean combinations directly");

    const int n = p_l.dim();
    Mat wbasis(n, 2 * d.d0());
    wbasis << d.l0, d.l0prime;
    const Projection p_w = Projection::onto_span(wbasis);
    const Projection n0 = proj_meet(p_n, p_w, tol);
    const Projection n0p =
        proj_meet(Projection(Hermitian::identity(n) - p_n.matrix(), 1e-7), p_w, tol);

    const Mat gens[4] = {d.l_and_nperp, d.lperp_and_n, d.l0, n0.range_basis()};
    std::vector<LatticeNode> nodes;
    for (unsigned mask = 0; mask < 16; ++mask) {
        Eigen::Index cols = d.l_and_n.cols();
        for (int i = 0; i < 4; ++i)
            if (mask & (1u << i)) cols += gens[i].cols();
        Mat stacked(n, cols);
        Eigen::Index off = 0;
        stacked.block(0, 0, n, d.l_and_n.cols()) = d.l_and_n;
        off += d.l_and_n.cols();
        for (int i = 0; i < 4; ++i)
            if (mask & (1u << i)) {
                stacked.block(0, off, n, gens[i].cols()) = gens[i];
                off += gens[i].cols();
            }
        nodes.push_back({mask, cols == 0 ? Projection::zero(n) : Projection::onto_span(stacked)});
    }

    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (std::size_t j = i + 1; j < nodes.size(); ++j)
            if ((nodes[i].projection.mat() - nodes[j].projection.mat()).norm() <= tol)
                throw AmbiguityError("generated_lattice16: nodes " + std::to_string(i) + " and " +
                                     std::to_string(j) + " coincide; pair is not generic");

    const Projection l0p = Projection::onto_span(d.l0);
    const Projection l0pp = Projection::onto_span(d.l0prime);
    if ((proj_join(l0p, n0, tol).mat() - p_w.mat()).norm() > tol)
        throw AmbiguityError("generated_lattice16: identity L0 (+) N0 = W fails");
    if (proj_meet(n0, l0pp, tol).rank() != 0)
        throw AmbiguityError("generated_lattice16: identity N0 n L0' = 0 fails");
    if ((proj_join(n0p, l0p, tol).mat() - p_w.mat()).norm() > tol)
        throw AmbiguityError("generated_lattice16: identity N0' (+) L0 = W fails");

    return nodes;
}

CororderBound cororder_bound(double t) {
    if (!(t > 0.0 && t < 1.0)) throw InputError("cororder_bound: t must be in (0,1)");
    CororderBound out;
    if (t == 0.5) {
        // collapsed variant: the middle pair merges
        out.labels = {"0", "S-", "1/2", "S+", "1"};
        out.poset = Poset(5, {{0, 1}, {0, 2}, {1, 3}, {2, 4}, {3, 4}});
        return out;
    }
    const bool low_is_t = t < 0.5;
    out.labels = {"0", "S-", low_is_t ? "t" : "1-t", low_is_t ? "1-t" : "t", "S+", "1"};
    out.poset = Poset(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 5}, {3, 5}, {4, 5}});
    return out;
}

}  // namespace isocone
