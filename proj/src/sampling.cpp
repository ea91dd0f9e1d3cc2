#include "isocone/sampling.hpp"

#include <algorithm>
#include <cmath>

namespace isocone {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

Hermitian random_hermitian(Rng& rng, int n, double fro_norm) {
    std::normal_distribution<double> g(0.0, 1.0);
    Mat m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = Complex(g(rng), g(rng));
    Mat h = 0.5 * (m + Mat(m.adjoint()));
    const double nn = h.norm();
    if (nn > 0.0) h *= fro_norm / nn;
    return hermitian_unchecked(std::move(h));
}

Mat random_unitary(Rng& rng, int n) {
    std::normal_distribution<double> g(0.0, 1.0);
    Mat m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = Complex(g(rng), g(rng));
    Eigen::HouseholderQR<Mat> qr(m);
    Mat q = qr.householderQ();
    Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int i = 0; i < n; ++i) {
        const Complex d = r(i, i);
        const double ad = std::abs(d);
        if (ad > 0.0) q.col(i) *= d / ad;
    }
    return q;
}

Projection random_projection(Rng& rng, int n, int rank) {
    if (rank < 0 || rank > n) throw InputError("random_projection: invalid rank");
    if (rank == 0) return Projection::zero(n);
    const Mat u = random_unitary(rng, n);
    return Projection::onto_span(u.leftCols(rank));
}

Vec3 random_unit_vec3(Rng& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    Vec3 v(g(rng), g(rng), g(rng));
    while (v.norm() < 1e-8) v = Vec3(g(rng), g(rng), g(rng));
    return v.normalized();
}

Vec3 random_direction_in_cap(Rng& rng, const Vec3& center, double angle) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double zmin = std::cos(angle);
    const double z = zmin + (1.0 - zmin) * u(rng);
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = 2.0 * kPi * u(rng);
    const Vec3 c = center.normalized();
    const Vec3 e1 = (std::abs(c.x()) < 0.9 ? Vec3::UnitX() : Vec3::UnitY()).cross(c).normalized();
    const Vec3 e2 = c.cross(e1);
    return z * c + r * (std::cos(phi) * e1 + std::sin(phi) * e2);
}

IsotoneFunction random_isotone(Rng& rng, double lo, double hi) {
    std::uniform_int_distribution<int> nk(2, 6);
    std::uniform_real_distribution<double> u(lo, hi);
    const int n = nk(rng);
    std::vector<double> knots, values;
    while (static_cast<int>(knots.size()) < n) {
        const double x = u(rng);
        bool clash = false;
        for (double k : knots) clash |= std::abs(k - x) < 1e-6 * std::max(1.0, hi - lo);
        if (!clash) knots.push_back(x);
    }
    std::sort(knots.begin(), knots.end());
    for (int i = 0; i < n; ++i) values.push_back(u(rng));
    std::sort(values.begin(), values.end());
    return IsotoneFunction(std::move(knots), std::move(values));
}

Poset random_poset(Rng& rng, int k, double edge_prob) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<int> label(k);
    for (int i = 0; i < k; ++i) label[i] = i;
    std::shuffle(label.begin(), label.end(), rng);
    std::vector<std::pair<int, int>> rel;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (u(rng) < edge_prob) rel.emplace_back(label[i], label[j]);
    return Poset(k, rel);
}

Sampler interior_sampler(const ClassifiedIsocone& cone) {
    return [cone](Rng& rng) {
        std::uniform_real_distribution<double> u(0.0, 1.0);
        const BlockAlgebra& a = cone.algebra();
        std::vector<Hermitian> blocks;
        for (int x = 0; x < a.blocks(); ++x) {
            const double base = 2.0 * cone.poset().height(x);
            const int n = a.dim(x);
            const InnerCone& inner = cone.inner(x);
            if (inner.kind() == InnerCone::Kind::full) {
                blocks.push_back(Hermitian::identity(n) * base +
                                 random_hermitian(rng, n, 0.05 + 0.35 * u(rng)));
            } else {
                const BlochRegion& k = inner.region();
                Vec3 d;
                if (k.kind() == BlochRegion::Kind::cap) {
                    d = random_direction_in_cap(rng, k.center(), 0.9 * k.angle());
                } else {
                    // stay in the inscribed cap around the interior point
                    d = random_direction_in_cap(rng, k.interior_point(),
                                                0.9 * k.interior_margin());
                }
                const double r = 0.05 + 0.3 * u(rng);
                const double shift = base + 0.1 * (2.0 * u(rng) - 1.0);
                blocks.push_back(Hermitian::identity(2) * shift + pauli_vector(d) * r);
            }
        }
        return BlockElement(a, std::move(blocks));
    };
}

ClassifiedIsocone random_classified_isocone(Rng& rng, int max_blocks, int max_block_dim) {
    std::uniform_int_distribution<int> kb(1, max_blocks);
    std::uniform_int_distribution<int> kd(1, max_block_dim);
    std::uniform_real_distribution<double> ang(0.15, 1.4);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const int k = kb(rng);
    std::vector<int> dims;
    for (int x = 0; x < k; ++x) dims.push_back(kd(rng));
    const Poset p = random_poset(rng, k);
    std::vector<InnerCone> inner;
    for (int x = 0; x < k; ++x) {
        if (dims[x] == 2 && u(rng) < 0.7) {
            inner.push_back(InnerCone::m2_cap(random_unit_vec3(rng), ang(rng)));
        } else {
            inner.push_back(InnerCone::full(dims[x]));
        }
    }
    return ClassifiedIsocone(BlockAlgebra(dims), p, std::move(inner));
}

}  // namespace isocone
