#include "isocone/cone.hpp"

#include <cmath>

namespace isocone {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

InnerCone InnerCone::full(int dim) {
    if (dim < 1) throw InputError("InnerCone: dimension must be positive");
    InnerCone c;
    c.kind_ = Kind::full;
    c.dim_ = dim;
    return c;
}

InnerCone InnerCone::m2(const BlochRegion& region) {
    InnerCone c;
    c.kind_ = Kind::m2region;
    c.dim_ = 2;
    c.region_ = region;
    return c;
}

InnerCone InnerCone::m2_cap(const Vec3& center, double angle) {
    if (!(angle > 0.0) || angle > kPi)
        throw InputError("InnerCone::m2_cap: angle must lie in (0, pi]");
    if (angle > kPi / 2 + 1e-12) return full(2);  // geodesic hull is the sphere
    return m2(BlochRegion::cap(center, angle));
}

InnerCone InnerCone::m2_polygon(std::vector<Vec3> normals) {
    if (normals.empty()) return full(2);
    return m2(BlochRegion::polygon(std::move(normals)));
}

const BlochRegion& InnerCone::region() const {
    if (!region_) throw InputError("InnerCone: full cone has no Bloch region");
    return *region_;
}

MembershipResult InnerCone::membership(const Hermitian& a, double tol) const {
    if (a.dim() != dim_) throw InputError("InnerCone: dimension mismatch");
    if (kind_ == Kind::full) return {Verdict::inside, kInf};
    return m2_membership(*region_, a, tol);
}

ClassifiedIsocone::ClassifiedIsocone(BlockAlgebra algebra, Poset poset,
                                     std::vector<InnerCone> inner)
    : algebra_(std::move(algebra)), poset_(std::move(poset)), inner_(std::move(inner)) {
    if (poset_.size() != algebra_.blocks())
        throw InputError("ClassifiedIsocone: poset size must equal block count");
    if (static_cast<int>(inner_.size()) != algebra_.blocks())
        throw InputError("ClassifiedIsocone: one inner cone per block required");
    for (int x = 0; x < algebra_.blocks(); ++x) {
        if (inner_[x].dim() != algebra_.dim(x))
            throw InputError("ClassifiedIsocone: inner cone dimension mismatch at block " +
                             std::to_string(x));
        if (inner_[x].kind() == InnerCone::Kind::m2region && algebra_.dim(x) != 2)
            throw InputError("ClassifiedIsocone: Bloch regions only on 2x2 blocks");
    }
}

MembershipResult ClassifiedIsocone::classify(const BlockElement& a, double tol) const {
    if (a.algebra() != algebra_) throw InputError("ClassifiedIsocone: algebra mismatch");
    double margin = kInf;
    const int k = algebra_.blocks();
    std::vector<double> lo(k), hi(k);
    for (int x = 0; x < k; ++x) {
        const MembershipResult inner = inner_[x].membership(a.block(x), tol);
        margin = std::min(margin, inner.margin);
        const SpectralDecomposition s = eig_hermitian(a.block(x));
        lo[x] = s.eigenvalues(0);
        hi[x] = s.eigenvalues(s.eigenvalues.size() - 1);
    }
    double scale = 1.0;
    for (int x = 0; x < k; ++x) scale = std::max({scale, std::abs(lo[x]), std::abs(hi[x])});
    const double stol = tol * scale;
    for (int x = 0; x < k; ++x)
        for (int y = 0; y < k; ++y)
            if (poset_.strictly_less(x, y)) margin = std::min(margin, lo[y] - hi[x]);
    if (margin > stol) return {Verdict::inside, margin};
    if (margin < -stol) return {Verdict::outside, margin};
    return {Verdict::boundary, margin};
}

MembershipResult membership(const ClassifiedIsocone& cone, const BlockElement& a, double tol) {
    return cone.classify(a, tol);
}

ClassifiedIsocone lexicographic_sum_isocone(const Poset& p,
                                            const std::vector<ClassifiedIsocone>& parts) {
    if (static_cast<int>(parts.size()) != p.size())
        throw InputError("lexicographic_sum_isocone: need one part per poset element");
    std::vector<int> dims;
    std::vector<InnerCone> inner;
    for (const auto& part : parts) {
        if (part.algebra().blocks() != 1)
            throw InputError("lexicographic_sum_isocone: parts must be single-block");
        dims.push_back(part.algebra().dim(0));
        inner.push_back(part.inner(0));
    }
    return ClassifiedIsocone(BlockAlgebra(dims), p, std::move(inner));
}

ClassifiedIsocone pushforward_isocone(const BlockMorphism& m, const ClassifiedIsocone& cone) {
    if (m.source() != cone.algebra())
        throw InputError("pushforward_isocone: morphism source mismatch");
    if (!m.surjective())
        throw UnsupportedMorphismError(
            "pushforward_isocone: assignment is not surjective onto the target");
    const Poset restricted = cone.poset().restrict(m.assignment());
    std::vector<InnerCone> inner;
    for (int y = 0; y < m.target().blocks(); ++y) {
        const InnerCone& src = cone.inner(m.assignment()[y]);
        if (src.kind() == InnerCone::Kind::m2region && m.unitary(y)) {
            inner.push_back(InnerCone::m2(src.region().rotated(bloch_rotation(*m.unitary(y)))));
        } else {
            inner.push_back(src);
        }
    }
    return ClassifiedIsocone(m.target(), restricted, std::move(inner));
}

ClassifiedIsocone pullback_isocone(const BlockMorphism& m, const ClassifiedIsocone& j) {
    if (m.target() != j.algebra()) throw InputError("pullback_isocone: morphism target mismatch");
    if (!m.surjective())
        throw UnsupportedMorphismError("pullback_isocone: assignment is not surjective");
    const int k = m.source().blocks();
    std::vector<InnerCone> inner;
    std::vector<std::pair<int, int>> rel;
    std::vector<int> image_of(k, -1);  // source block -> target block
    for (int y = 0; y < m.target().blocks(); ++y) image_of[m.assignment()[y]] = y;
    for (int x = 0; x < k; ++x) {
        if (image_of[x] < 0) {
            inner.push_back(InnerCone::full(m.source().dim(x)));
        } else {
            const int y = image_of[x];
            const InnerCone& src = j.inner(y);
            if (src.kind() == InnerCone::Kind::m2region && m.unitary(y)) {
                // m(a)_y = u a_x u*, so a_x must land in the region rotated back
                inner.push_back(InnerCone::m2(
                    src.region().rotated(bloch_rotation(Mat(m.unitary(y)->adjoint())))));
            } else {
                inner.push_back(src);
            }
        }
    }
    for (int x = 0; x < k; ++x)
        for (int z = 0; z < k; ++z)
            if (image_of[x] >= 0 && image_of[z] >= 0 &&
                j.poset().strictly_less(image_of[x], image_of[z]))
                rel.emplace_back(x, z);
    return ClassifiedIsocone(m.source(), Poset(k, rel), std::move(inner));
}

BlockElement BlockLayerCake::reconstruct(const BlockAlgebra& a) const {
    BlockElement out = BlockElement::scalar(a, shift);
    for (std::size_t i = 0; i < projections.size(); ++i)
        out = out + projections[i] * weights[i];
    return out;
}

BlockLayerCake layer_cake(const BlockElement& a, double cluster_tol) {
    const LayerCake full = layer_cake(embed(a), cluster_tol);
    BlockLayerCake out;
    out.shift = full.shift;
    out.weights = full.weights;
    for (const Projection& p : full.projections)
        out.projections.push_back(BlockElement::from_embedded(a.algebra(), p.matrix()));
    return out;
}

}  // namespace isocone
