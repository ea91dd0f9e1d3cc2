#pragma once

// Classified-form cones: a poset on the blocks plus a per-summand inner cone
// (full hermitian cone, or an M_2 Bloch region).  Membership decision, the
// abstract oracle interface, lexicographic sums and transport along block
// coordinate projections.

#include "isocone/block_algebra.hpp"
#include "isocone/bloch.hpp"
#include "isocone/poset.hpp"

#include <memory>
#include <optional>

namespace isocone {

// Inner cone of one summand: the full hermitian cone, or for 2x2 blocks the
// cone R+.K + R.1 of a Bloch region K.  Regions that cover the whole sphere
// normalize to full.
class InnerCone {
  public:
    enum class Kind { full, m2region };

    static InnerCone full(int dim);
    static InnerCone m2(const BlochRegion& region);
    // Normalizing constructors: caps wider than a hemisphere and empty
    // normal lists mean the whole sphere, i.e. a full cone.
    static InnerCone m2_cap(const Vec3& center, double angle);
    static InnerCone m2_polygon(std::vector<Vec3> normals);

    Kind kind() const { return kind_; }
    int dim() const { return dim_; }
    const BlochRegion& region() const;

    MembershipResult membership(const Hermitian& a, double tol) const;

  private:
    Kind kind_ = Kind::full;
    int dim_ = 1;
    std::optional<BlochRegion> region_;
};

// Uniform three-valued membership interface shared by classified cones,
// saturation cones and test fakes.  Monotone in tolerance by construction of
// the implementations: inside at tol implies inside at any larger tol.
class MembershipOracle {
  public:
    virtual ~MembershipOracle() = default;
    virtual const BlockAlgebra& algebra() const = 0;
    virtual MembershipResult classify(const BlockElement& a, double tol) const = 0;
};

// Normal form of a finite-dimensional isocone: poset on the blocks plus the
// list of inner cones.
class ClassifiedIsocone : public MembershipOracle {
  public:
    ClassifiedIsocone(BlockAlgebra algebra, Poset poset, std::vector<InnerCone> inner);

    const BlockAlgebra& algebra() const override { return algebra_; }
    const Poset& poset() const { return poset_; }
    const InnerCone& inner(int x) const { return inner_[x]; }
    const std::vector<InnerCone>& inners() const { return inner_; }

    // Inside iff each block lies in its inner cone and every strict pair
    // x < y satisfies max sigma(a_x) <= min sigma(a_y) + tol.  Margin is the
    // slack of the binding constraint; boundary within +-tol.
    MembershipResult classify(const BlockElement& a, double tol) const override;

  private:
    BlockAlgebra algebra_;
    Poset poset_;
    std::vector<InnerCone> inner_;
};

MembershipResult membership(const ClassifiedIsocone& cone, const BlockElement& a, double tol);

// Assembles the cone with base poset p and the given single-block parts.
ClassifiedIsocone lexicographic_sum_isocone(const Poset& p,
                                            const std::vector<ClassifiedIsocone>& parts);

// Image of a classified cone under a surjective block morphism: poset
// restricted to the retained blocks, inner cones transported (rotated by the
// conjugating unitaries).
ClassifiedIsocone pushforward_isocone(const BlockMorphism& m, const ClassifiedIsocone& cone);

// Preimage {a : m(a) in J}: the poset of J placed on the retained blocks
// extended by isolated points, full cones on the free blocks.
ClassifiedIsocone pullback_isocone(const BlockMorphism& m, const ClassifiedIsocone& j);

// Layer-cake decomposition of a block element: a = sum_i w_i p_i + shift * 1
// with the p_i a chain of commuting projections in the algebra (spectral
// up-level sets of the embedded matrix).
struct BlockLayerCake {
    std::vector<BlockElement> projections;
    std::vector<double> weights;
    double shift = 0.0;

    BlockElement reconstruct(const BlockAlgebra& a) const;
};

BlockLayerCake layer_cake(const BlockElement& a, double cluster_tol = 1e-9);

}  // namespace isocone
