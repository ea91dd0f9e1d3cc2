#pragma once

// The finite-dimensional algebra  A = M_{n_1} (+) ... (+) M_{n_k}, its
// self-adjoint elements and block morphisms (coordinate projections composed
// with block-diagonal unitary conjugations).

#include "isocone/hermitian.hpp"
#include "isocone/types.hpp"

#include <optional>
#include <vector>

namespace isocone {

class BlockAlgebra {
  public:
    explicit BlockAlgebra(std::vector<int> dims);

    int blocks() const { return static_cast<int>(dims_.size()); }
    int dim(int x) const { return dims_[x]; }
    const std::vector<int>& dims() const { return dims_; }
    int total() const { return total_; }
    // real dimension of the self-adjoint part, sum of n_x^2
    int herm_dim() const;

    bool operator==(const BlockAlgebra& o) const { return dims_ == o.dims_; }
    bool operator!=(const BlockAlgebra& o) const { return !(*this == o); }

  private:
    std::vector<int> dims_;
    int total_;
};

// Self-adjoint element of a block algebra, one hermitian matrix per summand.
class BlockElement {
  public:
    BlockElement(BlockAlgebra algebra, std::vector<Hermitian> blocks);

    static BlockElement zero(const BlockAlgebra& a);
    static BlockElement scalar(const BlockAlgebra& a, double c);
    // Block-diagonal slices of an N x N hermitian matrix.
    static BlockElement from_embedded(const BlockAlgebra& a, const Hermitian& m,
                                      double offblock_tol = 1e-9);

    const BlockAlgebra& algebra() const { return algebra_; }
    const Hermitian& block(int x) const { return blocks_[x]; }
    int blocks() const { return static_cast<int>(blocks_.size()); }

    BlockElement operator+(const BlockElement& o) const;
    BlockElement operator-(const BlockElement& o) const;
    BlockElement operator*(double s) const;

    double norm() const;  // Frobenius of the embedding
    double trace() const;

  private:
    BlockAlgebra algebra_;
    std::vector<Hermitian> blocks_;
};

// Block-diagonal embedding into Herm(N).
Hermitian embed(const BlockElement& a);

// The element iota_x: identity on block x, zero elsewhere.
BlockElement block_unit(const BlockAlgebra& a, int x);

// Blockwise functional calculus.
BlockElement apply_function(const IsotoneFunction& f, const BlockElement& a);
BlockElement apply_function(const std::function<double(double)>& f, const BlockElement& a);

// *-morphism between block algebras: target block y receives source block
// assignment[y], optionally conjugated by a unitary.  Covers coordinate
// projections, permutations and their compositions with block-diagonal
// unitary conjugation.
class BlockMorphism {
  public:
    BlockMorphism(BlockAlgebra source, BlockAlgebra target, std::vector<int> assignment,
                  std::vector<std::optional<Mat>> unitaries = {});

    // Coordinate projection onto the given source blocks (in order).
    static BlockMorphism coordinate_projection(const BlockAlgebra& source,
                                               const std::vector<int>& retained);

    const BlockAlgebra& source() const { return source_; }
    const BlockAlgebra& target() const { return target_; }
    const std::vector<int>& assignment() const { return assignment_; }
    bool is_coordinate_projection() const;  // no nontrivial unitaries
    bool surjective() const;                // assignment injective
    const std::optional<Mat>& unitary(int y) const { return unitaries_[y]; }

    BlockElement apply(const BlockElement& a) const;

  private:
    BlockAlgebra source_;
    BlockAlgebra target_;
    std::vector<int> assignment_;
    std::vector<std::optional<Mat>> unitaries_;
};

}  // namespace isocone
