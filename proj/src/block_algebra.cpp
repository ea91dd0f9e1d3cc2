#include "isocone/block_algebra.hpp"

#include <numeric>

namespace isocone {

BlockAlgebra::BlockAlgebra(std::vector<int> dims) : dims_(std::move(dims)), total_(0) {
    if (dims_.empty()) throw InputError("BlockAlgebra: need at least one block");
    for (int n : dims_) {
        if (n < 1) throw InputError("BlockAlgebra: block dimensions must be positive");
        total_ += n;
    }
}

int BlockAlgebra::herm_dim() const {
    int d = 0;
    for (int n : dims_) d += n * n;
    return d;
}

BlockElement::BlockElement(BlockAlgebra algebra, std::vector<Hermitian> blocks)
    : algebra_(std::move(algebra)), blocks_(std::move(blocks)) {
    if (static_cast<int>(blocks_.size()) != algebra_.blocks())
        throw InputError("BlockElement: block count mismatch");
    for (int x = 0; x < algebra_.blocks(); ++x)
        if (blocks_[x].dim() != algebra_.dim(x))
            throw InputError("BlockElement: block " + std::to_string(x) + " has wrong dimension");
}

BlockElement BlockElement::zero(const BlockAlgebra& a) {
    std::vector<Hermitian> blocks;
    for (int x = 0; x < a.blocks(); ++x) blocks.push_back(Hermitian::zero(a.dim(x)));
    return BlockElement(a, std::move(blocks));
}

BlockElement BlockElement::scalar(const BlockAlgebra& a, double c) {
    std::vector<Hermitian> blocks;
    for (int x = 0; x < a.blocks(); ++x) blocks.push_back(Hermitian::identity(a.dim(x)) * c);
    return BlockElement(a, std::move(blocks));
}

BlockElement BlockElement::from_embedded(const BlockAlgebra& a, const Hermitian& m,
                                         double offblock_tol) {
    if (m.dim() != a.total()) throw InputError("from_embedded: dimension mismatch");
    std::vector<Hermitian> blocks;
    int off = 0;
    double offmass = 0.0;
    const Mat& full = m.mat();
    for (int x = 0; x < a.blocks(); ++x) {
        const int n = a.dim(x);
        blocks.push_back(hermitian_unchecked(full.block(off, off, n, n)));
        off += n;
    }
    offmass = full.norm();
    double diagmass = 0.0;
    off = 0;
    for (int x = 0; x < a.blocks(); ++x) {
        diagmass += full.block(off, off, a.dim(x), a.dim(x)).squaredNorm();
        off += a.dim(x);
    }
    const double residual = std::sqrt(std::max(0.0, offmass * offmass - diagmass));
    if (residual > offblock_tol * std::max(1.0, offmass))
        throw InputError("from_embedded: matrix has off-block mass " + std::to_string(residual));
    return BlockElement(a, std::move(blocks));
}

BlockElement BlockElement::operator+(const BlockElement& o) const {
    if (algebra_ != o.algebra_) throw InputError("BlockElement: algebra mismatch");
    std::vector<Hermitian> blocks;
    for (int x = 0; x < algebra_.blocks(); ++x) blocks.push_back(blocks_[x] + o.blocks_[x]);
    return BlockElement(algebra_, std::move(blocks));
}

BlockElement BlockElement::operator-(const BlockElement& o) const {
    if (algebra_ != o.algebra_) throw InputError("BlockElement: algebra mismatch");
    std::vector<Hermitian> blocks;
    for (int x = 0; x < algebra_.blocks(); ++x) blocks.push_back(blocks_[x] - o.blocks_[x]);
    return BlockElement(algebra_, std::move(blocks));
}

BlockElement BlockElement::operator*(double s) const {
    std::vector<Hermitian> blocks;
    for (int x = 0; x < algebra_.blocks(); ++x) blocks.push_back(blocks_[x] * s);
    return BlockElement(algebra_, std::move(blocks));
}

double BlockElement::norm() const {
    double s = 0.0;
    for (const auto& b : blocks_) s += b.mat().squaredNorm();
    return std::sqrt(s);
}

double BlockElement::trace() const {
    double s = 0.0;
    for (const auto& b : blocks_) s += b.trace();
    return s;
}

Hermitian embed(const BlockElement& a) {
    const int n = a.algebra().total();
    Mat m = Mat::Zero(n, n);
    int off = 0;
    for (int x = 0; x < a.algebra().blocks(); ++x) {
        const int d = a.algebra().dim(x);
        m.block(off, off, d, d) = a.block(x).mat();
        off += d;
    }
    return hermitian_unchecked(std::move(m));
}

BlockElement block_unit(const BlockAlgebra& a, int x) {
    if (x < 0 || x >= a.blocks()) throw InputError("block_unit: index out of range");
    std::vector<Hermitian> blocks;
    for (int y = 0; y < a.blocks(); ++y)
        blocks.push_back(y == x ? Hermitian::identity(a.dim(y)) : Hermitian::zero(a.dim(y)));
    return BlockElement(a, std::move(blocks));
}

BlockElement apply_function(const IsotoneFunction& f, const BlockElement& a) {
    return apply_function([&f](double x) { return f(x); }, a);
}

BlockElement apply_function(const std::function<double(double)>& f, const BlockElement& a) {
    std::vector<Hermitian> blocks;
    for (int x = 0; x < a.algebra().blocks(); ++x)
        blocks.push_back(apply_function(f, a.block(x)));
    return BlockElement(a.algebra(), std::move(blocks));
}

BlockMorphism::BlockMorphism(BlockAlgebra source, BlockAlgebra target,
                             std::vector<int> assignment,
                             std::vector<std::optional<Mat>> unitaries)
    : source_(std::move(source)),
      target_(std::move(target)),
      assignment_(std::move(assignment)),
      unitaries_(std::move(unitaries)) {
    if (static_cast<int>(assignment_.size()) != target_.blocks())
        throw InputError("BlockMorphism: assignment length must equal target block count");
    if (unitaries_.empty()) unitaries_.resize(assignment_.size());
    if (unitaries_.size() != assignment_.size())
        throw InputError("BlockMorphism: unitary list length mismatch");
    for (int y = 0; y < target_.blocks(); ++y) {
        const int x = assignment_[y];
        if (x < 0 || x >= source_.blocks())
            throw InputError("BlockMorphism: assignment index out of range");
        if (source_.dim(x) != target_.dim(y))
            throw InputError("BlockMorphism: block dimension mismatch in assignment");
        if (unitaries_[y]) {
            const Mat& u = *unitaries_[y];
            if (u.rows() != target_.dim(y) || u.cols() != target_.dim(y))
                throw InputError("BlockMorphism: unitary has wrong shape");
            if ((u.adjoint() * u - Mat::Identity(u.rows(), u.cols())).norm() > 1e-8)
                throw InputError("BlockMorphism: conjugation matrix is not unitary");
        }
    }
}

BlockMorphism BlockMorphism::coordinate_projection(const BlockAlgebra& source,
                                                   const std::vector<int>& retained) {
    std::vector<int> dims;
    for (int x : retained) {
        if (x < 0 || x >= source.blocks())
            throw InputError("coordinate_projection: block index out of range");
        dims.push_back(source.dim(x));
    }
    return BlockMorphism(source, BlockAlgebra(dims), retained);
}

bool BlockMorphism::is_coordinate_projection() const {
    for (const auto& u : unitaries_)
        if (u) return false;
    return true;
}

bool BlockMorphism::surjective() const {
    std::vector<int> seen;
    for (int x : assignment_) {
        if (std::find(seen.begin(), seen.end(), x) != seen.end()) return false;
        seen.push_back(x);
    }
    return true;
}

BlockElement BlockMorphism::apply(const BlockElement& a) const {
    if (a.algebra() != source_) throw InputError("BlockMorphism::apply: algebra mismatch");
    std::vector<Hermitian> blocks;
    for (int y = 0; y < target_.blocks(); ++y) {
        const Hermitian& src = a.block(assignment_[y]);
        if (unitaries_[y]) {
            Mat m = (*unitaries_[y]) * src.mat() * unitaries_[y]->adjoint();
            blocks.push_back(hermitian_unchecked(0.5 * (m + Mat(m.adjoint()))));
        } else {
            blocks.push_back(src);
        }
    }
    return BlockElement(target_, std::move(blocks));
}

}  // namespace isocone
