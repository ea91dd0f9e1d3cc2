#pragma once

// Finite posets, their sums and Hasse-diagram utilities.

#include "isocone/types.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace isocone {

// Finite partial order on {0, .., size-1} stored as the full boolean
// relation matrix.  Construction takes generating relations, closes them
// transitively and validates antisymmetry.
class Poset {
  public:
    explicit Poset(int size);  // antichain
    Poset(int size, const std::vector<std::pair<int, int>>& relations);

    static Poset chain(int size);
    static Poset antichain(int size);

    int size() const { return size_; }
    bool leq(int x, int y) const { return rel_[static_cast<std::size_t>(x) * size_ + y]; }
    bool strictly_less(int x, int y) const { return x != y && leq(x, y); }
    bool comparable(int x, int y) const { return leq(x, y) || leq(y, x); }
    bool covers(int x, int y) const;  // y covers x

    bool operator==(const Poset& o) const { return size_ == o.size_ && rel_ == o.rel_; }
    bool operator!=(const Poset& o) const { return !(*this == o); }

    // true iff every relation of this poset also holds in o
    bool refines_into(const Poset& o) const;

    // covering pairs (x, y) with x covered by y, lexicographically sorted
    std::vector<std::pair<int, int>> hasse_edges() const;

    // restriction to the given elements (order inherited); labels renumbered
    // in the order given
    Poset restrict(const std::vector<int>& elements) const;

    // length of the longest chain strictly below x
    int height(int x) const;

  private:
    int size_;
    std::vector<uint8_t> rel_;
    void close_and_validate();
};

Poset cardinal_sum(const Poset& m, const Poset& n);
Poset ordinal_sum(const Poset& m, const Poset& n);

// Replaces each point x of p by family[x]; family[x] < family[y] when x < y,
// incomparable blocks stay incomparable.  Elements are labeled by pairs
// (block, inner index) flattened in block order.
Poset lexicographic_sum(const Poset& p, const std::vector<Poset>& family);

std::vector<std::pair<int, int>> hasse(const Poset& p);
bool is_hasse_connected(const Poset& p);

// All up-sets (including the empty set and the full set) as bitmasks.
// Enumeration bound: size <= 20.
struct UpSetFamily {
    Poset poset;
    std::vector<uint32_t> sets;

    bool contains(uint32_t mask) const;
};

UpSetFamily up_sets(const Poset& p);

}  // namespace isocone
