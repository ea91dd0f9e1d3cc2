#include "isocone/poset.hpp"

#include <algorithm>

namespace isocone {

Poset::Poset(int size) : size_(size), rel_(static_cast<std::size_t>(size) * size, 0) {
    if (size < 1) throw InputError("Poset: size must be positive");
    for (int i = 0; i < size; ++i) rel_[static_cast<std::size_t>(i) * size + i] = 1;
}

Poset::Poset(int size, const std::vector<std::pair<int, int>>& relations) : Poset(size) {
    for (const auto& [x, y] : relations) {
        if (x < 0 || x >= size || y < 0 || y >= size)
            throw InputError("Poset: relation index out of range");
        rel_[static_cast<std::size_t>(x) * size + y] = 1;
    }
    close_and_validate();
}

void Poset::close_and_validate() {
    // Warshall transitive closure
    for (int k = 0; k < size_; ++k)
        for (int i = 0; i < size_; ++i)
            if (rel_[static_cast<std::size_t>(i) * size_ + k])
                for (int j = 0; j < size_; ++j)
                    if (rel_[static_cast<std::size_t>(k) * size_ + j])
                        rel_[static_cast<std::size_t>(i) * size_ + j] = 1;
    for (int i = 0; i < size_; ++i)
        for (int j = i + 1; j < size_; ++j)
            if (leq(i, j) && leq(j, i))
                throw InputError("Poset: antisymmetry violated between " + std::to_string(i) +
                                 " and " + std::to_string(j));
}

Poset Poset::chain(int size) {
    std::vector<std::pair<int, int>> rel;
    for (int i = 0; i + 1 < size; ++i) rel.emplace_back(i, i + 1);
    return Poset(size, rel);
}

Poset Poset::antichain(int size) { return Poset(size); }

bool Poset::covers(int x, int y) const {
    if (!strictly_less(x, y)) return false;
    for (int z = 0; z < size_; ++z)
        if (strictly_less(x, z) && strictly_less(z, y)) return false;
    return true;
}

bool Poset::refines_into(const Poset& o) const {
    if (size_ != o.size_) return false;
    for (int i = 0; i < size_; ++i)
        for (int j = 0; j < size_; ++j)
            if (leq(i, j) && !o.leq(i, j)) return false;
    return true;
}

std::vector<std::pair<int, int>> Poset::hasse_edges() const {
    std::vector<std::pair<int, int>> edges;
    for (int x = 0; x < size_; ++x)
        for (int y = 0; y < size_; ++y)
            if (covers(x, y)) edges.emplace_back(x, y);
    std::sort(edges.begin(), edges.end());
    return edges;
}

Poset Poset::restrict(const std::vector<int>& elements) const {
    const int m = static_cast<int>(elements.size());
    Poset out(m);
    for (int i = 0; i < m; ++i) {
        if (elements[i] < 0 || elements[i] >= size_)
            throw InputError("Poset::restrict: element out of range");
        for (int j = 0; j < m; ++j)
            out.rel_[static_cast<std::size_t>(i) * m + j] = leq(elements[i], elements[j]);
    }
    return out;
}

int Poset::height(int x) const {
    int best = 0;
    for (int y = 0; y < size_; ++y)
        if (strictly_less(y, x)) best = std::max(best, height(y) + 1);
    return best;
}

Poset cardinal_sum(const Poset& m, const Poset& n) {
    const int k = m.size() + n.size();
    std::vector<std::pair<int, int>> rel;
    for (int i = 0; i < m.size(); ++i)
        for (int j = 0; j < m.size(); ++j)
            if (m.leq(i, j)) rel.emplace_back(i, j);
    for (int i = 0; i < n.size(); ++i)
        for (int j = 0; j < n.size(); ++j)
            if (n.leq(i, j)) rel.emplace_back(m.size() + i, m.size() + j);
    return Poset(k, rel);
}

Poset ordinal_sum(const Poset& m, const Poset& n) {
    const int k = m.size() + n.size();
    std::vector<std::pair<int, int>> rel;
    for (int i = 0; i < m.size(); ++i)
        for (int j = 0; j < m.size(); ++j)
            if (m.leq(i, j)) rel.emplace_back(i, j);
    for (int i = 0; i < n.size(); ++i)
        for (int j = 0; j < n.size(); ++j)
            if (n.leq(i, j)) rel.emplace_back(m.size() + i, m.size() + j);
    for (int i = 0; i < m.size(); ++i)
        for (int j = 0; j < n.size(); ++j) rel.emplace_back(i, m.size() + j);
    return Poset(k, rel);
}

Poset lexicographic_sum(const Poset& p, const std::vector<Poset>& family) {
    if (static_cast<int>(family.size()) != p.size())
        throw InputError("lexicographic_sum: family length must equal base poset size");
    std::vector<int> offset(family.size() + 1, 0);
    for (std::size_t x = 0; x < family.size(); ++x)
        offset[x + 1] = offset[x] + family[x].size();
    const int k = offset.back();
    std::vector<std::pair<int, int>> rel;
    for (int x = 0; x < p.size(); ++x) {
        for (int i = 0; i < family[x].size(); ++i)
            for (int j = 0; j < family[x].size(); ++j)
                if (family[x].leq(i, j)) rel.emplace_back(offset[x] + i, offset[x] + j);
        for (int y = 0; y < p.size(); ++y)
            if (p.strictly_less(x, y))
                for (int i = 0; i < family[x].size(); ++i)
                    for (int j = 0; j < family[y].size(); ++j)
                        rel.emplace_back(offset[x] + i, offset[y] + j);
    }
    return Poset(k, rel);
}

std::vector<std::pair<int, int>> hasse(const Poset& p) { return p.hasse_edges(); }

bool is_hasse_connected(const Poset& p) {
    const int n = p.size();
    std::vector<int> comp(n, -1);
    const auto edges = p.hasse_edges();
    std::vector<std::vector<int>> adj(n);
    for (const auto& [x, y] : edges) {
        adj[x].push_back(y);
        adj[y].push_back(x);
    }
    std::vector<int> stack = {0};
    comp[0] = 0;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
            if (comp[w] < 0) {
                comp[w] = 0;
                stack.push_back(w);
            }
    }
    return std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });
}

bool UpSetFamily::contains(uint32_t mask) const {
    return std::find(sets.begin(), sets.end(), mask) != sets.end();
}

UpSetFamily up_sets(const Poset& p) {
    const int n = p.size();
    if (n > 20) throw ResourceError("up_sets: enumeration bound is 20 elements");
    std::vector<uint32_t> up(n, 0);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (p.leq(x, y)) up[x] |= (1u << y);
    UpSetFamily fam{p, {}};
    const uint32_t total = 1u << n;
    for (uint32_t s = 0; s < total; ++s) {
        bool ok = true;
        for (int x = 0; x < n && ok; ++x)
            if (s & (1u << x)) ok = (s & up[x]) == up[x];
        if (ok) fam.sets.push_back(s);
    }
    return fam;
}

}  // namespace isocone
