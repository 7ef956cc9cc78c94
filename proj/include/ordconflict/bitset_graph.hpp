#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace ordconflict {

/// Fixed-capacity bitset, sized at construction. Used for adjacency rows and
/// candidate sets in the exact solvers.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int nbits) : nbits_(nbits), w_(static_cast<size_t>(nbits + 63) / 64, 0) {}

    int capacity() const { return nbits_; }
    void set(int i) { w_[static_cast<size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { w_[static_cast<size_t>(i) >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (w_[static_cast<size_t>(i) >> 6] >> (i & 63)) & 1; }

    int count() const {
        int c = 0;
        for (auto x : w_) c += std::popcount(x);
        return c;
    }
    bool any() const {
        for (auto x : w_)
            if (x) return true;
        return false;
    }
    bool none() const { return !any(); }

    /// Index of the lowest set bit, or -1.
    int find_first() const {
        for (size_t b = 0; b < w_.size(); ++b)
            if (w_[b]) return static_cast<int>(b * 64) + std::countr_zero(w_[b]);
        return -1;
    }

    Bitset& operator&=(const Bitset& o) {
        for (size_t b = 0; b < w_.size(); ++b) w_[b] &= o.w_[b];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        for (size_t b = 0; b < w_.size(); ++b) w_[b] |= o.w_[b];
        return *this;
    }
    /// this &= ~o
    Bitset& and_not(const Bitset& o) {
        for (size_t b = 0; b < w_.size(); ++b) w_[b] &= ~o.w_[b];
        return *this;
    }
    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }

    bool operator==(const Bitset& o) const { return nbits_ == o.nbits_ && w_ == o.w_; }

    template <typename F>
    void for_each(F&& f) const {
        for (size_t b = 0; b < w_.size(); ++b) {
            std::uint64_t x = w_[b];
            while (x) {
                int i = static_cast<int>(b * 64) + std::countr_zero(x);
                f(i);
                x &= x - 1;
            }
        }
    }

private:
    int nbits_ = 0;
    std::vector<std::uint64_t> w_;
};

/// Undirected simple graph on vertices 0..n-1 with bitset adjacency rows.
class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(int n) : n_(n), adj_(static_cast<size_t>(n), Bitset(n)) {}

    int n() const { return n_; }
    void add_edge(int a, int b) {
        adj_[static_cast<size_t>(a)].set(b);
        adj_[static_cast<size_t>(b)].set(a);
    }
    bool has_edge(int a, int b) const { return adj_[static_cast<size_t>(a)].test(b); }
    const Bitset& neighbors(int v) const { return adj_[static_cast<size_t>(v)]; }
    int degree(int v) const { return adj_[static_cast<size_t>(v)].count(); }

    long long edge_count() const {
        long long d = 0;
        for (int v = 0; v < n_; ++v) d += degree(v);
        return d / 2;
    }
    bool has_any_edge() const {
        for (int v = 0; v < n_; ++v)
            if (adj_[static_cast<size_t>(v)].any()) return true;
        return false;
    }

    SimpleGraph complement() const {
        SimpleGraph c(n_);
        for (int a = 0; a < n_; ++a)
            for (int b = a + 1; b < n_; ++b)
                if (!has_edge(a, b)) c.add_edge(a, b);
        return c;
    }

    /// Induced subgraph on the listed vertices (in the given order).
    SimpleGraph induced(const std::vector<int>& keep) const {
        SimpleGraph s(static_cast<int>(keep.size()));
        for (size_t i = 0; i < keep.size(); ++i)
            for (size_t j = i + 1; j < keep.size(); ++j)
                if (has_edge(keep[i], keep[j])) s.add_edge(static_cast<int>(i), static_cast<int>(j));
        return s;
    }

    bool operator==(const SimpleGraph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    int n_ = 0;
    std::vector<Bitset> adj_;
};

}  // namespace ordconflict
