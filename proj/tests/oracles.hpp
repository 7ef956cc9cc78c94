#pragma once

// Test-only oracles, kept independent of the library's solver and
// conflict-construction paths.

#include <algorithm>
#include <random>
#include <vector>

#include "ordconflict/core.hpp"

namespace oracles {

using ordconflict::ConflictSpec;
using ordconflict::Edge;
using ordconflict::Int;
using ordconflict::OrderedGraph;
using ordconflict::SimpleGraph;

// Largest clique by scanning every vertex subset.
inline int brute_clique(const SimpleGraph& g) {
    int n = g.n();
    int best = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> members;
        for (int v = 0; v < n; ++v)
            if (mask & (1u << v)) members.push_back(v);
        bool clique = true;
        for (size_t i = 0; i < members.size() && clique; ++i)
            for (size_t j = i + 1; j < members.size(); ++j)
                if (!g.has_edge(members[i], members[j])) {
                    clique = false;
                    break;
                }
        if (clique) best = std::max(best, static_cast<int>(members.size()));
    }
    return best;
}

inline int brute_independence(const SimpleGraph& g) {
    int n = g.n();
    int best = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> members;
        for (int v = 0; v < n; ++v)
            if (mask & (1u << v)) members.push_back(v);
        bool indep = true;
        for (size_t i = 0; i < members.size() && indep; ++i)
            for (size_t j = i + 1; j < members.size(); ++j)
                if (g.has_edge(members[i], members[j])) {
                    indep = false;
                    break;
                }
        if (indep) best = std::max(best, static_cast<int>(members.size()));
    }
    return best;
}

inline bool brute_colorable(const SimpleGraph& g, int t, std::vector<int>& color, int at) {
    if (t <= 0) return g.n() == 0;
    if (at == g.n()) return true;
    int limit = at == 0 ? 1 : t;  // vertex 0 pinned to color 0
    for (int c = 0; c < limit; ++c) {
        bool ok = true;
        for (int u = 0; u < at && ok; ++u)
            if (g.has_edge(u, at) && color[static_cast<size_t>(u)] == c) ok = false;
        if (!ok) continue;
        color[static_cast<size_t>(at)] = c;
        if (brute_colorable(g, t, color, at + 1)) return true;
    }
    return false;
}

inline bool brute_colorable(const SimpleGraph& g, int t) {
    std::vector<int> color(static_cast<size_t>(g.n()), -1);
    return brute_colorable(g, t, color, 0);
}

inline int brute_chromatic(const SimpleGraph& g) {
    if (g.n() == 0) return 0;
    for (int t = 1; t <= g.n(); ++t)
        if (brute_colorable(g, t)) return t;
    return g.n();
}

// Largest k with k(k-1)/2 <= x, by loop.
inline long long loop_f(long long x) {
    long long k = 1;
    while ((k + 1) * k / 2 <= x) ++k;
    return k;
}

// Conflict evaluation written out independently of the library helpers.
inline bool recheck_conflict(const Edge& e1, const Edge& e2, const ConflictSpec& spec) {
    auto order_ok = [&](Int a, Int b, Int c, Int d) {
        for (const auto& r : spec.matrix) {
            __int128 acc = 0;
            acc += static_cast<__int128>(r[0]) * a;
            acc += static_cast<__int128>(r[1]) * b;
            acc += static_cast<__int128>(r[2]) * c;
            acc += static_cast<__int128>(r[3]) * d;
            if (acc < spec.p) return false;
        }
        return true;
    };
    return order_ok(e1.u, e1.v, e2.u, e2.v) || order_ok(e2.u, e2.v, e1.u, e1.v);
}

inline OrderedGraph random_graph_window(std::mt19937_64& rng, int n_lo, int n_hi, Int lo, Int hi) {
    int n = std::uniform_int_distribution<int>(n_lo, n_hi)(rng);
    std::vector<Int> all;
    for (Int v = lo; v <= hi; ++v) all.push_back(v);
    for (int i = 0; i < n; ++i) {
        int j = std::uniform_int_distribution<int>(i, static_cast<int>(all.size()) - 1)(rng);
        std::swap(all[static_cast<size_t>(i)], all[static_cast<size_t>(j)]);
    }
    std::vector<Int> coords(all.begin(), all.begin() + n);
    std::sort(coords.begin(), coords.end());
    std::vector<std::pair<Int, Int>> edges;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (std::uniform_int_distribution<int>(0, 1)(rng))
                edges.emplace_back(coords[static_cast<size_t>(a)], coords[static_cast<size_t>(b)]);
    if (edges.empty()) edges.emplace_back(coords[0], coords[1]);
    return OrderedGraph::validated(coords, edges);
}

inline SimpleGraph complete_unordered(int n) {
    SimpleGraph g(n);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) g.add_edge(a, b);
    return g;
}

inline SimpleGraph cycle_unordered(int n) {
    SimpleGraph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

inline SimpleGraph path_unordered(int n) {
    SimpleGraph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

inline SimpleGraph star_unordered(int leaves) {
    SimpleGraph g(leaves + 1);
    for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
    return g;
}

inline SimpleGraph petersen() {
    SimpleGraph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);          // outer cycle
        g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        g.add_edge(i, 5 + i);                 // spokes
    }
    return g;
}

inline SimpleGraph random_unordered(std::mt19937_64& rng, int n_lo, int n_hi, double density = 0.5) {
    int n = std::uniform_int_distribution<int>(n_lo, n_hi)(rng);
    SimpleGraph g(n);
    std::bernoulli_distribution coin(density);
    bool any = false;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (coin(rng)) {
                g.add_edge(a, b);
                any = true;
            }
    if (!any && n >= 2) g.add_edge(0, 1);
    return g;
}

}  // namespace oracles
