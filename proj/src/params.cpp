#include "ordconflict/params.hpp"

#include <algorithm>
#include <functional>

namespace ordconflict {

ConflictSpec cross_spec() {
    return ConflictSpec{{{-1, 0, 1, 0}, {0, 1, -1, 0}, {0, -1, 0, 1}}, 1};
}

ConflictSpec degeneracy_spec() { return ConflictSpec{{{0, 1, 0, -1}, {0, -1, 0, 1}}, 0}; }

ConflictSpec length_spec(Int p) { return ConflictSpec{{{-1, 1, 0, 0}}, p}; }

OrderedGraph ordered_by(const SimpleGraph& f, const std::vector<int>& ordering) {
    int n = f.n();
    std::vector<Int> pos(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) pos[static_cast<size_t>(ordering[static_cast<size_t>(i)])] = i + 1;
    std::vector<Int> coords(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) coords[static_cast<size_t>(i)] = i + 1;
    std::vector<Edge> edges;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (f.has_edge(a, b)) {
                Int x = pos[static_cast<size_t>(a)], y = pos[static_cast<size_t>(b)];
                edges.push_back(Edge{std::min(x, y), std::max(x, y)});
            }
    std::sort(edges.begin(), edges.end());
    return OrderedGraph::from_sorted(std::move(coords), std::move(edges));
}

namespace {

void require_searchable(const SimpleGraph& f) {
    if (!f.has_any_edge()) throw ValidationError("parameter needs at least one edge");
    if (f.n() > kMaxOrderingVertices)
        throw ValidationError("ordering search is exhaustive; graph too large");
}

std::vector<Edge> prefix_edges(const SimpleGraph& f, const std::vector<int>& prefix) {
    std::vector<Edge> edges;
    for (size_t a = 0; a < prefix.size(); ++a)
        for (size_t b = a + 1; b < prefix.size(); ++b)
            if (f.has_edge(prefix[a], prefix[b]))
                edges.push_back(Edge{static_cast<Int>(a) + 1, static_cast<Int>(b) + 1});
    std::sort(edges.begin(), edges.end());
    return edges;
}

OrderedGraph prefix_graph(const SimpleGraph& f, const std::vector<int>& prefix) {
    std::vector<Int> coords(prefix.size());
    for (size_t i = 0; i < prefix.size(); ++i) coords[i] = static_cast<Int>(i) + 1;
    return OrderedGraph::from_sorted(std::move(coords), prefix_edges(f, prefix));
}

// Exhaustive scan over vertex orderings, pruning a branch as soon as the
// exact value of the placed prefix already reaches the incumbent. eval must
// be monotone under appending vertices on the right. Orderings are halved by
// fixing vertex 0 into the left half (all evaluated parameters are invariant
// under reversal).
int min_over_orderings(const SimpleGraph& f,
                       const std::function<int(const OrderedGraph&)>& eval,
                       const SolveBudget& budget) {
    require_searchable(f);
    int n = f.n();
    long long nodes = 0;
    int best = -1;
    std::vector<int> prefix;
    std::vector<bool> used(static_cast<size_t>(n), false);

    std::function<void()> rec = [&] {
        if (++nodes > budget.node_limit) throw BudgetExceeded(1, best < 0 ? f.n() : best);
        int placed = static_cast<int>(prefix.size());
        if (best == 1) return;
        if (placed == n) {
            int v = eval(prefix_graph(f, prefix));
            if (best < 0 || v < best) best = v;
            return;
        }
        if (placed >= 4 && best >= 0) {
            OrderedGraph pg = prefix_graph(f, prefix);
            if (pg.has_edges() && eval(pg) >= best) return;
        }
        // Vertex 0 must land in the left half; prune once that is impossible.
        if (!used[0] && placed >= (n + 1) / 2) return;
        for (int v = 0; v < n; ++v) {
            if (used[static_cast<size_t>(v)]) continue;
            if (v == 0 && placed + 1 > (n + 1) / 2) continue;
            used[static_cast<size_t>(v)] = true;
            prefix.push_back(v);
            rec();
            prefix.pop_back();
            used[static_cast<size_t>(v)] = false;
        }
    };
    rec();
    return best;
}

// Longest chain of strictly nested edges with margin >= 1 on both sides,
// i.e. the clique number of the nesting conflict graph at threshold 1.
int longest_nesting_chain(const OrderedGraph& g) {
    if (!g.has_edges()) return 0;
    std::vector<Edge> es = g.edges();
    std::sort(es.begin(), es.end(), [](const Edge& a, const Edge& b) {
        if (a.u != b.u) return a.u < b.u;
        return a.v > b.v;
    });
    std::vector<int> chain(es.size(), 1);
    int best = 1;
    for (size_t i = 0; i < es.size(); ++i) {
        for (size_t j = 0; j < i; ++j)
            if (es[j].u < es[i].u && es[j].v > es[i].v) chain[i] = std::max(chain[i], chain[j] + 1);
        best = std::max(best, chain[i]);
    }
    return best;
}

}  // namespace

int page_number(const SimpleGraph& f, const SolveBudget& budget) {
    ConflictSpec cross = cross_spec();
    return min_over_orderings(
        f,
        [&](const OrderedGraph& g) {
            if (!g.has_edges()) return 0;
            return chromatic_number(build_conflict_graph(g, cross).adj, budget);
        },
        budget);
}

int queue_number(const SimpleGraph& f, const SolveBudget& budget) {
    return min_over_orderings(
        f, [&](const OrderedGraph& g) { return longest_nesting_chain(g); }, budget);
}

int arch_number(const SimpleGraph& f, const SolveBudget& budget) {
    return min_over_orderings(
        f,
        [&](const OrderedGraph& g) { return g.has_edges() ? omega_leftof_fast(g, 1) : 0; },
        budget);
}

int degeneracy_framework(const SimpleGraph& f) {
    if (!f.has_any_edge()) throw ValidationError("parameter needs at least one edge");
    int n = f.n();
    if (n > kMaxOrderingVertices) throw ValidationError("ordering search is exhaustive; graph too large");
    std::vector<unsigned> adj(static_cast<size_t>(n), 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b && f.has_edge(a, b)) adj[static_cast<size_t>(a)] |= 1u << b;
    unsigned all = (n == 32) ? ~0u : ((1u << n) - 1);
    int best = n;
    std::function<void(unsigned, int)> rec = [&](unsigned placed, int cur) {
        if (cur >= best) return;
        if (placed == all) {
            best = cur;
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (placed & (1u << v)) continue;
            int back = std::popcount(adj[static_cast<size_t>(v)] & placed);
            rec(placed | (1u << v), std::max(cur, back));
        }
    };
    rec(0u, 0);
    return best;
}

int degeneracy_peel(const SimpleGraph& f) {
    if (!f.has_any_edge()) throw ValidationError("parameter needs at least one edge");
    int n = f.n();
    std::vector<int> deg(static_cast<size_t>(n));
    std::vector<bool> gone(static_cast<size_t>(n), false);
    for (int v = 0; v < n; ++v) deg[static_cast<size_t>(v)] = f.degree(v);
    int d = 0;
    for (int step = 0; step < n; ++step) {
        int pick = -1;
        for (int v = 0; v < n; ++v)
            if (!gone[static_cast<size_t>(v)] && (pick < 0 || deg[static_cast<size_t>(v)] < deg[static_cast<size_t>(pick)]))
                pick = v;
        d = std::max(d, deg[static_cast<size_t>(pick)]);
        gone[static_cast<size_t>(pick)] = true;
        f.neighbors(pick).for_each([&](int w) {
            if (!gone[static_cast<size_t>(w)]) --deg[static_cast<size_t>(w)];
        });
    }
    return d;
}

int band_width(const SimpleGraph& f) {
    if (!f.has_any_edge()) throw ValidationError("parameter needs at least one edge");
    int n = f.n();
    if (n > kMaxOrderingVertices) throw ValidationError("ordering search is exhaustive; graph too large");
    std::vector<unsigned> adj(static_cast<size_t>(n), 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b && f.has_edge(a, b)) adj[static_cast<size_t>(a)] |= 1u << b;
    int best = n;  // any ordering achieves at most n-1
    std::vector<int> pos(static_cast<size_t>(n), -1);
    std::function<void(unsigned, int, int)> rec = [&](unsigned placed, int at, int cur) {
        if (cur >= best) return;
        if (at == n) {
            best = cur;
            return;
        }
        if (!(placed & 1u) && at >= (n + 1) / 2) return;  // vertex 0 in the left half
        for (int v = 0; v < n; ++v) {
            if (placed & (1u << v)) continue;
            if (v == 0 && at + 1 > (n + 1) / 2) continue;
            int worst = cur;
            unsigned back = adj[static_cast<size_t>(v)] & placed;
            while (back) {
                int u = std::countr_zero(back);
                back &= back - 1;
                worst = std::max(worst, at - pos[static_cast<size_t>(u)]);
            }
            pos[static_cast<size_t>(v)] = at;
            rec(placed | (1u << v), at + 1, worst);
            pos[static_cast<size_t>(v)] = -1;
        }
    };
    rec(0u, 0, 0);
    return best;
}

int interval_chromatic(const OrderedGraph& g) {
    int n = g.n();
    if (n == 0) return 0;
    SimpleGraph u = g.underlying();
    int blocks = 1;
    int start = 0;
    for (int i = 1; i < n; ++i) {
        bool inside = false;
        for (int j = start; j < i && !inside; ++j)
            if (u.has_edge(j, i)) inside = true;
        if (inside) {
            ++blocks;
            start = i;
        }
    }
    return blocks;
}

}  // namespace ordconflict
