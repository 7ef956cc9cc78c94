#include "ordconflict/solve.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

namespace ordconflict {

namespace {

using Clock = std::chrono::steady_clock;

struct BudgetSignal {};

struct BudgetTracker {
    explicit BudgetTracker(const SolveBudget& b)
        : node_limit(b.node_limit), deadline(Clock::now() + std::chrono::milliseconds(b.time_limit_ms)) {}
    long long node_limit;
    Clock::time_point deadline;
    long long nodes = 0;

    void tick() {
        if (++nodes > node_limit) throw BudgetSignal{};
        if ((nodes & 2047) == 0 && Clock::now() > deadline) throw BudgetSignal{};
    }
};

// Vertices reordered by (degree desc, index asc); adjacency rebuilt in that order.
std::vector<Bitset> reordered_adjacency(const SimpleGraph& g, std::vector<int>& order) {
    int n = g.n();
    order.resize(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        int da = g.degree(a), db = g.degree(b);
        if (da != db) return da > db;
        return a < b;
    });
    std::vector<int> pos(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) pos[static_cast<size_t>(order[static_cast<size_t>(i)])] = i;
    std::vector<Bitset> adj(static_cast<size_t>(n), Bitset(n));
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (g.has_edge(a, b)) {
                adj[static_cast<size_t>(pos[static_cast<size_t>(a)])].set(pos[static_cast<size_t>(b)]);
                adj[static_cast<size_t>(pos[static_cast<size_t>(b)])].set(pos[static_cast<size_t>(a)]);
            }
    return adj;
}

struct CliqueSearch {
    const std::vector<Bitset>& adj;
    BudgetTracker& budget;
    int best = 0;

    // Greedy-color the candidates, then branch highest color first; a vertex
    // with color c cannot extend the current clique past rsize + c.
    void expand(int rsize, Bitset cand) {
        budget.tick();
        std::vector<int> order;
        std::vector<int> colors;
        Bitset uncolored = cand;
        int color = 0;
        while (uncolored.any()) {
            ++color;
            Bitset avail = uncolored;
            while (avail.any()) {
                int v = avail.find_first();
                avail.reset(v);
                avail.and_not(adj[static_cast<size_t>(v)]);
                uncolored.reset(v);
                order.push_back(v);
                colors.push_back(color);
            }
        }
        for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
            if (rsize + colors[static_cast<size_t>(i)] <= best) return;
            int v = order[static_cast<size_t>(i)];
            Bitset next = cand & adj[static_cast<size_t>(v)];
            if (next.none())
                best = std::max(best, rsize + 1);
            else
                expand(rsize + 1, std::move(next));
            cand.reset(v);
        }
    }
};

int greedy_color_count(const std::vector<Bitset>& adj, int n) {
    int colors = 0;
    Bitset uncolored(n);
    for (int v = 0; v < n; ++v) uncolored.set(v);
    while (uncolored.any()) {
        ++colors;
        Bitset avail = uncolored;
        while (avail.any()) {
            int v = avail.find_first();
            avail.reset(v);
            avail.and_not(adj[static_cast<size_t>(v)]);
            uncolored.reset(v);
        }
    }
    return colors;
}

struct ColorSearch {
    const SimpleGraph& g;
    int k;
    BudgetTracker& budget;
    std::vector<int> color;  // -1 = uncolored
    std::vector<Bitset> forbidden;
    int colored = 0;
    int max_used = 0;

    bool run() {
        if (k <= 0) return g.n() == 0;
        if (g.n() <= k) return true;
        color.assign(static_cast<size_t>(g.n()), -1);
        forbidden.assign(static_cast<size_t>(g.n()), Bitset(k));
        return branch();
    }

    // DSATUR branching: most saturated first, ties by degree then index.
    int pick() const {
        int bestv = -1, bestsat = -1, bestdeg = -1;
        for (int v = 0; v < g.n(); ++v) {
            if (color[static_cast<size_t>(v)] >= 0) continue;
            int sat = forbidden[static_cast<size_t>(v)].count();
            int deg = g.degree(v);
            if (sat > bestsat || (sat == bestsat && deg > bestdeg)) {
                bestv = v;
                bestsat = sat;
                bestdeg = deg;
            }
        }
        return bestv;
    }

    bool branch() {
        budget.tick();
        if (colored == g.n()) return true;
        int v = pick();
        int limit = std::min(k, max_used + 1);
        for (int c = 0; c < limit; ++c) {
            if (forbidden[static_cast<size_t>(v)].test(c)) continue;
            color[static_cast<size_t>(v)] = c;
            ++colored;
            int prev_max = max_used;
            max_used = std::max(max_used, c + 1);
            std::vector<int> touched;
            g.neighbors(v).for_each([&](int w) {
                if (color[static_cast<size_t>(w)] < 0 && !forbidden[static_cast<size_t>(w)].test(c)) {
                    forbidden[static_cast<size_t>(w)].set(c);
                    touched.push_back(w);
                }
            });
            if (branch()) return true;
            for (int w : touched) forbidden[static_cast<size_t>(w)].reset(c);
            max_used = prev_max;
            --colored;
            color[static_cast<size_t>(v)] = -1;
        }
        return false;
    }
};

}  // namespace

int clique_number(const SimpleGraph& g, const SolveBudget& budget) {
    if (g.n() == 0) throw UndefinedError("clique number of a graph with no vertices");
    std::vector<int> order;
    auto adj = reordered_adjacency(g, order);
    int root_ub = greedy_color_count(adj, g.n());
    BudgetTracker tracker(budget);
    CliqueSearch search{adj, tracker, 1};
    Bitset all(g.n());
    for (int v = 0; v < g.n(); ++v) all.set(v);
    try {
        search.expand(0, std::move(all));
    } catch (const BudgetSignal&) {
        throw BudgetExceeded(search.best, root_ub);
    }
    return search.best;
}

int independence_number(const SimpleGraph& g, const SolveBudget& budget) {
    return clique_number(g.complement(), budget);
}

bool k_colorable(const SimpleGraph& g, int k, const SolveBudget& budget) {
    BudgetTracker tracker(budget);
    ColorSearch search{g, k, tracker};
    try {
        return search.run();
    } catch (const BudgetSignal&) {
        throw BudgetExceeded(0, g.n());
    }
}

int chromatic_number(const SimpleGraph& g, const SolveBudget& budget) {
    if (g.n() == 0) return 0;
    if (!g.has_any_edge()) return 1;
    int lb;
    try {
        lb = clique_number(g, budget);
    } catch (const BudgetExceeded& e) {
        throw BudgetExceeded(e.lower, g.n());
    }
    std::vector<int> order;
    auto adj = reordered_adjacency(g, order);
    int ub = greedy_color_count(adj, g.n());
    for (int k = lb; k < ub; ++k) {
        try {
            if (k_colorable(g, k, budget)) return k;
        } catch (const BudgetExceeded&) {
            throw BudgetExceeded(k, ub);
        }
    }
    return ub;
}

int alpha(const ConflictGraph& cg, const SolveBudget& budget) {
    return independence_number(cg.adj, budget);
}

int omega(const ConflictGraph& cg, const SolveBudget& budget) {
    return clique_number(cg.adj, budget);
}

std::vector<int> leftof_chain_levels(const OrderedGraph& g, Int p) {
    if (p < 0) throw ValidationError("left-of chain levels need p >= 0");
    if (!g.has_edges()) throw UndefinedError("no edges");
    const auto& edges = g.edges();
    int m = g.m();
    // Edge e' precedes e when e'.v + p <= e.u; sorting by right endpoint makes
    // every predecessor appear earlier.
    std::vector<int> by_right(static_cast<size_t>(m));
    std::iota(by_right.begin(), by_right.end(), 0);
    std::stable_sort(by_right.begin(), by_right.end(), [&](int a, int b) {
        return edges[static_cast<size_t>(a)].v < edges[static_cast<size_t>(b)].v;
    });
    std::vector<int> level(static_cast<size_t>(m), 1);
    std::vector<Int> right_sorted;      // right endpoints in processing order
    std::vector<int> prefix_best;       // running max level among processed edges
    right_sorted.reserve(static_cast<size_t>(m));
    prefix_best.reserve(static_cast<size_t>(m));
    for (int idx : by_right) {
        const Edge& e = edges[static_cast<size_t>(idx)];
        // Largest processed position with right endpoint <= e.u - p.
        auto it = std::upper_bound(right_sorted.begin(), right_sorted.end(), e.u - p);
        if (it != right_sorted.begin()) {
            int pos = static_cast<int>(it - right_sorted.begin()) - 1;
            level[static_cast<size_t>(idx)] = prefix_best[static_cast<size_t>(pos)] + 1;
        }
        right_sorted.push_back(e.v);
        int lvl = level[static_cast<size_t>(idx)];
        prefix_best.push_back(prefix_best.empty() ? lvl : std::max(prefix_best.back(), lvl));
    }
    return level;
}

int omega_leftof_fast(const OrderedGraph& g, Int p) {
    auto levels = leftof_chain_levels(g, p);
    return *std::max_element(levels.begin(), levels.end());
}

}  // namespace ordconflict
