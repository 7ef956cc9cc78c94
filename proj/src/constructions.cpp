#include "ordconflict/constructions.hpp"

#include <algorithm>
#include <cassert>

namespace ordconflict {

namespace {

constexpr Int kEmbedLimit = Int{1} << 62;

Int ceil_div_int(Int a, Int b) {
    // b > 0
    Int q = a / b;
    if (a % b != 0 && a > 0) ++q;
    return q;
}

std::vector<Int> range_coords(int k, Int step) {
    std::vector<Int> vs(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) vs[static_cast<size_t>(i)] = (static_cast<Int>(i) + 1) * step;
    return vs;
}

OrderedGraph power_complete_graph(int k, Int q) {
    std::vector<Int> vs;
    Int x = 1;
    for (int i = 0; i < k; ++i) {
        if (x > kEmbedLimit / q) throw ValidationError("power embedding overflows");
        x *= q;
        vs.push_back(x);
    }
    return complete_graph(std::move(vs));
}

bool odd_reverse_negate(const std::vector<Transform>& trace) {
    int c = 0;
    for (Transform t : trace)
        if (t == Transform::ReverseNegate) ++c;
    return c % 2 == 1;
}

// Base q of the power embedding that makes every pair of edges conflict:
// q >= max{2,p}, and when m2+m4 = 0 additionally q must not divide m1.
Int complete_power_base(const ConflictSpec& rep) {
    Int m1 = rep.matrix[0][0], m2 = rep.matrix[0][1], m4 = rep.matrix[0][3];
    Int q = std::max<Int>(2, rep.p);
    if (m2 + m4 == 0) {
        Int a1 = m1 < 0 ? -m1 : m1;
        while (a1 % q == 0) ++q;
    }
    return q;
}

// Base q making every linear-form value strictly negative enough: smallest
// q >= max{2,-p} with m1+m2*q <= -1 and m3+m4*q <= -1 (m2,m4 < 0).
Int empty_power_base(const ConflictSpec& rep) {
    Int m1 = rep.matrix[0][0], m2 = rep.matrix[0][1];
    Int m3 = rep.matrix[0][2], m4 = rep.matrix[0][3];
    Int q = std::max<Int>(2, -rep.p);
    q = std::max(q, ceil_div_int(m1 + 1, -m2));
    q = std::max(q, ceil_div_int(m3 + 1, -m4));
    return q;
}

// Extremes of one matrix row over all ordered pairs of distinct edges.
struct RowRange {
    __int128 lo;
    __int128 hi;
};
RowRange row_range(const OrderedGraph& g, const std::array<Int, 4>& r) {
    RowRange out{0, 0};
    bool first = true;
    auto eval = [&](const Edge& e1, const Edge& e2) {
        __int128 v = static_cast<__int128>(r[0]) * e1.u + static_cast<__int128>(r[1]) * e1.v +
                     static_cast<__int128>(r[2]) * e2.u + static_cast<__int128>(r[3]) * e2.v;
        if (first || v < out.lo) out.lo = v;
        if (first || v > out.hi) out.hi = v;
        first = false;
    };
    for (size_t i = 0; i < g.edges().size(); ++i)
        for (size_t j = 0; j < g.edges().size(); ++j) {
            if (i == j) continue;
            eval(g.edges()[i], g.edges()[j]);
        }
    return out;
}

Int narrow(__int128 v) {
    if (v > kEmbedLimit || v < -kEmbedLimit) throw ValidationError("shift witness overflows");
    return static_cast<Int>(v);
}

__int128 floor_div_w(__int128 a, __int128 b) {
    // b != 0
    __int128 q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}
__int128 ceil_div_w(__int128 a, __int128 b) { return -floor_div_w(-a, b); }

OrderedGraph shift_to_empty(const OrderedGraph& g, const ConflictSpec& spec) {
    if (!g.has_edges()) return g;
    int row = -1;
    for (int i = 0; i < spec.rows(); ++i) {
        const auto& r = spec.matrix[static_cast<size_t>(i)];
        if (r[0] + r[1] + r[2] + r[3] != 0) {
            row = i;
            break;
        }
    }
    assert(row >= 0);
    const auto& r = spec.matrix[static_cast<size_t>(row)];
    Int sigma = r[0] + r[1] + r[2] + r[3];
    __int128 hi = row_range(g, r).hi;
    // Want hi + t*sigma <= p-1 in both argument orders; the range already
    // covers both orders.
    __int128 target = static_cast<__int128>(spec.p) - 1 - hi;
    __int128 t = sigma > 0 ? floor_div_w(target, sigma) : ceil_div_w(target, sigma);
    return g.shifted(narrow(t));
}

OrderedGraph shift_to_complete(const OrderedGraph& g, const ConflictSpec& spec, bool positive) {
    if (!g.has_edges()) return g;
    __int128 t = 0;
    bool first = true;
    for (const auto& r : spec.matrix) {
        Int sigma = r[0] + r[1] + r[2] + r[3];
        __int128 lo = row_range(g, r).lo;
        __int128 target = static_cast<__int128>(spec.p) - lo;  // need lo + t*sigma >= p
        __int128 ti = positive ? ceil_div_w(target, sigma) : floor_div_w(target, sigma);
        if (first)
            t = ti;
        else
            t = positive ? std::max(t, ti) : std::min(t, ti);
        first = false;
    }
    return g.shifted(narrow(t));
}

struct RepEmbeddings {
    OrderedGraph a;
    OrderedGraph w;
};

// Embeddings of K_k attaining the closed forms for the canonical
// representative of each row.
RepEmbeddings representative_embeddings(int row, const ConflictSpec& rep, int k) {
    Int p = rep.p;
    OrderedGraph unit = complete_graph(range_coords(k, 1));
    switch (row) {
        case 2:
            return {unit, unit};
        case 3:
            if (p >= 1) return {complete_graph(range_coords(k, p)), unit};
            return {unit, unit};
        case 4:
            if (p >= 2) return {power_complete_graph(k, complete_power_base(rep)), unit};
            return {unit, unit};
        case 5:
            if (p <= -1) return {unit, complete_graph(range_coords(k, 1 - p))};
            return {unit, unit};
        case 6:
            if (p >= 3) return {power_complete_graph(k, complete_power_base(rep)), unit};
            return {unit, unit};
        case 7:
            if (p <= -2) return {unit, complete_graph(range_coords(k, ceil_div_int(1 - p, 2)))};
            return {unit, unit};
        case 8:
            if (p >= 1) return {power_complete_graph(k, complete_power_base(rep)), unit};
            return {unit, unit};
        case 9:
            if (p >= 1) return {power_complete_graph(k, complete_power_base(rep)), unit};
            return {unit, unit};
        case 10:
            // Spacing 1-p (not -p): the scaled lattice must turn "u1+|p| >= v2"
            // into "u1 >= v2", which needs gaps strictly larger than |p|.
            if (p >= 1) return {complete_graph(range_coords(k, p)), unit};
            if (p <= -1) return {unit, complete_graph(range_coords(k, 1 - p))};
            return {unit, unit};
        case 11:
            if (p >= 2) return {power_complete_graph(k, complete_power_base(rep)), unit};
            return {unit, unit};
        case 12:
            if (p >= 1) return {complete_graph(range_coords(k, p)), unit};
            return {unit, complete_graph(range_coords(k, 1 - p))};
        case 13:
            if (p >= 1) return {complete_graph(range_coords(k, p)), unit};
            return {unit, complete_graph(range_coords(k, 1 - p))};
        default:
            throw ValidationError("no extremal embedding for this row");
    }
}

}  // namespace

ExtremalEmbeddings extremal_complete_graph(const ConflictSpec& spec, int k) {
    if (k < 2) throw ValidationError("extremal embeddings need k >= 2");
    MatrixClass cls = classify_matrix(spec);
    using Tag = MatrixClass::Tag;
    ExtremalEmbeddings out;
    out.row = cls.row;
    out.provenance = "table1.row" + std::to_string(cls.row == 0 ? 1 : cls.row);

    OrderedGraph base = complete_graph(range_coords(k, 1));
    switch (cls.tag) {
        case Tag::NonInvariantPositive:
        case Tag::NonInvariantNegative: {
            bool positive = cls.tag == Tag::NonInvariantPositive;
            out.alpha_side = shift_to_complete(base, spec, positive);
            out.omega_side = shift_to_empty(base, spec);
            return out;
        }
        case Tag::NonInvariantMixed:
            // A is not settled here; the empty-making shift still pins W = 1.
            out.alpha_side = shift_to_empty(base, spec);
            out.omega_side = out.alpha_side;
            return out;
        case Tag::Zero:
        case Tag::TableRow:
        case Tag::Shift:
        case Tag::Nest: {
            RepEmbeddings reps = representative_embeddings(cls.row, cls.representative, k);
            if (odd_reverse_negate(cls.trace)) {
                reps.a = reps.a.negated();
                reps.w = reps.w.negated();
            }
            out.alpha_side = std::move(reps.a);
            out.omega_side = std::move(reps.w);
            return out;
        }
        case Tag::GeneralInvariant: {
            out.provenance = "invariant";
            bool have_a = false, have_w = false;
            FormulaResult a = closed_form_A(cls, spec.p, k);
            FormulaResult w = closed_form_W(cls, spec.p, k);
            if (a.is_exact()) {
                out.alpha_side = a.value == 1 ? witness_embedding(base, spec, WitnessSide::Complete)
                                              : base;
                have_a = true;
            }
            if (w.is_exact()) {
                out.omega_side = w.value == 1 ? witness_embedding(base, spec, WitnessSide::Empty)
                                              : base;
                have_w = true;
            }
            if (!have_a && !have_w) throw ValidationError("unclassifiable conflict matrix");
            if (!have_a) out.alpha_side = out.omega_side;
            if (!have_w) out.omega_side = out.alpha_side;
            return out;
        }
    }
    throw ValidationError("unclassifiable conflict matrix");
}

OrderedGraph witness_embedding(const OrderedGraph& g, const ConflictSpec& spec, WitnessSide side) {
    if (!is_translation_invariant(spec)) {
        if (side == WitnessSide::Empty) return shift_to_empty(g, spec);
        MatrixClass cls = classify_matrix(spec);
        if (cls.tag == MatrixClass::Tag::NonInvariantPositive)
            return shift_to_complete(g, spec, true);
        if (cls.tag == MatrixClass::Tag::NonInvariantNegative)
            return shift_to_complete(g, spec, false);
        throw ValidationError("mixed row sums admit no completing shift");
    }
    if (spec.rows() != 1)
        throw ValidationError("no witness construction for multi-row invariant matrices");
    Int m1 = spec.matrix[0][0], m2 = spec.matrix[0][1];
    Int m3 = spec.matrix[0][2], m4 = spec.matrix[0][3];
    Int p = spec.p;
    if (side == WitnessSide::Complete) {
        if (m2 + m4 >= std::max<Int>(p, 0)) return g;  // already complete everywhere
        if (m2 + m4 > 0 || (m2 + m4 == 0 && m1 != 0 && m2 != 0)) {
            Int q = complete_power_base(spec);
            std::vector<Int> coords;
            Int x = 1;
            for (int i = 0; i < g.n(); ++i) {
                if (x > kEmbedLimit / q) throw ValidationError("power embedding overflows");
                x *= q;
                coords.push_back(x);
            }
            return g.remapped(coords);
        }
        throw ValidationError("matrix admits no complete-making embedding");
    }
    if ((m1 + m2 == 0) && (m3 + m4 == 0) && m2 <= 0 && m4 <= 0 && p > m2 + m4) return g;
    if (m2 < 0 && m4 < 0) {
        Int q = empty_power_base(spec);
        std::vector<Int> coords;
        Int x = 1;
        for (int i = 0; i < g.n(); ++i) {
            if (x > kEmbedLimit / q) throw ValidationError("power embedding overflows");
            x *= q;
            coords.push_back(x);
        }
        return g.remapped(coords);
    }
    throw ValidationError("matrix admits no empty-making embedding");
}

namespace {

OrderedGraph without_vertex(const OrderedGraph& g, Int v) {
    std::vector<Int> vs;
    for (Int x : g.vertices())
        if (x != v) vs.push_back(x);
    std::vector<Edge> es;
    for (const Edge& e : g.edges())
        if (e.u != v && e.v != v) es.push_back(e);
    return OrderedGraph::from_sorted(std::move(vs), std::move(es));
}

OrderedGraph without_edge(const OrderedGraph& g, const Edge& drop) {
    std::vector<Edge> es;
    for (const Edge& e : g.edges())
        if (!(e == drop)) es.push_back(e);
    return OrderedGraph::from_sorted(g.vertices(), std::move(es));
}

bool chi_at_least(const OrderedGraph& g, int k, const SolveBudget& budget) {
    return !k_colorable(g.underlying(), k - 1, budget);
}

}  // namespace

OrderedGraph k_critical_subgraph(const OrderedGraph& g, int k, const SolveBudget& budget) {
    if (k < 2) throw ValidationError("criticality needs k >= 2");
    if (!chi_at_least(g, k, budget)) throw ValidationError("chromatic number below k");
    OrderedGraph cur = g;
    bool changed = true;
    while (changed) {
        changed = false;
        bool deleted = true;
        while (deleted) {
            deleted = false;
            for (Int v : cur.vertices()) {
                OrderedGraph cand = without_vertex(cur, v);
                if (chi_at_least(cand, k, budget)) {
                    cur = std::move(cand);
                    deleted = true;
                    changed = true;
                    break;
                }
            }
        }
        deleted = true;
        while (deleted) {
            deleted = false;
            for (const Edge& e : cur.edges()) {
                OrderedGraph cand = without_edge(cur, e);
                if (chi_at_least(cand, k, budget)) {
                    cur = std::move(cand);
                    deleted = true;
                    changed = true;
                    break;
                }
            }
        }
    }
    return cur;
}

LongEdgeSet long_edge_set(const OrderedGraph& g, int k, Int q, const SolveBudget& budget) {
    if (q < 1 || k <= q) throw ValidationError("long_edge_set needs k > q >= 1");
    OrderedGraph crit = k_critical_subgraph(g, k, budget);

    LongEdgeSet out;
    const auto& vs = crit.vertices();
    for (int i = 0; i < k - static_cast<int>(q); ++i) {
        Int v = vs[static_cast<size_t>(i)];
        std::vector<Edge> candidates;
        for (const Edge& e : crit.edges())
            if (e.u == v && e.length() >= q) candidates.push_back(e);
        std::sort(candidates.begin(), candidates.end(),
                  [](const Edge& a, const Edge& b) { return a.v < b.v; });
        int want = k - static_cast<int>(q) - i;
        if (static_cast<int>(candidates.size()) < want)
            throw Error("long-edge undercount in a critical subgraph");
        for (int j = 0; j < want; ++j) out.edges.push_back(candidates[static_cast<size_t>(j)]);
    }
    std::sort(out.edges.begin(), out.edges.end());

    if (k >= 3) {
        auto in_set = [&](const Edge& e) {
            return std::binary_search(out.edges.begin(), out.edges.end(), e);
        };
        // Prefer an edge at the leftmost critical vertex, then anything in g.
        Int v1 = vs.front();
        for (const Edge& e : crit.edges())
            if (e.u == v1 && e.length() >= q - 1 && !in_set(e)) {
                out.extra = e;
                break;
            }
        if (!out.extra) {
            for (const Edge& e : g.edges())
                if (e.length() >= q - 1 && !in_set(e)) {
                    out.extra = e;
                    break;
                }
        }
    }
    return out;
}

namespace {

// Conflict test for the span matrix (+,0,0,-): disjoint spans >= p apart.
bool spans_conflict(const Edge& a, const Edge& b, Int p) {
    return a.u - b.v >= p || b.u - a.v >= p;
}

}  // namespace

std::variant<IntervalWitness, std::pair<Edge, Edge>> independent_set_witness(
    const OrderedGraph& g, Int p, const std::vector<Edge>& F) {
    for (const Edge& e : F)
        if (g.edge_index(e) < 0) throw ValidationError("witness edge not in the graph");
    for (size_t i = 0; i < F.size(); ++i)
        for (size_t j = i + 1; j < F.size(); ++j)
            if (spans_conflict(F[i], F[j], p)) return std::make_pair(F[i], F[j]);

    IntervalWitness w;
    if (F.empty()) {
        if (p >= 1) {
            w.kind = IntervalWitness::Kind::MeetsAllSpans;
            w.lo = w.hi = 0;
        } else {
            w.kind = IntervalWitness::Kind::ContainedInAllSpans;
            w.lo = 0;
            w.hi = -p + 1;
        }
        return w;
    }
    Int x = F.front().u, y = F.front().v;
    for (const Edge& e : F) {
        x = std::max(x, e.u);
        y = std::min(y, e.v);
    }
    if (p >= 1) {
        w.kind = IntervalWitness::Kind::MeetsAllSpans;
        w.lo = y;
        w.hi = std::max(x, y);
        return w;
    }
    if (x - y <= p - 1) {
        w.kind = IntervalWitness::Kind::ContainedInAllSpans;
        w.lo = x;
        w.hi = y;
        return w;
    }
    // The extreme left and right endpoints must come from one short edge;
    // otherwise those two edges would conflict.
    w.kind = IntervalWitness::Kind::ShortEdgeException;
    w.exceptional = Edge{x, y};
    assert(std::find(F.begin(), F.end(), Edge{x, y}) != F.end());
    w.lo = y + p - 1;
    w.hi = x - p + 1;
    return w;
}

bool witness_certifies(const IntervalWitness& w, Int p, const std::vector<Edge>& F) {
    switch (w.kind) {
        case IntervalWitness::Kind::MeetsAllSpans: {
            if (p < 1 || w.hi - w.lo > p - 1) return false;
            for (const Edge& e : F)
                if (!(e.u <= w.hi && e.v >= w.lo)) return false;
            return true;
        }
        case IntervalWitness::Kind::ContainedInAllSpans: {
            if (p > 0 || w.hi - w.lo < -p + 1) return false;
            for (const Edge& e : F)
                if (!(e.u <= w.lo && e.v >= w.hi)) return false;
            return true;
        }
        case IntervalWitness::Kind::ShortEdgeException: {
            if (p > -1 || !w.exceptional) return false;
            const Edge& x = *w.exceptional;
            if (std::find(F.begin(), F.end(), x) == F.end()) return false;
            if (x.length() > -p) return false;
            if (w.lo > x.v + p - 1 || w.hi < x.u - p + 1) return false;
            for (const Edge& e : F) {
                if (e == x) continue;
                if (!(e.u <= w.lo && e.v >= w.hi)) return false;
            }
            return true;
        }
    }
    return false;
}

EmbeddingResult coloring_to_embedding(const SimpleGraph& f, const PAlmostColoring& pac, Int p) {
    if (p < 0) throw ValidationError("coloring_to_embedding needs p >= 0");
    int n = f.n();
    if (static_cast<int>(pac.color.size()) != n)
        throw ValidationError("coloring has wrong vertex count");
    int t = pac.num_colors - 1;
    if (t < 0) throw ValidationError("coloring needs at least one color");
    std::vector<bool> removed(static_cast<size_t>(n), false);
    for (int v : pac.removed) {
        if (v < 0 || v >= n) throw ValidationError("removed vertex out of range");
        if (removed[static_cast<size_t>(v)]) throw ValidationError("removed vertex repeated");
        removed[static_cast<size_t>(v)] = true;
    }
    for (int v = 0; v < n; ++v) {
        int c = pac.color[static_cast<size_t>(v)];
        if (removed[static_cast<size_t>(v)] != (c < 0))
            throw ValidationError("removed set and coloring disagree");
        if (c >= pac.num_colors) throw ValidationError("color out of range");
    }
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (f.has_edge(a, b) && pac.color[static_cast<size_t>(a)] >= 0 &&
                pac.color[static_cast<size_t>(a)] == pac.color[static_cast<size_t>(b)])
                throw ValidationError("coloring not proper");
    if (static_cast<Int>(pac.removed.size()) > p * static_cast<Int>(t))
        throw ValidationError("removed set larger than p*t");

    // Block i holds color class i followed by its share of the removal set,
    // at most p removed vertices per block; the last color class gets no
    // removed vertices.
    std::vector<std::vector<int>> classes(static_cast<size_t>(pac.num_colors));
    for (int v = 0; v < n; ++v)
        if (pac.color[static_cast<size_t>(v)] >= 0)
            classes[static_cast<size_t>(pac.color[static_cast<size_t>(v)])].push_back(v);
    std::vector<int> pool(pac.removed);
    std::sort(pool.begin(), pool.end());

    std::vector<Int> position(static_cast<size_t>(n), 0);
    Int next = 1;
    size_t pool_at = 0;
    for (int c = 0; c < pac.num_colors; ++c) {
        for (int v : classes[static_cast<size_t>(c)]) position[static_cast<size_t>(v)] = next++;
        if (c < t) {
            for (Int taken = 0; taken < p && pool_at < pool.size(); ++taken)
                position[static_cast<size_t>(pool[pool_at++])] = next++;
        }
    }
    assert(pool_at == pool.size());

    std::vector<Int> coords(position);
    std::sort(coords.begin(), coords.end());
    std::vector<std::pair<Int, Int>> edges;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (f.has_edge(a, b))
                edges.emplace_back(position[static_cast<size_t>(a)], position[static_cast<size_t>(b)]);
    return EmbeddingResult{OrderedGraph::validated(coords, edges), std::move(position)};
}

AlmostColoring embedding_to_coloring(const OrderedGraph& g, Int p) {
    if (p < 0) throw ValidationError("embedding_to_coloring needs p >= 0");
    if (!g.has_edges()) throw UndefinedError("no edges");
    std::vector<int> levels = leftof_chain_levels(g, p);
    int t = *std::max_element(levels.begin(), levels.end());

    // One separator per level: for p >= 1 a closed interval whose interior
    // vertices are removed; for p = 0 a cut between cut_at and cut_at+1.
    struct Separator {
        Int lo, hi;
        bool removes;
    };
    std::vector<Separator> seps;
    for (int lvl = 1; lvl <= t; ++lvl) {
        Int x = 0, y = 0;
        bool first = true;
        for (int i = 0; i < g.m(); ++i) {
            if (levels[static_cast<size_t>(i)] != lvl) continue;
            const Edge& e = g.edges()[static_cast<size_t>(i)];
            x = first ? e.u : std::max(x, e.u);
            y = first ? e.v : std::min(y, e.v);
            first = false;
        }
        assert(!first);
        if (p >= 1)
            seps.push_back(Separator{y, std::max(x, y), true});
        else
            seps.push_back(Separator{x, x, false});
    }

    AlmostColoring out;
    out.t = t;
    for (Int v : g.vertices()) {
        bool inside = false;
        int left_of_v = 0;
        for (const auto& s : seps) {
            if (s.removes && v >= s.lo && v <= s.hi) inside = true;
            if (s.removes ? s.hi < v : s.lo < v) ++left_of_v;
        }
        if (inside)
            out.removed.push_back(v);
        else
            out.color[v] = left_of_v;
    }
    // Compress color ids to 0..num_colors-1.
    std::map<int, int> remap;
    for (auto& [v, c] : out.color) remap.emplace(c, 0);
    int next = 0;
    for (auto& [c, id] : remap) id = next++;
    for (auto& [v, c] : out.color) c = remap[c];
    out.num_colors = next;
    return out;
}

}  // namespace ordconflict
