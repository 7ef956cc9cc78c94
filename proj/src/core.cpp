#include "ordconflict/core.hpp"

#include <algorithm>
#include <cassert>
#include <string>

namespace ordconflict {

OrderedGraph OrderedGraph::validated(std::vector<Int> vertices,
                                     const std::vector<std::pair<Int, Int>>& edges) {
    std::sort(vertices.begin(), vertices.end());
    for (size_t i = 0; i + 1 < vertices.size(); ++i)
        if (vertices[i] == vertices[i + 1])
            throw ValidationError("duplicate vertex " + std::to_string(vertices[i]));
    for (Int v : vertices)
        if (v <= -kCoordLimit || v >= kCoordLimit)
            throw ValidationError("vertex coordinate out of range: " + std::to_string(v));

    OrderedGraph g;
    g.vertices_ = std::move(vertices);
    g.edges_.reserve(edges.size());
    for (auto [a, b] : edges) {
        if (a == b) throw ValidationError("self-loop at " + std::to_string(a));
        Edge e{std::min(a, b), std::max(a, b)};
        if (g.vertex_index(e.u) < 0 || g.vertex_index(e.v) < 0)
            throw ValidationError("edge endpoint not a vertex: (" + std::to_string(a) + "," +
                                  std::to_string(b) + ")");
        g.edges_.push_back(e);
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    for (size_t i = 0; i + 1 < g.edges_.size(); ++i)
        if (g.edges_[i] == g.edges_[i + 1])
            throw ValidationError("duplicate edge (" + std::to_string(g.edges_[i].u) + "," +
                                  std::to_string(g.edges_[i].v) + ")");
    return g;
}

OrderedGraph OrderedGraph::from_sorted(std::vector<Int> vertices, std::vector<Edge> edges) {
    OrderedGraph g;
    g.vertices_ = std::move(vertices);
    g.edges_ = std::move(edges);
    assert(std::is_sorted(g.vertices_.begin(), g.vertices_.end()));
    assert(std::is_sorted(g.edges_.begin(), g.edges_.end()));
    return g;
}

int OrderedGraph::vertex_index(Int v) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end() || *it != v) return -1;
    return static_cast<int>(it - vertices_.begin());
}

int OrderedGraph::edge_index(const Edge& e) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || !(*it == e)) return -1;
    return static_cast<int>(it - edges_.begin());
}

bool OrderedGraph::has_edge(Int u, Int v) const {
    return edge_index(Edge{std::min(u, v), std::max(u, v)}) >= 0;
}

OrderedGraph OrderedGraph::shifted(Int t) const {
    std::vector<Int> vs(vertices_);
    for (Int& v : vs) v += t;
    std::vector<Edge> es(edges_);
    for (Edge& e : es) {
        e.u += t;
        e.v += t;
    }
    return from_sorted(std::move(vs), std::move(es));
}

OrderedGraph OrderedGraph::negated() const {
    std::vector<Int> vs(vertices_.rbegin(), vertices_.rend());
    for (Int& v : vs) v = -v;
    std::vector<Edge> es;
    es.reserve(edges_.size());
    for (const Edge& e : edges_) es.push_back(Edge{-e.v, -e.u});
    std::sort(es.begin(), es.end());
    return from_sorted(std::move(vs), std::move(es));
}

OrderedGraph OrderedGraph::scaled(Int factor) const {
    assert(factor >= 1);
    std::vector<Int> coords(vertices_);
    for (Int& v : coords) v *= factor;
    return remapped(coords);
}

OrderedGraph OrderedGraph::compacted() const {
    std::vector<Int> coords(vertices_.size());
    for (size_t i = 0; i < coords.size(); ++i) coords[i] = static_cast<Int>(i) + 1;
    return remapped(coords);
}

OrderedGraph OrderedGraph::remapped(const std::vector<Int>& coords) const {
    assert(coords.size() == vertices_.size());
    assert(std::is_sorted(coords.begin(), coords.end()));
    std::vector<Edge> es;
    es.reserve(edges_.size());
    for (const Edge& e : edges_)
        es.push_back(Edge{coords[static_cast<size_t>(vertex_index(e.u))],
                          coords[static_cast<size_t>(vertex_index(e.v))]});
    std::sort(es.begin(), es.end());
    return from_sorted(coords, std::move(es));
}

SimpleGraph OrderedGraph::underlying() const {
    SimpleGraph g(n());
    for (const Edge& e : edges_) g.add_edge(vertex_index(e.u), vertex_index(e.v));
    return g;
}

OrderedGraph complete_graph(std::vector<Int> vertices) {
    std::sort(vertices.begin(), vertices.end());
    std::vector<Edge> es;
    es.reserve(vertices.size() * (vertices.size() - 1) / 2);
    for (size_t i = 0; i < vertices.size(); ++i)
        for (size_t j = i + 1; j < vertices.size(); ++j)
            es.push_back(Edge{vertices[i], vertices[j]});
    std::sort(es.begin(), es.end());
    return OrderedGraph::from_sorted(std::move(vertices), std::move(es));
}

ConflictSpec ConflictSpec::validated(std::vector<std::array<Int, 4>> matrix, Int p) {
    if (matrix.empty()) throw ValidationError("matrix needs at least one row");
    for (const auto& row : matrix)
        for (Int m : row)
            if (m <= -kCoordLimit || m >= kCoordLimit)
                throw ValidationError("matrix entry out of range: " + std::to_string(m));
    return ConflictSpec{std::move(matrix), p};
}

ConflictSpec sign_spec(int m1, int m2, int m3, int m4, Int p) {
    return ConflictSpec{{{Int{m1}, Int{m2}, Int{m3}, Int{m4}}}, p};
}

bool rows_at_least(const ConflictSpec& spec, Int a, Int b, Int c, Int d) {
    using Wide = __int128;
    for (const auto& r : spec.matrix) {
        Wide acc = Wide{r[0]} * a + Wide{r[1]} * b + Wide{r[2]} * c + Wide{r[3]} * d;
        if (acc < Wide{spec.p}) return false;
    }
    return true;
}

bool is_conflicting(const Edge& e1, const Edge& e2, const ConflictSpec& spec) {
    assert(!(e1 == e2));
    assert(e1.u < e1.v && e2.u < e2.v);
    return rows_at_least(spec, e1.u, e1.v, e2.u, e2.v) ||
           rows_at_least(spec, e2.u, e2.v, e1.u, e1.v);
}

ConflictGraph build_conflict_graph(const OrderedGraph& g, const ConflictSpec& spec) {
    if (!g.has_edges()) throw UndefinedError("conflict graph of an edgeless ordered graph");
    ConflictGraph cg{g.edges(), SimpleGraph(g.m())};
    for (int i = 0; i < g.m(); ++i)
        for (int j = i + 1; j < g.m(); ++j)
            if (is_conflicting(cg.nodes[static_cast<size_t>(i)], cg.nodes[static_cast<size_t>(j)],
                               spec))
                cg.adj.add_edge(i, j);
    return cg;
}

}  // namespace ordconflict
