#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

#include "ordconflict/bitset_graph.hpp"
#include "ordconflict/errors.hpp"

namespace ordconflict {

using Int = std::int64_t;

/// Coordinates and matrix entries are bounded at load time so that every
/// linear form fits comfortably into 128-bit intermediate arithmetic.
inline constexpr Int kCoordLimit = Int{1} << 31;

/// An edge of an ordered graph, stored as (u, v) with u < v.
struct Edge {
    Int u = 0;
    Int v = 0;
    auto operator<=>(const Edge&) const = default;
    Int length() const { return v - u; }
};

/// A finite simple graph whose vertices are distinct integers. Vertices are
/// kept sorted increasing; edges sorted lexicographically and indexed
/// 0..m-1, which fixes the node order of every conflict graph built from it.
class OrderedGraph {
public:
    OrderedGraph() = default;

    /// Canonicalizes and checks raw input: sorts vertices, orients edges as
    /// u < v, sorts and rejects duplicates, self-loops, unknown endpoints and
    /// out-of-range coordinates. An empty edge set is allowed (alpha/omega
    /// queries on its conflict graph are undefined downstream).
    static OrderedGraph validated(std::vector<Int> vertices,
                                  const std::vector<std::pair<Int, Int>>& edges);

    /// Trusted constructor for internally produced embeddings (still checks
    /// basic shape in debug builds).
    static OrderedGraph from_sorted(std::vector<Int> vertices, std::vector<Edge> edges);

    const std::vector<Int>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    int n() const { return static_cast<int>(vertices_.size()); }
    int m() const { return static_cast<int>(edges_.size()); }
    bool has_edges() const { return !edges_.empty(); }

    /// Index of a vertex in the sorted vertex sequence; -1 if absent.
    int vertex_index(Int v) const;
    /// Index of an edge in the sorted edge sequence; -1 if absent.
    int edge_index(const Edge& e) const;
    bool has_edge(Int u, Int v) const;

    /// Every vertex moved by t.
    OrderedGraph shifted(Int t) const;
    /// Mirror image: vertex x becomes -x, edge (u,v) becomes (-v,-u).
    OrderedGraph negated() const;
    /// Every vertex multiplied by factor >= 1.
    OrderedGraph scaled(Int factor) const;
    /// Order-preserving re-embedding onto 1..n.
    OrderedGraph compacted() const;
    /// Order-preserving re-embedding onto the given strictly increasing coordinates.
    OrderedGraph remapped(const std::vector<Int>& coords) const;

    /// Underlying unordered graph on vertex indices 0..n-1.
    SimpleGraph underlying() const;

    bool operator==(const OrderedGraph&) const = default;

private:
    std::vector<Int> vertices_;
    std::vector<Edge> edges_;
};

OrderedGraph complete_graph(std::vector<Int> vertices);

/// An integer matrix with four columns plus a threshold p. Two edges
/// (u1,v1), (u2,v2) conflict when every row applied to (u1,v1,u2,v2) is at
/// least p, or every row applied to (u2,v2,u1,v1) is.
struct ConflictSpec {
    std::vector<std::array<Int, 4>> matrix;
    Int p = 0;

    static ConflictSpec validated(std::vector<std::array<Int, 4>> matrix, Int p);
    int rows() const { return static_cast<int>(matrix.size()); }
    bool operator==(const ConflictSpec&) const = default;
};

ConflictSpec sign_spec(int m1, int m2, int m3, int m4, Int p);

/// All rows of spec.matrix applied to (a,b,c,d) are >= spec.p. Accumulates in
/// 128-bit so any int64 coordinates are safe.
bool rows_at_least(const ConflictSpec& spec, Int a, Int b, Int c, Int d);

/// The conflict relation, tested in both argument orders. Requires e1 != e2.
bool is_conflicting(const Edge& e1, const Edge& e2, const ConflictSpec& spec);

/// Graph on the edges of the source ordered graph; node i is source edge i
/// in lexicographic edge order.
struct ConflictGraph {
    std::vector<Edge> nodes;
    SimpleGraph adj;
};

/// Requires at least one edge.
ConflictGraph build_conflict_graph(const OrderedGraph& g, const ConflictSpec& spec);

}  // namespace ordconflict
