#pragma once

#include <map>
#include <optional>
#include <variant>

#include "ordconflict/formulas.hpp"
#include "ordconflict/solve.hpp"
#include "ordconflict/transforms.hpp"

namespace ordconflict {

/// Complete-graph embeddings attaining the closed-form values: alpha_side
/// attains A (or lands in its bounds), omega_side attains W.
struct ExtremalEmbeddings {
    OrderedGraph alpha_side;
    OrderedGraph omega_side;
    int row = 0;
    std::string provenance;
};
ExtremalEmbeddings extremal_complete_graph(const ConflictSpec& spec, int k);

enum class WitnessSide { Empty, Complete };

/// Re-embeds g (a shift, or an order-preserving remap onto powers of a base
/// q) so that its conflict graph becomes empty or complete. Throws when the
/// matrix admits no such construction for the requested side.
OrderedGraph witness_embedding(const OrderedGraph& g, const ConflictSpec& spec, WitnessSide side);

/// Induced-then-edge-minimal subgraph with chromatic number still at least k;
/// every vertex of the result has degree at least k-1. Deletion order:
/// repeatedly the lowest-index deletable vertex, then the lexicographically
/// smallest deletable edge, until fixed.
OrderedGraph k_critical_subgraph(const OrderedGraph& g, int k, const SolveBudget& budget = {});

/// At least binom2(k-q+1) edges of length >= q in a graph with chi >= k > q;
/// extra holds an additional edge of length >= q-1 outside the set when one
/// exists (guaranteed for q >= 2 and k >= 3).
struct LongEdgeSet {
    std::vector<Edge> edges;
    std::optional<Edge> extra;
};
LongEdgeSet long_edge_set(const OrderedGraph& g, int k, Int q, const SolveBudget& budget = {});

/// Certificate that an edge set is independent in the conflict graph of
/// (+,0,0,-) at threshold p.
struct IntervalWitness {
    enum class Kind { MeetsAllSpans, ContainedInAllSpans, ShortEdgeException };
    Kind kind = Kind::MeetsAllSpans;
    Int lo = 0;
    Int hi = 0;
    std::optional<Edge> exceptional;
};

/// Finds a witness for an independent F, or returns a conflicting pair.
std::variant<IntervalWitness, std::pair<Edge, Edge>> independent_set_witness(
    const OrderedGraph& g, Int p, const std::vector<Edge>& F);

/// Sufficiency direction: a structurally valid witness forces independence.
bool witness_certifies(const IntervalWitness& w, Int p, const std::vector<Edge>& F);

/// Removal set plus proper coloring of the rest; color[v] is -1 exactly for
/// removed vertices.
struct PAlmostColoring {
    std::vector<int> removed;
    std::vector<int> color;
    int num_colors = 0;
};

struct EmbeddingResult {
    OrderedGraph graph;
    std::vector<Int> position;  // coordinate assigned to each vertex of f
};

/// Lays the color classes out as consecutive blocks, each followed by its
/// share of the removal set, so that the (+,0,0,-) conflict graph at p has
/// clique number at most num_colors-1.
EmbeddingResult coloring_to_embedding(const SimpleGraph& f, const PAlmostColoring& pac, Int p);

struct AlmostColoring {
    int t = 0;                  // clique number of the (+,0,0,-) conflict graph
    std::vector<Int> removed;   // at most p*t vertex labels
    std::map<Int, int> color;   // proper coloring of the rest, at most t+1 colors
    int num_colors = 0;
};

/// Inverse direction for p >= 0: antichain levels of the left-of order give
/// intervals whose interior vertices are removed and whose gaps are colored.
AlmostColoring embedding_to_coloring(const OrderedGraph& g, Int p);

}  // namespace ordconflict
