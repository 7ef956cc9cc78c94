#pragma once

#include "ordconflict/solve.hpp"

namespace ordconflict {

/// Crossing conflicts (u1 < u2 < v1 < v2 together with the mirrored order) as
/// a three-row matrix at threshold 1.
ConflictSpec cross_spec();

/// Shared right endpoint as a two-row matrix at threshold 0.
ConflictSpec degeneracy_spec();

/// Edge length at least p as a one-row matrix.
ConflictSpec length_spec(Int p);

/// Ordered graph realizing an ordering of the unordered graph f on
/// coordinates 1..n; ordering[i] is the vertex placed at position i+1.
OrderedGraph ordered_by(const SimpleGraph& f, const std::vector<int>& ordering);

/// Hard cap for the exhaustive ordering searches below.
inline constexpr int kMaxOrderingVertices = 9;

/// Minimum over vertex orderings of the chromatic number of the crossing
/// conflict graph. Exhaustive with prefix pruning; requires >= 1 edge and at
/// most kMaxOrderingVertices vertices.
int page_number(const SimpleGraph& f, const SolveBudget& budget = {});

/// Minimum over orderings of the clique number of the nesting conflict graph
/// at threshold 1 (equal to its chromatic number: nesting is transitive).
int queue_number(const SimpleGraph& f, const SolveBudget& budget = {});

/// Minimum over orderings of the maximum number of edges sharing a right
/// endpoint; cross-checked against degeneracy_peel.
int degeneracy_framework(const SimpleGraph& f);

/// Classical linear-time peel: repeatedly remove a minimum-degree vertex.
int degeneracy_peel(const SimpleGraph& f);

/// Minimum over orderings of the maximum edge length.
int band_width(const SimpleGraph& f);

/// Minimum number of integer intervals partitioning the line so that no edge
/// lies inside one interval; computed by a direct sweep over the vertex
/// sequence, independently of the conflict machinery.
int interval_chromatic(const OrderedGraph& g);

/// Minimum over orderings of the clique number of the (+,0,0,-) conflict
/// graph at threshold 1 (pairwise disjoint spans at distance >= 1).
int arch_number(const SimpleGraph& f, const SolveBudget& budget = {});

}  // namespace ordconflict
