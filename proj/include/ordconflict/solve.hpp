#pragma once

#include <optional>

#include "ordconflict/core.hpp"

namespace ordconflict {

struct SolveBudget {
    long long node_limit = 10'000'000;
    long long time_limit_ms = 60'000;
};

/// Exact maximum clique size via branch and bound on bitset adjacency with
/// greedy-coloring upper bounds. Branching order fixed by degree then index,
/// so results are run-to-run identical. Throws BudgetExceeded with the best
/// bounds found when the budget runs out.
int clique_number(const SimpleGraph& g, const SolveBudget& budget = {});

/// Exact independence number, computed as the clique number of the complement.
int independence_number(const SimpleGraph& g, const SolveBudget& budget = {});

/// Exact chromatic number: clique lower bound, then iterative deepening with
/// a DSATUR-style exact colorability search. 0 for the empty graph, 1 when
/// edgeless.
int chromatic_number(const SimpleGraph& g, const SolveBudget& budget = {});

/// Exact test for a proper coloring with at most k colors.
bool k_colorable(const SimpleGraph& g, int k, const SolveBudget& budget = {});

int alpha(const ConflictGraph& cg, const SolveBudget& budget = {});
int omega(const ConflictGraph& cg, const SolveBudget& budget = {});

/// Clique number of the conflict graph for matrix (+,0,0,-) with p >= 0,
/// computed as the longest chain of the transitive left-of orientation by a
/// dynamic program over edges sorted by right endpoint. Linear-logarithmic,
/// no search.
int omega_leftof_fast(const OrderedGraph& g, Int p);

/// Chain level (longest left-of chain ending at each edge, 1-based); the
/// level classes partition the edges into independent sets of the conflict
/// graph for (+,0,0,-) at p >= 0.
std::vector<int> leftof_chain_levels(const OrderedGraph& g, Int p);

}  // namespace ordconflict
