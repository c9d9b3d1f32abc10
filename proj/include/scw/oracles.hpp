#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "scw/decomposition.hpp"
#include "scw/digraph.hpp"
#include "scw/pattern.hpp"

namespace scw {

// Brute-force ground truth. Every witness re-verifies through the ordinary
// checkers; budgets are hard limits and raise BudgetExceeded.

struct OracleOrdering {
  int value;
  VertexOrdering ordering;
};

// Exact cutwidth by dynamic programming over vertex subsets (the cut value
// depends only on the prefix set). n <= 20.
OracleOrdering oracle_cutwidth(const SemiCompleteDigraph& t);

// Exact cutwidth by enumerating all n! orderings. n <= 8. Cross-checks the
// subset DP.
int oracle_cutwidth_enumerate(const SemiCompleteDigraph& t);

struct OracleDecomposition {
  int value;  // reported pathwidth; 0 for the empty digraph
  bool empty = false;
  PathDecomposition decomposition;
};

// Exact pathwidth via one-vertex-step separation chains with pointwise
// minimal separators, as a subset DP over prefixes. n <= 18.
OracleDecomposition oracle_pathwidth(const SemiCompleteDigraph& t);

// Exact pathwidth by search over all nice decompositions. n <= 5. Validates
// the ordering-based reduction above.
int oracle_pathwidth_full_search(const SemiCompleteDigraph& t);

struct ExpansionWitness {
  std::vector<int> vertex_image;               // per pattern vertex
  std::vector<std::vector<int>> arc_paths;     // per pattern arc, full vertex sequence
};

struct OracleContainsResult {
  bool contained;
  std::optional<ExpansionWitness> model;
};

// Topological containment by direct search over injective vertex maps and
// backtracking over internally vertex-disjoint connecting paths.
// |H| <= 6, n <= 8.
OracleContainsResult oracle_contains(const SemiCompleteDigraph& t, const Pattern& h);

// Vertices matched in every maximum matching, by enumerating all maximum
// matchings. |X| + |Y| <= 12. Labels are arbitrary ints.
std::vector<int> oracle_matching_selector(const std::vector<int>& xs, const std::vector<int>& ys,
                                          const std::vector<std::pair<int, int>>& edges);

// Maximum number of disjoint s->t paths by unit-capacity max flow:
// internally vertex-disjoint (vertex capacities) or arc-disjoint (arc
// capacities). Stops early at `limit` augmenting paths when limit >= 0.
int max_disjoint_paths(const SemiCompleteDigraph& t, int s, int u, bool vertex_capacitated,
                       int limit = -1);

}  // namespace scw
