#pragma once

#include <cstdint>
#include <optional>

#include "scw/digraph.hpp"
#include "scw/obstacles.hpp"

namespace scw {

// Result of the outdegree-ordering scan: either an ordering whose width is
// within the quadratic bound, or the violating prefix cut as a backward
// tangle proving ctw > k.
struct CutwidthApproxResult {
  std::optional<VertexOrdering> ordering;
  int width = 0;
  std::optional<BackwardTangle> obstacle;

  bool succeeded() const { return ordering.has_value(); }
};

// threshold_override < 0 means the default m(k) = 100k^2 + 22k + 1.
CutwidthApproxResult approx_cutwidth(const SemiCompleteDigraph& t, int k,
                                     long long threshold_override = -1);

struct CutwidthExactResult {
  bool feasible = false;
  std::optional<VertexOrdering> ordering;
  int width = 0;
  // Present when the negative answer came from the outdegree-spread
  // precheck rather than exhausted reachability.
  std::optional<DegreeTangle> witness;

  struct Stats {
    std::size_t states = 0;  // partitions materialized by the search
  } stats;
};

// Decides ctw(T) <= k. Scans the outdegree ordering; a cluster of 10k+2
// vertices spanning at most 2k outdegrees answers NO outright. Otherwise a
// forward search over partitions (alpha, window mask) with cut value <= k,
// moving one vertex at a time, reconstructs an ordering on success.
CutwidthExactResult exact_cutwidth(const SemiCompleteDigraph& t, int k);

struct CutwidthResult {
  int value = 0;
  VertexOrdering ordering;
};

// Smallest k accepted by exact_cutwidth, with its ordering.
CutwidthResult cutwidth(const SemiCompleteDigraph& t);

}  // namespace scw
