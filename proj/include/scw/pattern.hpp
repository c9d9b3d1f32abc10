#pragma once

#include <utility>
#include <vector>

#include "scw/bits.hpp"
#include "scw/errors.hpp"

namespace scw {

// Simple digraph to be searched for inside a host; no loops, no duplicate
// arcs. Size |H| = |V(H)| + |E(H)| drives all containment parameters.
struct Pattern {
  int n = 0;
  std::vector<std::pair<int, int>> arcs;

  static Pattern build(int n, const std::vector<std::pair<int, int>>& arcs);

  int vertex_count() const { return n; }
  int arc_count() const { return static_cast<int>(arcs.size()); }
  int size() const { return n + arc_count(); }

  std::vector<int> out_arcs_of(int u) const;  // indices into `arcs`
  std::vector<int> in_arcs_of(int u) const;
};

}  // namespace scw
