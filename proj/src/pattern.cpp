#include "scw/pattern.hpp"

#include <set>
#include <string>

namespace scw {

Pattern Pattern::build(int n, const std::vector<std::pair<int, int>>& arcs) {
  if (n < 0) throw BadParameterError("pattern vertex count must be nonnegative");
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : arcs) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw BadParameterError("pattern arc references invalid vertex");
    if (u == v) throw LoopArcError(u);
    if (!seen.insert({u, v}).second)
      throw BadParameterError("duplicate pattern arc (" + std::to_string(u) + "," +
                              std::to_string(v) + ")");
  }
  Pattern h;
  h.n = n;
  h.arcs = arcs;
  return h;
}

std::vector<int> Pattern::out_arcs_of(int u) const {
  std::vector<int> out;
  for (int e = 0; e < arc_count(); ++e)
    if (arcs[e].first == u) out.push_back(e);
  return out;
}

std::vector<int> Pattern::in_arcs_of(int u) const {
  std::vector<int> out;
  for (int e = 0; e < arc_count(); ++e)
    if (arcs[e].second == u) out.push_back(e);
  return out;
}

}  // namespace scw
