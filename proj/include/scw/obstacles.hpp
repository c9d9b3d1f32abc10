#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "scw/digraph.hpp"
#include "scw/pattern.hpp"

namespace scw {

// Lower-bound witnesses. Each is a plain value checkable against the host
// digraph; `verify` throws CertificateViolation naming the violated clause.

// At least k vertices with pairwise outdegree difference at most ell.
struct DegreeTangle {
  std::vector<int> x;
  int k = 0;
  int ell = 0;
};

// Disjoint sets of k vertices each, a matching x[i] -> y[i] along arcs, and
// every y-outdegree more than ell above every x-outdegree.
struct MatchingTangle {
  std::vector<int> x, y;  // f(x[i]) = y[i]
  int k = 0;
  int ell = 0;
};

// Partition of V with at least k arcs from X to Y and Y-outdegrees
// dominating X-outdegrees.
struct BackwardTangle {
  Bits x, y;
  long long k = 0;
};

enum class JungleKind { vertex_disjoint, edge_disjoint };

// Vertex set with k short paths between every ordered pair, stored
// explicitly so that verification and embedding never depend on how the
// jungle was found.
struct ShortJungle {
  std::vector<int> x;
  int k = 0;
  int d = 0;
  JungleKind kind = JungleKind::vertex_disjoint;
  // Ordered pair (v,w), v != w -> at least k paths, each a full vertex
  // sequence from v to w.
  std::map<std::pair<int, int>, std::vector<std::vector<int>>> paths;
};

void verify(const SemiCompleteDigraph& t, const DegreeTangle& c);
void verify(const SemiCompleteDigraph& t, const MatchingTangle& c);
void verify(const SemiCompleteDigraph& t, const BackwardTangle& c);
void verify(const SemiCompleteDigraph& t, const ShortJungle& c);

long long arcs_between(const SemiCompleteDigraph& t, const Bits& from, const Bits& to);

// m(t) = 100t^2 + 22t + 1
long long backward_tangle_threshold(long long t);

// Largest k certified by the tangle, or nullopt if none. Degree: |X| >= 5k+2
// and ell <= k give pw > k. Matching: size >= k+1 and gap >= k give pw > k.
// Backward: arc count >= m(k)+1 gives ctw > k.
std::optional<int> pathwidth_bound_from_degree_tangle(const DegreeTangle& c);
std::optional<int> pathwidth_bound_from_matching_tangle(const MatchingTangle& c);
std::optional<int> cutwidth_bound_from_backward_tangle(const BackwardTangle& c);

// Extraction thresholds. Paper defaults are sufficient, not necessary;
// desk-scale experiments override them.
struct ExtractionConstants {
  int degree_jungle_size = 26;       // degree tangle of size >= this*k required
  int matching_jungle_size = 5;      // matching tangle of size >= this*k ...
  int matching_jungle_gap = 3;       // ... and gap >= this*k
  long long backward_jungle_arcs = 0;  // 0 means 109^2 * k
  int backward_jungle_side = 109;    // heads or tails of the cut, >= this*k
};

// From a (26k,k)-degree tangle, a (k,3)-short jungle inside it (or an inner
// explicit jungle when the auxiliary matching is small).
ShortJungle jungle_from_degree_tangle(const SemiCompleteDigraph& t, const std::vector<int>& x,
                                      int k, const ExtractionConstants& consts = {});

// From a (5k,3k)-matching tangle, a (k,4)-short jungle inside its Y side.
ShortJungle jungle_from_matching_tangle(const SemiCompleteDigraph& t, const MatchingTangle& c,
                                        int k, const ExtractionConstants& consts = {});

struct BackwardJungleResult {
  ShortJungle jungle;
  bool delegated = false;  // went through an intermediate degree tangle
};

// From a backward tangle with enough arcs, a (k,4)-short immersion jungle.
BackwardJungleResult immersion_jungle_from_backward_tangle(const SemiCompleteDigraph& t,
                                                           const BackwardTangle& c, int k,
                                                           const ExtractionConstants& consts = {});

// Expansion (vertex-disjoint) or immersion (edge-disjoint) model of a
// pattern in the host, depending on the jungle kind that produced it.
struct PatternModel {
  std::vector<int> vertex_image;            // per pattern vertex
  std::vector<std::vector<int>> arc_paths;  // per pattern arc
  JungleKind kind = JungleKind::vertex_disjoint;
};

// Greedy embedding of a pattern into a verified jungle: arbitrary distinct
// jungle vertices as images, then for each arc a stored path avoiding
// everything used so far.
PatternModel embed_pattern(const ShortJungle& jungle, const Pattern& h);

// Independent model checker: injectivity, endpoints, arc existence, and
// internal vertex-disjointness (expansion) or arc-disjointness (immersion).
void verify_model(const SemiCompleteDigraph& t, const Pattern& h, const PatternModel& m);

}  // namespace scw
