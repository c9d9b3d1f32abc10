#include "scw/cutwidth.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

namespace scw {

CutwidthApproxResult approx_cutwidth(const SemiCompleteDigraph& t, int k,
                                     long long threshold_override) {
  if (k < 0) throw BadParameterError("k must be nonnegative");
  long long threshold =
      threshold_override >= 0 ? threshold_override : backward_tangle_threshold(k);
  VertexOrdering sigma = outdegree_ordering(t);
  auto cuts = prefix_cuts(t, sigma);
  int n = t.n();
  CutwidthApproxResult result;
  int width = 0;
  for (int alpha = 1; alpha < n; ++alpha) {
    if (cuts[alpha] > threshold) {
      BackwardTangle tangle;
      tangle.x = Bits(n);
      for (int i = 0; i < alpha; ++i) tangle.x.set(sigma.pi[i]);
      tangle.y = tangle.x.complement();
      tangle.k = cuts[alpha];
      result.obstacle = std::move(tangle);
      return result;
    }
    width = std::max(width, cuts[alpha]);
  }
  result.ordering = std::move(sigma);
  result.width = width;
  return result;
}

namespace {

struct StateKey {
  std::uint32_t alpha;  // 1-based position of the first suffix vertex; n+1 when done
  std::uint64_t mask;   // occupancy of positions alpha+1 .. alpha+window
  bool operator==(const StateKey& o) const { return alpha == o.alpha && mask == o.mask; }
};

struct StateKeyHash {
  std::size_t operator()(const StateKey& s) const {
    return std::hash<std::uint64_t>()(s.mask * 0x9e3779b97f4a7c15ull + s.alpha);
  }
};

struct StateInfo {
  StateKey parent;
  int moved = -1;  // vertex moved into the prefix to reach this state
  int cut = 0;
};

}  // namespace

CutwidthExactResult exact_cutwidth(const SemiCompleteDigraph& t, int k) {
  if (k < 0) throw BadParameterError("k must be nonnegative");
  int n = t.n();
  CutwidthExactResult result;
  if (n == 0) {
    result.feasible = true;
    result.ordering = VertexOrdering{};
    result.width = 0;
    return result;
  }

  VertexOrdering sigma = outdegree_ordering(t);
  const auto& pi = sigma.pi;

  // A window of 10k+2 consecutive positions spanning at most 2k outdegrees
  // is a degree tangle forcing pw > 2k, hence ctw > k.
  for (int i = 0; i + 10 * k + 1 < n; ++i) {
    if (t.outdeg(pi[i + 10 * k + 1]) <= t.outdeg(pi[i]) + 2 * k) {
      DegreeTangle tangle;
      tangle.x.assign(pi.begin() + i, pi.begin() + i + 10 * k + 2);
      tangle.k = 10 * k + 2;
      tangle.ell = 2 * k;
      result.witness = std::move(tangle);
      return result;
    }
  }

  int window = 10 * k;
  if (std::min(window, n - 1) > 63)
    throw BudgetExceeded("window mask of " + std::to_string(std::min(window, n - 1)) +
                         " bits exceeds the 63-bit state encoding");

  // Prefix vertex sets of sigma, used to decode states into cut deltas.
  std::vector<Bits> prefix(n + 1, Bits(n));
  for (int i = 0; i < n; ++i) {
    prefix[i + 1] = prefix[i];
    prefix[i + 1].set(pi[i]);
  }

  auto decode_x = [&](const StateKey& s) {
    Bits x = prefix[std::min<int>(s.alpha, n + 1) - 1];
    for (int j = 0; j < window; ++j) {
      int posn = static_cast<int>(s.alpha) + 1 + j;
      if (posn > n) break;
      if ((s.mask >> j) & 1) x.set(pi[posn - 1]);
    }
    return x;
  };

  std::unordered_map<StateKey, StateInfo, StateKeyHash> seen;
  std::deque<StateKey> queue;
  StateKey start{1, 0};
  StateKey goal{static_cast<std::uint32_t>(n + 1), 0};
  seen[start] = StateInfo{start, -1, 0};
  queue.push_back(start);
  bool reached = false;

  while (!queue.empty()) {
    StateKey s = queue.front();
    queue.pop_front();
    if (s == goal) {
      reached = true;
      break;
    }
    int cut = seen[s].cut;
    Bits x = decode_x(s);
    // Candidate moves: the first suffix vertex, or any unmoved vertex in the
    // window after it.
    for (int j = 0; j <= window; ++j) {
      int posn = static_cast<int>(s.alpha) + j;
      if (posn > n) break;
      if (j > 0 && ((s.mask >> (j - 1)) & 1)) continue;
      int v = pi[posn - 1];
      int delta = t.out_row(v).count_andnot(x) - t.in_row(v).count_and(x);
      int ncut = cut + delta;
      if (ncut > k) continue;
      StateKey ns;
      if (j == 0) {
        std::uint64_t m = s.mask;
        int run = std::countr_one(m);
        ns.alpha = s.alpha + 1 + run;
        ns.mask = (run >= 63) ? 0 : (m >> (run + 1));
        if (ns.alpha > static_cast<std::uint32_t>(n)) {
          ns.alpha = n + 1;
          ns.mask = 0;
        }
      } else {
        ns.alpha = s.alpha;
        ns.mask = s.mask | (std::uint64_t(1) << (j - 1));
      }
      if (seen.emplace(ns, StateInfo{s, v, ncut}).second) queue.push_back(ns);
    }
  }

  result.stats.states = seen.size();
  if (!reached) return result;

  std::vector<int> order;
  for (StateKey s = goal; !(s == start); s = seen[s].parent) order.push_back(seen[s].moved);
  std::reverse(order.begin(), order.end());
  VertexOrdering out{std::move(order)};
  result.feasible = true;
  result.width = ordering_width(t, out);
  result.ordering = std::move(out);
  return result;
}

CutwidthResult cutwidth(const SemiCompleteDigraph& t) {
  if (t.n() == 0) return {0, VertexOrdering{}};
  for (int k = 0;; ++k) {
    auto r = exact_cutwidth(t, k);
    if (r.feasible) return {r.width, *r.ordering};
  }
}

}  // namespace scw
