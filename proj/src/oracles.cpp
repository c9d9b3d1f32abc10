#include "scw/oracles.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <functional>
#include <numeric>
#include <set>

namespace scw {

namespace {

std::vector<std::uint32_t> out_masks(const SemiCompleteDigraph& t) {
  std::vector<std::uint32_t> m(t.n(), 0);
  for (int u = 0; u < t.n(); ++u)
    t.out_row(u).for_each([&](int v) { m[u] |= std::uint32_t(1) << v; });
  return m;
}

std::vector<std::uint32_t> in_masks(const SemiCompleteDigraph& t) {
  std::vector<std::uint32_t> m(t.n(), 0);
  for (int u = 0; u < t.n(); ++u)
    t.in_row(u).for_each([&](int v) { m[u] |= std::uint32_t(1) << v; });
  return m;
}

}  // namespace

OracleOrdering oracle_cutwidth(const SemiCompleteDigraph& t) {
  int n = t.n();
  if (n > 20) throw BudgetExceeded("cutwidth oracle limited to n <= 20");
  if (n == 0) return {0, {}};
  auto out = out_masks(t);
  auto in = in_masks(t);
  std::uint32_t full = (n == 32) ? ~0u : ((std::uint32_t(1) << n) - 1);

  std::vector<int> cut(std::size_t(1) << n, 0);
  std::vector<int> dp(std::size_t(1) << n, 0);
  for (std::uint32_t s = 1; s <= full; ++s) {
    int v = std::countr_zero(s);
    std::uint32_t prev = s & (s - 1);
    cut[s] = cut[prev] + std::popcount(out[v] & ~s) - std::popcount(in[v] & prev);
    int best = INT32_MAX;
    for (std::uint32_t rest = s; rest;) {
      int u = std::countr_zero(rest);
      rest &= rest - 1;
      best = std::min(best, dp[s ^ (std::uint32_t(1) << u)]);
    }
    dp[s] = std::max(best, cut[s]);
  }

  OracleOrdering result;
  result.value = dp[full];
  result.ordering.pi.resize(n);
  std::uint32_t s = full;
  for (int pos = n - 1; pos >= 0; --pos) {
    for (std::uint32_t rest = s; rest;) {
      int u = std::countr_zero(rest);
      rest &= rest - 1;
      if (std::max(dp[s ^ (std::uint32_t(1) << u)], cut[s]) == dp[s]) {
        result.ordering.pi[pos] = u;
        s ^= std::uint32_t(1) << u;
        break;
      }
    }
  }
  return result;
}

int oracle_cutwidth_enumerate(const SemiCompleteDigraph& t) {
  int n = t.n();
  if (n > 8) throw BudgetExceeded("cutwidth enumeration limited to n <= 8");
  if (n == 0) return 0;
  VertexOrdering pi;
  pi.pi.resize(n);
  std::iota(pi.pi.begin(), pi.pi.end(), 0);
  int best = INT32_MAX;
  do {
    best = std::min(best, ordering_width(t, pi));
  } while (std::next_permutation(pi.pi.begin(), pi.pi.end()));
  return best;
}

OracleDecomposition oracle_pathwidth(const SemiCompleteDigraph& t) {
  int n = t.n();
  if (n > 18) throw BudgetExceeded("pathwidth oracle limited to n <= 18");
  if (n == 0) return {0, true, {}};
  auto out = out_masks(t);
  std::uint32_t full = (std::uint32_t(1) << n) - 1;

  // boundary(X) = vertices of X with an out-arc leaving X
  auto boundary_size = [&](std::uint32_t x) {
    int c = 0;
    for (std::uint32_t rest = x; rest;) {
      int u = std::countr_zero(rest);
      rest &= rest - 1;
      if (out[u] & ~x & full) ++c;
    }
    return c;
  };

  std::vector<int> dp(std::size_t(1) << n, 0);
  std::vector<int> bnd(std::size_t(1) << n, 0);
  for (std::uint32_t s = 1; s <= full; ++s) {
    bnd[s] = boundary_size(s);
    int best = INT32_MAX;
    for (std::uint32_t rest = s; rest;) {
      int u = std::countr_zero(rest);
      rest &= rest - 1;
      std::uint32_t prev = s ^ (std::uint32_t(1) << u);
      best = std::min(best, std::max(dp[prev], bnd[prev] + 1));
    }
    dp[s] = best;
  }

  // Recover an ordering realizing dp[full], then materialize its bags
  // W_i = boundary(A_{i-1}) u {v_i}.
  std::vector<int> order(n);
  std::uint32_t s = full;
  for (int pos = n - 1; pos >= 0; --pos) {
    for (std::uint32_t rest = s; rest;) {
      int u = std::countr_zero(rest);
      rest &= rest - 1;
      std::uint32_t prev = s ^ (std::uint32_t(1) << u);
      if (std::max(dp[prev], bnd[prev] + 1) == dp[s]) {
        order[pos] = u;
        s = prev;
        break;
      }
    }
  }
  OracleDecomposition result;
  result.value = dp[full] - 1;
  std::uint32_t prefix = 0;
  for (int i = 0; i < n; ++i) {
    std::vector<int> bag;
    for (std::uint32_t rest = prefix; rest;) {
      int u = std::countr_zero(rest);
      rest &= rest - 1;
      if (out[u] & ~prefix & full) bag.push_back(u);
    }
    bag.push_back(order[i]);
    std::sort(bag.begin(), bag.end());
    result.decomposition.bags.push_back(std::move(bag));
    prefix |= std::uint32_t(1) << order[i];
  }
  return result;
}

int oracle_pathwidth_full_search(const SemiCompleteDigraph& t) {
  int n = t.n();
  if (n > 5) throw BudgetExceeded("full decomposition search limited to n <= 5");
  if (n == 0) return 0;
  auto out = out_masks(t);
  std::uint32_t full = (std::uint32_t(1) << n) - 1;

  // State (forgotten, current bag); introducing v is legal unless some
  // forgotten u still has the arc (u,v) uncovered.
  for (int p = 0; p < n; ++p) {
    std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
    std::deque<std::pair<std::uint32_t, std::uint32_t>> queue;
    queue.push_back({0, 0});
    seen.insert({0, 0});
    bool ok = false;
    while (!queue.empty() && !ok) {
      auto [f, w] = queue.front();
      queue.pop_front();
      if (f == full) {
        ok = true;
        break;
      }
      // introduce
      if (std::popcount(w) < p + 1) {
        for (std::uint32_t rest = full & ~(f | w); rest;) {
          int v = std::countr_zero(rest);
          rest &= rest - 1;
          bool blocked = false;
          for (std::uint32_t fr = f; fr && !blocked;) {
            int u = std::countr_zero(fr);
            fr &= fr - 1;
            if (out[u] & (std::uint32_t(1) << v)) blocked = true;
          }
          if (!blocked) {
            auto st = std::make_pair(f, w | (std::uint32_t(1) << v));
            if (seen.insert(st).second) queue.push_back(st);
          }
        }
      }
      // forget
      for (std::uint32_t rest = w; rest;) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        auto st = std::make_pair(f | (std::uint32_t(1) << v), w ^ (std::uint32_t(1) << v));
        if (seen.insert(st).second) queue.push_back(st);
      }
    }
    if (ok) return p;
  }
  return n - 1;
}

namespace {

// Enumerates simple a->b paths whose interior avoids `used`; calls f with the
// full vertex sequence. f returns true to stop the search.
bool enumerate_paths(const SemiCompleteDigraph& t, int b, std::vector<int>& path,
                     std::vector<char>& used, const std::function<bool(const std::vector<int>&)>& f) {
  int x = path.back();
  if (t.arc(x, b)) {
    path.push_back(b);
    bool stop = f(path);
    path.pop_back();
    if (stop) return true;
  }
  for (int mid = 0; mid < t.n(); ++mid) {
    if (used[mid] || mid == b || !t.arc(x, mid)) continue;
    used[mid] = 1;
    path.push_back(mid);
    bool stop = enumerate_paths(t, b, path, used, f);
    path.pop_back();
    used[mid] = 0;
    if (stop) return true;
  }
  return false;
}

bool search_arc_paths(const SemiCompleteDigraph& t, const Pattern& h,
                      const std::vector<int>& image, std::size_t arc_idx,
                      std::vector<char>& used, std::vector<std::vector<int>>& paths) {
  if (arc_idx == h.arcs.size()) return true;
  auto [u, v] = h.arcs[arc_idx];
  int a = image[u], b = image[v];
  std::vector<int> path{a};
  return enumerate_paths(t, b, path, used, [&](const std::vector<int>& p) {
    for (std::size_t i = 1; i + 1 < p.size(); ++i) used[p[i]] = 1;
    paths.push_back(p);
    if (search_arc_paths(t, h, image, arc_idx + 1, used, paths)) return true;
    paths.pop_back();
    for (std::size_t i = 1; i + 1 < p.size(); ++i) used[p[i]] = 0;
    return false;
  });
}

}  // namespace

OracleContainsResult oracle_contains(const SemiCompleteDigraph& t, const Pattern& h) {
  if (h.size() > 6) throw BudgetExceeded("containment oracle limited to |H| <= 6");
  if (t.n() > 8) throw BudgetExceeded("containment oracle limited to n <= 8");
  if (h.n > t.n()) return {false, std::nullopt};
  if (h.n == 0) return {true, ExpansionWitness{}};

  std::vector<int> image(h.n, -1);
  std::vector<char> taken(t.n(), 0);
  std::vector<std::vector<int>> witness_paths;
  std::function<bool(int)> place = [&](int u) -> bool {
    if (u == h.n) {
      std::vector<char> used = taken;
      witness_paths.clear();
      return search_arc_paths(t, h, image, 0, used, witness_paths);
    }
    for (int v = 0; v < t.n(); ++v) {
      if (taken[v]) continue;
      taken[v] = 1;
      image[u] = v;
      if (place(u + 1)) return true;
      taken[v] = 0;
      image[u] = -1;
    }
    return false;
  };
  if (place(0)) {
    ExpansionWitness w;
    w.vertex_image = image;
    w.arc_paths = witness_paths;
    return {true, std::move(w)};
  }
  return {false, std::nullopt};
}

std::vector<int> oracle_matching_selector(const std::vector<int>& xs, const std::vector<int>& ys,
                                          const std::vector<std::pair<int, int>>& edges) {
  if (xs.size() + ys.size() > 12)
    throw BudgetExceeded("matching selector oracle limited to 12 vertices");
  int nx = static_cast<int>(xs.size());
  std::vector<std::vector<int>> adj(nx);
  std::vector<int> yindex;
  auto yid = [&](int y) {
    for (std::size_t i = 0; i < ys.size(); ++i)
      if (ys[i] == y) return static_cast<int>(i);
    throw BadParameterError("edge references unknown right vertex");
  };
  for (auto [x, y] : edges) {
    int xi = -1;
    for (int i = 0; i < nx; ++i)
      if (xs[i] == x) xi = i;
    if (xi < 0) throw BadParameterError("edge references unknown left vertex");
    adj[xi].push_back(yid(y));
  }

  // All matchings of maximum size, by recursion over left vertices.
  int best = 0;
  std::vector<int> match_y(ys.size(), -1);
  std::vector<char> always_x, always_y;
  bool first = true;
  std::function<void(int, int, bool)> rec = [&](int i, int size, bool record) {
    if (i == nx) {
      if (!record) {
        best = std::max(best, size);
        return;
      }
      if (size != best) return;
      std::vector<char> mx(nx, 0), my(ys.size(), 0);
      for (std::size_t j = 0; j < ys.size(); ++j)
        if (match_y[j] >= 0) {
          my[j] = 1;
          mx[match_y[j]] = 1;
        }
      if (first) {
        always_x = mx;
        always_y = my;
        first = false;
      } else {
        for (int j = 0; j < nx; ++j) always_x[j] &= mx[j];
        for (std::size_t j = 0; j < ys.size(); ++j) always_y[j] &= my[j];
      }
      return;
    }
    rec(i + 1, size, record);  // leave xs[i] unmatched
    for (int y : adj[i]) {
      if (match_y[y] == -1) {
        match_y[y] = i;
        rec(i + 1, size + 1, record);
        match_y[y] = -1;
      }
    }
  };
  rec(0, 0, false);
  rec(0, 0, true);

  std::vector<int> chosen;
  for (int i = 0; i < nx; ++i)
    if (!always_x.empty() && always_x[i]) chosen.push_back(xs[i]);
  for (std::size_t j = 0; j < ys.size(); ++j)
    if (!always_y.empty() && always_y[j]) chosen.push_back(ys[j]);
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

int max_disjoint_paths(const SemiCompleteDigraph& t, int s, int u, bool vertex_capacitated,
                       int limit) {
  int n = t.n();
  if (s == u) throw BadParameterError("endpoints must differ");
  // Node-split flow network: node 2v is v_in, 2v+1 is v_out. Residual
  // capacities kept in a dense matrix (n is small wherever this runs).
  int nn = 2 * n;
  std::vector<std::vector<int>> cap(nn, std::vector<int>(nn, 0));
  for (int v = 0; v < n; ++v) {
    bool unbounded = !vertex_capacitated || v == s || v == u;
    cap[2 * v][2 * v + 1] = unbounded ? n + 1 : 1;
  }
  for (int a = 0; a < n; ++a)
    t.out_row(a).for_each([&](int b) { cap[2 * a + 1][2 * b] = 1; });

  int source = 2 * s + 1, sink = 2 * u;
  int flow = 0;
  while (limit < 0 || flow < limit) {
    std::vector<int> parent(nn, -1);
    std::deque<int> queue{source};
    parent[source] = source;
    while (!queue.empty() && parent[sink] == -1) {
      int x = queue.front();
      queue.pop_front();
      for (int y = 0; y < nn; ++y) {
        if (cap[x][y] > 0 && parent[y] == -1) {
          parent[y] = x;
          queue.push_back(y);
        }
      }
    }
    if (parent[sink] == -1) break;
    for (int y = sink; y != source; y = parent[y]) {
      cap[parent[y]][y] -= 1;
      cap[y][parent[y]] += 1;
    }
    ++flow;
  }
  return flow;
}

}  // namespace scw
