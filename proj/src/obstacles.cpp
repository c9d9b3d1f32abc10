#include "scw/obstacles.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "scw/bipartite.hpp"

namespace scw {

namespace {

void check_vertices(const SemiCompleteDigraph& t, const std::vector<int>& vs, const char* what) {
  std::set<int> seen;
  for (int v : vs) {
    if (v < 0 || v >= t.n())
      throw CertificateViolation(std::string(what) + " references invalid vertex " + std::to_string(v));
    if (!seen.insert(v).second)
      throw CertificateViolation(std::string(what) + " repeats vertex " + std::to_string(v));
  }
}

std::pair<int, int> outdeg_range(const SemiCompleteDigraph& t, const std::vector<int>& vs) {
  int lo = INT32_MAX, hi = INT32_MIN;
  for (int v : vs) {
    lo = std::min(lo, t.outdeg(v));
    hi = std::max(hi, t.outdeg(v));
  }
  return {lo, hi};
}

}  // namespace

void verify(const SemiCompleteDigraph& t, const DegreeTangle& c) {
  check_vertices(t, c.x, "degree tangle");
  if (c.ell < 0) throw CertificateViolation("degree tangle has negative spread parameter");
  if (static_cast<int>(c.x.size()) < c.k)
    throw CertificateViolation("degree tangle has " + std::to_string(c.x.size()) +
                               " vertices, needs " + std::to_string(c.k));
  if (c.x.empty()) return;
  auto [lo, hi] = outdeg_range(t, c.x);
  if (hi - lo > c.ell)
    throw CertificateViolation("degree tangle outdegree spread " + std::to_string(hi - lo) +
                               " exceeds " + std::to_string(c.ell));
}

void verify(const SemiCompleteDigraph& t, const MatchingTangle& c) {
  check_vertices(t, c.x, "matching tangle X");
  check_vertices(t, c.y, "matching tangle Y");
  if (static_cast<int>(c.x.size()) != c.k || static_cast<int>(c.y.size()) != c.k)
    throw CertificateViolation("matching tangle sides must both have size " + std::to_string(c.k));
  for (int v : c.x)
    for (int w : c.y)
      if (v == w) throw CertificateViolation("matching tangle sides intersect at " + std::to_string(v));
  for (int i = 0; i < c.k; ++i)
    if (!t.arc(c.x[i], c.y[i]))
      throw CertificateViolation("matching tangle misses arc (" + std::to_string(c.x[i]) + "," +
                                 std::to_string(c.y[i]) + ")");
  if (c.k == 0) return;
  auto [xlo, xhi] = outdeg_range(t, c.x);
  auto [ylo, yhi] = outdeg_range(t, c.y);
  (void)xlo;
  (void)yhi;
  if (!(ylo > xhi + c.ell))
    throw CertificateViolation("matching tangle outdegree gap " + std::to_string(ylo - xhi) +
                               " not above " + std::to_string(c.ell));
}

long long arcs_between(const SemiCompleteDigraph& t, const Bits& from, const Bits& to) {
  long long total = 0;
  from.for_each([&](int v) { total += t.out_row(v).count_and(to); });
  return total;
}

void verify(const SemiCompleteDigraph& t, const BackwardTangle& c) {
  int n = t.n();
  if (c.x.universe() != n || c.y.universe() != n)
    throw CertificateViolation("backward tangle over wrong universe");
  if (c.x.intersects(c.y)) throw CertificateViolation("backward tangle parts intersect");
  if ((c.x | c.y).count() != n) throw CertificateViolation("backward tangle does not cover V");
  if (c.x.none() || c.y.none()) throw CertificateViolation("backward tangle part is empty");
  long long arcs = arcs_between(t, c.x, c.y);
  if (arcs < c.k)
    throw CertificateViolation("backward tangle has " + std::to_string(arcs) +
                               " forward arcs, needs " + std::to_string(c.k));
  int xhi = INT32_MIN, ylo = INT32_MAX;
  c.x.for_each([&](int v) { xhi = std::max(xhi, t.outdeg(v)); });
  c.y.for_each([&](int w) { ylo = std::min(ylo, t.outdeg(w)); });
  if (ylo < xhi)
    throw CertificateViolation("backward tangle outdegrees not monotone across the cut");
}

void verify(const SemiCompleteDigraph& t, const ShortJungle& c) {
  check_vertices(t, c.x, "jungle");
  if (c.k < 1) throw CertificateViolation("jungle needs k >= 1");
  if (c.d < 1) throw CertificateViolation("jungle needs d >= 1");
  if (static_cast<int>(c.x.size()) < c.k)
    throw CertificateViolation("jungle has " + std::to_string(c.x.size()) + " vertices, needs " +
                               std::to_string(c.k));
  for (int v : c.x) {
    for (int w : c.x) {
      if (v == w) continue;
      auto it = c.paths.find({v, w});
      if (it == c.paths.end() || static_cast<int>(it->second.size()) < c.k)
        throw CertificateViolation("jungle pair (" + std::to_string(v) + "," + std::to_string(w) +
                                   ") has fewer than " + std::to_string(c.k) + " stored paths");
      const auto& family = it->second;
      std::set<int> internals_seen;
      std::set<std::pair<int, int>> arcs_seen;
      std::set<std::vector<int>> distinct;
      for (const auto& p : family) {
        if (p.size() < 2 || p.front() != v || p.back() != w)
          throw CertificateViolation("jungle path for (" + std::to_string(v) + "," +
                                     std::to_string(w) + ") has wrong endpoints");
        if (static_cast<int>(p.size()) - 1 > c.d)
          throw CertificateViolation("jungle path longer than " + std::to_string(c.d));
        std::set<int> verts(p.begin(), p.end());
        if (verts.size() != p.size()) throw CertificateViolation("jungle path repeats a vertex");
        if (!distinct.insert(p).second) throw CertificateViolation("jungle family repeats a path");
        for (std::size_t i = 0; i + 1 < p.size(); ++i) {
          if (!t.arc(p[i], p[i + 1]))
            throw CertificateViolation("jungle path uses missing arc (" + std::to_string(p[i]) +
                                       "," + std::to_string(p[i + 1]) + ")");
          if (c.kind == JungleKind::edge_disjoint && !arcs_seen.insert({p[i], p[i + 1]}).second)
            throw CertificateViolation("jungle family repeats arc (" + std::to_string(p[i]) + "," +
                                       std::to_string(p[i + 1]) + ")");
        }
        if (c.kind == JungleKind::vertex_disjoint) {
          for (std::size_t i = 1; i + 1 < p.size(); ++i)
            if (!internals_seen.insert(p[i]).second)
              throw CertificateViolation("jungle family repeats interior vertex " +
                                         std::to_string(p[i]));
        }
      }
    }
  }
}

long long backward_tangle_threshold(long long t) { return 100 * t * t + 22 * t + 1; }

std::optional<int> pathwidth_bound_from_degree_tangle(const DegreeTangle& c) {
  int size = static_cast<int>(c.x.size());
  if (size < 2) return std::nullopt;
  int k = (size - 2) / 5;
  if (k < c.ell) return std::nullopt;
  return k;
}

std::optional<int> pathwidth_bound_from_matching_tangle(const MatchingTangle& c) {
  int k = std::min(c.k - 1, c.ell);
  if (k < 0) return std::nullopt;
  return k;
}

std::optional<int> cutwidth_bound_from_backward_tangle(const BackwardTangle& c) {
  if (c.k < backward_tangle_threshold(0) + 1) return std::nullopt;
  int k = 0;
  while (c.k >= backward_tangle_threshold(k + 1) + 1) ++k;
  return k;
}

namespace {

std::vector<std::vector<int>> two_step_paths(int v, int w, const std::vector<int>& mids, int k) {
  std::vector<std::vector<int>> out;
  for (int i = 0; i < k; ++i) out.push_back({v, mids[i], w});
  return out;
}

// Inner jungle of the degree-route: k vertices of `pool` whose indegree
// inside T[pool] is at least need_indeg, connected pairwise through common
// neighbours inside the pool.
ShortJungle inner_jungle(const SemiCompleteDigraph& t, const std::vector<int>& pool, int k,
                         int need_indeg) {
  Bits pool_set = Bits::from(t.n(), pool);
  std::vector<int> z;
  for (int v : pool) {
    if (t.in_row(v).count_and(pool_set) >= need_indeg) {
      z.push_back(v);
      if (static_cast<int>(z.size()) == k) break;
    }
  }
  if (static_cast<int>(z.size()) < k)
    throw InternalContradiction("inner jungle: fewer than k high-indegree vertices in the pool");
  ShortJungle j;
  j.x = z;
  j.k = k;
  j.d = 3;
  j.kind = JungleKind::vertex_disjoint;
  for (int v : z) {
    for (int w : z) {
      if (v == w) continue;
      Bits mids = t.out_row(v) & t.in_row(w) & pool_set;
      std::vector<int> m = mids.to_vector();
      if (static_cast<int>(m.size()) < k)
        throw InternalContradiction("inner jungle: pair short of common pool neighbours");
      j.paths[{v, w}] = two_step_paths(v, w, m, k);
    }
  }
  return j;
}

}  // namespace

ShortJungle jungle_from_degree_tangle(const SemiCompleteDigraph& t, const std::vector<int>& x,
                                      int k, const ExtractionConstants& consts) {
  if (k < 1) throw BadParameterError("jungle parameter k must be positive");
  int need = consts.degree_jungle_size * k;
  DegreeTangle pre{x, need, k};
  try {
    verify(t, pre);
  } catch (const CertificateViolation& e) {
    throw PreconditionUnmet(std::string("degree tangle check failed: ") + e.what());
  }

  std::vector<int> xs = x;
  std::sort(xs.begin(), xs.end());
  xs.resize(need);  // trim
  Bits x_set = Bits::from(t.n(), xs);

  ShortJungle j;
  j.x = xs;
  j.k = k;
  j.d = 3;
  j.kind = JungleKind::vertex_disjoint;

  for (int v : xs) {
    for (int w : xs) {
      if (v == w) continue;
      Bits direct = t.out_row(v) & t.in_row(w);
      direct.reset(v);
      direct.reset(w);
      std::vector<int> mids = direct.to_vector();
      if (static_cast<int>(mids.size()) >= k) {
        j.paths[{v, w}] = two_step_paths(v, w, mids, k);
        continue;
      }
      // Three-step paths through the auxiliary bipartite graph on
      // (out-out, in-in) common neighbourhoods.
      Bits a_set = (t.out_row(v) & t.out_row(w)).andnot(direct);
      Bits b_set = (t.in_row(v) & t.in_row(w)).andnot(direct);
      a_set.reset(v);
      a_set.reset(w);
      b_set.reset(v);
      b_set.reset(w);
      std::vector<int> a = a_set.to_vector();
      std::vector<int> b = b_set.to_vector();
      DynamicBipartiteGraph h(t.n());
      for (int bb : b) h.add_right(bb, {});
      for (int aa : a) {
        std::vector<int> nbrs;
        for (int bb : b)
          if (t.arc(aa, bb)) nbrs.push_back(bb);
        h.add_left(aa, nbrs);
      }
      if (h.mu() >= k) {
        auto matching = h.matching();
        std::vector<std::vector<int>> family;
        for (int i = 0; i < k; ++i)
          family.push_back({v, matching[i].first, matching[i].second, w});
        // Direct two-step paths also qualify; the matching alone already
        // gives k internally disjoint ones.
        j.paths[{v, w}] = std::move(family);
        continue;
      }
      // No k disjoint paths for this pair: the tangle hides an explicit
      // smaller jungle on one of the two sides.
      std::vector<int> cover = h.vertex_cover_from_matching();
      Bits cover_set = Bits::from(t.n(), cover);
      int in_a = a_set.count_and(x_set);
      if (in_a >= 16 * k) {
        std::vector<int> pool;
        Bits usable = (a_set & x_set).andnot(cover_set);
        usable.for_each([&](int u) {
          if (static_cast<int>(pool.size()) < 15 * k) pool.push_back(u);
        });
        if (static_cast<int>(pool.size()) < 15 * k)
          throw InternalContradiction("degree route: pool short after removing the cover");
        return inner_jungle(t, pool, k, 6 * k);
      }
      throw InternalContradiction(
          "degree route: reached the impossible low-outdegree side for pair (" +
          std::to_string(v) + "," + std::to_string(w) + ")");
    }
  }
  return j;
}

ShortJungle jungle_from_matching_tangle(const SemiCompleteDigraph& t, const MatchingTangle& c,
                                        int k, const ExtractionConstants& consts) {
  if (k < 1) throw BadParameterError("jungle parameter k must be positive");
  try {
    verify(t, c);
  } catch (const CertificateViolation& e) {
    throw PreconditionUnmet(std::string("matching tangle check failed: ") + e.what());
  }
  if (c.k < consts.matching_jungle_size * k)
    throw PreconditionUnmet("matching tangle has size " + std::to_string(c.k) + ", needs " +
                            std::to_string(consts.matching_jungle_size * k));
  if (c.ell < consts.matching_jungle_gap * k)
    throw PreconditionUnmet("matching tangle has gap parameter " + std::to_string(c.ell) +
                            ", needs " + std::to_string(consts.matching_jungle_gap * k));

  int size = consts.matching_jungle_size * k;
  std::vector<int> xs(c.x.begin(), c.x.begin() + size);
  std::vector<int> ys(c.y.begin(), c.y.begin() + size);
  std::vector<int> preimage(t.n(), -1);
  for (int i = 0; i < size; ++i) preimage[ys[i]] = xs[i];
  Bits y_set = Bits::from(t.n(), ys);
  Bits x_set = Bits::from(t.n(), xs);

  std::vector<int> z;
  for (int v : ys)
    if (t.in_row(v).count_and(y_set) >= k + 1) {
      z.push_back(v);
      if (static_cast<int>(z.size()) == k) break;
    }
  if (static_cast<int>(z.size()) < k)
    throw InternalContradiction("matching route: fewer than k high-indegree vertices in Y");

  ShortJungle j;
  j.x = z;
  j.k = k;
  j.d = 4;
  j.kind = JungleKind::vertex_disjoint;
  for (int v : z) {
    for (int w : z) {
      if (v == w) continue;
      Bits r0 = t.in_row(w) & y_set;
      r0.reset(v);
      std::vector<int> r = r0.to_vector();
      if (static_cast<int>(r.size()) < k)
        throw InternalContradiction("matching route: in-neighbourhood short for pair");
      r.resize(k);
      Bits r_set = Bits::from(t.n(), r);
      std::vector<std::vector<int>> family;
      Bits used(t.n());
      bool direct_used = false;
      for (int i = 0; i < k; ++i) {
        int p = preimage[r[i]];
        Bits cands = t.out_row(v) & t.in_row(p);
        bool placed = false;
        for (int q = 0; q < t.n() && !placed; ++q) {
          if (!cands.test(q)) continue;
          if (q == w) {
            if (!direct_used) {
              family.push_back({v, w});
              direct_used = true;
              used.set(w);
              placed = true;
            }
            continue;
          }
          if (x_set.test(q) || r_set.test(q) || used.test(q)) continue;
          family.push_back({v, q, p, r[i], w});
          used.set(q);
          placed = true;
        }
        if (!placed)
          throw InternalContradiction("matching route: greedy connector exhausted for pair (" +
                                      std::to_string(v) + "," + std::to_string(w) + ")");
      }
      j.paths[{v, w}] = std::move(family);
    }
  }
  return j;
}

namespace {

// Walks of the backward route are shortcut at the first vertex repeat; the
// resulting simple path uses a subset of the walk's arcs.
std::vector<int> shortcut_walk(const std::vector<int>& walk) {
  std::vector<int> path;
  for (int v : walk) {
    auto it = std::find(path.begin(), path.end(), v);
    if (it != path.end())
      path.erase(it + 1, path.end());
    else
      path.push_back(v);
  }
  return path;
}

bool arcs_free(const std::vector<int>& path, const std::set<std::pair<int, int>>& used) {
  for (std::size_t i = 0; i + 1 < path.size(); ++i)
    if (used.count({path[i], path[i + 1]})) return false;
  return true;
}

void commit_arcs(const std::vector<int>& path, std::set<std::pair<int, int>>& used) {
  for (std::size_t i = 0; i + 1 < path.size(); ++i) used.insert({path[i], path[i + 1]});
}

}  // namespace

BackwardJungleResult immersion_jungle_from_backward_tangle(const SemiCompleteDigraph& t,
                                                           const BackwardTangle& c, int k,
                                                           const ExtractionConstants& consts) {
  if (k < 1) throw BadParameterError("jungle parameter k must be positive");
  try {
    verify(t, c);
  } catch (const CertificateViolation& e) {
    throw PreconditionUnmet(std::string("backward tangle check failed: ") + e.what());
  }
  long long arcs_needed = consts.backward_jungle_arcs > 0 ? consts.backward_jungle_arcs
                                                          : 109LL * 109LL * k;
  long long arcs = arcs_between(t, c.x, c.y);
  if (arcs < arcs_needed)
    throw PreconditionUnmet("backward tangle has " + std::to_string(arcs) + " arcs, needs " +
                            std::to_string(arcs_needed));

  // Tails and heads of the arcs crossing the cut forward.
  Bits p0(t.n()), q0(t.n());
  c.x.for_each([&](int v) {
    if (t.out_row(v).intersects(c.y)) p0.set(v);
  });
  c.y.for_each([&](int w) {
    if (t.in_row(w).intersects(c.x)) q0.set(w);
  });

  int alpha = INT32_MAX;
  c.y.for_each([&](int w) { alpha = std::min(alpha, t.outdeg(w)); });

  int side_need = consts.backward_jungle_side * k;
  bool use_tails = p0.count() >= side_need;
  bool use_heads = q0.count() >= side_need;
  if (!use_tails && !use_heads)
    throw PreconditionUnmet("neither side of the cut has " + std::to_string(side_need) +
                            " arc endpoints (" + std::to_string(p0.count()) + " tails, " +
                            std::to_string(q0.count()) + " heads)");

  // Endpoints with outdegree close to the cut boundary form a degree tangle;
  // a large one already contains the jungle we need.
  std::vector<int> near_boundary;
  int delegate_need = consts.degree_jungle_size * 4 * k;
  Bits side = use_tails ? p0 : q0;
  side.for_each([&](int v) {
    bool close = use_tails ? (t.outdeg(v) >= alpha - 4 * k) : (t.outdeg(v) <= alpha + 4 * k);
    if (close) near_boundary.push_back(v);
  });
  if (static_cast<int>(near_boundary.size()) >= delegate_need) {
    ShortJungle inner = jungle_from_degree_tangle(t, near_boundary, 4 * k, consts);
    ShortJungle out;
    out.x = inner.x;
    out.k = k;
    out.d = 4;
    out.kind = JungleKind::edge_disjoint;
    for (auto& [key, family] : inner.paths) {
      family.resize(k);
      out.paths[key] = family;
    }
    return {std::move(out), true};
  }

  // Pick 5k endpoints far from the boundary; their outdegrees differ from
  // every Y-outdegree (tail route) or every X-outdegree (head route) by more
  // than 4k, which feeds the greedy two-step connections.
  Bits near_set = Bits::from(t.n(), near_boundary);
  std::vector<int> pool;
  side.for_each([&](int v) {
    if (!near_set.test(v) && static_cast<int>(pool.size()) < 5 * k) pool.push_back(v);
  });
  if (static_cast<int>(pool.size()) < 5 * k)
    throw PreconditionUnmet("backward route: fewer than 5k endpoints beyond the boundary band");
  Bits pool_set = Bits::from(t.n(), pool);

  ShortJungle j;
  j.k = k;
  j.d = 4;
  j.kind = JungleKind::edge_disjoint;

  if (use_tails) {
    // First hop inside the pool, second hop across the cut, finish with a
    // two-step connection back to the target tail.
    std::vector<int> hop_head(t.n(), -1);
    pool_set.for_each([&](int p) {
      Bits heads = t.out_row(p) & c.y;
      heads.for_each([&](int h) {
        if (hop_head[p] == -1) hop_head[p] = h;
      });
    });
    std::vector<int> z;
    for (int v : pool)
      if (t.out_row(v).count_and(pool_set) >= k) {
        z.push_back(v);
        if (static_cast<int>(z.size()) == k) break;
      }
    if (static_cast<int>(z.size()) < k)
      throw InternalContradiction("backward route: fewer than k high-outdegree pool vertices");
    j.x = z;
    for (int v : z) {
      for (int w : z) {
        if (v == w) continue;
        std::set<std::pair<int, int>> used;
        std::vector<std::vector<int>> family;
        Bits firsts = t.out_row(v) & pool_set;
        std::vector<int> first_hops = firsts.to_vector();
        std::size_t cursor = 0;
        while (static_cast<int>(family.size()) < k) {
          if (cursor >= first_hops.size())
            throw InternalContradiction("backward route: first hops exhausted for pair (" +
                                        std::to_string(v) + "," + std::to_string(w) + ")");
          int v1 = first_hops[cursor++];
          if (v1 == w) {
            std::vector<int> path{v, w};
            if (arcs_free(path, used)) {
              commit_arcs(path, used);
              family.push_back(std::move(path));
            }
            continue;
          }
          int v2 = hop_head[v1];
          if (v2 == -1) throw InternalContradiction("backward route: pool vertex without cut arc");
          Bits cands = t.out_row(v2) & t.in_row(w);
          bool placed = false;
          for (int q = 0; q < t.n() && !placed; ++q) {
            if (!cands.test(q)) continue;
            std::vector<int> path = shortcut_walk({v, v1, v2, q, w});
            if (arcs_free(path, used)) {
              commit_arcs(path, used);
              family.push_back(std::move(path));
              placed = true;
            }
          }
          if (!placed && static_cast<int>(family.size()) < k && cursor >= first_hops.size())
            throw InternalContradiction("backward route: connectors exhausted for pair (" +
                                        std::to_string(v) + "," + std::to_string(w) + ")");
        }
        j.paths[{v, w}] = std::move(family);
      }
    }
  } else {
    // Mirror image: last hop inside the pool, preceded by a cut arc, reached
    // by a two-step connection from the source head.
    std::vector<int> hop_tail(t.n(), -1);
    pool_set.for_each([&](int q) {
      Bits tails = t.in_row(q) & c.x;
      tails.for_each([&](int h) {
        if (hop_tail[q] == -1) hop_tail[q] = h;
      });
    });
    std::vector<int> z;
    for (int v : pool)
      if (t.in_row(v).count_and(pool_set) >= k) {
        z.push_back(v);
        if (static_cast<int>(z.size()) == k) break;
      }
    if (static_cast<int>(z.size()) < k)
      throw InternalContradiction("backward route: fewer than k high-indegree pool vertices");
    j.x = z;
    for (int v : z) {
      for (int w : z) {
        if (v == w) continue;
        std::set<std::pair<int, int>> used;
        std::vector<std::vector<int>> family;
        Bits lasts = t.in_row(w) & pool_set;
        std::vector<int> last_hops = lasts.to_vector();
        std::size_t cursor = 0;
        while (static_cast<int>(family.size()) < k) {
          if (cursor >= last_hops.size())
            throw InternalContradiction("backward route: last hops exhausted for pair (" +
                                        std::to_string(v) + "," + std::to_string(w) + ")");
          int w1 = last_hops[cursor++];
          if (w1 == v) {
            std::vector<int> path{v, w};
            if (t.arc(v, w) && arcs_free(path, used)) {
              commit_arcs(path, used);
              family.push_back(std::move(path));
            }
            continue;
          }
          int w2 = hop_tail[w1];
          if (w2 == -1) throw InternalContradiction("backward route: pool vertex without cut arc");
          Bits cands = t.out_row(v) & t.in_row(w2);
          bool placed = false;
          for (int q = 0; q < t.n() && !placed; ++q) {
            if (!cands.test(q)) continue;
            std::vector<int> path = shortcut_walk({v, q, w2, w1, w});
            if (arcs_free(path, used)) {
              commit_arcs(path, used);
              family.push_back(std::move(path));
              placed = true;
            }
          }
          if (!placed && static_cast<int>(family.size()) < k && cursor >= last_hops.size())
            throw InternalContradiction("backward route: connectors exhausted for pair (" +
                                        std::to_string(v) + "," + std::to_string(w) + ")");
        }
        j.paths[{v, w}] = std::move(family);
      }
    }
  }
  return {std::move(j), false};
}

PatternModel embed_pattern(const ShortJungle& jungle, const Pattern& h) {
  if (h.n > static_cast<int>(jungle.x.size()))
    throw PreconditionUnmet("pattern has more vertices than the jungle");
  int d = jungle.d;
  int paths_needed = h.arc_count();
  if (paths_needed > 0) {
    // Worst case before placing the last path: every previous path consumed
    // its maximum (d-1 interior vertices / d arcs); each conflict rules out
    // at most one stored path.
    long long worst = (jungle.kind == JungleKind::vertex_disjoint)
                          ? h.n + static_cast<long long>(paths_needed - 1) * (d - 1)
                          : static_cast<long long>(paths_needed - 1) * d;
    if (worst >= jungle.k)
      throw PreconditionUnmet("pattern of size " + std::to_string(h.size()) +
                              " too large for a (" + std::to_string(jungle.k) + "," +
                              std::to_string(d) + ") jungle");
  }

  PatternModel m;
  m.kind = jungle.kind;
  m.vertex_image.assign(jungle.x.begin(), jungle.x.begin() + h.n);

  std::set<int> used_vertices(m.vertex_image.begin(), m.vertex_image.end());
  std::set<std::pair<int, int>> used_arcs;
  for (auto [u, v] : h.arcs) {
    int a = m.vertex_image[u], b = m.vertex_image[v];
    const auto& family = jungle.paths.at({a, b});
    bool placed = false;
    for (const auto& p : family) {
      bool ok = true;
      if (jungle.kind == JungleKind::vertex_disjoint) {
        for (std::size_t i = 1; i + 1 < p.size() && ok; ++i)
          if (used_vertices.count(p[i])) ok = false;
      } else {
        for (std::size_t i = 0; i + 1 < p.size() && ok; ++i)
          if (used_arcs.count({p[i], p[i + 1]})) ok = false;
      }
      if (!ok) continue;
      if (jungle.kind == JungleKind::vertex_disjoint) {
        for (std::size_t i = 1; i + 1 < p.size(); ++i) used_vertices.insert(p[i]);
      } else {
        for (std::size_t i = 0; i + 1 < p.size(); ++i) used_arcs.insert({p[i], p[i + 1]});
      }
      m.arc_paths.push_back(p);
      placed = true;
      break;
    }
    if (!placed)
      throw InternalContradiction("greedy embedding found no free stored path for arc (" +
                                  std::to_string(u) + "," + std::to_string(v) + ")");
  }
  return m;
}

void verify_model(const SemiCompleteDigraph& t, const Pattern& h, const PatternModel& m) {
  if (static_cast<int>(m.vertex_image.size()) != h.n)
    throw CertificateViolation("model has wrong number of vertex images");
  check_vertices(t, m.vertex_image, "model image");
  if (static_cast<int>(m.arc_paths.size()) != h.arc_count())
    throw CertificateViolation("model has wrong number of arc paths");
  std::set<int> images(m.vertex_image.begin(), m.vertex_image.end());
  std::set<int> interior_seen;
  std::set<std::pair<int, int>> arcs_seen;
  for (int e = 0; e < h.arc_count(); ++e) {
    const auto& p = m.arc_paths[e];
    auto [u, v] = h.arcs[e];
    if (p.size() < 2 || p.front() != m.vertex_image[u] || p.back() != m.vertex_image[v])
      throw CertificateViolation("model path for arc " + std::to_string(e) +
                                 " has wrong endpoints");
    std::set<int> verts(p.begin(), p.end());
    if (verts.size() != p.size())
      throw CertificateViolation("model path for arc " + std::to_string(e) + " repeats a vertex");
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      if (!t.arc(p[i], p[i + 1]))
        throw CertificateViolation("model path uses missing arc (" + std::to_string(p[i]) + "," +
                                   std::to_string(p[i + 1]) + ")");
      if (m.kind == JungleKind::edge_disjoint && !arcs_seen.insert({p[i], p[i + 1]}).second)
        throw CertificateViolation("model paths share arc (" + std::to_string(p[i]) + "," +
                                   std::to_string(p[i + 1]) + ")");
    }
    if (m.kind == JungleKind::vertex_disjoint) {
      for (std::size_t i = 1; i + 1 < p.size(); ++i) {
        if (images.count(p[i]))
          throw CertificateViolation("model path passes through a vertex image " +
                                     std::to_string(p[i]));
        if (!interior_seen.insert(p[i]).second)
          throw CertificateViolation("model paths share interior vertex " + std::to_string(p[i]));
      }
    }
  }
}

}  // namespace scw
