#include "scw/decomposition.hpp"

#include <algorithm>

namespace scw {

void validate_separation(const SemiCompleteDigraph& t, const Separation& s) {
  int n = t.n();
  if (s.a.universe() != n || s.b.universe() != n)
    throw SeparationViolation("separation over wrong universe");
  if ((s.a | s.b).count() != n) throw SeparationViolation("A and B do not cover V");
  if (!(s.separator == (s.a & s.b))) throw SeparationViolation("stale separator cache");
  Bits a_only = s.a.andnot(s.b);
  Bits b_only = s.b.andnot(s.a);
  bool bad = false;
  int bu = -1, bv = -1;
  a_only.for_each([&](int u) {
    if (!bad && t.out_row(u).intersects(b_only)) {
      bad = true;
      bu = u;
      t.out_row(u).for_each([&](int v) {
        if (bv < 0 && b_only.test(v)) bv = v;
      });
    }
  });
  if (bad)
    throw SeparationViolation("arc (" + std::to_string(bu) + "," + std::to_string(bv) +
                              ") crosses from A\\B to B\\A");
}

int SeparationChain::width() const {
  int w = 0;
  for (const auto& s : seps) w = std::max(w, s.order());
  return w;
}

void validate_chain(const SemiCompleteDigraph& t, const SeparationChain& c) {
  if (c.seps.empty()) throw ChainViolation("empty chain");
  if (c.seps.front().a.any() || c.seps.back().b.any())
    throw ChainViolation("chain must start at (empty,V) and end at (V,empty)");
  if (c.seps.front().b.count() != t.n() || c.seps.back().a.count() != t.n())
    throw ChainViolation("chain must start at (empty,V) and end at (V,empty)");
  for (const auto& s : c.seps) validate_separation(t, s);
  for (std::size_t i = 0; i + 1 < c.seps.size(); ++i) {
    if (!c.seps[i].a.is_subset_of(c.seps[i + 1].a) || !c.seps[i + 1].b.is_subset_of(c.seps[i].b))
      throw ChainViolation("chain is not monotone at position " + std::to_string(i));
  }
}

int PathDecomposition::width() const {
  int w = -1;
  for (const auto& bag : bags) w = std::max(w, static_cast<int>(bag.size()) - 1);
  return w;
}

int verify_path_decomposition(const SemiCompleteDigraph& t, const PathDecomposition& w) {
  int n = t.n();
  int r = static_cast<int>(w.bags.size());
  std::vector<int> first(n, -1), last(n, -1);
  for (int i = 0; i < r; ++i) {
    for (int v : w.bags[i]) {
      if (v < 0 || v >= n) throw BadParameterError("bag references invalid vertex " + std::to_string(v));
      if (first[v] < 0) first[v] = i;
      last[v] = i;
    }
  }
  // (i) coverage
  for (int v = 0; v < n; ++v)
    if (first[v] < 0) throw CoverageViolation(v);
  // (ii) contiguity: each vertex occupies every bag between its first and last
  std::vector<Bits> bag_sets;
  bag_sets.reserve(r);
  for (int i = 0; i < r; ++i) bag_sets.push_back(Bits::from(n, w.bags[i]));
  for (int v = 0; v < n; ++v)
    for (int j = first[v] + 1; j < last[v]; ++j)
      if (!bag_sets[j].test(v)) throw ContiguityViolation(v, first[v], j, last[v]);
  // (iii) every arc has both endpoints in a common bag, or its tail strictly
  // after its head
  for (int u = 0; u < n; ++u) {
    t.out_row(u).for_each([&](int v) {
      bool share = !(last[u] < first[v] || last[v] < first[u]);
      if (!share && !(first[u] > last[v])) throw ArcViolation(u, v);
    });
  }
  return w.width();
}

PathDecomposition chain_to_decomposition(const SeparationChain& c) {
  PathDecomposition w;
  for (std::size_t i = 1; i < c.seps.size(); ++i) {
    Bits bag = c.seps[i].a & c.seps[i - 1].b;
    w.bags.push_back(bag.to_vector());
  }
  return w;
}

SeparationChain decomposition_to_chain(const SemiCompleteDigraph& t, const PathDecomposition& w) {
  verify_path_decomposition(t, w);
  int n = t.n();
  // Merge consecutive equal bags first.
  std::vector<Bits> bags;
  for (const auto& bag : w.bags) {
    Bits b = Bits::from(n, bag);
    if (bags.empty() || !(bags.back() == b)) bags.push_back(std::move(b));
  }
  int r = static_cast<int>(bags.size());
  SeparationChain chain;
  std::vector<Bits> suffix(r + 1, Bits(n));
  for (int i = r - 1; i >= 0; --i) suffix[i] = suffix[i + 1] | bags[i];
  Bits prefix(n);
  chain.seps.emplace_back(prefix, suffix[0]);
  for (int i = 0; i < r; ++i) {
    prefix |= bags[i];
    chain.seps.emplace_back(prefix, suffix[i + 1]);
  }
  return chain;
}

PathDecomposition make_nice(const PathDecomposition& w) {
  PathDecomposition out;
  std::vector<int> cur;  // kept sorted
  out.bags.push_back({});
  auto forget = [&](int v) {
    cur.erase(std::find(cur.begin(), cur.end(), v));
    out.bags.push_back(cur);
  };
  auto introduce = [&](int v) {
    cur.insert(std::upper_bound(cur.begin(), cur.end(), v), v);
    out.bags.push_back(cur);
  };
  for (const auto& raw : w.bags) {
    std::vector<int> next = raw;
    std::sort(next.begin(), next.end());
    std::vector<int> gone, fresh;
    std::set_difference(cur.begin(), cur.end(), next.begin(), next.end(), std::back_inserter(gone));
    std::set_difference(next.begin(), next.end(), cur.begin(), cur.end(), std::back_inserter(fresh));
    for (int v : gone) forget(v);
    for (int v : fresh) introduce(v);
  }
  std::vector<int> tail = cur;
  for (int v : tail) forget(v);
  return out;
}

}  // namespace scw
