#include "scw/digraph.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace scw {

SemiCompleteDigraph SemiCompleteDigraph::build(int n, const std::vector<std::vector<bool>>& matrix) {
  if (static_cast<int>(matrix.size()) != n) throw ShapeError("matrix has wrong number of rows");
  for (const auto& row : matrix)
    if (static_cast<int>(row.size()) != n) throw ShapeError("matrix is not square");

  SemiCompleteDigraph t;
  t.n_ = n;
  t.out_.assign(n, Bits(n));
  t.in_.assign(n, Bits(n));
  t.outdeg_.assign(n, 0);
  for (int u = 0; u < n; ++u) {
    if (matrix[u][u]) throw LoopArcError(u);
    for (int v = 0; v < n; ++v) {
      if (matrix[u][v]) {
        t.out_[u].set(v);
        t.in_[v].set(u);
      }
    }
  }
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!matrix[u][v] && !matrix[v][u]) throw NotSemiCompleteError(u, v);
  for (int u = 0; u < n; ++u) t.outdeg_[u] = t.out_[u].count();
  return t;
}

SemiCompleteDigraph SemiCompleteDigraph::build_from_rows(const std::vector<std::string>& rows) {
  int n = static_cast<int>(rows.size());
  std::vector<std::vector<bool>> m(n, std::vector<bool>(n, false));
  for (int u = 0; u < n; ++u) {
    if (static_cast<int>(rows[u].size()) != n) throw ShapeError("matrix is not square");
    for (int v = 0; v < n; ++v) {
      char c = rows[u][v];
      if (c != '0' && c != '1') throw ParseError("matrix entries must be 0 or 1");
      m[u][v] = (c == '1');
    }
  }
  return build(n, m);
}

long long SemiCompleteDigraph::arc_count() const {
  long long c = 0;
  for (int v = 0; v < n_; ++v) c += outdeg_[v];
  return c;
}

bool SemiCompleteDigraph::is_tournament() const {
  return arc_count() == static_cast<long long>(n_) * (n_ - 1) / 2;
}

std::pair<int, int> SemiCompleteDigraph::find_digon() const {
  for (int u = 0; u < n_; ++u) {
    if (out_[u].intersects(in_[u])) {
      for (int v = 0; v < n_; ++v)
        if (arc(u, v) && arc(v, u)) return {u, v};
    }
  }
  return {-1, -1};
}

VertexOrdering outdegree_ordering(const SemiCompleteDigraph& t) {
  VertexOrdering o;
  o.pi.resize(t.n());
  std::iota(o.pi.begin(), o.pi.end(), 0);
  std::stable_sort(o.pi.begin(), o.pi.end(),
                   [&](int a, int b) { return t.outdeg(a) < t.outdeg(b); });
  return o;
}

std::vector<int> prefix_cuts(const SemiCompleteDigraph& t, const VertexOrdering& pi) {
  int n = t.n();
  if (static_cast<int>(pi.pi.size()) != n) throw BadParameterError("ordering has wrong length");
  std::vector<bool> seen(n, false);
  for (int v : pi.pi) {
    if (v < 0 || v >= n || seen[v]) throw BadParameterError("ordering is not a permutation");
    seen[v] = true;
  }
  std::vector<int> cuts(n + 1, 0);
  Bits prefix(n);
  int cut = 0;
  for (int alpha = 1; alpha <= n; ++alpha) {
    int v = pi.pi[alpha - 1];
    // v moves across the cut: arcs from v into the remaining suffix appear,
    // arcs from the old prefix into v disappear.
    cut += t.out_row(v).count_andnot(prefix);
    cut -= t.in_row(v).count_and(prefix);
    prefix.set(v);
    cuts[alpha] = cut;
  }
  return cuts;
}

int ordering_width(const SemiCompleteDigraph& t, const VertexOrdering& pi) {
  auto cuts = prefix_cuts(t, pi);
  return *std::max_element(cuts.begin(), cuts.end());
}

GenModel parse_gen_model(const std::string& name) {
  if (name == "random") return GenModel::random;
  if (name == "transitive") return GenModel::transitive;
  if (name == "quadratic_residue") return GenModel::quadratic_residue;
  if (name == "transitive_noise") return GenModel::transitive_noise;
  throw BadParameterError("unknown model: " + name);
}

std::string gen_model_name(GenModel m) {
  switch (m) {
    case GenModel::random: return "random";
    case GenModel::transitive: return "transitive";
    case GenModel::quadratic_residue: return "quadratic_residue";
    case GenModel::transitive_noise: return "transitive_noise";
  }
  return "?";
}

namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

SemiCompleteDigraph generate(GenModel model, int n, std::uint64_t seed, double p) {
  if (n < 0) throw BadParameterError("n must be nonnegative");
  std::vector<std::vector<bool>> m(n, std::vector<bool>(n, false));
  switch (model) {
    case GenModel::transitive:
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j) m[i][j] = true;
      break;
    case GenModel::random: {
      std::mt19937_64 rng(seed);
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          if (rng() & 1)
            m[i][j] = true;
          else
            m[j][i] = true;
        }
      break;
    }
    case GenModel::quadratic_residue: {
      if (!is_prime(n) || n % 4 != 3)
        throw BadParameterError("quadratic_residue requires n prime with n = 3 (mod 4)");
      std::vector<bool> qr(n, false);
      for (int x = 1; x < n; ++x) qr[static_cast<int>((static_cast<long long>(x) * x) % n)] = true;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (i != j && qr[((j - i) % n + n) % n]) m[i][j] = true;
      break;
    }
    case GenModel::transitive_noise: {
      if (p < 0.0 || p > 1.0) throw BadParameterError("flip probability must be in [0,1]");
      std::mt19937_64 rng(seed);
      std::bernoulli_distribution flip(p);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j) {
          if (flip(rng))
            m[j][i] = true;
          else
            m[i][j] = true;
        }
      break;
    }
  }
  return SemiCompleteDigraph::build(n, m);
}

}  // namespace scw
