#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "scw/bits.hpp"
#include "scw/errors.hpp"

namespace scw {

// Loop-free digraph in which every vertex pair carries at least one arc
// (both directions allowed). Dense bit-matrix representation: the arc set
// has Theta(n^2) size anyway, so rows double as fast vertex sets.
class SemiCompleteDigraph {
 public:
  SemiCompleteDigraph() = default;

  // Validates and builds. `matrix[u][v]` is the arc (u,v).
  static SemiCompleteDigraph build(int n, const std::vector<std::vector<bool>>& matrix);

  // Same validation, rows given as strings of '0'/'1'.
  static SemiCompleteDigraph build_from_rows(const std::vector<std::string>& rows);

  int n() const { return n_; }
  bool arc(int u, int v) const { return out_[u].test(v); }
  int outdeg(int v) const { return outdeg_[v]; }
  int indeg(int v) const { return in_[v].count(); }
  const Bits& out_row(int v) const { return out_[v]; }
  const Bits& in_row(int v) const { return in_[v]; }

  long long arc_count() const;
  bool is_tournament() const;
  // First digon (u,v) with both arcs present, or (-1,-1).
  std::pair<int, int> find_digon() const;

  Bits full_set() const {
    Bits b(n_);
    for (int v = 0; v < n_; ++v) b.set(v);
    return b;
  }

 private:
  int n_ = 0;
  std::vector<Bits> out_;
  std::vector<Bits> in_;
  std::vector<int> outdeg_;
};

// Permutation of 0..n-1; position alpha in `pi` is the vertex placed alpha-th.
struct VertexOrdering {
  std::vector<int> pi;
  int n() const { return static_cast<int>(pi.size()); }
};

// Sorts vertices by nondecreasing outdegree, ties broken by ascending index.
VertexOrdering outdegree_ordering(const SemiCompleteDigraph& t);

// Maximum over all prefixes of the number of arcs leaving the prefix.
// Incremental: one vertex moves across the cut per step, O(n^2/64) total.
int ordering_width(const SemiCompleteDigraph& t, const VertexOrdering& pi);

// Per-prefix cut values |E(pi[alpha], V \ pi[alpha])| for alpha = 0..n.
std::vector<int> prefix_cuts(const SemiCompleteDigraph& t, const VertexOrdering& pi);

enum class GenModel { random, transitive, quadratic_residue, transitive_noise };

GenModel parse_gen_model(const std::string& name);
std::string gen_model_name(GenModel m);

// Deterministic instance generators. `random` orients each pair by a fair
// coin; `transitive` is TT_n with arc (v_i, v_j) iff i > j;
// `quadratic_residue` needs n prime with n = 3 (mod 4); `transitive_noise`
// flips each arc of TT_n independently with probability p.
SemiCompleteDigraph generate(GenModel model, int n, std::uint64_t seed, double p = 0.0);

}  // namespace scw
