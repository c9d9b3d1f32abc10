#pragma once

#include <utility>
#include <vector>

#include "scw/errors.hpp"

namespace scw {

enum class SelectorKind { matching_selector, buss, buss_reversed };

struct SelectorSnapshot {
  std::vector<int> chosen;  // sorted by label
  SelectorKind kind;
  int ell = 0;  // buss kinds only
};

// Bipartite graph with fixed bipartition under vertex additions and
// deletions. Maintains a maximum matching (one augmenting-path search per
// update) and the counters behind the degree-threshold selector at a fixed
// threshold. Vertex identities are stable external labels in [0, bound).
class DynamicBipartiteGraph {
 public:
  explicit DynamicBipartiteGraph(int label_bound, int buss_ell = 0);

  void add_left(int v, const std::vector<int>& neighbours);
  void add_right(int v, const std::vector<int>& neighbours);
  void remove_left(int v);
  void remove_right(int v);

  bool has_left(int v) const { return side_[v] == Side::left; }
  bool has_right(int v) const { return side_[v] == Side::right; }
  int left_count() const { return static_cast<int>(lefts_.size()); }
  int right_count() const { return static_cast<int>(rights_.size()); }
  const std::vector<int>& left_vertices() const { return lefts_; }   // insertion order
  const std::vector<int>& right_vertices() const { return rights_; }
  int degree(int v) const;
  const std::vector<int>& neighbours(int v) const;

  int mu() const { return mu_; }
  int match_of(int v) const;  // partner or -1
  std::vector<std::pair<int, int>> matching() const;

  // Vertices matched in every maximum matching, via alternating reachability
  // from the unmatched vertices of each side.
  SelectorSnapshot matching_selector() const;

  // Vertex cover of size mu() derived from the matching (Koenig).
  std::vector<int> vertex_cover_from_matching() const;

  int buss_ell() const { return ell_; }
  void set_buss_threshold(int ell);  // rebuilds counters

  // Left vertices that have degree > ell or a neighbour of degree <= ell.
  SelectorSnapshot buss_selector() const;
  SelectorSnapshot buss_selector_reversed() const;
  int buss_size() const { return buss_left_count_; }
  int buss_reversed_size() const { return buss_right_count_; }

  // Greedy matching of size ell+1; requires |buss selector| > ell^2 + ell.
  std::vector<std::pair<int, int>> extract_buss_matching() const;
  std::vector<std::pair<int, int>> extract_buss_matching_reversed() const;

 private:
  enum class Side : unsigned char { absent, left, right };

  void check_label(int v) const;
  bool try_augment_from(int root);  // alternating BFS from an unmatched vertex
  void update_status(int v);
  void on_add(int v, Side side, const std::vector<int>& neighbours);
  void on_remove(int v, Side expected);
  void compute_reach(std::vector<char>& left_reached, std::vector<char>& right_via_left,
                     std::vector<char>& right_reached, std::vector<char>& left_via_right) const;
  std::vector<std::pair<int, int>> extract_matching_from_side(bool left_side) const;

  int bound_;
  int ell_;
  std::vector<Side> side_;
  std::vector<std::vector<int>> adj_;  // present neighbours, insertion order
  std::vector<int> match_;
  std::vector<int> cnt_unimp_;  // neighbours with degree <= ell_
  std::vector<char> chosen_;
  std::vector<int> lefts_, rights_;
  int mu_ = 0;
  int buss_left_count_ = 0;
  int buss_right_count_ = 0;
};

}  // namespace scw
