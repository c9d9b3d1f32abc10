#include "scw/bipartite.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace scw {

DynamicBipartiteGraph::DynamicBipartiteGraph(int label_bound, int buss_ell)
    : bound_(label_bound),
      ell_(buss_ell),
      side_(label_bound, Side::absent),
      adj_(label_bound),
      match_(label_bound, -1),
      cnt_unimp_(label_bound, 0),
      chosen_(label_bound, 0) {
  if (label_bound < 0) throw BadParameterError("label bound must be nonnegative");
  if (buss_ell < 0) throw BadParameterError("threshold must be nonnegative");
}

void DynamicBipartiteGraph::check_label(int v) const {
  if (v < 0 || v >= bound_) throw BadParameterError("label out of range: " + std::to_string(v));
}

int DynamicBipartiteGraph::degree(int v) const {
  check_label(v);
  if (side_[v] == Side::absent) throw UnknownVertexError(v);
  return static_cast<int>(adj_[v].size());
}

const std::vector<int>& DynamicBipartiteGraph::neighbours(int v) const {
  check_label(v);
  if (side_[v] == Side::absent) throw UnknownVertexError(v);
  return adj_[v];
}

int DynamicBipartiteGraph::match_of(int v) const {
  check_label(v);
  if (side_[v] == Side::absent) throw UnknownVertexError(v);
  return match_[v];
}

std::vector<std::pair<int, int>> DynamicBipartiteGraph::matching() const {
  std::vector<std::pair<int, int>> out;
  for (int x : lefts_)
    if (match_[x] != -1) out.emplace_back(x, match_[x]);
  return out;
}

void DynamicBipartiteGraph::update_status(int v) {
  bool now = side_[v] != Side::absent &&
             (static_cast<int>(adj_[v].size()) > ell_ || cnt_unimp_[v] > 0);
  if (now == static_cast<bool>(chosen_[v])) return;
  chosen_[v] = now;
  int delta = now ? 1 : -1;
  if (side_[v] == Side::left)
    buss_left_count_ += delta;
  else if (side_[v] == Side::right)
    buss_right_count_ += delta;
}

void DynamicBipartiteGraph::on_add(int v, Side side, const std::vector<int>& neighbours) {
  check_label(v);
  if (side_[v] != Side::absent) throw DuplicateVertexError(v);
  Side other = (side == Side::left) ? Side::right : Side::left;
  std::set<int> dedup;
  for (int y : neighbours) {
    check_label(y);
    if (side_[y] != other) throw UnknownVertexError(y);
    if (!dedup.insert(y).second) throw BadParameterError("duplicate neighbour " + std::to_string(y));
  }

  side_[v] = side;
  adj_[v] = neighbours;
  (side == Side::left ? lefts_ : rights_).push_back(v);
  int dv = static_cast<int>(neighbours.size());

  for (int y : neighbours) {
    adj_[y].push_back(v);
    int dy = static_cast<int>(adj_[y].size());
    if (dy == ell_ + 1) {
      // y crossed the threshold: its other neighbours lose a low-degree
      // neighbour.
      for (int x : adj_[y]) {
        if (x == v) continue;
        --cnt_unimp_[x];
        update_status(x);
      }
    }
    if (dv <= ell_) ++cnt_unimp_[y];
    update_status(y);
  }
  int c = 0;
  for (int y : neighbours)
    if (static_cast<int>(adj_[y].size()) <= ell_) ++c;
  cnt_unimp_[v] = c;
  update_status(v);

  if (try_augment_from(v)) ++mu_;
}

void DynamicBipartiteGraph::on_remove(int v, Side expected) {
  check_label(v);
  if (side_[v] != expected) throw UnknownVertexError(v);
  int dv = static_cast<int>(adj_[v].size());

  for (int y : adj_[v]) {
    adj_[y].erase(std::find(adj_[y].begin(), adj_[y].end(), v));
    int dy = static_cast<int>(adj_[y].size());
    if (dy == ell_) {
      // y dropped back to the threshold: its neighbours gain a low-degree
      // neighbour.
      for (int x : adj_[y]) {
        ++cnt_unimp_[x];
        update_status(x);
      }
    }
    if (dv <= ell_) --cnt_unimp_[y];
    update_status(y);
  }

  int partner = match_[v];
  match_[v] = -1;
  side_[v] = Side::absent;
  adj_[v].clear();
  cnt_unimp_[v] = 0;
  update_status(v);
  auto& order = (expected == Side::left) ? lefts_ : rights_;
  order.erase(std::find(order.begin(), order.end(), v));

  if (partner != -1) {
    match_[partner] = -1;
    --mu_;
    if (try_augment_from(partner)) ++mu_;
  }
}

void DynamicBipartiteGraph::add_left(int v, const std::vector<int>& neighbours) {
  on_add(v, Side::left, neighbours);
}
void DynamicBipartiteGraph::add_right(int v, const std::vector<int>& neighbours) {
  on_add(v, Side::right, neighbours);
}
void DynamicBipartiteGraph::remove_left(int v) { on_remove(v, Side::left); }
void DynamicBipartiteGraph::remove_right(int v) { on_remove(v, Side::right); }

bool DynamicBipartiteGraph::try_augment_from(int root) {
  if (match_[root] != -1) return false;
  std::deque<int> queue{root};
  std::vector<int> parent(bound_, -1);
  std::vector<char> visited(bound_, 0);
  visited[root] = 1;
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (int y : adj_[x]) {
      if (visited[y] || y == match_[x]) continue;
      visited[y] = 1;
      parent[y] = x;
      if (match_[y] == -1) {
        // Flip the alternating path back to the root.
        int cur = y;
        while (cur != -1) {
          int px = parent[cur];
          int next = match_[px];
          match_[px] = cur;
          match_[cur] = px;
          cur = next;
        }
        return true;
      }
      int x2 = match_[y];
      if (!visited[x2]) {
        visited[x2] = 1;
        queue.push_back(x2);
      }
    }
  }
  return false;
}

void DynamicBipartiteGraph::compute_reach(std::vector<char>& left_reached,
                                          std::vector<char>& right_via_left,
                                          std::vector<char>& right_reached,
                                          std::vector<char>& left_via_right) const {
  left_reached.assign(bound_, 0);
  right_via_left.assign(bound_, 0);
  right_reached.assign(bound_, 0);
  left_via_right.assign(bound_, 0);

  auto sweep = [&](const std::vector<int>& roots, std::vector<char>& same_side,
                   std::vector<char>& opposite) {
    std::deque<int> queue;
    for (int v : roots)
      if (match_[v] == -1) {
        same_side[v] = 1;
        queue.push_back(v);
      }
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      for (int y : adj_[x]) {
        if (y == match_[x] || opposite[y]) continue;
        opposite[y] = 1;
        int x2 = match_[y];
        if (x2 != -1 && !same_side[x2]) {
          same_side[x2] = 1;
          queue.push_back(x2);
        }
      }
    }
  };
  sweep(lefts_, left_reached, right_via_left);
  sweep(rights_, right_reached, left_via_right);
}

SelectorSnapshot DynamicBipartiteGraph::matching_selector() const {
  std::vector<char> lr, rvl, rr, lvr;
  compute_reach(lr, rvl, rr, lvr);
  SelectorSnapshot snap;
  snap.kind = SelectorKind::matching_selector;
  for (int x : lefts_)
    if (!lr[x]) snap.chosen.push_back(x);
  for (int y : rights_)
    if (!rr[y]) snap.chosen.push_back(y);
  std::sort(snap.chosen.begin(), snap.chosen.end());
  return snap;
}

std::vector<int> DynamicBipartiteGraph::vertex_cover_from_matching() const {
  std::vector<char> lr, rvl, rr, lvr;
  compute_reach(lr, rvl, rr, lvr);
  std::vector<int> cover;
  for (int x : lefts_)
    if (!lr[x]) cover.push_back(x);
  for (int y : rights_)
    if (rvl[y]) cover.push_back(y);
  std::sort(cover.begin(), cover.end());
  return cover;
}

void DynamicBipartiteGraph::set_buss_threshold(int ell) {
  if (ell < 0) throw BadParameterError("threshold must be nonnegative");
  ell_ = ell;
  buss_left_count_ = 0;
  buss_right_count_ = 0;
  for (int v = 0; v < bound_; ++v) {
    chosen_[v] = 0;
    cnt_unimp_[v] = 0;
  }
  auto rebuild = [&](const std::vector<int>& order) {
    for (int v : order) {
      int c = 0;
      for (int y : adj_[v])
        if (static_cast<int>(adj_[y].size()) <= ell_) ++c;
      cnt_unimp_[v] = c;
      update_status(v);
    }
  };
  rebuild(lefts_);
  rebuild(rights_);
}

SelectorSnapshot DynamicBipartiteGraph::buss_selector() const {
  SelectorSnapshot snap;
  snap.kind = SelectorKind::buss;
  snap.ell = ell_;
  for (int x : lefts_)
    if (chosen_[x]) snap.chosen.push_back(x);
  std::sort(snap.chosen.begin(), snap.chosen.end());
  return snap;
}

SelectorSnapshot DynamicBipartiteGraph::buss_selector_reversed() const {
  SelectorSnapshot snap;
  snap.kind = SelectorKind::buss_reversed;
  snap.ell = ell_;
  for (int y : rights_)
    if (chosen_[y]) snap.chosen.push_back(y);
  std::sort(snap.chosen.begin(), snap.chosen.end());
  return snap;
}

std::vector<std::pair<int, int>> DynamicBipartiteGraph::extract_matching_from_side(
    bool left_side) const {
  const std::vector<int>& order = left_side ? lefts_ : rights_;
  int selector_size = left_side ? buss_left_count_ : buss_right_count_;
  if (selector_size <= ell_ * ell_ + ell_)
    throw PreconditionUnmet("selector has " + std::to_string(selector_size) +
                            " vertices, need more than " + std::to_string(ell_ * ell_ + ell_));

  std::vector<int> important, with_unimp;
  for (int v : order) {
    if (!chosen_[v]) continue;
    if (static_cast<int>(adj_[v].size()) > ell_) important.push_back(v);
    if (cnt_unimp_[v] > 0) with_unimp.push_back(v);
  }

  std::vector<std::pair<int, int>> result;
  auto orient = [&](int a, int b) {
    return left_side ? std::make_pair(a, b) : std::make_pair(b, a);
  };
  if (static_cast<int>(important.size()) >= ell_ + 1) {
    std::vector<char> used(bound_, 0);
    for (int v : important) {
      if (static_cast<int>(result.size()) == ell_ + 1) break;
      for (int y : adj_[v]) {
        if (!used[y]) {
          used[y] = 1;
          result.push_back(orient(v, y));
          break;
        }
      }
    }
  } else {
    std::vector<char> marked(bound_, 0);
    for (int v : with_unimp) {
      if (static_cast<int>(result.size()) == ell_ + 1) break;
      if (marked[v]) continue;
      for (int y : adj_[v]) {
        if (static_cast<int>(adj_[y].size()) <= ell_) {
          result.push_back(orient(v, y));
          for (int x : adj_[y]) marked[x] = 1;
          break;
        }
      }
    }
  }
  if (static_cast<int>(result.size()) != ell_ + 1)
    throw InternalContradiction("greedy matching extraction came up short");
  return result;
}

std::vector<std::pair<int, int>> DynamicBipartiteGraph::extract_buss_matching() const {
  return extract_matching_from_side(true);
}
std::vector<std::pair<int, int>> DynamicBipartiteGraph::extract_buss_matching_reversed() const {
  return extract_matching_from_side(false);
}

}  // namespace scw
