#pragma once

#include <vector>

#include "scw/digraph.hpp"

namespace scw {

// Pair (A,B) with A u B = V and no arc from A\B to B\A.
struct Separation {
  Bits a, b;
  Bits separator;  // A n B, cached

  Separation() = default;
  Separation(Bits a_, Bits b_) : a(std::move(a_)), b(std::move(b_)), separator(a & b) {}
  int order() const { return separator.count(); }
  bool operator==(const Separation& o) const { return a == o.a && b == o.b; }
};

// Throws SeparationViolation unless (A,B) is a separation of T.
void validate_separation(const SemiCompleteDigraph& t, const Separation& s);

// Monotone sequence of separations from (0,V) to (V,0).
struct SeparationChain {
  std::vector<Separation> seps;
  int width() const;
};

void validate_chain(const SemiCompleteDigraph& t, const SeparationChain& c);

struct PathDecomposition {
  std::vector<std::vector<int>> bags;
  int width() const;  // max bag size - 1; -1 when all bags are empty
};

// Checks coverage, contiguity and the arc condition; returns the width.
// Throws CoverageViolation / ContiguityViolation / ArcViolation.
int verify_path_decomposition(const SemiCompleteDigraph& t, const PathDecomposition& w);

// W_i = A_i n B_{i-1}. The chain must be valid; the result verifies at
// width max |A_i n B_{i-1}| - 1.
PathDecomposition chain_to_decomposition(const SeparationChain& c);

// (A_i, B_i) = (union of bags up to i, union of bags after i). Consecutive
// equal bags are merged first.
SeparationChain decomposition_to_chain(const SemiCompleteDigraph& t, const PathDecomposition& w);

// Empty end bags, one vertex introduced or forgotten per step, same width.
PathDecomposition make_nice(const PathDecomposition& w);

}  // namespace scw
