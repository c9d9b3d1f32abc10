#pragma once

#include <stdexcept>
#include <string>

namespace scw {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Digraph construction / parsing.
struct ShapeError : Error {
  using Error::Error;
};
struct LoopArcError : Error {
  int v;
  explicit LoopArcError(int v_) : Error("loop arc at vertex " + std::to_string(v_)), v(v_) {}
};
struct NotSemiCompleteError : Error {
  int u, v;
  NotSemiCompleteError(int u_, int v_)
      : Error("no arc between vertices " + std::to_string(u_) + " and " + std::to_string(v_)),
        u(u_),
        v(v_) {}
};
struct BadParameterError : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};

// Dynamic bipartite graph.
struct UnknownVertexError : Error {
  int v;
  explicit UnknownVertexError(int v_) : Error("vertex not present: " + std::to_string(v_)), v(v_) {}
};
struct DuplicateVertexError : Error {
  int v;
  explicit DuplicateVertexError(int v_) : Error("vertex already present: " + std::to_string(v_)), v(v_) {}
};

// Path decomposition verification; each names the violated property.
struct CoverageViolation : Error {
  int v;
  explicit CoverageViolation(int v_) : Error("vertex " + std::to_string(v_) + " not covered by any bag"), v(v_) {}
};
struct ContiguityViolation : Error {
  int v, i, j, k;
  ContiguityViolation(int v_, int i_, int j_, int k_)
      : Error("vertex " + std::to_string(v_) + " present in bags " + std::to_string(i_) + " and " +
              std::to_string(k_) + " but missing from bag " + std::to_string(j_)),
        v(v_),
        i(i_),
        j(j_),
        k(k_) {}
};
struct ArcViolation : Error {
  int u, v;
  ArcViolation(int u_, int v_)
      : Error("arc (" + std::to_string(u_) + "," + std::to_string(v_) +
              ") has no common bag and tail does not come after head"),
        u(u_),
        v(v_) {}
};

// Separations and chains.
struct SeparationViolation : Error {
  using Error::Error;
};
struct ChainViolation : Error {
  using Error::Error;
};

// Obstacle certificates.
struct CertificateViolation : Error {
  using Error::Error;
};

// Extraction / embedding contracts.
struct PreconditionUnmet : Error {
  using Error::Error;
};
// Raised when a proof branch that is impossible on verified input is reached;
// doubles as an integrity check on the caller's contract.
struct InternalContradiction : Error {
  using Error::Error;
};

struct BudgetExceeded : Error {
  using Error::Error;
};

}  // namespace scw
