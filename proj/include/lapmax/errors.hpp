#pragma once

#include <stdexcept>
#include <string>

namespace lapmax {

/// Base class for all library-specific failures.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The normalized Laplacian is undefined when some vertex has degree 0.
struct IsolatedVertexError : Error {
  explicit IsolatedVertexError(int v)
      : Error("isolated vertex " + std::to_string(v) + ": normalized Laplacian undefined"),
        vertex(v) {}
  int vertex;
};

struct ZeroFunctionError : Error {
  ZeroFunctionError() : Error("vertex function is identically zero") {}
};

struct GraphCompleteError : Error {
  GraphCompleteError() : Error("graph is complete: no non-adjacent pair exists") {}
};

struct DisconnectedError : Error {
  DisconnectedError() : Error("graph is disconnected") {}
};

struct DMinTooLargeError : Error {
  DMinTooLargeError(int d_min, int n)
      : Error("minimum degree " + std::to_string(d_min) + " exceeds (n-1)/2 for n = " +
              std::to_string(n) + ": bound hypothesis fails") {}
};

struct AdjacentPairError : Error {
  AdjacentPairError(int v, int w)
      : Error("vertices " + std::to_string(v) + " and " + std::to_string(w) +
              " are adjacent; witness requires a non-adjacent pair") {}
};

struct EmptyCommonNeighborhoodError : Error {
  EmptyCommonNeighborhoodError(int v, int w)
      : Error("vertices " + std::to_string(v) + " and " + std::to_string(w) +
              " have no common neighbor") {}
};

struct NonConvergenceError : Error {
  explicit NonConvergenceError(int sweeps)
      : Error("eigensolver failed to converge within " + std::to_string(sweeps) + " sweeps") {}
};

struct VerdictMismatchError : Error {
  explicit VerdictMismatchError(const std::string& what) : Error("verdict mismatch: " + what) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error("parse error: " + what) {}
};

}  // namespace lapmax
