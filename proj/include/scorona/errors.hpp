#ifndef SCORONA_ERRORS_HPP
#define SCORONA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace scorona {

/// Base class for every error raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
  DivisionByZero() : Error("division by the zero polynomial") {}
};

struct NonEvenPolynomial : Error {
  NonEvenPolynomial() : Error("polynomial has a nonzero odd-degree coefficient") {}
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct InvalidGraph : Error {
  using Error::Error;
};

struct SizeLimitExceeded : Error {
  using Error::Error;
};

struct NotBipartite : Error {
  NotBipartite() : Error("graph is not bipartite") {}
};

struct PartsUnequal : Error {
  PartsUnequal() : Error("bipartition parts have different sizes") {}
};

struct NotRegular : Error {
  NotRegular() : Error("underlying graph is not regular") {}
};

struct PreconditionUnbalancedInput : Error {
  using Error::Error;
};

/// Raised when an identity that must hold exactly fails; always a bug.
struct InternalInconsistency : Error {
  using Error::Error;
};

/// Graph-file parse error carrying the 1-based line number.
struct ParseError : Error {
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line(line) {}
  std::size_t line;
};

}  // namespace scorona

#endif  // SCORONA_ERRORS_HPP
