#pragma once

#include <stdexcept>
#include <string>

namespace oddgrace {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Graph dimensions below 2, or a labeling whose dimensions differ from the graph's.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Row or line index outside the grid.
class IndexError : public Error {
 public:
  using Error::Error;
};

/// An intermediate value left the signed 64-bit range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// The call is well-formed but the requested case does not apply
/// (wrong formula for the line, muffled edge, closed form unavailable, ...).
class UnsupportedCase : public Error {
 public:
  using Error::Error;
};

/// Malformed document: syntax error or wrong field type.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Syntactically valid document that does not describe a labeling of the grid.
class DocumentError : public Error {
 public:
  using Error::Error;
};

}  // namespace oddgrace
