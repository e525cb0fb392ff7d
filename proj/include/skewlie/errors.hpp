#pragma once

#include <stdexcept>
#include <string>

namespace skewlie {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class NonSquare : public Error {
 public:
  using Error::Error;
};

class SingularMap : public Error {
 public:
  using Error::Error;
};

class UnsupportedDim : public Error {
 public:
  using Error::Error;
};

/// Bounded search exhausted (see find_regular_pair).
class NotFound : public Error {
 public:
  using Error::Error;
};

/// Malformed external input: bad JSON, wrong types, bad rational literal.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Well-formed input that violates a structural invariant (i >= j, duplicates).
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace skewlie
