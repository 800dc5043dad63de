#pragma once

#include <stdexcept>
#include <string>

namespace gpc {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two elements (or an element and a container) belong to different groups.
class SpecMismatch : public Error {
 public:
  using Error::Error;
};

// A matrix payload became numerically singular or an invariant check
// (positivity, orthogonality, determinant bound) failed.
class NumericalDegeneracy : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

// Operation requires a specific matrix size (n = 3, n >= 4, ...).
class DimensionError : public Error {
 public:
  using Error::Error;
};

class UnsupportedMorphism : public Error {
 public:
  using Error::Error;
};

// Operation is defined only for a specific coefficient group.
class UnsupportedGroup : public Error {
 public:
  using Error::Error;
};

class MalformedDecomposition : public Error {
 public:
  using Error::Error;
};

class InvalidGraph : public Error {
 public:
  using Error::Error;
};

class InvalidPath : public Error {
 public:
  using Error::Error;
};

// Path/loop enumeration exceeded its configured budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class InconsistentInput : public Error {
 public:
  using Error::Error;
};

// Lift enumeration would exceed the hard cap of 2^24 matrices.
class EnumerationCap : public Error {
 public:
  using Error::Error;
};

class InvalidInterval : public Error {
 public:
  using Error::Error;
};

// Importance weights collapsed; the self-normalized estimate is unusable.
class DegenerateWeights : public Error {
 public:
  using Error::Error;
};

class NonPositiveInput : public Error {
 public:
  using Error::Error;
};

// Input file or JSON document does not match the expected schema.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace gpc
