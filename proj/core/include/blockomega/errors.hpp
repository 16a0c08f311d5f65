#pragma once

#include <stdexcept>
#include <string>

namespace blockomega {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input could not be parsed (group names, generator files, cycle notation).
class ParseError : public Error {
 public:
  using Error::Error;
};

class InvalidPermutation : public Error {
 public:
  using Error::Error;
};

// A group, module or algebra grew past a configured size limit.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

class DegreeOutOfRange : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

// A linear system has no solution.
class Inconsistent : public Error {
 public:
  using Error::Error;
};

// A central element has a minimal polynomial with a nonlinear irreducible
// factor, so the coefficient field does not split the center.
class SplittingFieldTooSmall : public Error {
 public:
  using Error::Error;
};

class InvalidAction : public Error {
 public:
  using Error::Error;
};

class NotStronglyEmbedded : public Error {
 public:
  using Error::Error;
};

class InconsistentCombinatorics : public Error {
 public:
  using Error::Error;
};

// Idempotent splitting exhausted every strategy without a certificate.
class DecompositionFailed : public Error {
 public:
  using Error::Error;
};

}  // namespace blockomega
