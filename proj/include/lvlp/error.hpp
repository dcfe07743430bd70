#pragma once

#include <stdexcept>
#include <string>

namespace lvlp {

/// Base class for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed ring operation: inexact division, bad parse, mismatched contexts.
class AlgebraError : public Error {
 public:
  using Error::Error;
};

/// Failure inside the perturbation recursion.
class EngineError : public Error {
 public:
  using Error::Error;
};

/// Exact linear system without a unique solution.
class SingularSystemError : public Error {
 public:
  using Error::Error;
};

class RankDeficiencyError : public Error {
 public:
  using Error::Error;
};

class NoStableRootError : public Error {
 public:
  using Error::Error;
};

class IntegrationError : public Error {
 public:
  using Error::Error;
};

}  // namespace lvlp
