#pragma once

#include <stdexcept>
#include <string>

namespace isograss {

/// Stable process exit codes; the CLI maps every library error onto one.
enum class ExitCode : int {
  Success = 0,
  VerificationFailure = 1,
  Usage = 2,
  Precondition = 3,
  Consistency = 4,
};

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
  virtual ExitCode exit_code() const = 0;
};

/// Malformed files, bad flags, invalid group parameters.
class ParseError : public Error {
public:
  using Error::Error;
  ExitCode exit_code() const override { return ExitCode::Usage; }
};

class InvalidArgument : public Error {
public:
  using Error::Error;
  ExitCode exit_code() const override { return ExitCode::Usage; }
};

/// An operation's documented precondition does not hold for its input
/// (non-isotropic subspace, tuples of different orbits, ...).
class PreconditionError : public Error {
public:
  using Error::Error;
  ExitCode exit_code() const override { return ExitCode::Precondition; }
};

/// A runtime self-check failed: two routes to the same quantity disagree.
class ConsistencyError : public Error {
public:
  using Error::Error;
  ExitCode exit_code() const override { return ExitCode::Consistency; }
};

/// The orbit witness search could not realize an isometry over the exact
/// field (the required square classes are not matched by any vector the
/// representation search found).
class WitnessUnavailable : public Error {
public:
  using Error::Error;
  ExitCode exit_code() const override { return ExitCode::Consistency; }
};

}  // namespace isograss
