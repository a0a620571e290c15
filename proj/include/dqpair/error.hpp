#pragma once

#include <stdexcept>
#include <string>

namespace dqpair {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Matrix dimension mismatch.
struct ShapeError : Error {
  using Error::Error;
};

// Invalid user-supplied parameter.
struct ParameterError : Error {
  using Error::Error;
};

// Requested case lies outside the supported criteria.
struct UnsupportedError : Error {
  using Error::Error;
};

// Malformed input file.
struct FormatError : Error {
  using Error::Error;
};

// Exact linear solve has no usable solution.
struct SolveError : Error {
  enum class Kind { inconsistent, non_unique };
  SolveError(Kind k, const std::string& msg) : Error(msg), kind(k) {}
  Kind kind;
};

// A scheme axiom does not hold.
struct AxiomError : Error {
  using Error::Error;
};

// Certification of an input (rank-3 scheme, skew-Hadamard matrix) failed.
struct InputCertError : Error {
  using Error::Error;
};

// A character-table / representation / algebra certificate failed.
struct CertError : Error {
  using Error::Error;
};

// Violation of a property the construction guarantees; indicates a bug.
struct InternalError : Error {
  using Error::Error;
};

}  // namespace dqpair
