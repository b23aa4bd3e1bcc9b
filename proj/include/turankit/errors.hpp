#pragma once

#include <stdexcept>
#include <string>

namespace turankit {

/// Base error. `code()` is a stable machine-parsable tag; what() carries the
/// human-readable detail (e.g. the named constraint that was violated).
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& msg)
      : std::runtime_error(msg), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

private:
  std::string code_;
};

/// Parameter or input outside the documented domain.
class DomainError : public Error {
public:
  explicit DomainError(const std::string& msg) : Error("domain", msg) {}
};

/// Coefficient query past the end of a finite table.
class OutOfRangeError : public Error {
public:
  explicit OutOfRangeError(const std::string& msg) : Error("out-of-range", msg) {}
};

/// A denominator in an operator definition vanishes for this spec.
class SingularityError : public Error {
public:
  explicit SingularityError(const std::string& msg) : Error("singularity", msg) {}
};

/// Operation invoked on a spec that does not meet its hypotheses
/// (wrong symmetry, wrong normalization, wrong theorem).
class WrongHypothesisError : public Error {
public:
  explicit WrongHypothesisError(const std::string& msg) : Error("wrong-hypothesis", msg) {}
};

/// Numerical degeneracy detected mid-computation (e.g. a recovered a_k^2 <= 0).
class InstabilityError : public Error {
public:
  explicit InstabilityError(const std::string& msg) : Error("instability", msg) {}
};

/// Bracket widening ran away; the spec is malformed for this operation.
class DivergenceError : public Error {
public:
  explicit DivergenceError(const std::string& msg) : Error("divergence", msg) {}
};

} // namespace turankit
