#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace projzero {

/// Process exit codes used by the CLI; every library error maps onto one.
enum class ExitCode : int {
  ok = 0,
  input_error = 1,
  cap_exceeded = 2,
  no_surjection = 3,
  field_too_small = 4,
  genericity_failure = 5,
};

class Error : public std::runtime_error {
 public:
  Error(ExitCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ExitCode code() const noexcept { return code_; }

 private:
  ExitCode code_;
};

class SyntaxError : public Error {
 public:
  explicit SyntaxError(const std::string& what) : Error(ExitCode::input_error, "syntax error: " + what) {}
};

class NotHomogeneous : public Error {
 public:
  explicit NotHomogeneous(const std::string& what) : Error(ExitCode::input_error, "not homogeneous: " + what) {}
};

class UnknownVariable : public Error {
 public:
  explicit UnknownVariable(const std::string& name) : Error(ExitCode::input_error, "unknown variable: " + name) {}
};

class DegreeTooLow : public Error {
 public:
  explicit DegreeTooLow(const std::string& what) : Error(ExitCode::input_error, "degree too low: " + what) {}
};

class RankDeficientBasis : public Error {
 public:
  explicit RankDeficientBasis(const std::string& what)
      : Error(ExitCode::input_error, "rank deficient basis: " + what) {}
};

class ZeroPoint : public Error {
 public:
  explicit ZeroPoint(std::size_t index)
      : Error(ExitCode::input_error, "point " + std::to_string(index + 1) + " is the zero vector"), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

class DuplicatePoint : public Error {
 public:
  DuplicatePoint(std::size_t first, std::size_t second)
      : Error(ExitCode::input_error, "points " + std::to_string(first + 1) + " and " + std::to_string(second + 1) +
                                         " are the same projective point"),
        first_(first),
        second_(second) {}
  std::size_t first() const noexcept { return first_; }
  std::size_t second() const noexcept { return second_; }

 private:
  std::size_t first_;
  std::size_t second_;
};

/// Hilbert function did not stabilize below the degree cap. Carries hf(0..cap).
class CapExceeded : public Error {
 public:
  CapExceeded(int cap, std::vector<std::size_t> partial)
      : Error(ExitCode::cap_exceeded, "no Gotzmann-certified stabilization up to degree " + std::to_string(cap)),
        cap_(cap),
        partial_(std::move(partial)) {}
  int cap() const noexcept { return cap_; }
  const std::vector<std::size_t>& partial_hf() const noexcept { return partial_; }

 private:
  int cap_;
  std::vector<std::size_t> partial_;
};

class NoSurjectionFound : public Error {
 public:
  NoSurjectionFound(std::size_t trials, const std::string& what)
      : Error(ExitCode::no_surjection, "no surjective linear form found (" + std::to_string(trials) + " trials): " + what),
        trials_(trials) {}
  std::size_t trials() const noexcept { return trials_; }

 private:
  std::size_t trials_;
};

class FieldTooSmall : public Error {
 public:
  explicit FieldTooSmall(const std::string& what) : Error(ExitCode::field_too_small, "field too small: " + what) {}
};

class GenericityFailure : public Error {
 public:
  explicit GenericityFailure(const std::string& what)
      : Error(ExitCode::genericity_failure, "genericity failure: " + what) {}
};

}  // namespace projzero
