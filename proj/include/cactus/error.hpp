#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cactus {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed edge-list or JSON graph document.
class ParseError : public Error {
public:
  explicit ParseError(const std::string &what) : Error(what), line_(0) {}
  ParseError(std::size_t line, const std::string &what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  /// 1-based line of the offending input, or 0 when not line-oriented.
  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

/// Invalid graph construction or edge rewrite.
class GraphError : public Error {
public:
  using Error::Error;
};

class NumericalError : public Error {
public:
  using Error::Error;
};

class PowerIterationError : public NumericalError {
public:
  PowerIterationError(const std::string &what, std::vector<double> last_iterate,
                      double residual)
      : NumericalError(what), last_iterate_(std::move(last_iterate)),
        residual_(residual) {}

  const std::vector<double> &last_iterate() const { return last_iterate_; }
  double residual() const { return residual_; }

private:
  std::vector<double> last_iterate_;
  double residual_;
};

/// alpha outside [0,1], or alpha = 1 where a strict claim needs alpha < 1.
class AlphaDomainError : public Error {
public:
  using Error::Error;
};

/// An operation was called on input violating its documented precondition.
class PreconditionError : public Error {
public:
  using Error::Error;
};

/// A rewrite that should strictly increase the spectral radius did not.
class LemmaViolation : public Error {
public:
  LemmaViolation(const std::string &what, double rho_before, double rho_after)
      : Error(what), rho_before_(rho_before), rho_after_(rho_after) {}

  double rho_before() const { return rho_before_; }
  double rho_after() const { return rho_after_; }

private:
  double rho_before_;
  double rho_after_;
};

} // namespace cactus
