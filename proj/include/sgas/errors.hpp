#pragma once

#include <stdexcept>
#include <string>

namespace sgas {

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A numerical procedure failed to reach its accuracy target.
class EvaluationError : public std::runtime_error {
 public:
  EvaluationError(const std::string& what, double best_estimate, double gap)
      : std::runtime_error(what), best_estimate_(best_estimate), gap_(gap) {}
  explicit EvaluationError(const std::string& what)
      : EvaluationError(what, 0.0, 0.0) {}

  double best_estimate() const { return best_estimate_; }
  double gap() const { return gap_; }

 private:
  double best_estimate_;
  double gap_;
};

class UnsupportedError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SamplingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sgas
