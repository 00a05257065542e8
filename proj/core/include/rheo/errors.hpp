#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rheo {

// An iterative evaluation ran out of its budget (quadrature nodes, series
// terms, continued-fraction iterations) before reaching the requested
// tolerance. Carries the error estimate that was actually achieved.
class ConvergenceError : public std::runtime_error {
public:
  ConvergenceError(const std::string& what, double achieved_error, int nodes_used)
      : std::runtime_error(what),
        achieved_error_(achieved_error),
        nodes_used_(nodes_used) {}

  double achieved_error() const noexcept { return achieved_error_; }
  int nodes_used() const noexcept { return nodes_used_; }

private:
  double achieved_error_;
  int nodes_used_;
};

// A non-finite value appeared while marching a recursion.
class NumericalError : public std::runtime_error {
public:
  NumericalError(const std::string& what, std::size_t failing_index)
      : std::runtime_error(what), failing_index_(failing_index) {}

  std::size_t failing_index() const noexcept { return failing_index_; }

private:
  std::size_t failing_index_;
};

// Successive grid refinements are indistinguishable at working precision,
// so no convergence order can be measured.
class PrecisionFloorError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace rheo
