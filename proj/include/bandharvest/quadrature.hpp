#ifndef BANDHARVEST_QUADRATURE_HPP
#define BANDHARVEST_QUADRATURE_HPP

#include <functional>
#include <optional>
#include <stdexcept>

// Oscillation-aware adaptive quadrature on finite intervals.

namespace bandharvest::quadrature {

struct IntegralSpec {
  std::function<double(double)> integrand;
  double lower = 0.0;
  double upper = 0.0;
  double rel_tol = 1e-10;
  double abs_tol = 1e-14;
  /// Half-period of an oscillatory factor; when set the domain is
  /// pre-partitioned at its multiples and panels are summed by
  /// ascending magnitude.
  std::optional<double> oscillation_period;
  std::size_t max_evals = 1000000;
};

/// Raised when the evaluation budget is exhausted before the requested
/// tolerance is met.
class ConvergenceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Adaptive Gauss-Lobatto integration of spec.integrand over
/// [spec.lower, spec.upper].  Error target max(rel_tol*|I|, abs_tol).
double integrate(const IntegralSpec &spec);

} // namespace bandharvest::quadrature

#endif
