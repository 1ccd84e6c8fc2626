#ifndef BANDHARVEST_ROOTFIND_HPP
#define BANDHARVEST_ROOTFIND_HPP

#include <functional>
#include <stdexcept>

// Bracketing root and extremum searches used by the design and
// sensitivity modules.

namespace bandharvest::rootfind {

class BracketError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Bisection root of f on [lo, hi]; f(lo) and f(hi) must differ in
/// sign, otherwise BracketError.  Returns the midpoint of the final
/// bracket of width <= xtol.
double bisect(const std::function<double(double)> &f, double lo, double hi,
              double xtol = 1e-8);

/// Golden-section maximization of f on [lo, hi] to bracket width xtol.
/// Returns the abscissa of the maximum.  Throws BracketError when the
/// located point sits on the interval boundary (no interior maximum).
double golden_max(const std::function<double(double)> &f, double lo, double hi,
                  double xtol = 1e-8);

} // namespace bandharvest::rootfind

#endif
