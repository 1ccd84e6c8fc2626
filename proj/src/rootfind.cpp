#include "bandharvest/rootfind.hpp"

#include <cmath>

namespace bandharvest::rootfind {

double bisect(const std::function<double(double)> &f, double lo, double hi,
              double xtol) {
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0))
    throw BracketError("bisect: no sign change on bracket");
  while (hi - lo > xtol) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double golden_max(const std::function<double(double)> &f, double lo, double hi,
                  double xtol) {
  constexpr double invphi = 0.61803398874989484820;
  const double lo0 = lo, hi0 = hi;
  double a = hi - invphi * (hi - lo);
  double b = lo + invphi * (hi - lo);
  double fa = f(a);
  double fb = f(b);
  while (hi - lo > xtol) {
    if (fa > fb) {
      hi = b;
      b = a;
      fb = fa;
      a = hi - invphi * (hi - lo);
      fa = f(a);
    } else {
      lo = a;
      a = b;
      fa = fb;
      b = lo + invphi * (hi - lo);
      fb = f(b);
    }
  }
  const double x = 0.5 * (lo + hi);
  const double w = hi0 - lo0;
  if (x - lo0 < 2.0 * xtol && f(lo0) >= f(lo0 + 0.25 * w))
    throw BracketError("golden_max: maximum pinned to lower boundary");
  if (hi0 - x < 2.0 * xtol && f(hi0) >= f(hi0 - 0.25 * w))
    throw BracketError("golden_max: maximum pinned to upper boundary");
  return x;
}

} // namespace bandharvest::rootfind
