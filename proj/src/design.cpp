#include "bandharvest/design.hpp"

#include <cmath>

#include "bandharvest/perturbative.hpp"
#include "bandharvest/rootfind.hpp"

namespace bandharvest::design {

namespace {

constexpr double kSqrtPi = 1.7724538509055160273;
constexpr double kPi = 3.14159265358979323846;

// Threshold residual P_D - |Re X + i envelope| at the threshold
// bandlimit; its roots define pairs whose negativity vanishes for all
// larger bandlimits (envelope dominance).
double residual(double gap, double sep, double threshold, double coupling) {
  DetectorParams d{gap, coupling};
  PairGeometry g{sep, 0.0};
  const Bandlimit L{threshold};
  const double p = perturbative::pd_gaussian(d, L);
  const double re = perturbative::x_gaussian(d, g, L).real();
  const double env = envelope_imx(d, g, L);
  return p - std::hypot(re, env);
}

// First sign-change bracket of fn on [lo, hi] scanned at the given
// step, refined by bisection.
double scan_root(const std::function<double(double)> &fn, double lo, double hi,
                 double step) {
  double x0 = lo;
  double f0 = fn(x0);
  for (double x = lo + step; x <= hi + step / 2.0; x += step) {
    const double fx = fn(x);
    if (f0 == 0.0) return x0;
    if ((f0 > 0.0) != (fx > 0.0))
      return rootfind::bisect(fn, x0, x, 1e-8);
    x0 = x;
    f0 = fx;
  }
  throw rootfind::BracketError("scan_root: no sign change on search range");
}

} // namespace

double envelope_imx(const DetectorParams &d, const PairGeometry &g,
                    const Bandlimit &L) {
  d.validate();
  g.validate();
  if (L.is_infinite() || L.value <= 0.0)
    throw std::invalid_argument("envelope_imx: bandlimit must be finite, > 0");
  const double s = g.separation;
  const double l2 = d.coupling * d.coupling;
  const double gw = std::exp(-d.gap * d.gap);
  return l2 * gw / (2.0 * std::pow(kPi, 1.5) * s * s * L.value) +
         l2 * gw * std::exp(-s * s / 4.0) / (4.0 * kSqrtPi * s);
}

std::pair<double, double> solve_threshold_pair(const ThresholdSpec &spec) {
  if (!(spec.lambda_threshold > 0.0))
    throw std::invalid_argument("solve_threshold_pair: threshold must be > 0");
  if (spec.fixed == ThresholdSpec::Fixed::Gap) {
    const double gap = spec.fixed_value;
    const double sep = scan_root(
        [&](double s) {
          return residual(gap, s, spec.lambda_threshold, spec.coupling);
        },
        0.05, 10.0, 0.01);
    return {gap, sep};
  }
  const double sep = spec.fixed_value;
  const double gap = scan_root(
      [&](double w) {
        return residual(w, sep, spec.lambda_threshold, spec.coupling);
      },
      0.0, 5.0, 0.05);
  return {gap, sep};
}

DetectorArray design_array(double threshold, int n_pairs, double gap,
                           double coupling) {
  if (n_pairs < 1)
    throw std::invalid_argument("design_array: n_pairs must be >= 1");
  ThresholdSpec base;
  base.lambda_threshold = threshold;
  base.fixed = ThresholdSpec::Fixed::Gap;
  base.fixed_value = gap;
  base.coupling = coupling;
  const auto first = solve_threshold_pair(base);

  DetectorArray arr;
  arr.threshold = threshold;
  arr.coupling = coupling;
  if (n_pairs == 1) {
    arr.pairs.push_back(first);
    return arr;
  }

  // Separation ladder: geometric from just above the base root, so the
  // pairs' negativity oscillation frequencies (~ separation) spread.
  const double s0 = first.second * 1.03;
  const double smax = 6.5;
  double ratio = std::pow(smax / s0, 1.0 / (n_pairs - 1));
  if (ratio <= 1.0) ratio = 1.15;
  for (int i = 0; i < n_pairs; ++i) {
    const double sep = s0 * std::pow(ratio, i);
    ThresholdSpec ps;
    ps.lambda_threshold = threshold;
    ps.fixed = ThresholdSpec::Fixed::Separation;
    ps.fixed_value = sep;
    ps.coupling = coupling;
    try {
      arr.pairs.push_back(solve_threshold_pair(ps));
    } catch (const rootfind::BracketError &) {
      throw rootfind::BracketError(
          "design_array: no gap solves the threshold condition at separation " +
          std::to_string(sep));
    }
  }
  return arr;
}

CoverageReport array_coverage_check(const DetectorArray &arr,
                                    double grid_step) {
  if (arr.pairs.empty())
    throw std::invalid_argument("array_coverage_check: empty array");
  if (!(grid_step > 0.0))
    throw std::invalid_argument("array_coverage_check: grid_step must be > 0");
  const double floor = 1e-12 * arr.coupling * arr.coupling;
  CoverageReport rep;
  for (double L = grid_step; L <= arr.threshold + grid_step / 2.0;
       L += grid_step) {
    ++rep.grid_points;
    bool covered = false;
    for (const auto &[gap, sep] : arr.pairs) {
      DetectorParams d{gap, arr.coupling};
      PairGeometry g{sep, 0.0};
      if (perturbative::negativity_perturbative(d, g, Bandlimit{L}) > floor) {
        covered = true;
        break;
      }
    }
    if (!covered) rep.uncovered.push_back(L);
  }
  rep.covered_fraction =
      1.0 - static_cast<double>(rep.uncovered.size()) /
                static_cast<double>(rep.grid_points);
  return rep;
}

} // namespace bandharvest::design
