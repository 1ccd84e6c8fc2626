#ifndef BANDHARVEST_DESIGN_HPP
#define BANDHARVEST_DESIGN_HPP

#include <utility>
#include <vector>

#include "bandharvest/types.hpp"

// Bandlimit-bounding experiment design: envelope bound on Im X,
// threshold-pair solver and detector-array construction so that the
// array's combined negativity is nonzero somewhere below a chosen
// bandlimit threshold and zero everywhere above it.

namespace bandharvest::design {

struct ThresholdSpec {
  enum class Fixed { Gap, Separation };
  double lambda_threshold = 20.0;
  Fixed fixed = Fixed::Gap;
  double fixed_value = 0.01;
  double coupling = 1.0;
};

struct DetectorArray {
  /// (gap, separation) per pair; separations strictly increasing.
  std::vector<std::pair<double, double>> pairs;
  double threshold = 0.0;
  double coupling = 1.0;
};

struct CoverageReport {
  double covered_fraction = 0.0;
  std::vector<double> uncovered;
  std::size_t grid_points = 0;
};

/// Analytic upper envelope of Im X at finite bandlimit.
double envelope_imx(const DetectorParams &d, const PairGeometry &g,
                    const Bandlimit &L);

/// Solve the threshold condition P_D = |Re X + i envelope| at the
/// given threshold bandlimit for the free variable (separation when
/// the gap is fixed, gap when the separation is fixed).  Returns
/// (gap, separation).  Throws rootfind::BracketError when the residual
/// has no sign change on the search range.
std::pair<double, double> solve_threshold_pair(const ThresholdSpec &spec);

/// Build an n_pairs array at the given threshold: separations on a
/// geometric ladder seeded by the root at the base gap, each pair's
/// gap re-solved so the threshold condition holds exactly.
DetectorArray design_array(double threshold, int n_pairs, double gap,
                           double coupling = 1.0);

/// Grid check over (0, threshold]: a point is covered when at least
/// one pair harvests negativity > 1e-12 * coupling^2 there.
CoverageReport array_coverage_check(const DetectorArray &arr,
                                    double grid_step = 0.1);

} // namespace bandharvest::design

#endif
