#ifndef BANDHARVEST_PERTURBATIVE_HPP
#define BANDHARVEST_PERTURBATIVE_HPP

#include "bandharvest/types.hpp"

// Gaussian-switching perturbative detector pair: transition
// probability, coherence term X, negativity, effective point-like
// profile and the critical energy gap.  All quantities dimensionless
// in units of the switching width sigma.

namespace bandharvest::perturbative {

/// Transition probability of a single point-like detector with
/// Gaussian switching under bandlimit L.  Closed form; handles the
/// infinite-bandlimit case analytically.
double pd_gaussian(const DetectorParams &d, const Bandlimit &L);

/// Same quantity expressed through the non-bandlimited probability and
/// two correction terms.  Requires finite L; agrees with pd_gaussian
/// to machine accuracy (kept as a cross-check).
double pd_decomposed(const DetectorParams &d, const Bandlimit &L);

/// Pair coherence term X.  Real part in closed form through the fused
/// damped-erfi kernel; imaginary part by oscillation-aware quadrature
/// for finite L and in closed form at infinite L.
Complex x_gaussian(const DetectorParams &d, const PairGeometry &g,
                   const Bandlimit &L);

/// Sine-integral approximation of Im X, valid for large bandlimit
/// (L sigma > 5 or so); requires finite L.
double imx_si_approx(const DetectorParams &d, const PairGeometry &g,
                     const Bandlimit &L);

/// Negativity of a two-qubit X-state from the closed-form partial
/// transpose eigenvalues.
double negativity_xstate(const XStateDensityMatrix &rho);

/// Leading-order harvested negativity max(0, |X| - P_D) for identical
/// detectors.
double negativity_perturbative(const DetectorParams &d, const PairGeometry &g,
                               const Bandlimit &L);

/// Effective spatial profile of a point-like detector under bandlimit
/// L: sqrt(2/pi) L^2 j1(L x)/x, finite at x = 0.  Requires finite L.
double effective_profile_pointlike(double x, const Bandlimit &L);

/// Magnitude of the energy gap maximizing the de-excitation
/// probability at fixed finite bandlimit, located by golden-section
/// search on [-(L + search_halfwidth), 0].
double omega_crit(const Bandlimit &L, double search_halfwidth = 10.0);

} // namespace bandharvest::perturbative

#endif
