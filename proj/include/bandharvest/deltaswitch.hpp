#ifndef BANDHARVEST_DELTASWITCH_HPP
#define BANDHARVEST_DELTASWITCH_HPP

#include <utility>
#include <vector>

#include "bandharvest/types.hpp"

// Exact (non-perturbative) model of two detectors coupled to the field
// at single instants, with Gaussian spatial profiles of width a.  The
// final two-detector state is an X-state assembled from three real
// matrix-element functions f, theta, omega.

namespace bandharvest::deltaswitch {

/// log of the decoherence factor f (always <= 0); kept in log form so
/// downstream assembly stays finite for strong coupling.
double log_f(const DeltaPairConfig &cfg);

/// Decoherence factor f in (0, 1].
double f_gaussian_profile(const DeltaPairConfig &cfg);

/// Commutator angle theta.
double theta_gaussian_profile(const DeltaPairConfig &cfg);

/// Anticommutator exponent omega.
double omega_gaussian_profile(const DeltaPairConfig &cfg);

/// Exact final X-state of the detector pair.
XStateDensityMatrix rho_delta(const DeltaPairConfig &cfg);

/// Transition probabilities (P_A, P_B); independent of the energy gap.
std::pair<double, double> pd_delta(const DeltaPairConfig &cfg);

/// Point-like (a -> 0) single-detector transition probability.
double pd_delta_pointlike(double coupling, const Bandlimit &L);

/// Effective spatial profile of a Gaussian detector of the given width
/// under finite bandlimit L; reduces to the bare Gaussian as L grows.
double effective_profile_gaussian(double x, const GaussianProfile &profile,
                                  const Bandlimit &L);

/// For each width, the largest bandlimit at which |P_A - P_A(inf)|
/// equals the tolerance.  Throws rootfind::BracketError when the
/// difference never reaches the tolerance.
std::vector<std::pair<double, double>>
lambda_max_sweep(const std::vector<double> &profile_widths, double tolerance,
                 const DeltaPairConfig &tmpl);

/// Negativity of the exact final state (identically zero; exercised as
/// a property check).
double negativity_delta(const DeltaPairConfig &cfg);

} // namespace bandharvest::deltaswitch

#endif
