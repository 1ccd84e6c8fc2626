#include "bandharvest/perturbative.hpp"

#include <algorithm>
#include <cmath>

#include "bandharvest/quadrature.hpp"
#include "bandharvest/rootfind.hpp"
#include "bandharvest/specfun.hpp"

namespace bandharvest::perturbative {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kSqrtPi = 1.7724538509055160273;

double pd_infinite(double omega, double lambda) {
  return lambda * lambda / (4.0 * kPi) *
         (std::exp(-omega * omega) - kSqrtPi * omega * std::erfc(omega));
}

// j1(u)/u with the removable singularity handled.
double j1_over_u(double u) {
  if (std::abs(u) < 0.5) {
    const double u2 = u * u;
    return 1.0 / 3.0 +
           u2 * (-1.0 / 30.0 +
                 u2 * (1.0 / 840.0 +
                       u2 * (-1.0 / 45360.0 + u2 / 3991680.0)));
  }
  return specfun::spherical_bessel_j1(u) / u;
}

// erf(w) - erf(v), conditioned so near-unit values never cancel.
double erf_diff(double w, double v) {
  if (w >= 0.0 && v >= 0.0) return std::erfc(v) - std::erfc(w);
  if (w <= 0.0 && v <= 0.0) return std::erfc(-w) - std::erfc(-v);
  return w < 0.0 ? -(std::erf(-w) + std::erf(v)) : std::erf(w) + std::erf(-v);
}

} // namespace

double pd_gaussian(const DetectorParams &d, const Bandlimit &L) {
  d.validate();
  const double w = d.gap;
  const double l2 = d.coupling * d.coupling;
  if (L.is_infinite()) return pd_infinite(w, d.coupling);
  const double c = L.value;
  if (c == 0.0) return 0.0;
  const double v = std::exp(-w * w) - std::exp(-(w + c) * (w + c)) +
                   kSqrtPi * w * erf_diff(w, w + c);
  return std::max(0.0, l2 / (4.0 * kPi) * v);
}

double pd_decomposed(const DetectorParams &d, const Bandlimit &L) {
  d.validate();
  if (L.is_infinite())
    throw std::invalid_argument("pd_decomposed: bandlimit must be finite");
  const double w = d.gap;
  const double c = L.value;
  const double l2 = d.coupling * d.coupling;
  return pd_infinite(w, d.coupling) - pd_infinite(w + c, d.coupling) -
         l2 * c / (4.0 * kSqrtPi) * std::erfc(w + c);
}

Complex x_gaussian(const DetectorParams &d, const PairGeometry &g,
                   const Bandlimit &L) {
  d.validate();
  g.validate();
  const double s = g.separation;
  const double l2 = d.coupling * d.coupling;
  const double gw = std::exp(-d.gap * d.gap);
  if (!L.is_infinite() && L.value == 0.0) return {0.0, 0.0};

  // Re X: damped-erfi difference, fully fused so no intermediate blows
  // up even for large separation or bandlimit.
  const double lam = L.is_infinite() ? std::numeric_limits<double>::infinity()
                                     : L.value;
  const double k0 = specfun::erfi_scaled(s / 2.0, 0.0).real();
  const double kl = specfun::erfi_scaled(s / 2.0, lam).real();
  const double re = l2 * gw / (4.0 * kSqrtPi * s) * (k0 - kl);

  double im;
  if (L.is_infinite()) {
    im = l2 * gw * std::exp(-s * s / 4.0) / (4.0 * kSqrtPi * s);
  } else {
    quadrature::IntegralSpec spec;
    spec.integrand = [s](double k) {
      return specfun::erfi_scaled(k, 0.0).real() * std::sin(s * k);
    };
    spec.lower = 0.0;
    spec.upper = L.value;
    spec.oscillation_period = kPi / s;
    im = l2 * gw / (2.0 * kPi * s) * quadrature::integrate(spec);
  }
  return {re, im};
}

double imx_si_approx(const DetectorParams &d, const PairGeometry &g,
                     const Bandlimit &L) {
  d.validate();
  g.validate();
  if (L.is_infinite())
    throw std::invalid_argument("imx_si_approx: bandlimit must be finite");
  const double s = g.separation;
  const double l2 = d.coupling * d.coupling;
  const double gw = std::exp(-d.gap * d.gap);
  return l2 * gw / (4.0 * kSqrtPi * s) *
         (std::exp(-s * s / 4.0) - 1.0 +
          (2.0 / kPi) * specfun::sine_integral(s * L.value));
}

double negativity_xstate(const XStateDensityMatrix &rho) {
  const double q1 = rho.r22 + rho.r33;
  const double d1 = rho.r22 - rho.r33;
  const double r1 = std::sqrt(d1 * d1 + 4.0 * std::norm(rho.r14));
  const double q2 = rho.r11 + rho.r44;
  const double d2 = rho.r11 - rho.r44;
  const double r2 = std::sqrt(d2 * d2 + 4.0 * std::norm(rho.r23));
  double n = 0.0;
  for (double ev : {0.5 * (q1 - r1), 0.5 * (q1 + r1), 0.5 * (q2 - r2),
                    0.5 * (q2 + r2)})
    if (ev < 0.0) n -= ev;
  return n;
}

double negativity_perturbative(const DetectorParams &d, const PairGeometry &g,
                               const Bandlimit &L) {
  const double p = pd_gaussian(d, L);
  const double x = std::abs(x_gaussian(d, g, L));
  return std::max(0.0, x - p);
}

double effective_profile_pointlike(double x, const Bandlimit &L) {
  if (x < 0.0)
    throw std::invalid_argument("effective_profile_pointlike: x must be >= 0");
  if (L.is_infinite())
    throw std::invalid_argument(
        "effective_profile_pointlike: bandlimit must be finite");
  const double c = L.value;
  return std::sqrt(2.0 / kPi) * c * c * c * j1_over_u(c * x);
}

double omega_crit(const Bandlimit &L, double search_halfwidth) {
  if (L.is_infinite() || L.value <= 0.0)
    throw std::invalid_argument("omega_crit: bandlimit must be finite, > 0");
  DetectorParams d;
  const Bandlimit lim = L;
  const double lo = -(L.value + search_halfwidth);
  const double x = rootfind::golden_max(
      [&](double w) {
        DetectorParams dd = d;
        dd.gap = w;
        return pd_gaussian(dd, lim);
      },
      lo, 0.0, 1e-8);
  return std::abs(x);
}

} // namespace bandharvest::perturbative
