#include "bandharvest/deltaswitch.hpp"

#include <cmath>

#include "bandharvest/perturbative.hpp"
#include "bandharvest/rootfind.hpp"
#include "bandharvest/specfun.hpp"

namespace bandharvest::deltaswitch {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kSqrtPi = 1.7724538509055160273;
constexpr double kTwoPi = 6.28318530717958647693;

double band_or_inf(const Bandlimit &L) {
  return L.is_infinite() ? std::numeric_limits<double>::infinity() : L.value;
}

} // namespace

double log_f(const DeltaPairConfig &cfg) {
  cfg.validate();
  const double a = cfg.profile.width;
  const double l2 = cfg.detector.coupling * cfg.detector.coupling;
  const double al = a * band_or_inf(cfg.bandlimit);
  const double frac = std::isinf(al) ? 1.0 : -std::expm1(-al * al);
  return -l2 / (kTwoPi * a * a) * frac;
}

double f_gaussian_profile(const DeltaPairConfig &cfg) {
  return std::exp(log_f(cfg));
}

double theta_gaussian_profile(const DeltaPairConfig &cfg) {
  cfg.validate();
  const double a = cfg.profile.width;
  const double s = cfg.geometry.separation;
  const double t = cfg.geometry.delay;
  const double l2 = cfg.detector.coupling * cfg.detector.coupling;
  const double al = a * band_or_inf(cfg.bandlimit);
  const double up = (s + t) / (2.0 * a);
  const double um = (s - t) / (2.0 * a);
  const double sum = specfun::erfi_scaled(up, al).imag() -
                     specfun::erfi_scaled(um, al).imag();
  return l2 / (4.0 * kSqrtPi * a * s) * sum;
}

double omega_gaussian_profile(const DeltaPairConfig &cfg) {
  cfg.validate();
  const double a = cfg.profile.width;
  const double s = cfg.geometry.separation;
  const double t = cfg.geometry.delay;
  const double l2 = cfg.detector.coupling * cfg.detector.coupling;
  const double al = a * band_or_inf(cfg.bandlimit);
  double sum = 0.0;
  for (double u : {(s + t) / (2.0 * a), (s - t) / (2.0 * a)})
    sum += specfun::erfi_scaled(u, 0.0).real() -
           specfun::erfi_scaled(u, al).real();
  return l2 / (2.0 * kSqrtPi * a * s) * sum;
}

XStateDensityMatrix rho_delta(const DeltaPairConfig &cfg) {
  const double lf = log_f(cfg);
  const double th = theta_gaussian_profile(cfg);
  const double om = omega_gaussian_profile(cfg);
  const double f = std::exp(lf);
  const double c2t = std::cos(2.0 * th);
  const double s2t = std::sin(2.0 * th);
  // f^2 cosh/sinh(omega) assembled in the log domain: |omega| <= -2 lf,
  // so both exponents are non-positive and nothing overflows.
  const double ep = std::exp(2.0 * lf + om);
  const double em = std::exp(2.0 * lf - om);
  const double f2ch = 0.5 * (ep + em);
  const double f2sh = 0.5 * (ep - em);

  XStateDensityMatrix rho;
  rho.r11 = 0.25 * (1.0 + f + f * c2t + f2ch);
  rho.r22 = 0.25 * (1.0 + f - f * c2t - f2ch);
  rho.r33 = 0.25 * (1.0 - f + f * c2t - f2ch);
  rho.r44 = 0.25 * (1.0 - f - f * c2t + f2ch);
  const Complex core(f2sh, f * s2t);
  const double phi = cfg.detector.gap * cfg.geometry.delay;
  rho.r14 = 0.25 * std::polar(1.0, -phi) * core;
  rho.r23 = -0.25 * std::polar(1.0, phi) * core;
  return rho;
}

std::pair<double, double> pd_delta(const DeltaPairConfig &cfg) {
  const double f = f_gaussian_profile(cfg);
  const double th = theta_gaussian_profile(cfg);
  return {0.5 * (1.0 - f), 0.5 * (1.0 - f * std::cos(2.0 * th))};
}

double pd_delta_pointlike(double coupling, const Bandlimit &L) {
  if (!(coupling > 0.0))
    throw std::invalid_argument("pd_delta_pointlike: coupling must be > 0");
  if (L.is_infinite()) return 0.5;
  const double l2 = coupling * coupling;
  return 0.5 * (-std::expm1(-l2 * L.value * L.value / kTwoPi));
}

double effective_profile_gaussian(double x, const GaussianProfile &profile,
                                  const Bandlimit &L) {
  if (x < 0.0)
    throw std::invalid_argument("effective_profile_gaussian: x must be >= 0");
  profile.validate();
  if (L.is_infinite())
    throw std::invalid_argument(
        "effective_profile_gaussian: bandlimit must be finite");
  const double a = profile.width;
  const double c = L.value;
  const double sq2 = std::sqrt(2.0);
  const double sinc = (c * x == 0.0) ? 1.0 : std::sin(c * x) / (c * x);
  const double norm = 1.0 / (std::pow(kTwoPi, 1.5) * a * a * a);
  const double imv = specfun::erfi_scaled(x / (sq2 * a), a * c / sq2).imag();
  return norm * (imv - std::exp(-a * a * c * c / 2.0) *
                           (sq2 * a * c / kSqrtPi) * sinc);
}

std::vector<std::pair<double, double>>
lambda_max_sweep(const std::vector<double> &profile_widths, double tolerance,
                 const DeltaPairConfig &tmpl) {
  if (!(tolerance > 0.0) || !(tolerance < 0.5))
    throw std::invalid_argument("lambda_max_sweep: tolerance must be in (0, 1/2)");
  std::vector<std::pair<double, double>> out;
  out.reserve(profile_widths.size());
  for (double a : profile_widths) {
    DeltaPairConfig cfg = tmpl;
    cfg.profile.width = a;
    cfg.bandlimit = Bandlimit::infinite();
    const double finf = f_gaussian_profile(cfg);
    // g(L) = |P_A(L) - P_A(inf)| - tol, strictly decreasing in L.
    auto g = [&](double L) {
      cfg.bandlimit = Bandlimit{L};
      return 0.5 * (f_gaussian_profile(cfg) - finf) - tolerance;
    };
    if (g(0.0) <= 0.0)
      throw rootfind::BracketError(
          "lambda_max_sweep: tolerance never reached for width " +
          std::to_string(a));
    double hi = 1.0;
    while (g(hi) > 0.0) {
      hi *= 2.0;
      if (hi > 1e12)
        throw rootfind::BracketError("lambda_max_sweep: bracket runaway");
    }
    out.emplace_back(a, rootfind::bisect(g, 0.0, hi, 1e-6));
  }
  return out;
}

double negativity_delta(const DeltaPairConfig &cfg) {
  return perturbative::negativity_xstate(rho_delta(cfg));
}

} // namespace bandharvest::deltaswitch
