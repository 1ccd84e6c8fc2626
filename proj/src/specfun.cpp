#include "bandharvest/specfun.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace bandharvest::specfun {

namespace {

constexpr double kSqrtPi = 1.7724538509055160273;
constexpr double kTwoOverSqrtPi = 1.1283791670955125739;
constexpr double kPi = 3.14159265358979323846;

// Dawson integral by power series, |x| < 0.5.
double dawson_series(double x) {
  const double x2 = x * x;
  double term = x;
  double sum = x;
  for (int k = 1; k < 40; ++k) {
    term *= -2.0 * x2 / (2 * k + 1);
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum)) break;
  }
  return sum;
}

// Rybicki's sampling expansion, accurate for moderate |x|.
// D(x) = (1/sqrt(pi)) sum_{m odd} e^{-(x - m h)^2} / m,  err ~ e^{-pi^2/4h^2}.
double dawson_rybicki(double x) {
  constexpr double h = 0.25;
  const int mlo = static_cast<int>(std::floor((x - 7.0) / h));
  const int mhi = static_cast<int>(std::ceil((x + 7.0) / h));
  double sum = 0.0;
  for (int m = mlo | 1; m <= mhi; m += 2) {
    const double d = x - m * h;
    sum += std::exp(-d * d) / m;
  }
  return sum / kSqrtPi;
}

// Asymptotic series D(x) = 1/(2x) sum_k (2k-1)!!/(2x^2)^k, |x| >= 10.
double dawson_asymptotic(double x) {
  const double ix2 = 1.0 / (2.0 * x * x);
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < 40; ++k) {
    const double next = term * (2 * k - 1) * ix2;
    if (std::abs(next) >= std::abs(term)) break; // divergent tail
    term = next;
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum)) break;
  }
  return sum / (2.0 * x);
}

// Faddeeva function on the real axis: w(x) = e^{-x^2} + i (2/sqrt(pi)) D(x).
Complex faddeeva_real_axis(double x) {
  return {std::exp(-x * x), kTwoOverSqrtPi * dawson(x)};
}

// Midpoint-rule evaluation of w(z) = (i/pi) Int e^{-t^2}/(z-t) dt with
// residue correction for the pole when it sits below the shifted contour.
// Error ~ e^{-pi^2/h^2} (~1e-26 at h = 0.4).  Valid for y > 0.
Complex faddeeva_midpoint(double x, double y) {
  constexpr double h = 0.4;
  constexpr double tmax = 9.0;
  const Complex z(x, y);
  Complex sum = 0.0;
  const int n = static_cast<int>(tmax / h);
  for (int k = -n - 1; k <= n; ++k) {
    const double t = (k + 0.5) * h;
    sum += std::exp(-t * t) / (z - t);
  }
  Complex w = Complex(0.0, h / kPi) * sum;
  if (y < kPi / h) {
    // pole correction 2 e^{-z^2} / (1 + e^{-2 pi i z / h})
    const Complex mz2 = -z * z;
    const Complex arg = Complex(0.0, -2.0 * kPi / h) * z;
    if (arg.real() > 40.0) {
      w += 2.0 * std::exp(mz2 - arg);
    } else {
      w += 2.0 * std::exp(mz2) / (1.0 + std::exp(arg));
    }
  }
  return w;
}

// Taylor continuation off the real axis for small y, using the
// recurrence w^{(m+1)} = -2 z w^{(m)} - 2 m w^{(m-1)}.
Complex faddeeva_taylor_y(double x, double y) {
  Complex wm1 = faddeeva_real_axis(x);
  Complex wm = -2.0 * x * wm1 + Complex(0.0, 2.0 / kSqrtPi);
  Complex sum = wm1;
  Complex term(0.0, y); // (iy)^m / m!
  for (int m = 1; m < 80; ++m) {
    sum += term * wm;
    if (std::abs(term * wm) < 1e-18 * std::abs(sum) && m > 3) break;
    const Complex wnext = -2.0 * x * wm - 2.0 * static_cast<double>(m) * wm1;
    wm1 = wm;
    wm = wnext;
    term *= Complex(0.0, y) / static_cast<double>(m + 1);
  }
  return sum;
}

} // namespace

double erf(double x) { return std::erf(x); }

double dawson(double x) {
  if (x < 0.0) return -dawson(-x);
  if (x < 0.5) return dawson_series(x);
  if (x < 10.0) return dawson_rybicki(x);
  return dawson_asymptotic(x);
}

Complex faddeeva_w(double x, double y) {
  if (y < 0.0) throw std::domain_error("faddeeva_w: requires Im z >= 0");
  if (x < 0.0) {
    // w(-conj z) = conj(w(z))
    const Complex w = faddeeva_w(-x, y);
    return std::conj(w);
  }
  if (y == 0.0) return faddeeva_real_axis(x);
  if (y < 0.05 && x < 6.5) return faddeeva_taylor_y(x, y);
  return faddeeva_midpoint(x, y);
}

Complex erfi_scaled(double x, double y) {
  if (x < 0.0) return -std::conj(erfi_scaled(-x, y));
  if (y < 0.0) return std::conj(erfi_scaled(x, -y));
  if (y == 0.0) return {kTwoOverSqrtPi * dawson(x), 0.0};
  if (std::isinf(y)) {
    // erfi(x + i inf) limit of the damped kernel: i e^{-x^2}
    return {0.0, std::exp(-x * x)};
  }
  // e^{-x^2} erfi(x+iy) = i e^{-x^2} - i e^{-y^2} e^{2ixy} w(x+iy)
  const Complex w = faddeeva_w(x, y);
  const double damp = std::exp(-y * y);
  const Complex phase = std::polar(damp, 2.0 * x * y);
  const Complex i(0.0, 1.0);
  return i * std::exp(-x * x) - i * phase * w;
}

double erfi(double x) {
  if (!std::isfinite(x)) throw std::domain_error("erfi: non-finite argument");
  if (std::abs(x) > 26.0)
    throw std::overflow_error("erfi: |x| > 26 overflows; use gauss_erfi");
  return kTwoOverSqrtPi * std::exp(x * x) * dawson(x);
}

Complex erfi_complex(Complex z) {
  const double x = z.real();
  if (std::abs(x) > 26.0)
    throw std::overflow_error("erfi_complex: |Re z| > 26 overflows; use gauss_erfi");
  return std::exp(x * x) * erfi_scaled(x, z.imag());
}

Complex gauss_erfi(double x, double y, double c) {
  const Complex v = erfi_scaled(x, y);
  const double m = c + x * x;
  const double mag = std::abs(v);
  if (mag > 0.0 && m + std::log(mag) > 709.0)
    throw std::overflow_error("gauss_erfi: e^c erfi(x+iy) not representable");
  return std::exp(m) * v;
}

namespace {

double si_series(double x) {
  const double x2 = x * x;
  double term = x;
  double sum = x;
  for (int k = 1; k < 40; ++k) {
    term *= -x2 / (2 * k * (2 * k + 1));
    sum += term / (2 * k + 1);
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

// E1(ix) by modified Lentz continued fraction; Si(x) = pi/2 + Im E1(ix).
double si_asymptotic(double x) {
  const Complex z(0.0, x);
  const double tiny = 1e-300;
  Complex b = z + 1.0;
  Complex c = 1.0 / tiny;
  Complex d = 1.0 / b;
  Complex hcf = d;
  for (int i = 1; i < 200; ++i) {
    const double a = -static_cast<double>(i) * i;
    b += 2.0;
    d = 1.0 / (a * d + b);
    c = b + a / c;
    const Complex delta = c * d;
    hcf *= delta;
    if (std::abs(delta - 1.0) < 1e-16) break;
  }
  const Complex e1 = std::exp(-z) * hcf;
  return kPi / 2.0 + e1.imag();
}

} // namespace

double sine_integral(double x) {
  if (x < 0.0) return -sine_integral(-x);
  if (x <= 4.0) return si_series(x);
  return si_asymptotic(x);
}

double spherical_bessel_j1(double x) {
  const double ax = std::abs(x);
  if (ax < 0.5) {
    const double x2 = x * x;
    // j1(x)/x = 1/3 - x^2/30 + x^4/840 - x^6/45360 + x^8/3991680
    return x * (1.0 / 3.0 +
                x2 * (-1.0 / 30.0 +
                      x2 * (1.0 / 840.0 +
                            x2 * (-1.0 / 45360.0 + x2 / 3991680.0))));
  }
  return std::sin(x) / (x * x) - std::cos(x) / x;
}

} // namespace bandharvest::specfun
