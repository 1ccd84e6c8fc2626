#ifndef BANDHARVEST_SPECFUN_HPP
#define BANDHARVEST_SPECFUN_HPP

#include <complex>

// Special functions underpinning the closed-form detector response
// expressions: error functions (real, imaginary, complex), a fused
// Gaussian-damped erfi kernel, the sine integral and the order-1
// spherical Bessel function.
//
// All functions are pure and thread safe.

namespace bandharvest::specfun {

using Complex = std::complex<double>;

/// Error function, erf(x) = (2/sqrt(pi)) Int_0^x e^{-t^2} dt.
double erf(double x);

/// Dawson integral, D(x) = e^{-x^2} Int_0^x e^{t^2} dt.
/// Relative accuracy ~1e-14 over the full real line.
double dawson(double x);

/// Imaginary error function, erfi(x) = -i erf(ix) = (2/sqrt(pi)) e^{x^2} D(x).
/// Throws std::overflow_error for |x| > 26 (value exceeds double range
/// headroom); callers in that regime must use gauss_erfi.
double erfi(double x);

/// erfi of a complex argument.
/// Throws std::overflow_error for |Re z| > 26 as for the real case.
Complex erfi_complex(Complex z);

/// Scaled kernel e^{-x^2} erfi(x + iy).  Finite for all real x, y;
/// this is the overflow-free core every erfi caller reduces to.
Complex erfi_scaled(double x, double y);

/// Fused e^{c} * erfi(x + iy), evaluated without intermediate overflow.
/// Requires c + x^2 <= ~709 so the final value is representable;
/// throws std::overflow_error otherwise.
Complex gauss_erfi(double x, double y, double c);

/// Faddeeva function w(z) = e^{-z^2} erfc(-iz) for Im z >= 0.
Complex faddeeva_w(double x, double y);

/// Sine integral, Si(x) = Int_0^x sin(t)/t dt.
double sine_integral(double x);

/// Order-1 spherical Bessel function, j1(x) = sin(x)/x^2 - cos(x)/x.
double spherical_bessel_j1(double x);

} // namespace bandharvest::specfun

#endif
