#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "bandharvest/specfun.hpp"

namespace sf = bandharvest::specfun;
using sf::Complex;

namespace {

double rel_err(double got, double want) {
  if (want == 0.0) return std::abs(got);
  return std::abs(got - want) / std::abs(want);
}

} // namespace

TEST_CASE("erf reference values") {
  CHECK(sf::erf(0.0) == 0.0);
  CHECK(rel_err(sf::erf(1.0), 0.8427007929497148693) < 1e-14);
  CHECK(sf::erf(30.0) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("dawson reference values across all branches") {
  const struct {
    double x, want;
  } table[] = {
      {0.1, 0.0993359923978528666},    {0.4999, 0.424378820018336929},
      {0.5001, 0.424493932741343906},  {1.5, 0.428249071085398625},
      {3.0, 0.178271030610558287},     {7.0, 0.072180974658236292},
      {9.999, 0.050258924646993473},   {10.001, 0.0502487707593842581},
      {25.0, 0.0200160385544664082},
  };
  for (const auto &t : table) {
    CAPTURE(t.x);
    CHECK(rel_err(sf::dawson(t.x), t.want) < 1e-14);
    CHECK(sf::dawson(-t.x) == -sf::dawson(t.x));
  }
}

TEST_CASE("erfi reference values and overflow guard") {
  CHECK(sf::erfi(0.0) == 0.0);
  CHECK(rel_err(sf::erfi(1.0), 1.65042575879754288) < 1e-13);
  CHECK(rel_err(sf::erfi(1e-9), 2e-9 / 1.7724538509055160273) < 1e-12);
  CHECK_THROWS_AS((void)sf::erfi(26.5), std::overflow_error);
  CHECK_THROWS_AS((void)sf::erfi(-27.0), std::overflow_error);
}

TEST_CASE("faddeeva_w reference values") {
  const struct {
    double x, y, re, im;
  } table[] = {
      {0.3, 0.2, 0.752894790136879209, 0.229653152349069945},
      {1.0, 1.0, 0.304744205256912592, 0.208218938202831627},
      {2.5, 0.01, 0.00323055765659298131, 0.251619145866819137},
      {0.5, 0.001, 0.778151718312549135, 0.478147175121584245},
      {3.5355339059327378, 0.7071067811865476, 0.0348043362929585939,
       0.158817642541000648},
      {7.0, 0.04, 0.000475421071915215225, 0.0814447015860962774},
      {26.0, 0.5, 0.000418073972221479136, 0.0217076273004214016},
      {2.0, 20.0, 0.0278970920325007098, 0.00278284566692904124},
      {0.0, 3.0, 0.17900115118138995, 0.0},
      {10.0, 0.0001, 5.72871756164533253e-7, 0.0567053942270697802},
  };
  for (const auto &t : table) {
    CAPTURE(t.x);
    CAPTURE(t.y);
    const Complex got = sf::faddeeva_w(t.x, t.y);
    CHECK(rel_err(got.real(), t.re) < 1e-12);
    CHECK(rel_err(got.imag(), t.im) < 1e-12);
    // mirror symmetry w(-x+iy) = conj(w(x+iy))
    const Complex neg = sf::faddeeva_w(-t.x, t.y);
    CHECK(neg.real() == doctest::Approx(got.real()).epsilon(1e-15));
    CHECK(neg.imag() == doctest::Approx(-got.imag()).epsilon(1e-15));
  }
  CHECK_THROWS_AS((void)sf::faddeeva_w(1.0, -0.1), std::domain_error);
}

TEST_CASE("erfi_scaled reference values") {
  const struct {
    double x, y, re, im;
  } table[] = {
      {0.5, 1.0, 0.146393883470217981, 0.740413480888406424},
      {2.0, 3.0, -2.11485634078830015e-7, 0.0182966506786473297},
      {5.0, 2.0, 0.0014119950071989495, 0.00133468067742465887},
      {30.0, 0.0, 0.0188167848686607278, 0.0},
      {100.0, 5.0, 4.7189003803818369e-14, 6.24331408608619117e-14},
      {0.0, 2.0, 0.0, 0.995322265018952734},
      {1.0, 50.0, -1.00376285145429114e-37, 0.367879441171442322},
      {0.25, 0.25, 0.253560267225373123, 0.275619260264889822},
  };
  for (const auto &t : table) {
    CAPTURE(t.x);
    CAPTURE(t.y);
    const Complex got = sf::erfi_scaled(t.x, t.y);
    // componentwise, relative to the overall magnitude so a component
    // catastrophically smaller than the other is checked absolutely
    const double scale = std::hypot(t.re, t.im);
    CHECK(std::abs(got.real() - t.re) < 1e-10 * scale);
    CHECK(std::abs(got.imag() - t.im) < 1e-10 * scale);
  }
}

TEST_CASE("erfi_scaled symmetries and infinite-y limit") {
  std::mt19937 rng(12345);
  std::uniform_real_distribution<double> ux(-8.0, 8.0);
  std::uniform_real_distribution<double> uy(0.0, 8.0);
  for (int i = 0; i < 200; ++i) {
    const double x = ux(rng);
    const double y = uy(rng);
    const Complex v = sf::erfi_scaled(x, y);
    const Complex mx = sf::erfi_scaled(-x, y);
    CHECK(mx.real() == doctest::Approx(-v.real()).epsilon(1e-13));
    CHECK(mx.imag() == doctest::Approx(v.imag()).epsilon(1e-13));
    const Complex my = sf::erfi_scaled(x, -y);
    CHECK(my.real() == doctest::Approx(v.real()).epsilon(1e-13));
    CHECK(my.imag() == doctest::Approx(-v.imag()).epsilon(1e-13));
  }
  const double inf = std::numeric_limits<double>::infinity();
  const Complex lim = sf::erfi_scaled(1.0, inf);
  CHECK(lim.real() == 0.0);
  CHECK(rel_err(lim.imag(), std::exp(-1.0)) < 1e-15);
}

TEST_CASE("erfi_complex agrees with references") {
  const Complex a = sf::erfi_complex({1.0, 1.0});
  CHECK(rel_err(a.real(), 0.190453469237834686) < 1e-10);
  CHECK(rel_err(a.imag(), 1.31615128169794764) < 1e-10);
  const Complex b = sf::erfi_complex({0.0, 2.0}); // i*sf::erf(2)
  CHECK(std::abs(b.real()) < 1e-14);
  CHECK(rel_err(b.imag(), sf::erf(2.0)) < 1e-12);
  // conjugate symmetry
  const Complex c = sf::erfi_complex({1.3, -0.7});
  const Complex d = sf::erfi_complex({1.3, 0.7});
  CHECK(c.real() == doctest::Approx(d.real()).epsilon(1e-14));
  CHECK(c.imag() == doctest::Approx(-d.imag()).epsilon(1e-14));
  CHECK_THROWS_AS((void)sf::erfi_complex({27.0, 1.0}), std::overflow_error);
}

TEST_CASE("gauss_erfi fused evaluation") {
  const Complex g = sf::gauss_erfi(2.0, 3.0, -4.0);
  CHECK(rel_err(g.real(), -2.11485634078830015e-7) < 1e-9);
  CHECK(rel_err(g.imag(), 0.0182966506786473297) < 1e-9);
  // fused large-x value stays finite where raw erfi would overflow
  const Complex h = sf::gauss_erfi(30.0, 0.0, -900.0);
  CHECK(rel_err(h.real(), 0.0188167848686607278) < 1e-9);
  // consistency with erfi_complex where both are defined
  const Complex k1 = sf::gauss_erfi(1.5, 2.0, 0.0);
  const Complex k2 = sf::erfi_complex({1.5, 2.0});
  CHECK(rel_err(k1.real(), k2.real()) < 1e-9);
  CHECK(rel_err(k1.imag(), k2.imag()) < 1e-9);
  CHECK_THROWS_AS((void)sf::gauss_erfi(30.0, 0.0, 0.0), std::overflow_error);
}

TEST_CASE("sine integral reference values and asymptote") {
  const struct {
    double x, want;
  } table[] = {
      {0.5, 0.493107418043066689},    {1.0, 0.946083070367183015},
      {3.9999, 1.75822205843084084},  {4.0001, 1.75818421830615787},
      {4.0, 1.75820313894905306},     {10.0, 1.65834759421887405},
      {50.0, 1.55161707248593589},    {1000.0, 1.57023312196877122},
  };
  for (const auto &t : table) {
    CAPTURE(t.x);
    CHECK(rel_err(sf::sine_integral(t.x), t.want) < 1e-12);
    CHECK(sf::sine_integral(-t.x) == -sf::sine_integral(t.x));
  }
  CHECK(sf::sine_integral(0.0) == 0.0);
  CHECK(rel_err(sf::sine_integral(3.14159265358979323846), 1.85193705198246617) <
        1e-12);
}

TEST_CASE("spherical bessel j1") {
  CHECK(sf::spherical_bessel_j1(0.0) == 0.0);
  CHECK(rel_err(sf::spherical_bessel_j1(1e-7), 1e-7 / 3.0) < 1e-12);
  CHECK(rel_err(sf::spherical_bessel_j1(3.14159265358979323846),
                0.318309886183790672) < 1e-13);
  CHECK(rel_err(sf::spherical_bessel_j1(0.3), 0.0991028880406418765) < 1e-13);
  // series/direct switchover continuity at x = 0.5
  CHECK(rel_err(sf::spherical_bessel_j1(0.5001), 0.162567900446239554) < 1e-13);
  CHECK(std::abs(sf::spherical_bessel_j1(0.5 - 1e-13) -
                 sf::spherical_bessel_j1(0.5 + 1e-13)) < 1e-11);
}

TEST_CASE("switchover continuity of dawson and Si") {
  for (double x : {0.5, 10.0}) {
    const double lo = sf::dawson(x - 1e-13);
    const double hi = sf::dawson(x + 1e-13);
    CHECK(std::abs(lo - hi) < 1e-11);
  }
  CHECK(std::abs(sf::sine_integral(4.0 - 1e-13) -
                 sf::sine_integral(4.0 + 1e-13)) < 1e-11);
}

TEST_CASE("oddness over random arguments") {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> u(-20.0, 20.0);
  for (int i = 0; i < 1000; ++i) {
    const double x = u(rng);
    CHECK(sf::erf(-x) == -sf::erf(x));
    CHECK(sf::sine_integral(-x) == -sf::sine_integral(x));
    if (std::abs(x) <= 26.0) CHECK(sf::erfi(-x) == -sf::erfi(x));
  }
}
