#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include <Eigen/Eigenvalues>

#include "bandharvest/perturbative.hpp"

using namespace bandharvest;
using namespace bandharvest::perturbative;

namespace {

DetectorParams det(double gap, double coupling = 1.0) {
  return DetectorParams{gap, coupling};
}

PairGeometry sep(double s) { return PairGeometry{s, 0.0}; }

} // namespace

TEST_CASE("pd_gaussian checkpoints") {
  CHECK(pd_gaussian(det(0.0), Bandlimit::infinite()) ==
        doctest::Approx(0.0795774715459476679).epsilon(1e-13));
  CHECK(pd_gaussian(det(0.0), Bandlimit{1.0}) ==
        doctest::Approx(0.0503025557837880875).epsilon(1e-13));
  CHECK(pd_gaussian(det(3.7), Bandlimit{0.0}) == 0.0);
  CHECK(pd_gaussian(det(-2.0), Bandlimit{0.0}) == 0.0);
}

TEST_CASE("pd decomposition identity on a random grid") {
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> uo(-5.0, 5.0);
  std::uniform_real_distribution<double> ul(0.01, 30.0);
  const double sqrtpi = 1.7724538509055160273;
  for (int i = 0; i < 1000; ++i) {
    const auto d = det(uo(rng));
    const Bandlimit L{ul(rng)};
    const double a = pd_gaussian(d, L);
    const double b = pd_decomposed(d, L);
    // rounding floor set by the decomposition's own term magnitudes,
    // which cancel heavily at large negative gaps
    const double gross = pd_gaussian(d, Bandlimit::infinite()) +
                         pd_gaussian(det(d.gap + L.value),
                                     Bandlimit::infinite()) +
                         L.value / (4.0 * sqrtpi) * std::erfc(d.gap + L.value);
    CAPTURE(d.gap);
    CAPTURE(L.value);
    CHECK(std::abs(a - b) <= 1e-12 * std::max(std::abs(a), std::abs(b)) +
                                 1e-15 * gross + 1e-18);
  }
  // at large bandlimit the corrections vanish entirely
  CHECK(pd_decomposed(det(1.0), Bandlimit{20.0}) ==
        doctest::Approx(pd_gaussian(det(1.0), Bandlimit::infinite()))
            .epsilon(1e-14));
}

TEST_CASE("coupling-squared scaling") {
  for (double lam : {0.5, 1.0, 2.0}) {
    const double p = pd_gaussian(det(0.3, lam), Bandlimit{2.0});
    const double p1 = pd_gaussian(det(0.3, 1.0), Bandlimit{2.0});
    CHECK(p == doctest::Approx(lam * lam * p1).epsilon(1e-14));
    const Complex x = x_gaussian(det(0.3, lam), sep(1.2), Bandlimit{2.0});
    const Complex x1 = x_gaussian(det(0.3, 1.0), sep(1.2), Bandlimit{2.0});
    CHECK(std::abs(x) == doctest::Approx(lam * lam * std::abs(x1))
                             .epsilon(1e-12));
  }
}

TEST_CASE("bandlimit recovery at moderate cutoffs") {
  for (double om : {0.0, 0.5, 1.0, 2.0})
    for (double L : {5.0, 8.0, 20.0}) {
      const double diff = std::abs(pd_gaussian(det(om), Bandlimit{L}) -
                                   pd_gaussian(det(om), Bandlimit::infinite()));
      CHECK(diff < 1e-6);
    }
}

TEST_CASE("x_gaussian checkpoints") {
  const Complex zero = x_gaussian(det(0.01), sep(1.0), Bandlimit{0.0});
  CHECK(zero == Complex{0.0, 0.0});

  // closed-form imaginary part at infinite bandlimit
  const Complex xinf = x_gaussian(det(0.01), sep(1.0), Bandlimit::infinite());
  CHECK(xinf.imag() == doctest::Approx(0.109836838133914711).epsilon(1e-12));

  // the cutoff tail decays like 1/L, so agreement with the closed form
  // is only O(1/L); the sine-integral form captures the tail exactly up
  // to the 1/k^3 remainder of the kernel asymptote
  const Complex x500 = x_gaussian(det(0.01), sep(1.0), Bandlimit{500.0});
  CHECK(std::abs(x500.imag() - xinf.imag()) < 1e-3);
  const double si500 = imx_si_approx(det(0.01), sep(1.0), Bandlimit{500.0});
  CHECK(x500.imag() == doctest::Approx(si500).epsilon(1e-6));

  // real part is insensitive to the cutoff once it is large
  const Complex x50 = x_gaussian(det(0.01), sep(1.0), Bandlimit{50.0});
  CHECK(std::abs(x50.real() - xinf.real()) < 1e-6);
}

TEST_CASE("si approximation agrees in its stated regime") {
  for (double L : {6.0, 10.0, 30.0})
    for (double s : {0.5, 1.0, 2.0}) {
      const double approx = imx_si_approx(det(0.01), sep(s), Bandlimit{L});
      const double exact =
          x_gaussian(det(0.01), sep(s), Bandlimit{L}).imag();
      CAPTURE(L);
      CAPTURE(s);
      CHECK(std::abs(approx - exact) <= 1e-2 * std::abs(exact));
    }
}

TEST_CASE("negativity_xstate closed form") {
  XStateDensityMatrix rho;
  rho.r11 = 0.7;
  rho.r22 = 0.1;
  rho.r33 = 0.1;
  rho.r44 = 0.1;
  rho.r14 = 0.2;
  CHECK(negativity_xstate(rho) == doctest::Approx(0.1).epsilon(1e-14));
  rho.r14 = 0.0;
  CHECK(negativity_xstate(rho) == 0.0);
}

TEST_CASE("negativity_xstate matches dense partial-transpose eigenvalues") {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    XStateDensityMatrix rho;
    double d[4] = {u(rng), u(rng), u(rng), u(rng)};
    const double tr = d[0] + d[1] + d[2] + d[3];
    rho.r11 = d[0] / tr;
    rho.r22 = d[1] / tr;
    rho.r33 = d[2] / tr;
    rho.r44 = d[3] / tr;
    rho.r14 = Complex(u(rng) - 0.5, u(rng) - 0.5) * 0.5;
    rho.r23 = Complex(u(rng) - 0.5, u(rng) - 0.5) * 0.5;

    // partial transpose on the second qubit swaps r14 <-> r23
    Eigen::Matrix4cd pt = Eigen::Matrix4cd::Zero();
    pt(0, 0) = rho.r11;
    pt(1, 1) = rho.r22;
    pt(2, 2) = rho.r33;
    pt(3, 3) = rho.r44;
    pt(1, 2) = rho.r14;
    pt(2, 1) = std::conj(rho.r14);
    pt(0, 3) = rho.r23;
    pt(3, 0) = std::conj(rho.r23);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(pt);
    double n = 0.0;
    for (int k = 0; k < 4; ++k)
      if (es.eigenvalues()[k] < 0.0) n -= es.eigenvalues()[k];
    CHECK(negativity_xstate(rho) == doctest::Approx(n).epsilon(1e-11));
  }
}

TEST_CASE("negativity_perturbative basics") {
  CHECK(negativity_perturbative(det(0.01), sep(1.0), Bandlimit{0.0}) == 0.0);
  // short separation harvests at infinite bandlimit
  CHECK(negativity_perturbative(det(0.01), sep(0.1), Bandlimit::infinite()) >
        0.0);
  // large separation does not
  CHECK(negativity_perturbative(det(0.01), sep(3.0), Bandlimit::infinite()) ==
        0.0);
}

TEST_CASE("effective point-like profile") {
  const Bandlimit L{50.0};
  const double at0 = effective_profile_pointlike(0.0, L);
  CHECK(at0 == doctest::Approx(std::sqrt(2.0 / 3.14159265358979323846) *
                               50.0 * 50.0 * 50.0 / 3.0)
                   .epsilon(1e-12));
  // continuity across the small-argument series boundary
  CHECK(effective_profile_pointlike(0.01 - 1e-13, L) ==
        doctest::Approx(effective_profile_pointlike(0.01 + 1e-13, L))
            .epsilon(1e-9));
  // zeros coincide with zeros of j1: first zero of j1 is at 4.493409...
  const double node = 4.4934094579090641753 / 50.0;
  CHECK(std::abs(effective_profile_pointlike(node, L)) < 1e-6 * at0);
}

TEST_CASE("omega_crit tracks the large-cutoff fit") {
  const double w10 = omega_crit(Bandlimit{10.0});
  CHECK(w10 > 7.5);
  CHECK(w10 < 9.0);
  const double w15 = omega_crit(Bandlimit{15.0});
  CHECK(w15 > w10);
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS((void)pd_decomposed(det(0.0), Bandlimit::infinite()),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)x_gaussian(det(0.0), PairGeometry{0.0, 0.0},
                                   Bandlimit{1.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)omega_crit(Bandlimit::infinite()),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)effective_profile_pointlike(1.0,
                                                    Bandlimit::infinite()),
                  std::invalid_argument);
}
