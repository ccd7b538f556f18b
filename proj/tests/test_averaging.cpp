#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "gpme/averaging.hpp"
#include "gpme/model.hpp"

using namespace gpme;

TEST_CASE("arithmetic average golden values") {
  CHECK(arithmetic_average(1.0, 0.0) == 0.5);
  CHECK(arithmetic_average(0.01, 1.0) == doctest::Approx(0.505).epsilon(1e-15));
  CHECK(arithmetic_average(2.0, 2.0) == 2.0);
}

TEST_CASE("harmonic average golden values and the vanishing-input rule") {
  CHECK(harmonic_average(1.0, 0.0) == 0.0);
  CHECK(harmonic_average(0.0, 1.0) == 0.0);
  CHECK(harmonic_average(0.0, 0.0) == 0.0);  // defined as the limit value
  CHECK(harmonic_average(0.01, 1.0) ==
        doctest::Approx(0.0198019801980198).epsilon(1e-14));
  CHECK(harmonic_average(3.0, 3.0) == doctest::Approx(3.0).epsilon(1e-15));
}

TEST_CASE("harmonic never exceeds arithmetic") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(0.0, 4.0);
  for (int i = 0; i < 2000; ++i) {
    const double a = u(rng);
    const double b = u(rng);
    const double h = harmonic_average(a, b);
    const double m = arithmetic_average(a, b);
    CHECK(h <= m + 1e-15);
    CHECK(h >= 0.0);
    CHECK(h <= std::max(a, b));
    CHECK(m >= std::min(a, b));
    CHECK(m <= std::max(a, b));
  }
}

TEST_CASE("solution-interval average golden values") {
  CoefficientModel m;  // k_max = 1, k_min = 0, p_star = 0.5
  CHECK(integral_average(1.0, 0.0, m) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(integral_average(0.6, 0.0, m) ==
        doctest::Approx(1.0 / 6.0).epsilon(1e-15));
  CHECK(integral_average(0.9, 0.8, m) == doctest::Approx(1.0).epsilon(1e-15));
  // Both below the threshold: the low branch.
  CHECK(integral_average(0.3, 0.1, m) == 0.0);
  // Equal arguments take the pointwise coefficient (ties go high).
  CHECK(integral_average(0.5, 0.5, m) == 1.0);
  CHECK(integral_average(0.2, 0.2, m) == 0.0);
}

TEST_CASE("solution-interval average stays inside the coefficient range") {
  CoefficientModel m;
  m.k_min = 0.05;
  m.k_max = 2.0;
  m.p_star = 0.4;
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 2000; ++i) {
    const double pL = u(rng);
    const double pR = u(rng);
    const double k = integral_average(pL, pR, m);
    // The quotient of two rounded quantities can land outside the exact range
    // by a few ulps of the numerator divided by |pL - pR|, so the admissible
    // slack grows as the two states approach each other.
    const double slack = 8.0 * std::numeric_limits<double>::epsilon() *
                         m.k_max * (1.0 + 1.0 / std::abs(pL - pR));
    CHECK(k >= m.k_min - slack);
    CHECK(k <= m.k_max + slack);
  }
}

TEST_CASE("solution-interval average grows with the high-side value") {
  // Against a dried-out right state the mix shifts toward k_max as the left
  // state rises above the threshold.
  CoefficientModel m;
  double prev = integral_average(m.p_star, 0.0, m);
  for (int i = 1; i <= 100; ++i) {
    const double pL = m.p_star + (1.0 - m.p_star) * i / 100.0;
    const double k = integral_average(pL, 0.0, m);
    CHECK(k > prev);
    prev = k;
  }
  CHECK(prev == doctest::Approx(0.5).epsilon(1e-15));  // pL = 1 endpoint
}

TEST_CASE("shock-cell face coefficients golden values") {
  CoefficientModel m;
  const auto [k_plus, k_minus] =
      sam_face_coefficients(0.75, 0.25, 0.1, 0.05, m);
  CHECK(k_plus == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(k_minus == 0.0);  // degenerate low side carries no flux

  // Inserted into the standard two-point flux they reproduce the one-sided
  // flux toward the interface: -k_max (p* - pL)/dx_star = 5.
  const double flux_via_average = -k_plus * (0.25 - 0.75) / 0.1;
  const double flux_direct = -m.k_max * (m.p_star - 0.75) / 0.05;
  CHECK(flux_via_average == doctest::Approx(5.0).epsilon(1e-15));
  CHECK(flux_direct == doctest::Approx(5.0).epsilon(1e-15));
}

TEST_CASE("shock-cell face coefficients reproduce both one-sided fluxes") {
  CoefficientModel m;
  m.k_min = 0.1;
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> uy(0.05, 0.95);
  std::uniform_real_distribution<double> uL(0.5, 1.0);
  std::uniform_real_distribution<double> uR(0.0, 0.499);
  const double dx = 0.02;
  for (int i = 0; i < 500; ++i) {
    const double pL = uL(rng);
    const double pR = uR(rng);
    const double dx_star = uy(rng) * dx;
    const auto [k_plus, k_minus] = sam_face_coefficients(pL, pR, dx, dx_star, m);
    const double f_plus = -k_plus * (pR - pL) / dx;
    const double f_minus = -k_minus * (pR - pL) / dx;
    CHECK(f_plus ==
          doctest::Approx(-m.k_max * (m.p_star - pL) / dx_star).epsilon(1e-13));
    CHECK(f_minus ==
          doctest::Approx(-m.k_min * (pR - m.p_star) / (dx - dx_star))
              .epsilon(1e-13));
  }
}

TEST_CASE("shock-cell face coefficients reject bad geometry or equal states") {
  CoefficientModel m;
  CHECK_THROWS_AS(sam_face_coefficients(0.8, 0.2, 0.1, 0.0, m),
                  std::invalid_argument);
  CHECK_THROWS_AS(sam_face_coefficients(0.8, 0.2, 0.1, 0.1, m),
                  std::invalid_argument);
  CHECK_THROWS_AS(sam_face_coefficients(0.8, 0.2, 0.1, -0.01, m),
                  std::invalid_argument);
  CHECK_THROWS_AS(sam_face_coefficients(0.8, 0.2, 0.1, 0.11, m),
                  std::invalid_argument);
  CHECK_THROWS_AS(sam_face_coefficients(0.5, 0.5, 0.1, 0.05, m),
                  std::invalid_argument);
}

TEST_CASE("straddling flux identity: interval average equals the split flux") {
  // When pL >= p_star >= pR, the flux computed with the solution-interval
  // average equals y F_plus + (1 - y) F_minus built from the one-sided fluxes
  // at an interface placed a fraction y across the cell. The y-dependence
  // cancels algebraically, so the identity holds for every placement.
  std::mt19937_64 rng(2026);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  for (int i = 0; i < 2000; ++i) {
    CoefficientModel m;
    m.k_max = 0.5 + 2.0 * u01(rng);
    m.k_min = (i % 2 == 0) ? 0.0 : 0.3 * m.k_max * u01(rng);
    m.p_star = 0.2 + 0.6 * u01(rng);
    const double pL = m.p_star + (1.0 - m.p_star) * u01(rng);
    const double pR = m.p_star * u01(rng);
    if (pL == pR) continue;
    const double dx = 0.01 + 0.2 * u01(rng);
    const double y = 0.01 + 0.98 * u01(rng);

    const double f_interval = -integral_average(pL, pR, m) * (pR - pL) / dx;
    const double f_plus = -m.k_max * (m.p_star - pL) / (y * dx);
    const double f_minus = -m.k_min * (pR - m.p_star) / ((1.0 - y) * dx);
    const double f_split = y * f_plus + (1.0 - y) * f_minus;
    CHECK(f_interval ==
          doctest::Approx(f_split).epsilon(1e-13).scale(std::abs(f_split) + 1.0));
  }
}
