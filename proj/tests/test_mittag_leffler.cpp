#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "fracwave/mittag_leffler.hpp"
#include "fracwave/numerics.hpp"
#include "fracwave/quadrature.hpp"
#include "reference_values.hpp"

using namespace fracwave;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("ml_eval elementary values") {
  CHECK(ml_eval({1.0, 1.0}, 1.0) == doctest::Approx(std::exp(1.0)).epsilon(1e-14));
  CHECK(ml_eval({0.7, 1.0}, 0.0) == doctest::Approx(1.0).epsilon(1e-14));
  // E_{a,b}(0) = 1/Gamma(b)
  CHECK(ml_eval({0.5, 0.5}, 0.0) ==
        doctest::Approx(1.0 / std::tgamma(0.5)).epsilon(1e-14));
}

TEST_CASE("ml_eval against the high-precision series/quadrature references") {
  for (const auto& r : refvals::kMittagLeffler) {
    CAPTURE(r.a);
    CAPTURE(r.b);
    CAPTURE(r.z);
    MLEvalInfo info;
    const double v = ml_eval({r.a, r.b}, r.z, info);
    CAPTURE(to_string(info.method));
    CHECK(std::abs(v - r.value) < 1e-10 * std::max(1.0, std::abs(r.value)));
  }
}

TEST_CASE("ml_eval strategy crossovers agree with each other") {
  // values straddling the Taylor / spectral / asymptotic switch points must
  // line up; sample densely through both crossovers
  for (const double a : {0.3, 0.5, 0.8}) {
    double prev = 1.0;  // E(0)
    for (const double t : log_grid(0.1, 2000.0, 40)) {
      const double v = ml_eval({a, 1.0}, -t);
      CHECK(v > 0.0);
      CHECK(v < prev);  // monotone through every strategy switch
      prev = v;
    }
  }
}

TEST_CASE("E_{1,1} = exp to 1e-12 relative on [-30, 5]") {
  for (double x = -30.0; x <= 5.0; x += 0.25) {
    const double v = ml_eval({1.0, 1.0}, x);
    CHECK(std::abs(v - std::exp(x)) <= 1e-12 * std::exp(x));
  }
}

TEST_CASE("E_{2,1}(-x^2) = cos(x) to 1e-10 absolute on [0, 20]") {
  for (double x = 0.0; x <= 20.0; x += 0.125) {
    const double v = ml_eval({2.0, 1.0}, -x * x);
    CHECK(std::abs(v - std::cos(x)) <= 1e-10);
  }
}

TEST_CASE("complete monotonicity consequence: 0 < E_{a,1}(t) <= 1, decreasing") {
  for (const double a : {0.25, 0.5, 0.7, 0.9}) {
    double prev = 1.0 + 1e-15;
    for (const double t : log_grid(1e-3, 1e4, 12)) {
      const double v = ml_eval({a, 1.0}, -t);
      CAPTURE(a);
      CAPTURE(t);
      CHECK(v > 0.0);
      CHECK(v <= 1.0);
      CHECK(v < prev);
      prev = v;
    }
  }
}

TEST_CASE("ml_eval rejects bad input") {
  CHECK_THROWS_AS(ml_eval({2.5, 1.0}, -1.0), std::invalid_argument);  // a > 2
  CHECK_THROWS_AS(ml_eval({0.5, 1.0}, std::nan("")), std::invalid_argument);
  CHECK_THROWS_AS(ml_eval({-0.5, 1.0}, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(ml_eval({0.5, 0.0}, -1.0), std::invalid_argument);
  // positive overflow domain
  CHECK_THROWS_AS(ml_eval({1.0, 0.5}, 1e4), std::invalid_argument);
  // uncertified midzone: a in (1,2), generic b, deep negative argument
  CHECK_THROWS_AS(ml_eval({1.5, 0.7}, -500.0), std::invalid_argument);
}

TEST_CASE("evaluator metadata reports the strategy and a real bound") {
  MLEvalInfo info;
  ml_eval({0.5, 1.0}, -1.0, info);
  CHECK(info.method == MLMethod::Taylor);
  CHECK(info.terms > 3);
  ml_eval({0.5, 1.0}, -5.0, info);
  CHECK(info.method == MLMethod::SpectralIntegral);
  ml_eval({0.5, 1.0}, -100.0, info);
  CHECK(info.method == MLMethod::Asymptotic);
  CHECK(info.error_bound < 1e-11);
  ml_eval({1.0, 1.0}, -25.0, info);
  CHECK(info.method == MLMethod::Closed);
}

TEST_CASE("spectral function closed-form values") {
  // direct substitution: numerator sin(pi/2) + sin(pi) = 1, denominator 2
  CHECK(spectral_function({0.5, 1.0, 1.0}, 1.0) ==
        doctest::Approx(1.0 / (2.0 * kPi)).epsilon(1e-14));
  CHECK(spectral_function({0.5, 1.0, 1.0}, 1.0) ==
        doctest::Approx(refvals::kSpectral_05_1_A1_Om1).epsilon(1e-14));
  // a = b: the first numerator term vanishes, f = sin(b pi) Omega^a / (pi den)
  const double f = spectral_function({0.5, 0.5, 1.0}, 3.0);
  const double expect = std::sqrt(3.0) / (kPi * (3.0 + 1.0));  // cos(pi/2)=0 in den
  CHECK(f == doctest::Approx(expect).epsilon(1e-13));
  // cross-checked against numerical inverse Laplace (frozen)
  CHECK(spectral_function({0.3, 0.6, 2.0}, 5.0) ==
        doctest::Approx(refvals::kSpectral_03_06_A2_Om5).epsilon(1e-14));
  CHECK(spectral_function({0.25, 0.8, 4.0}, 0.3) ==
        doctest::Approx(refvals::kSpectral_025_08_A4_Om03).epsilon(1e-14));
}

TEST_CASE("spectral function domain") {
  CHECK_THROWS_AS(spectral_function({0.5, 0.4, 1.0}, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(spectral_function({0.5, 1.1, 1.0}, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(spectral_function({0.5, 1.0, -1.0}, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(spectral_function({0.5, 1.0, 1.0}, 0.0), std::invalid_argument);
}

TEST_CASE("spectral function nonnegative over six decades") {
  for (const double a : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    for (const double b : {a, (a + 1.0) / 2.0, 1.0}) {
      for (const double A : log_grid(1e-3, 1e3, 1)) {
        for (const double Om : log_grid(1e-3, 1e3, 2)) {
          CAPTURE(a);
          CAPTURE(b);
          CAPTURE(A);
          CAPTURE(Om);
          CHECK(spectral_function({a, b, A}, Om) >= 0.0);
        }
      }
    }
  }
}

TEST_CASE("Laplace representation verifies below 1e-8") {
  CHECK(verify_laplace_representation({0.5, 1.0, 1.0}, 1.0) < 1e-8);
  CHECK(verify_laplace_representation({0.9, 0.95, 0.1}, 10.0) < 1e-8);
  CHECK_THROWS_AS(verify_laplace_representation({0.5, 0.4, 1.0}, 1.0),
                  std::invalid_argument);
}

TEST_CASE("Laplace representation residual over the (a,b,t) grid") {
  const double as[] = {0.2, 0.35, 0.5, 0.7, 0.9};
  const double bs[] = {0.0, 0.25, 0.5, 0.75, 1.0};  // fractions of [a, 1]
  const double ts[] = {1e-3, 3e-2, 1.0, 3e1, 1e3};
  for (const double a : as)
    for (const double bf : bs)
      for (const double t : ts) {
        const double b = a + bf * (1.0 - a);
        CAPTURE(a);
        CAPTURE(b);
        CAPTURE(t);
        CHECK(verify_laplace_representation({a, b, 1.0}, t) < 1e-8);
      }
}

TEST_CASE("Fourier pair: classical exponential case") {
  // a = b = 1: time side H(t) e^{-t}, closed form 1/(1+iw)
  const double grid[] = {1.0};
  const auto r = verify_fourier_pair({1.0, 1.0}, 1.0, grid);
  CHECK(r.max_rel_error < 1e-6);
}

TEST_CASE("Fourier pair over a log grid, mid-band error < 1e-3") {
  const auto grid = log_grid(1e-2, 1e2, 2);
  const auto r = verify_fourier_pair({0.5, 1.0}, 1.0, grid);
  CAPTURE(r.worst_omega);
  CHECK(r.max_rel_error < 1e-3);
  CHECK(r.tail_bound < 1e-3);
}

TEST_CASE("Fourier pair at a = b") {
  // (i w)^0 / (A + (i w)^a): direct closed-form comparison at one frequency
  const double grid[] = {10.0};
  const auto r = verify_fourier_pair({0.5, 0.5}, 2.0, grid);
  CHECK(r.max_rel_error < 1e-3);
}

TEST_CASE("quadrature error reporting is distinct from domain errors") {
  // an integrand violently oscillating at machine scale cannot converge
  CHECK_THROWS_AS(integrate([](double x) { return std::sin(1e9 / (x + 1e-12)); },
                            0.0, 1.0, 1e-13, 1e-305),
                  QuadratureError);
}
