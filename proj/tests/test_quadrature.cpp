#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "pmeans/quadrature.hpp"

using namespace pmeans;

namespace {
const double kPi = 3.14159265358979323846;
}

TEST_CASE("constant integrand") {
  const auto r = quad::integrate([](double) { return 1.0; }, 0.0, 1.0);
  CHECK(r.value == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(r.error_estimate <= 1e-12);
}

TEST_CASE("endpoint-singular arcsin(1) via the documented reflection") {
  // (1-t^2)^{-1/2} on [0,1]: integrate the smooth half directly and the
  // singular half in the reflected variable u = 1-t, where
  // 1 - t^2 = u(2-u) is exact.
  const auto smooth = quad::integrate(
      [](double t) { return 1.0 / std::sqrt(1.0 - t * t); }, 0.0, 0.5);
  const auto singular = quad::integrate_tanh_sinh(
      [](double u) { return 1.0 / std::sqrt(u * (2.0 - u)); }, 0.0, 0.5);
  CHECK(smooth.value + singular.value == doctest::Approx(kPi / 2).epsilon(1e-13));
}

TEST_CASE("power singularity at the origin handled in place") {
  const auto r = quad::integrate([](double t) { return 1.0 / std::sqrt(t); }, 0.0, 1.0);
  CHECK(std::fabs(r.value - 2.0) <= r.error_estimate + 1e-12);
  CHECK(r.error_estimate <= std::max(1e-13, 1e-12 * std::fabs(r.value)) * 1.01);
}

TEST_CASE("arcsin_4(0.9): two independent schemes agree") {
  const auto f = [](double t) { return std::pow(1.0 - t * t * t * t, -0.25); };
  const auto gk = quad::integrate(f, 0.0, 0.9);
  const auto ts = quad::integrate_tanh_sinh(f, 0.0, 0.9);
  CHECK(std::fabs(gk.value - ts.value) <= 1e-11);
}

TEST_CASE("semi-infinite integrals") {
  const auto atan_inf = quad::integrate_semi_infinite(
      [](double t) { return 1.0 / (1.0 + t * t); });
  CHECK(atan_inf.value == doctest::Approx(kPi / 2).epsilon(1e-13));

  const auto simple = quad::integrate_semi_infinite(
      [](double t) { return 1.0 / ((1.0 + t) * (1.0 + t)); });
  CHECK(simple.value == doctest::Approx(1.0).epsilon(1e-13));

  // n_2 normalizer closed-form check
  const auto n2 = quad::integrate_semi_infinite(
      [](double t) { return 1.0 / (1.0 + t * t); });
  CHECK(n2.value == doctest::Approx(kPi / 2).epsilon(1e-13));

  // second scheme agrees
  const auto n2ts = quad::integrate_semi_infinite_tanh_sinh(
      [](double t) { return 1.0 / (1.0 + t * t); });
  CHECK(std::fabs(n2.value - n2ts.value) <= 1e-12);
}

TEST_CASE("linearity on random smooth integrands") {
  std::mt19937 rng(20240817);
  std::uniform_real_distribution<double> coeff(-2.0, 2.0);
  for (int trial = 0; trial < 20; ++trial) {
    const double c1 = coeff(rng), c2 = coeff(rng), c3 = coeff(rng), c4 = coeff(rng);
    const auto f = [c1, c2](double t) { return c1 * std::sin(3.0 * t) + c2 * t * t; };
    const auto g = [c3, c4](double t) { return c3 * std::exp(-t) + c4 * std::cos(t); };
    const double alpha = coeff(rng), beta = coeff(rng);
    const auto combo = [&](double t) { return alpha * f(t) + beta * g(t); };
    const double lhs = quad::integrate(combo, 0.0, 2.0).value;
    const double rhs = alpha * quad::integrate(f, 0.0, 2.0).value +
                       beta * quad::integrate(g, 0.0, 2.0).value;
    CHECK(std::fabs(lhs - rhs) <= 10.0 * 1e-12 * (1.0 + std::fabs(lhs)));
  }
}

TEST_CASE("interval additivity") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> mid(0.2, 1.8);
  const auto f = [](double t) { return std::exp(-t * t) + std::sin(5.0 * t); };
  for (int trial = 0; trial < 10; ++trial) {
    const double m = mid(rng);
    const double whole = quad::integrate(f, 0.0, 2.0).value;
    const double split = quad::integrate(f, 0.0, m).value +
                         quad::integrate(f, m, 2.0).value;
    CHECK(std::fabs(whole - split) <= 1e-11);
  }
}

TEST_CASE("scheme agreement on the generalized-arc integrands") {
  for (double p : {2.0, 2.5, 3.0, 5.0, 10.0}) {
    for (double x : {0.1, 0.3, 0.5, 0.7, 0.9, 0.99}) {
      const quad::Fn fams[4] = {
          [p](double t) { return std::pow(1.0 - std::pow(t, p), -1.0 / p); },
          [p](double t) { return 1.0 / (1.0 - std::pow(t, p)); },
          [p](double t) { return 1.0 / (1.0 + std::pow(t, p)); },
          [p](double t) { return std::pow(1.0 + std::pow(t, p), -1.0 / p); }};
      for (const auto& f : fams) {
        const auto a = quad::integrate(f, 0.0, x);
        const auto b = quad::integrate_tanh_sinh(f, 0.0, x);
        CHECK(std::fabs(a.value - b.value) <=
              a.error_estimate + b.error_estimate + 1e-12);
      }
    }
  }
}

TEST_CASE("find_root basics") {
  CHECK(quad::find_root([](double x) { return x - 0.5; }, 0.0, 1.0) ==
        doctest::Approx(0.5).epsilon(1e-12));

  // closed form sqrt(sqrt(2)-1)
  const double r = quad::find_root(
      [](double x) { return x * x * x * x + 2.0 * x * x - 1.0; }, 0.0, 1.0, 1e-14);
  CHECK(r == doctest::Approx(std::sqrt(std::sqrt(2.0) - 1.0)).epsilon(1e-13));

  const double fp = quad::find_root([](double x) { return std::cos(x) - x; }, 0.0, 1.0, 1e-13);
  CHECK(fp == doctest::Approx(0.7390851332151607).epsilon(1e-12));
}

TEST_CASE("find_root containment and residual") {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> root(0.05, 0.95);
  for (int trial = 0; trial < 25; ++trial) {
    const double target = root(rng);
    const auto f = [target](double x) { return std::atan(4.0 * (x - target)); };
    const double x = quad::find_root(f, 0.0, 1.0, 1e-12);
    CHECK(x >= 0.0);
    CHECK(x <= 1.0);
    CHECK(std::fabs(f(x)) <= 1e-12);
  }
}

TEST_CASE("error paths") {
  CHECK_THROWS_AS(quad::integrate([](double) { return 1.0; }, 1.0, 0.0), InvalidDomain);
  CHECK_THROWS_AS(quad::integrate([](double) { return 1.0; }, 0.0,
                                  std::numeric_limits<double>::infinity()),
                  InvalidDomain);
  CHECK_THROWS_AS(quad::find_root([](double x) { return 1.0 + x * x; }, 0.0, 1.0),
                  NoSignChange);
  quad::Options tight;
  tight.max_panels = 2;
  CHECK_THROWS_AS(quad::integrate([](double t) { return 1.0 / std::sqrt(t); }, 0.0, 1.0, tight),
                  NonConvergence);
}
