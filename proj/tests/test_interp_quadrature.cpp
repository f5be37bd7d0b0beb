#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "atl/constants.hpp"
#include "atl/errors.hpp"
#include "atl/interp.hpp"
#include "atl/quadrature.hpp"
#include "atl/rng.hpp"

using namespace atl;

TEST_CASE("monotone cubic is exact at the nodes") {
  std::vector<double> xs{0.0, 0.5, 1.2, 2.0, 3.5};
  std::vector<double> ys{1.0, -0.3, 0.7, 0.7, 4.0};
  MonotoneCubic f(xs, ys);
  for (std::size_t i = 0; i < xs.size(); ++i)
    CHECK(f(xs[i]) == doctest::Approx(ys[i]).epsilon(1e-15));
}

TEST_CASE("monotone cubic reproduces linear data exactly") {
  std::vector<double> xs, ys;
  for (int i = 0; i <= 20; ++i) {
    xs.push_back(0.3 * i);
    ys.push_back(2.0 - 0.7 * xs.back());
  }
  MonotoneCubic f(xs, ys);
  for (double x = 0.05; x < 6.0; x += 0.17)
    CHECK(f(x) == doctest::Approx(2.0 - 0.7 * x).epsilon(1e-14));
}

TEST_CASE("monotone cubic does not overshoot between nodes") {
  rng::Philox rng(7, 0);
  std::vector<double> xs, ys;
  double y = 0.0;
  for (int i = 0; i <= 40; ++i) {
    xs.push_back(i * 0.25);
    y += rng.uniform();  // increasing data
    ys.push_back(y);
  }
  MonotoneCubic f(xs, ys);
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    for (int k = 1; k < 16; ++k) {
      const double x = xs[i] + (xs[i + 1] - xs[i]) * k / 16.0;
      const double v = f(x);
      CHECK(v >= ys[i] - 1e-12);
      CHECK(v <= ys[i + 1] + 1e-12);
    }
  }
}

TEST_CASE("monotone cubic rejects bad input and out-of-range evaluation") {
  CHECK_THROWS_AS(MonotoneCubic({1.0}, {2.0}), Error);
  CHECK_THROWS_AS(MonotoneCubic({1.0, 1.0}, {2.0, 3.0}), Error);
  MonotoneCubic f({0.0, 1.0}, {0.0, 1.0});
  CHECK_THROWS_AS(f(-0.1), OutOfRangeError);
  CHECK_THROWS_AS(f(1.1), OutOfRangeError);
}

TEST_CASE("adaptive quadrature on smooth integrands") {
  auto q = integrate_adaptive([](double x) { return x * x; }, 0.0, 1.0, 1e-12);
  CHECK(q.value == doctest::Approx(1.0 / 3.0).epsilon(1e-13));

  q = integrate_adaptive([](double x) { return std::sin(x); }, 0.0,
                         constants::kPi, 1e-12);
  CHECK(q.value == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(q.estimated_error < 1e-12);
}

TEST_CASE("adaptive quadrature handles endpoint steepness") {
  auto q = integrate_adaptive([](double x) { return std::sqrt(x); }, 0.0, 1.0,
                              1e-9, 2000000);
  CHECK(q.value == doctest::Approx(2.0 / 3.0).epsilon(1e-8));
}

TEST_CASE("adaptive quadrature throws when the budget is exhausted") {
  CHECK_THROWS_AS(integrate_adaptive([](double x) { return std::sin(1e4 * x); },
                                     0.0, 1.0, 1e-14, 500),
                  ToleranceNotMetError);
}

TEST_CASE("halving the tolerance never increases the error") {
  const double exact = std::erf(3.0) * std::sqrt(constants::kPi) / 2.0;
  double prev_err = 1e300;
  for (double tol = 1e-4; tol > 1e-13; tol *= 0.5) {
    const auto q = integrate_adaptive(
        [](double x) { return std::exp(-x * x); }, 0.0, 3.0, tol, 4000000);
    const double err = std::fabs(q.value - exact);
    CHECK(err <= prev_err + 1e-15);
    prev_err = err;
  }
}
