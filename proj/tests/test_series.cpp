#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "coulomb/error.hpp"
#include "coulomb/gamma.hpp"
#include "coulomb/series.hpp"

using namespace coulomb;

TEST_CASE("coefficients at L=0, eta=0 are those of sin z / z") {
  const auto t = coefficients(CoulombParams(0.0, 0.0), 4);
  const double expected[] = {1.0, 0.0, -1.0 / 6.0, 0.0, 1.0 / 120.0};
  for (int n = 0; n <= 4; ++n) CHECK(t[n] == doctest::Approx(expected[n]).epsilon(1e-15));
}

TEST_CASE("coefficients at L=0, eta=-1") {
  const auto t = coefficients(CoulombParams(0.0, -1.0), 4);
  const double expected[] = {1.0, -1.0, 1.0 / 6.0, 1.0 / 18.0, -1.0 / 72.0};
  for (int n = 0; n <= 4; ++n) CHECK(t[n] == doctest::Approx(expected[n]).epsilon(1e-15));
}

TEST_CASE("coefficients satisfy the three-term recurrence") {
  for (double L : {-0.7, 0.0, 0.3, 2.5}) {
    for (double eta : {-3.0, -0.5, 0.0}) {
      const auto t = coefficients(CoulombParams(L, eta), 60);
      CHECK(t[0] == 1.0);
      CHECK(t[1] == doctest::Approx(eta / (L + 1.0)));
      for (std::size_t n = 2; n <= 60; ++n) {
        const double lhs = n * (n + 2.0 * L + 1.0) * t[n];
        const double rhs = 2.0 * eta * t[n - 1] - t[n - 2];
        CHECK(std::abs(lhs - rhs) <= 1e-14 * (std::abs(lhs) + std::abs(rhs) + 1e-300));
      }
    }
  }
}

TEST_CASE("coefficient table preconditions") {
  CHECK_THROWS_AS(coefficients(CoulombParams(0.0, 0.0), 0), DomainError);
  CHECK_THROWS_AS(coefficients(CoulombParams(0.0, 0.0), kMaxNMax + 1), DomainError);
  // n(n+2L+1) vanishes at n = 2 for L = -3/2.
  CHECK_THROWS_WITH_AS(coefficients(CoulombParams(-1.5, 0.0, unsafe), 8), doctest::Contains("n = 2"), DomainError);
}

TEST_CASE("series collapses to sin z / z") {
  const CoulombSeries s(CoulombParams(0.0, 0.0));
  for (double x : {0.1, 0.5, 1.0, 2.0, 5.0, 10.0}) {
    const auto v = s.eval(x);
    CHECK(v.p0 == doctest::Approx(std::sin(x) / x).epsilon(1e-13));
    const double dp = (x * std::cos(x) - std::sin(x)) / (x * x);
    CHECK(v.p1 == doctest::Approx(dp).epsilon(1e-12));
    CHECK(v.tail_estimate <= 1e-10);
  }
  CHECK(s.eval(0.0).p0 == 1.0);
}

TEST_CASE("P satisfies x P'' + 2(L+1) P' + (x - 2 eta) P = 0") {
  for (double L : {-0.4, 0.5, 2.5}) {
    for (double eta : {-2.0, -0.25}) {
      const CoulombSeries s(CoulombParams(L, eta));
      for (double x : {0.3, 1.7, 4.0}) {
        const auto v = s.eval(x);
        const double r = x * v.p2 + 2.0 * (L + 1.0) * v.p1 + (x - 2.0 * eta) * v.p0;
        const double size = std::abs(x * v.p2) + std::abs(2.0 * (L + 1.0) * v.p1) + std::abs((x - 2.0 * eta) * v.p0);
        CHECK(std::abs(r) <= 1e-13 * size);
      }
    }
  }
}

TEST_CASE("reflection: P(-z; L, eta) = P(z; L, -eta)") {
  const CoulombSeries a(CoulombParams(0.7, -1.3));
  const CoulombSeries b(CoulombParams(0.7, 1.3, unsafe));
  for (double x : {0.2, 1.0, 3.5}) {
    CHECK(a.eval(-x).p0 == doctest::Approx(b.eval(x).p0).epsilon(1e-13));
    CHECK(a.eval(-x).p1 == doctest::Approx(-b.eval(x).p1).epsilon(1e-12));
  }
}

TEST_CASE("complex series agrees with the real one on the real axis") {
  const CoulombSeries r(CoulombParams(1.0, -0.5));
  const ComplexCoulombSeries c(ComplexParams{1.0, -0.5});
  for (double x : {0.25, 1.5, 3.0}) {
    const auto v = c.eval({x, 0.0});
    CHECK(v.p0.real() == doctest::Approx(r.eval(x).p0).epsilon(1e-13));
    CHECK(std::abs(v.p0.imag()) <= 1e-15);
  }
}

TEST_CASE("table growth handles points that need many terms") {
  const CoulombSeries s(CoulombParams(0.0, 0.0), 16);
  CHECK(s.eval(15.0).p0 == doctest::Approx(std::sin(15.0) / 15.0).epsilon(1e-9));
}

TEST_CASE("normalization constant") {
  CHECK(normalization_constant(0.0, 0.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(normalization_constant(1.0, 0.0) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(normalization_constant(0.0, -1.0) == doctest::Approx(2.508972050168546).epsilon(1e-13));
  // Integer path and the log-gamma path agree near integers.
  CHECK(normalization_constant(2.0 + 1e-12, -0.7) == doctest::Approx(normalization_constant(2.0, -0.7)).epsilon(1e-10));
  for (double L : {-0.4, 0.5, 1.5, 3.0}) {
    CHECK(normalization_constant(L, 0.0) * inverse_normalization_duplication(L) == doctest::Approx(1.0).epsilon(1e-13));
  }
  CHECK_THROWS_AS(normalization_constant(-1.0, 0.0), DomainError);
}

TEST_CASE("log_gamma") {
  for (double x : {0.1, 0.5, 1.0, 2.5, 7.3, 30.0}) {
    CHECK(log_gamma({x, 0.0}).real() == doctest::Approx(std::lgamma(x)).epsilon(1e-13));
  }
  CHECK(log_gamma({-0.5, 0.0}).real() == doctest::Approx(std::log(2.0 * std::sqrt(std::numbers::pi))).epsilon(1e-13));
  // |Gamma(1 + i y)|^2 = pi y / sinh(pi y).
  const double y = 1.3;
  CHECK(2.0 * log_gamma({1.0, y}).real() ==
        doctest::Approx(std::log(std::numbers::pi * y / std::sinh(std::numbers::pi * y))).epsilon(1e-13));
  CHECK_THROWS_AS(log_gamma({-2.0, 0.0}), DomainError);
}

TEST_CASE("ratios at the origin and at poles") {
  const CoulombParams p(0.0, 0.0);
  CHECK(star_ratio(p, FunctionKind::g, 0.0) == 1.0);
  CHECK(conv_ratio(p, FunctionKind::f, 0.0) == 1.0);
  CHECK(star_ratio(p, FunctionKind::g, 1.0) == doctest::Approx(1.0 / std::tan(1.0)).epsilon(1e-13));
  CHECK(conv_ratio(p, FunctionKind::g, 0.5) == doctest::Approx(1.0 - 0.5 * std::tan(0.5)).epsilon(1e-13));
  CHECK_THROWS_AS(star_ratio(p, FunctionKind::g, std::numbers::pi), PoleError);
}

TEST_CASE("parameter region") {
  CHECK_THROWS_AS(CoulombParams(-1.0, 0.0), DomainError);
  CHECK_THROWS_AS(CoulombParams(0.0, 0.5), DomainError);
  CHECK_THROWS_AS(CoulombParams(NAN, 0.0, unsafe), DomainError);
  const CoulombParams u(0.0, 0.5, unsafe);
  CHECK(u.unsafe());
  CHECK_FALSE(u.in_radii_region());
  CHECK(CoulombParams(0.0, -1.0).reflected().eta() == 1.0);
  CHECK_FALSE(CoulombParams(0.0, -1.0).reflected().unsafe());
}

TEST_CASE("eta = 0: odd coefficients vanish and the g ratio is even") {
  const auto t = coefficients(CoulombParams(1.5, 0.0), 40);
  for (std::size_t n = 1; n <= 40; n += 2) CHECK(t[n] == 0.0);
  const CoulombSeries s(CoulombParams(1.5, 0.0));
  for (double r : {0.3, 1.1, 2.0}) {
    CHECK(star_ratio(s, FunctionKind::g, -r) == doctest::Approx(star_ratio(s, FunctionKind::g, r)).epsilon(1e-14));
  }
}

TEST_CASE("star ratio of f is (L + star ratio of g)/(L+1)") {
  for (double L : {-0.4, 0.5, 2.5}) {
    const CoulombSeries s(CoulombParams(L, -1.0));
    for (double r : {0.1, 0.4, 0.9}) {
      const double f = star_ratio(s, FunctionKind::f, r);
      const double g = star_ratio(s, FunctionKind::g, r);
      CHECK(std::abs(f - (L + g) / (L + 1.0)) <= 1e-15 * (1.0 + std::abs(f)));
    }
  }
}

TEST_CASE("z P(z) agrees with sin z on [0, 10]") {
  const CoulombSeries s(CoulombParams(0.0, 0.0));
  for (int k = 1; k <= 100; ++k) {
    const double z = 0.1 * k;
    if (std::abs(std::sin(z)) < 1e-3) continue;
    CHECK(z * s.eval(z).p0 == doctest::Approx(std::sin(z)).epsilon(1e-12));
  }
}
