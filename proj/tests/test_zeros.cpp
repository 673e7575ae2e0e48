#include <doctest.h>

#include <cmath>
#include <numbers>

#include "coulomb/bessel.hpp"
#include "coulomb/error.hpp"
#include "coulomb/zeros.hpp"

using namespace coulomb;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("zeros of F at L=0, eta=0 are n pi") {
  const auto zs = find_zeros(CoulombParams(0.0, 0.0), ZeroTarget::F, 10, 10);
  REQUIRE(zs.positive.size() == 10);
  REQUIRE(zs.negative.size() == 10);
  CHECK_FALSE(zs.truncated);
  for (std::size_t n = 0; n < 10; ++n) {
    CHECK(std::abs(zs.positive[n].x - (n + 1) * kPi) <= 1e-10);
    CHECK(std::abs(zs.negative[n].x + (n + 1) * kPi) <= 1e-10);
    CHECK(zs.positive[n].lo <= zs.positive[n].x);
    CHECK(zs.positive[n].x <= zs.positive[n].hi);
  }
}

TEST_CASE("zeros of F' and g' at L=0, eta=0 are (n - 1/2) pi") {
  // At L=0 both targets reduce to cos x; a scan sample lands exactly on pi/2.
  for (auto target : {ZeroTarget::F_prime, ZeroTarget::g_prime}) {
    const auto zs = find_zeros(CoulombParams(0.0, 0.0), target, 4, 4);
    REQUIRE(zs.positive.size() == 4);
    for (std::size_t n = 0; n < 4; ++n) {
      CHECK(std::abs(zs.positive[n].x - (n + 0.5) * kPi) <= 1e-10);
      CHECK(std::abs(zs.negative[n].x + (n + 0.5) * kPi) <= 1e-10);
    }
  }
}

TEST_CASE("first zero of F at eta=0 is the first zero of J_{L+1/2}") {
  const double expected[] = {3.83170597020751, 4.49340945790906, 5.13562230184068};
  int i = 0;
  for (double L : {0.5, 1.0, 1.5}) {
    const auto zs = find_zeros(CoulombParams(L, 0.0), ZeroTarget::F, 1, 0);
    CHECK(zs.positive.at(0).x == doctest::Approx(expected[i++]).epsilon(1e-12));
    CHECK(std::abs(bessel_j(L + 0.5, zs.positive.at(0).x)) <= 1e-11);
  }
}

TEST_CASE("negative zeros move outward for eta < 0") {
  const auto zs = find_zeros(CoulombParams(0.0, -1.0), ZeroTarget::F, 2, 2);
  CHECK(zs.positive[0].x < -zs.negative[0].x);
  CHECK(zs.negative[0].x > zs.negative[1].x);
}

TEST_CASE("truncated request") {
  ZeroOptions o;
  o.horizon = 10.0;
  const auto zs = find_zeros(CoulombParams(0.0, 0.0), ZeroTarget::F, 5, 0, o);
  CHECK(zs.truncated);
  CHECK(zs.positive.size() == 3);
}

TEST_CASE("interlacing of F and F'") {
  for (double L : {0.0, 0.5, 1.0}) {
    for (double eta : {-1.0, 0.0}) {
      const CoulombParams p(L, eta);
      const auto report = interlacing_check(find_zeros(p, ZeroTarget::F, 4, 4), find_zeros(p, ZeroTarget::F_prime, 4, 4));
      CHECK_MESSAGE(report.interlaced, report.detail);
      CHECK(report.pairs_checked == 8);
    }
  }
}

TEST_CASE("interlacing preconditions") {
  const CoulombParams p(-0.7, 0.0);
  const auto f = find_zeros(p, ZeroTarget::F, 3, 3);
  const auto d = find_zeros(p, ZeroTarget::F_prime, 3, 3);
  CHECK_THROWS_AS(interlacing_check(f, d), DomainError);
  const CoulombParams q(0.5, 0.0);
  CHECK_THROWS_AS(interlacing_check(find_zeros(q, ZeroTarget::F_prime, 3, 3), find_zeros(q, ZeroTarget::F, 3, 3)),
                  DomainError);
  CHECK_THROWS_AS(interlacing_check(find_zeros(q, ZeroTarget::F, 1, 1), find_zeros(q, ZeroTarget::F_prime, 1, 1)),
                  DomainError);
}

TEST_CASE("truncated product converges to z P(z)") {
  ZeroOptions o;
  o.horizon = 105.0 * kPi;
  const auto zs = find_zeros(CoulombParams(0.0, 0.0), ZeroTarget::F, 100, 100, o);
  const double e50 = std::abs(product_eval(zs, 1.0, 50).value - std::sin(1.0));
  const double e100 = std::abs(product_eval(zs, 1.0, 100).value - std::sin(1.0));
  CHECK(e100 / std::sin(1.0) <= 2.1e-3);
  CHECK(e50 / e100 >= 1.0 / 0.75);

  const CoulombParams p(1.0, -1.0);
  o.horizon = 0.0;
  const auto zp = find_zeros(p, ZeroTarget::F, 60, 60);
  const auto pv = product_eval(zp, 0.7, 60);
  const RealAxisEvaluator ev(p, 5.0);
  CHECK(pv.value == doctest::Approx(0.7 * ev.eval(0.7).p0).epsilon(1e-2));
  CHECK_THROWS(product_eval(zp, 0.7, 61));
}

TEST_CASE("eta = 0: negative zeros mirror positive ones") {
  const auto zs = find_zeros(CoulombParams(1.0, 0.0), ZeroTarget::F, 5, 5);
  for (std::size_t n = 0; n < 5; ++n) CHECK(std::abs(zs.negative[n].x + zs.positive[n].x) <= 1e-12);
}

TEST_CASE("no zero is skipped at the default scan step") {
  for (double L : {-0.4, 0.0, 0.5, 1.0, 2.5}) {
    for (double eta : {-2.0, -1.0, -0.25, 0.0}) {
      const CoulombParams p(L, eta);
      ZeroOptions fine;
      fine.scan_step /= 2.0;
      for (auto target : {ZeroTarget::F, ZeroTarget::F_prime, ZeroTarget::g_prime}) {
        const auto a = find_zeros(p, target, 10, 10);
        const auto b = find_zeros(p, target, 10, 10, fine);
        REQUIRE(a.positive.size() == b.positive.size());
        REQUIRE(a.negative.size() == b.negative.size());
        for (std::size_t n = 0; n < a.positive.size(); ++n) CHECK(std::abs(a.positive[n].x - b.positive[n].x) <= 1e-11);
        for (std::size_t n = 0; n < a.negative.size(); ++n) CHECK(std::abs(a.negative[n].x - b.negative[n].x) <= 1e-11);
      }
    }
  }
}

TEST_CASE("product at trivial points") {
  const auto zs = find_zeros(CoulombParams(0.0, 0.0), ZeroTarget::F, 5, 5);
  CHECK(product_eval(zs, 0.0, 5).value == 0.0);
  CHECK(std::abs(product_eval(zs, M_PI, 1).value) <= 1e-11);
  CHECK_THROWS_AS(product_eval(find_zeros(CoulombParams(0.0, 0.0), ZeroTarget::F_prime, 2, 2), 1.0, 1), DomainError);
}
