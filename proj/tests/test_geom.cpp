#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "coulomb/error.hpp"
#include "coulomb/geom.hpp"

using namespace coulomb;
using cd = std::complex<double>;

TEST_CASE("region examples") {
  const auto a = region_check({4.0, 1.0}, 0.5);
  CHECK(a.re_positive_ok);
  CHECK(a.starlike_ok);
  CHECK(a.margins.square_gap == doctest::Approx(12.25 - 6.25));
  CHECK_FALSE(region_check({1.0, 1.0}, 2.0).re_positive_ok);
  const auto c = region_check({4.0, 1.0}, 3.5);
  CHECK_FALSE(c.starlike_ok);
  CHECK(c.margins.starlike_slack == doctest::Approx(4.0 - 1.0 / 3.0 - 0.25 - 3.5));
}

TEST_CASE("region monotonicity") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(-3.0, 6.0);
  for (int i = 0; i < 2000; ++i) {
    const cd L(u(rng), u(rng));
    const cd eta(u(rng), u(rng));
    const auto base = region_check(L, eta);
    const auto more_re = region_check(L + 0.5, eta);
    const auto more_eta = region_check(L, eta * 1.5);
    if (base.starlike_ok) CHECK(more_re.starlike_ok);
    if (base.re_positive_ok) CHECK(more_re.re_positive_ok);
    if (!base.starlike_ok) CHECK_FALSE(more_eta.starlike_ok);
    if (!base.re_positive_ok) CHECK_FALSE(more_eta.re_positive_ok);
  }
}

TEST_CASE("disk minimum of z g'/g") {
  const auto sine = disk_min_real(0.0, 0.0, DiskQuantity::zgpg, 64, 0.99);
  CHECK(sine.min_real > 0.0);
  CHECK(sine.points == 64u * 256u);
  CHECK(sine.ode_residual <= 1e-13);
  // On the real segment z g'/g = z cot z, whose minimum on the grid is at |z| = 0.99.
  CHECK(sine.min_real <= 0.99 / std::tan(0.99) + 1e-12);

  const auto small = disk_min_real({4.0, 1.0}, 0.5, DiskQuantity::zgpg, 16, 0.01);
  CHECK(small.min_real == doctest::Approx(1.0).epsilon(1e-2));
  CHECK(disk_min_real({4.0, 1.0}, 0.5, DiskQuantity::zgpg, 64, 0.99).min_real > 0.0);
}

TEST_CASE("Re g cannot stay positive on a disk around the origin") {
  // g(0) = 0 and g'(0) = 1, so Re g takes the sign of Re z near the origin.
  const auto m = disk_min_real({4.0, 1.0}, 0.5, DiskQuantity::g, 16, 0.1);
  CHECK(m.min_real < 0.0);
  CHECK(m.argmin.real() < 0.0);
}

TEST_CASE("disk preconditions") {
  CHECK_THROWS_AS(disk_min_real(0.0, 0.0, DiskQuantity::g, 8, 0.5), DomainError);
  CHECK_THROWS_AS(disk_min_real(0.0, 0.0, DiskQuantity::g, 16, 1.0), DomainError);
}

TEST_CASE("lemma gap examples") {
  for (double r : {0.1, 0.5, 0.9}) {
    CHECK(std::abs(lemma1_gap(0.3, 2.0, 1.0, r, LemmaSign::minus)) <= 1e-15);
    CHECK(std::abs(lemma1_gap(0.3, 2.0, 1.0, r, LemmaSign::plus)) <= 1e-15);
  }
  CHECK(lemma1_gap(0.0, 2.0, 1.0, cd(0.0, 0.5), LemmaSign::minus) == doctest::Approx(0.7));
  CHECK(lemma1_gap(1.0, 2.0, 1.0, cd(0.3, 0.3), LemmaSign::plus) >= 0.0);
}

TEST_CASE("lemma gap, minus sign, random tuples") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const double b = 0.05 + 3.0 * u(rng);
    const double a = b * (1.0 + 2.0 * u(rng)) + 1e-6;
    const cd z = std::polar(b * 0.999 * u(rng), 2.0 * M_PI * u(rng));
    worst = std::min(worst, lemma1_gap(u(rng), a, b, z, LemmaSign::minus));
  }
  CHECK(worst >= -1e-12);
}

TEST_CASE("lemma gap, plus sign, fails at negative real z") {
  // With '+' throughout, the inequality is the '-' case evaluated at -z, so
  // its equality point moves to z = -|z| and the stated right-hand side is
  // exceeded there.
  CHECK(lemma1_gap(0.0, 2.0, 1.0, -0.5, LemmaSign::plus) == doctest::Approx(-1.0 / 3.0));
  CHECK(lemma1_gap(0.5, 3.0, 1.0, cd(-0.8, 0.01), LemmaSign::plus) < 0.0);
}

TEST_CASE("lemma preconditions") {
  CHECK_THROWS_AS(lemma1_gap(1.5, 2.0, 1.0, 0.1, LemmaSign::minus), DomainError);
  CHECK_THROWS_AS(lemma1_gap(0.5, 1.0, 2.0, 0.1, LemmaSign::minus), DomainError);
  CHECK_THROWS_AS(lemma1_gap(0.5, 2.0, 1.0, 1.0, LemmaSign::minus), DomainError);
}
