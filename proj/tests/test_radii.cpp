#include <doctest.h>

#include <cmath>
#include <functional>
#include <numbers>

#include "coulomb/error.hpp"
#include "coulomb/radii.hpp"

using namespace coulomb;

namespace {

double oracle(const std::function<double(double)>& f, double lo, double hi) {
  const bool neg_lo = f(lo) < 0.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    ((f(mid) < 0.0) == neg_lo ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("sine case: radii against elementary roots") {
  const CoulombParams p(0.0, 0.0);
  for (auto kind : {FunctionKind::f, FunctionKind::g}) {
    CHECK(radius_starlike({p, kind, Property::starlike, 0.0}).value ==
          doctest::Approx(std::numbers::pi / 2).epsilon(1e-12));
  }
  const double half = oracle([](double r) { return r / std::tan(r) - 0.5; }, 0.5, 1.5);
  CHECK(half == doctest::Approx(1.16556118520721).epsilon(1e-13));
  CHECK(radius_starlike({p, FunctionKind::g, Property::starlike, 0.5}).value == doctest::Approx(half).epsilon(1e-11));

  const double conv0 = oracle([](double r) { return r * std::tan(r) - 1.0; }, 0.5, 1.2);
  const double conv_half = oracle([](double r) { return r * std::tan(r) - 0.5; }, 0.3, 1.0);
  CHECK(conv0 == doctest::Approx(0.860333589019380).epsilon(1e-13));
  CHECK(conv_half == doctest::Approx(0.653271187094403).epsilon(1e-13));
  CHECK(radius_convex({p, FunctionKind::g, Property::convex, 0.0}).value == doctest::Approx(conv0).epsilon(1e-11));
  CHECK(radius_convex({p, FunctionKind::g, Property::convex, 0.5}).value == doctest::Approx(conv_half).epsilon(1e-11));
}

TEST_CASE("eta=0, L=1/2: convex radius of g equals 1") {
  // g = 3(sin z - z cos z)/z^2 up to scale; 1 + r g''/g' vanishes at r = 1.
  const auto r = radius_convex({CoulombParams(0.5, 0.0), FunctionKind::g, Property::convex, 0.0});
  CHECK(r.value == doctest::Approx(1.0).epsilon(1e-11));
}

TEST_CASE("radius at L=0, eta=-1") {
  const auto r = radius_univalence(CoulombParams(0.0, -1.0), FunctionKind::g);
  CHECK(r.value == doctest::Approx(0.6154350891).epsilon(1e-9));
  CHECK(r.property == Property::univalent);
  CHECK(r.certified);
  CHECK(std::abs(r.residual) <= 1e-9);
  CHECK(r.lo <= r.value);
  CHECK(r.value <= r.hi);
  CHECK(r.domain_cap == doctest::Approx(1.4673955074).epsilon(1e-9));
}

TEST_CASE("f and g coincide at L=0") {
  const CoulombParams p(0.0, -0.7);
  for (auto prop : {Property::starlike, Property::convex}) {
    for (double beta : {0.0, 0.3}) {
      const double a = solve_radius({p, FunctionKind::f, prop, beta}).value;
      const double b = solve_radius({p, FunctionKind::g, prop, beta}).value;
      CHECK(a == doctest::Approx(b).epsilon(1e-11));
    }
  }
}

TEST_CASE("ordering: convex < starlike, order beta shrinks the radius") {
  for (double L : {-0.4, 1.0, 2.5}) {
    for (double eta : {-2.0, -0.25}) {
      const CoulombParams p(L, eta);
      for (auto kind : {FunctionKind::f, FunctionKind::g}) {
        const double s0 = radius_starlike({p, kind, Property::starlike, 0.0}).value;
        const double s5 = radius_starlike({p, kind, Property::starlike, 0.5}).value;
        const double c0 = radius_convex({p, kind, Property::convex, 0.0}).value;
        CHECK(c0 < s0);
        CHECK(s5 < s0);
      }
    }
  }
}

TEST_CASE("ratio and polynomial forms agree") {
  RadiusOptions poly;
  poly.form = EquationForm::polynomial;
  for (auto prop : {Property::starlike, Property::convex}) {
    const RadiusQuery q{CoulombParams(1.0, -1.0), FunctionKind::f, prop, 0.25};
    CHECK(solve_radius(q).value == doctest::Approx(solve_radius(q, poly).value).epsilon(1e-10));
  }
}

TEST_CASE("fast path and bisection agree at beta = 0") {
  RadiusOptions slow;
  slow.fast_path = false;
  const RadiusQuery q{CoulombParams(2.5, -1.0), FunctionKind::f, Property::starlike, 0.0};
  const auto a = solve_radius(q);
  const auto b = solve_radius(q, slow);
  CHECK(a.value == doctest::Approx(b.value).epsilon(1e-10));
  CHECK(a.method_flags.back() == "beta0-fast-path");
  CHECK(b.method_flags.back() == "ratio-form");
}

TEST_CASE("preconditions") {
  const CoulombParams p(0.0, -1.0);
  CHECK_THROWS_AS(radius_starlike({p, FunctionKind::g, Property::starlike, 1.0}), DomainError);
  CHECK_THROWS_AS(radius_starlike({p, FunctionKind::g, Property::starlike, -0.1}), DomainError);
  CHECK_THROWS_AS(radius_convex({CoulombParams(-0.7, -1.0), FunctionKind::f, Property::convex, 0.0}), DomainError);
  CHECK_NOTHROW(radius_convex({CoulombParams(-0.7, -1.0), FunctionKind::g, Property::convex, 0.0}));
}

TEST_CASE("unsafe parameters lose the certificate") {
  const auto r = radius_starlike({CoulombParams(0.0, 0.05, unsafe), FunctionKind::g, Property::starlike, 0.0});
  CHECK_FALSE(r.certified);
  CHECK(r.method_flags.front() == "no-certificate");
}

TEST_CASE("monotonicity of the defining ratios") {
  for (auto prop : {Property::starlike, Property::convex}) {
    const auto m = ratio_monotonicity(CoulombParams(0.5, -2.0), FunctionKind::f, prop, 64);
    CHECK_MESSAGE(m.strictly_decreasing, m.detail);
  }
}

TEST_CASE("grid invariants: bracket, residual, cap, ordering") {
  for (double L : {-0.4, 0.0, 0.5, 1.0, 2.5}) {
    for (double eta : {-2.0, -1.0, -0.25, 0.0}) {
      const CoulombParams p(L, eta);
      for (auto kind : {FunctionKind::f, FunctionKind::g}) {
        double prev_star = INFINITY;
        double prev_conv = INFINITY;
        for (double beta : {0.0, 0.25, 0.5, 0.75}) {
          const auto s = radius_starlike({p, kind, Property::starlike, beta});
          const auto c = radius_convex({p, kind, Property::convex, beta});
          for (const auto* r : {&s, &c}) {
            CHECK(r->lo <= r->value);
            CHECK(r->value <= r->hi);
            CHECK(r->hi - r->lo <= 1e-12);
            CHECK(std::abs(r->residual) <= 1e-10);
            CHECK(r->value < r->domain_cap);
          }
          CHECK(c.value <= s.value);
          CHECK(s.value < prev_star);
          CHECK(c.value < prev_conv);
          prev_star = s.value;
          prev_conv = c.value;
        }
      }
    }
  }
}
