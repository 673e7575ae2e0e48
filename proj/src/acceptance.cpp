#include "coulomb/acceptance.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>

#include "coulomb/bessel.hpp"
#include "coulomb/error.hpp"
#include "coulomb/geom.hpp"
#include "coulomb/radii.hpp"
#include "coulomb/rayleigh.hpp"
#include "coulomb/series.hpp"
#include "coulomb/zeros.hpp"

namespace coulomb::acceptance {

namespace {

constexpr double kPi = std::numbers::pi;

// Plain bisection on an elementary function; deliberately separate from the
// library's root finder.
double oracle_root(const std::function<double(double)>& f, double lo, double hi) {
  double flo = f(lo);
  for (int i = 0; i < 200 && hi - lo > 1e-16 * std::max(1.0, std::abs(hi)); ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double rel_err(double value, double reference) {
  return std::abs(value - reference) / std::max(std::abs(reference), 1e-300);
}

std::string fmt(double v, int precision = 12) {
  std::ostringstream os;
  os.precision(precision);
  os << v;
  return os.str();
}

std::string point(double L, double eta) { return "(L=" + fmt(L, 6) + ", eta=" + fmt(eta, 6) + ")"; }

struct Tally {
  bool ok = true;
  std::vector<std::string> notes;
  void fail(std::string msg) {
    ok = false;
    if (notes.size() < 8) notes.push_back(std::move(msg));
  }
};

CriterionResult finish(int id, std::string title, Tally tally, std::vector<std::string> extra = {}) {
  CriterionResult r{id, std::move(title), tally.ok, false, std::move(tally.notes)};
  for (auto& e : extra) r.notes.push_back(std::move(e));
  return r;
}

template <class Fn>
void guarded(Tally& tally, const std::string& where, Fn&& fn) {
  try {
    fn();
  } catch (const std::exception& e) {
    tally.fail(where + ": " + e.what());
  }
}

CriterionResult sine_collapse() {
  Tally t;
  const CoulombParams p(0.0, 0.0);
  guarded(t, "zeros", [&] {
    const auto zs = find_zeros(p, ZeroTarget::F, 10, 0);
    if (zs.positive.size() != 10) t.fail("found " + std::to_string(zs.positive.size()) + " of 10 zeros");
    double worst = 0.0;
    for (std::size_t n = 0; n < zs.positive.size(); ++n) {
      worst = std::max(worst, std::abs(zs.positive[n].x - (n + 1) * kPi));
    }
    if (!(worst <= 1e-10)) t.fail("zeros of F deviate from n pi by " + fmt(worst, 3));
    t.notes.push_back("max |x_n - n pi| = " + fmt(worst, 3));
  });
  const double star_oracle = oracle_root([](double r) { return std::cos(r); }, 1.0, 2.0);
  const double conv_oracle = oracle_root([](double r) { return r * std::tan(r) - 1.0; }, 0.5, 1.2);
  for (auto kind : {FunctionKind::g, FunctionKind::f}) {
    guarded(t, "r*(" + to_string(kind) + ")", [&] {
      const double v = radius_starlike({p, kind, Property::starlike, 0.0}).value;
      if (!(std::abs(v - star_oracle) <= 1e-10)) t.fail("r*_0(" + to_string(kind) + ") = " + fmt(v, 15));
    });
  }
  guarded(t, "r^c(g)", [&] {
    const double v = radius_convex({p, FunctionKind::g, Property::convex, 0.0}).value;
    if (!(std::abs(v - conv_oracle) <= 1e-9)) t.fail("r^c_0(g) = " + fmt(v, 15) + ", oracle " + fmt(conv_oracle, 15));
    t.notes.push_back("r^c_0(g) = " + fmt(v, 13) + " (oracle " + fmt(conv_oracle, 13) + ")");
  });
  return finish(1, "sine collapse at L=0, eta=0", t);
}

CriterionResult bessel_cross() {
  Tally t;
  for (double L : {0.5, 1.0, 1.5}) {
    const double nu = L + 0.5;
    guarded(t, point(L, 0.0), [&] {
      const CoulombParams p(L, 0.0);
      // First sign change of J_nu on a fine grid, refined by the oracle bisection.
      double lo = 0.5;
      while (bessel_j(nu, lo + 0.05) > 0.0) lo += 0.05;
      const double j1 = oracle_root([nu](double x) { return bessel_j(nu, x); }, lo, lo + 0.05);
      const double x1 = find_zeros(p, ZeroTarget::F, 1, 0).positive.at(0).x;
      if (!(std::abs(x1 - j1) <= 1e-9)) t.fail(point(L, 0.0) + ": first zero " + fmt(x1, 15) + " vs " + fmt(j1, 15));

      const CoulombSeries series(p);
      const double scale = inverse_normalization_duplication(L) * std::sqrt(kPi / 2.0);
      double worst = 0.0;
      for (int k = 1; k <= 60; ++k) {
        const double z = 3.0 * k / 60.0;
        const double series_form = z * series.eval(z).p0;
        const double bessel_form = scale * std::pow(z, 0.5 - L) * bessel_j(nu, z);
        worst = std::max(worst, rel_err(series_form, bessel_form));
      }
      if (!(worst <= 1e-10)) t.fail(point(L, 0.0) + ": z P(z) vs Bessel form rel err " + fmt(worst, 3));
      t.notes.push_back(point(L, 0.0) + ": zero diff " + fmt(std::abs(x1 - j1), 3) + ", shape rel err " +
                        fmt(worst, 3));
    });
  }
  return finish(2, "Bessel cross-validation at eta=0", t);
}

CriterionResult closed_form_agreement() {
  Tally t;
  double worst = 0.0;
  for (double L : kGridL) {
    for (double eta : kGridEta) {
      guarded(t, point(L, eta), [&] {
        const CoulombParams p(L, eta);
        for (auto family : {Family::sigma, Family::varsigma}) {
          const auto ex = sums(p, family, SumMethod::extracted, 2).values.at(2);
          const double printed = family == Family::sigma ? sigma2_closed(L, eta) : varsigma2_closed(L, eta);
          const double e = rel_err(printed, ex);
          worst = std::max(worst, e);
          if (!(e <= 1e-10)) t.fail(point(L, eta) + " " + to_string(family) + "_2: " + fmt(printed) + " vs " + fmt(ex));
        }
      });
    }
  }
  t.notes.push_back("max relative difference " + fmt(worst, 3));
  return finish(3, "printed sigma_2 and varsigma_2 match extraction", t);
}

CriterionResult documented_discrepancy() {
  Tally t;
  guarded(t, "sigma_3", [&] {
    const CoulombParams p(0.0, -1.0);
    for (auto family : {Family::sigma, Family::varsigma}) {
      const auto s = sums(p, family, SumMethod::closed_form, 3);
      const double printed = s.values.at(3);
      const auto it = s.discrepancies.find(3);
      const std::string name = to_string(family) + "_3";
      if (it == s.discrepancies.end()) {
        if (family == Family::sigma) t.fail(name + " discrepancy not flagged");
        continue;
      }
      const double extracted = it->second;
      if (family == Family::sigma && !(std::abs(printed - 6.0) <= 1e-12 && std::abs(extracted - 13.0 / 3.0) <= 1e-12)) {
        t.fail(name + ": printed " + fmt(printed) + ", extracted " + fmt(extracted));
      }
      t.notes.push_back("expected discrepancy flagged: " + name + " at (L=0, eta=-1) printed " + fmt(printed) +
                        ", extracted " + fmt(extracted) + " (extraction used for bounds)");
    }
  });
  return finish(4, "printed sigma_3 flagged against extraction", t);
}

CriterionResult euler_rayleigh_bracketing() {
  Tally t;
  double min_slack = std::numeric_limits<double>::infinity();
  for (double L : kGridL) {
    for (double eta : kGridEta) {
      if (!(eta < 0.0)) continue;
      const CoulombParams p(L, eta);
      for (auto kind : {FunctionKind::f, FunctionKind::g}) {
        guarded(t, point(L, eta), [&] {
          const double r = radius_univalence(p, kind).value;
          const auto b2 = euler_rayleigh_bounds(p, kind, 2);
          const auto b4 = euler_rayleigh_bounds(p, kind, 4);
          const std::string where = point(L, eta) + " " + to_string(kind);
          if (!b2.upper) {
            t.fail(where + ": upper bound undefined");
            return;
          }
          const double slack = std::min(r - b2.lower, *b2.upper - r);
          min_slack = std::min(min_slack, slack);
          if (!(slack > 1e-12)) {
            t.fail(where + ": " + fmt(b2.lower) + " < " + fmt(r) + " < " + fmt(*b2.upper) + " violated");
          }
          if (!(b4.lower >= b2.lower)) t.fail(where + ": lower(m=4) " + fmt(b4.lower) + " < lower(m=2) " + fmt(b2.lower));
        });
      }
    }
  }
  t.notes.push_back("smallest bracket slack " + fmt(min_slack, 4));
  return finish(5, "Euler-Rayleigh bounds bracket the radius of univalence", t);
}

CriterionResult eta_zero_identity() {
  Tally t;
  for (double L : {0.0, 1.0, 2.5}) {
    guarded(t, point(L, 0.0), [&] {
      const CoulombParams p(L, 0.0);
      const auto b = euler_rayleigh_bounds(p, FunctionKind::g, 2);
      const double simplified = std::sqrt((2.0 * L + 3.0) / 3.0);
      const double from_sum = std::pow(b.s_m, -0.5);
      if (!(std::abs(b.lower - simplified) <= 1e-12 && std::abs(from_sum - simplified) <= 1e-12)) {
        t.fail(point(L, 0.0) + ": lower " + fmt(b.lower, 16) + " vs " + fmt(simplified, 16));
      }
      if (b.upper) t.fail(point(L, 0.0) + ": upper bound defined (" + fmt(*b.upper) + ")");
    });
  }
  return finish(6, "eta=0 lower bound equals sqrt((2L+3)/3), upper undefined", t);
}

CriterionResult interlacing() {
  Tally t;
  for (double L : {0.0, 0.5, 1.0}) {
    for (double eta : {-1.0, 0.0}) {
      guarded(t, point(L, eta), [&] {
        const CoulombParams p(L, eta);
        const auto zf = find_zeros(p, ZeroTarget::F, 4, 4);
        const auto zd = find_zeros(p, ZeroTarget::F_prime, 4, 4);
        if (zf.truncated || zd.truncated) t.fail(point(L, eta) + ": fewer than 4 zeros per side");
        const auto report = interlacing_check(zf, zd);
        if (!report.interlaced) t.fail(point(L, eta) + ": " + report.detail);
      });
    }
  }
  return finish(7, "zeros of F and F' interlace", t);
}

CriterionResult monotonicity() {
  Tally t;
  std::size_t checks = 0;
  for (double L : kGridL) {
    for (double eta : kGridEta) {
      const CoulombParams p(L, eta);
      for (auto kind : {FunctionKind::f, FunctionKind::g}) {
        for (auto prop : {Property::starlike, Property::convex}) {
          guarded(t, point(L, eta), [&] {
            const auto m = ratio_monotonicity(p, kind, prop, 64);
            ++checks;
            if (!m.strictly_decreasing) t.fail(point(L, eta) + ": " + m.detail);
          });
        }
      }
    }
  }
  t.notes.push_back(std::to_string(checks) + " ratio curves sampled at 64 points");
  return finish(8, "defining ratios strictly decrease on (0, domain cap)", t);
}

CriterionResult lemma_suite() {
  Tally t;
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (auto sign : {LemmaSign::minus, LemmaSign::plus}) {
    const std::string label = sign == LemmaSign::minus ? "sign -" : "sign +";
    std::size_t negatives = 0;
    double worst = 0.0;
    std::complex<double> worst_z;
    double worst_a = 0.0;
    double worst_b = 0.0;
    double worst_lambda = 0.0;
    double equality_worst = 0.0;
    for (int i = 0; i < 10000; ++i) {
      const double lambda = unit(rng);
      const double b = 0.1 + 1.9 * unit(rng);
      const double a = b + 0.01 + 2.0 * unit(rng);
      const double m = 0.999 * b * unit(rng);
      const double theta = 2.0 * kPi * unit(rng);
      const auto z = std::polar(m, theta);
      const double gap = lemma1_gap(lambda, a, b, z, sign);
      if (gap < -1e-12) {
        ++negatives;
        if (gap < worst) {
          worst = gap;
          worst_z = z;
          worst_a = a;
          worst_b = b;
          worst_lambda = lambda;
        }
      }
      equality_worst = std::max(equality_worst, std::abs(lemma1_gap(lambda, a, b, std::complex<double>(m, 0.0), sign)));
    }
    if (!(equality_worst <= 1e-12)) t.fail(label + ": gap at real positive z reaches " + fmt(equality_worst, 3));
    if (negatives > 0) {
      t.fail(label + ": " + std::to_string(negatives) + " of 10000 tuples have gap < -1e-12; worst " + fmt(worst, 4) +
             " at lambda=" + fmt(worst_lambda, 4) + ", a=" + fmt(worst_a, 4) + ", b=" + fmt(worst_b, 4) +
             ", z=" + fmt(worst_z.real(), 4) + (worst_z.imag() < 0 ? "" : "+") + fmt(worst_z.imag(), 4) + "i");
    } else {
      t.notes.push_back(label + ": no negative gap in 10000 tuples");
    }
  }
  // With every '-' replaced by '+' the inequality is the '-' case at -z, and
  // its equality point z = |z| moves to z = -|z|; the '+' form fails there.
  const double counter = lemma1_gap(0.0, 2.0, 1.0, std::complex<double>(-0.5, 0.0), LemmaSign::plus);
  t.notes.push_back("sign + counterexample: gap(lambda=0, a=2, b=1, z=-0.5) = " + fmt(counter, 6));
  CriterionResult r = finish(9, "two-zero real-part inequality, both signs", t);
  r.known_unattainable = !r.passed;
  return r;
}

CriterionResult disk_check() {
  Tally t;
  const std::complex<double> L(4.0, 1.0);
  const std::complex<double> eta(0.5, 0.0);
  guarded(t, "Re g", [&] {
    const auto m = disk_min_real(L, eta, DiskQuantity::g, 64, 0.99);
    std::ostringstream os;
    os.precision(6);
    os << "(L=4+i, eta=0.5) min Re g = " << m.min_real << " at z = " << m.argmin.real() << (m.argmin.imag() < 0 ? "" : "+")
       << m.argmin.imag() << "i; g(0) = 0 and g(z) = z + O(z^2), so Re g < 0 on the left half of the disk";
    if (!(m.min_real > 0.0)) {
      t.fail(os.str());
    } else {
      t.notes.push_back(os.str());
    }
  });
  bool starlike_part_ok = true;
  for (auto [Lc, ec, label] : {std::tuple{L, eta, std::string("(L=4+i, eta=0.5)")},
                               std::tuple{std::complex<double>(0.0), std::complex<double>(0.0), std::string("(L=0, eta=0)")}}) {
    guarded(t, label, [&] {
      const auto m = disk_min_real(Lc, ec, DiskQuantity::zgpg, 64, 0.99);
      if (!(m.min_real > 0.0)) {
        starlike_part_ok = false;
        t.fail(label + " min Re(z g'/g) = " + fmt(m.min_real, 6));
      } else {
        t.notes.push_back(label + " min Re(z g'/g) = " + fmt(m.min_real, 6) + ", ODE residual " + fmt(m.ode_residual, 3));
      }
    });
  }
  CriterionResult r = finish(10, "unit-disk grid check for complex parameters", t);
  r.known_unattainable = !r.passed && starlike_part_ok;
  return r;
}

CriterionResult product_vs_series() {
  Tally t;
  guarded(t, "product", [&] {
    ZeroOptions options;
    options.horizon = 205.0 * kPi;
    const auto zs = find_zeros(CoulombParams(0.0, 0.0), ZeroTarget::F, 200, 200, options);
    if (zs.truncated) t.fail("fewer than 200 zeros per side");
    const double exact = std::sin(1.0);
    double prev = 0.0;
    for (std::size_t K : {25u, 50u, 100u, 200u}) {
      const double err = rel_err(product_eval(zs, 1.0, K).value, exact);
      t.notes.push_back("K=" + std::to_string(K) + ": relative error " + fmt(err, 4));
      if (K == 100 && !(err <= 2.1e-3)) t.fail("K=100 error " + fmt(err, 4) + " exceeds 2.1e-3");
      if (K > 25 && !(prev / err >= 1.0 / 0.75)) t.fail("K=" + std::to_string(K) + " shrink factor " + fmt(prev / err, 4));
      prev = err;
    }
  });
  return finish(11, "truncated product converges to sin(1)", t);
}

CriterionResult form_equivalence() {
  Tally t;
  double worst = 0.0;
  RadiusOptions poly;
  poly.form = EquationForm::polynomial;
  for (double L : kGridL) {
    for (double eta : kGridEta) {
      const CoulombParams p(L, eta);
      for (auto kind : {FunctionKind::f, FunctionKind::g}) {
        for (auto prop : {Property::starlike, Property::convex}) {
          for (double beta : kGridBeta) {
            guarded(t, point(L, eta), [&] {
              const RadiusQuery q{p, kind, prop, beta};
              const double a = solve_radius(q).value;
              const double b = solve_radius(q, poly).value;
              const double e = rel_err(b, a);
              worst = std::max(worst, e);
              if (!(e <= 1e-10)) {
                t.fail(point(L, eta) + " " + to_string(kind) + " " + to_string(prop) + " beta=" + fmt(beta, 3) + ": " +
                       fmt(a, 15) + " vs " + fmt(b, 15));
              }
            });
          }
        }
      }
    }
  }
  t.notes.push_back("max relative difference " + fmt(worst, 3));
  return finish(12, "ratio form and F-polynomial form give the same radii", t);
}

}  // namespace

CriterionResult run(int id) {
  switch (id) {
    case 1:
      return sine_collapse();
    case 2:
      return bessel_cross();
    case 3:
      return closed_form_agreement();
    case 4:
      return documented_discrepancy();
    case 5:
      return euler_rayleigh_bracketing();
    case 6:
      return eta_zero_identity();
    case 7:
      return interlacing();
    case 8:
      return monotonicity();
    case 9:
      return lemma_suite();
    case 10:
      return disk_check();
    case 11:
      return product_vs_series();
    case 12:
      return form_equivalence();
    default:
      throw DomainError("no acceptance criterion " + std::to_string(id));
  }
}

std::vector<CriterionResult> run_all() {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= 12; ++id) out.push_back(run(id));
  return out;
}

std::string status_label(const CriterionResult& result) {
  if (result.passed) return "PASS";
  return result.known_unattainable ? "FAIL (known)" : "FAIL";
}

bool suite_ok(const std::vector<CriterionResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CriterionResult& r) { return r.passed || r.known_unattainable; });
}

}  // namespace coulomb::acceptance
