#include "coulomb/radii.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "coulomb/bisection.hpp"
#include "coulomb/error.hpp"
#include "coulomb/real_axis.hpp"

namespace coulomb {

std::string to_string(Property property) {
  switch (property) {
    case Property::starlike:
      return "starlike";
    case Property::convex:
      return "convex";
    case Property::univalent:
      return "univalent";
  }
  return "unknown";
}

std::string to_string(FunctionKind kind) { return kind == FunctionKind::f ? "f" : "g"; }

ZeroTarget cap_target(FunctionKind kind, Property property) {
  if (property == Property::convex) {
    return kind == FunctionKind::g ? ZeroTarget::g_prime : ZeroTarget::F_prime;
  }
  return ZeroTarget::F;
}

DomainCap domain_cap(const CoulombParams& params, ZeroTarget target) {
  constexpr double kLargestHorizon = 5000.0;
  for (double horizon = default_horizon(1); horizon <= kLargestHorizon; horizon *= 2.0) {
    ZeroOptions options;
    options.horizon = horizon;
    const auto zs = find_zeros(params, target, 1, 1, options);
    if (zs.positive.empty()) continue;
    const Zero& x1 = zs.positive.front();
    double value = x1.x;
    if (!zs.negative.empty()) value = std::min(value, std::abs(zs.negative.front().x));
    return DomainCap{x1.x, value, x1.lo};
  }
  throw NumericalError("no positive zero of " + to_string(target) + " found for " + params.describe());
}

namespace {

double defining_ratio(const SeriesValue& v, double L, FunctionKind kind, Property property, double r) {
  return property == Property::convex ? conv_ratio_from(v, L, kind, r) : star_ratio_from(v, L, kind, r);
}

// Positive multiple of (ratio - beta) on the open search interval, built from
// the F-forms of the equations with F, rF', r^2 F'' replaced by A, B, D.
double defining_polynomial(const SeriesValue& v, double L, FunctionKind kind, Property property, double beta,
                           double r) {
  const double a = v.p0;
  const double b = (L + 1.0) * v.p0 + r * v.p1;
  const double d = L * (L + 1.0) * v.p0 + 2.0 * (L + 1.0) * r * v.p1 + r * r * v.p2;
  if (property != Property::convex) {
    // f: r F' - beta (L+1) F;  g: -[(L+beta) F - r F'].
    return kind == FunctionKind::f ? b - beta * (L + 1.0) * a : b - (L + beta) * a;
  }
  if (kind == FunctionKind::g) {
    // r^2 F'' - (2L+beta-1) r F' + L(L+beta) F.
    return d - (2.0 * L + beta - 1.0) * b + L * (L + beta) * a;
  }
  // (1 - beta) F F' + F F'' r - L/(L+1) r F'^2, scaled by r^{-2L-1}/C^2.
  return (1.0 - beta) * a * b + d * a - (L / (L + 1.0)) * b * b;
}

void validate(const RadiusQuery& query, Property property) {
  if (!(query.beta >= 0.0 && query.beta < 1.0)) {
    throw DomainError("beta must lie in [0, 1)");
  }
  const auto& p = query.params;
  if (p.unsafe()) return;
  if (!p.in_radii_region()) {
    throw DomainError("radius computations require L > -1 and eta <= 0; got " + p.describe());
  }
  if (property == Property::convex && query.kind == FunctionKind::f && !p.in_convexity_region()) {
    throw DomainError("radius of convexity of f requires L > -1/2; got " + p.describe());
  }
}

RadiusResult solve(const RadiusQuery& query, const RadiusOptions& options, Property property) {
  validate(query, property);
  const auto& params = query.params;
  const double L = params.L();
  const double beta = property == Property::univalent ? 0.0 : query.beta;
  const Property defining = property == Property::convex ? Property::convex : Property::starlike;

  RadiusResult result{query.kind, property, beta, 0.0, 0.0, 0.0, 0.0, 0.0, 0, !params.unsafe(), {}};
  if (params.unsafe()) result.method_flags.emplace_back("no-certificate");

  const DomainCap cap = domain_cap(params, cap_target(query.kind, defining));
  result.domain_cap = cap.value;
  if (cap.value < cap.positive) result.method_flags.emplace_back("domain-cap-negative-side");

  if (params.unsafe()) {
    const auto mono = ratio_monotonicity(params, query.kind, defining, 16);
    if (!mono.strictly_decreasing) {
      throw NumericalError("monotonicity violation while bracketing under unsafe parameters: " + mono.detail);
    }
  }

  const RealAxisEvaluator ev(params, cap.positive * (1.0 + 1e-9) + 1e-9, options.n_max);
  const auto ratio_at = [&](double r) { return defining_ratio(ev.eval(r), L, query.kind, defining, r); };

  const bool fast = defining == Property::starlike && beta == 0.0 && options.fast_path &&
                    options.form == EquationForm::ratio;
  if (fast) {
    const ZeroTarget target = query.kind == FunctionKind::g ? ZeroTarget::g_prime : ZeroTarget::F_prime;
    ZeroOptions zo;
    zo.refine_tol = options.abscissa_tol;
    const auto zs = find_zeros(ev, target, 1, 0, zo);
    if (zs.positive.empty() || !(zs.positive.front().x < cap.positive)) {
      throw NumericalError("beta = 0 fast path found no zero of " + to_string(target) + " below the domain cap");
    }
    const Zero& z = zs.positive.front();
    result.value = z.x;
    result.lo = z.lo;
    result.hi = z.hi;
    result.iterations = z.iterations;
    result.residual = ratio_at(z.x);
    result.method_flags.emplace_back("beta0-fast-path");
    return result;
  }

  const auto equation = [&](double r) {
    const auto v = ev.eval(r);
    if (options.form == EquationForm::ratio) return defining_ratio(v, L, query.kind, defining, r) - beta;
    return defining_polynomial(v, L, query.kind, defining, beta, r);
  };
  result.method_flags.emplace_back(options.form == EquationForm::ratio ? "ratio-form" : "polynomial-form");

  const double hi = cap.positive_lo;
  double lo = std::min(0.5, hi / 4.0);
  while (!(equation(lo) > 0.0)) {
    lo *= 0.5;
    if (lo < 1e-300) {
      throw NumericalError("no left bracket end with ratio above beta for " + params.describe());
    }
  }
  const auto root = bisect(equation, lo, hi, options.abscissa_tol, 200);
  result.value = root.root;
  result.lo = root.lo;
  result.hi = root.hi;
  result.iterations = root.iterations;
  result.residual = ratio_at(root.root) - beta;
  return result;
}

}  // namespace

RadiusResult radius_starlike(const RadiusQuery& query, const RadiusOptions& options) {
  return solve(query, options, Property::starlike);
}

RadiusResult radius_convex(const RadiusQuery& query, const RadiusOptions& options) {
  return solve(query, options, Property::convex);
}

RadiusResult radius_univalence(const CoulombParams& params, FunctionKind kind, const RadiusOptions& options) {
  return solve(RadiusQuery{params, kind, Property::univalent, 0.0}, options, Property::univalent);
}

RadiusResult solve_radius(const RadiusQuery& query, const RadiusOptions& options) {
  return solve(query, options, query.property);
}

MonotonicityReport ratio_monotonicity(const CoulombParams& params, FunctionKind kind, Property property,
                                      std::size_t samples) {
  const Property defining = property == Property::convex ? Property::convex : Property::starlike;
  const DomainCap cap = domain_cap(params, cap_target(kind, defining));
  const double right = std::min(cap.value, cap.positive_lo);
  const RealAxisEvaluator ev(params, cap.positive * (1.0 + 1e-9) + 1e-9);
  double prev = 0.0;
  for (std::size_t k = 1; k <= samples; ++k) {
    const double r = right * static_cast<double>(k) / static_cast<double>(samples + 1);
    const double value = defining_ratio(ev.eval(r), params.L(), kind, defining, r);
    if (k > 1 && !(value < prev)) {
      std::ostringstream os;
      os.precision(15);
      os << to_string(property) << " ratio of " << to_string(kind) << " rises from " << prev << " to " << value
         << " at r = " << r;
      return {false, samples, os.str()};
    }
    prev = value;
  }
  return {true, samples, {}};
}

}  // namespace coulomb
