#include "coulomb/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "coulomb/bisection.hpp"
#include "coulomb/error.hpp"

namespace coulomb {

std::string to_string(ZeroTarget target) {
  switch (target) {
    case ZeroTarget::F:
      return "F";
    case ZeroTarget::F_prime:
      return "F_prime";
    case ZeroTarget::g_prime:
      return "g_prime";
  }
  return "unknown";
}

std::vector<double> ZeroSet::positive_abscissas() const {
  std::vector<double> out;
  out.reserve(positive.size());
  for (const auto& z : positive) out.push_back(z.x);
  return out;
}

std::vector<double> ZeroSet::negative_abscissas() const {
  std::vector<double> out;
  out.reserve(negative.size());
  for (const auto& z : negative) out.push_back(z.x);
  return out;
}

double default_horizon(std::size_t count) {
  return std::max(20.0, 1.5 * static_cast<double>(count) * std::numbers::pi);
}

double target_value(ZeroTarget target, double L, const SeriesValue& v, double x) noexcept {
  switch (target) {
    case ZeroTarget::F:
      return v.p0;
    case ZeroTarget::F_prime:
      return (L + 1.0) * v.p0 + x * v.p1;
    case ZeroTarget::g_prime:
      return v.p0 + x * v.p1;
  }
  return v.p0;
}

double target_derivative(ZeroTarget target, double L, const SeriesValue& v, double x) noexcept {
  switch (target) {
    case ZeroTarget::F:
      return v.p1;
    case ZeroTarget::F_prime:
      return (L + 2.0) * v.p1 + x * v.p2;
    case ZeroTarget::g_prime:
      return 2.0 * v.p1 + x * v.p2;
  }
  return v.p1;
}

namespace {

constexpr double kDegeneracyRatio = 1e-8;

// Scans one side. `side` is +1 or -1; abscissas are side * s for s >= 0.
std::vector<Zero> scan_side(const RealAxisEvaluator& ev, ZeroTarget target, int side, std::size_t count,
                            double horizon, const ZeroOptions& options) {
  std::vector<Zero> out;
  if (count == 0) return out;
  const double L = ev.params().L();
  const auto value_at = [&](double s) {
    const double x = side * s;
    return target_value(target, L, ev.eval(x), x);
  };

  double s_prev = 0.0;
  double f_prev = value_at(0.0);
  for (std::size_t k = 1; out.size() < count; ++k) {
    const double s = std::min(static_cast<double>(k) * options.scan_step, horizon);
    const double f = value_at(s);
    if (f == 0.0 || std::signbit(f) != std::signbit(f_prev)) {
      BisectionResult root{s, s, s, 0};
      if (f != 0.0) {
        root = bisect(value_at, s_prev, s, options.refine_tol, options.max_bisections);
      }
      const double x = side * root.root;
      // A sample landing on a zero can produce two adjacent sign changes that
      // refine to the same point.
      if (!out.empty() && std::abs(x - out.back().x) <= 4.0 * options.refine_tol * std::max(1.0, std::abs(x))) {
        s_prev = s;
        f_prev = f;
        if (s >= horizon) break;
        continue;
      }
      const auto v = ev.eval(x);
      const double residual = std::abs(target_value(target, L, v, x));
      const double slope = std::abs(target_derivative(target, L, v, x));
      const double typical_slope = (std::abs(f_prev) + std::abs(f)) / (s - s_prev);
      if (slope <= kDegeneracyRatio * typical_slope) {
        std::ostringstream os;
        os << "degenerate zero of " << to_string(target) << " near x = " << x
           << ": target and its derivative vanish together";
        throw NumericalError(os.str());
      }
      const double lo = side > 0 ? root.lo : -root.hi;
      const double hi = side > 0 ? root.hi : -root.lo;
      out.push_back(Zero{x, lo, hi, residual, root.iterations});
    }
    if (s >= horizon) break;
    s_prev = s;
    f_prev = f;
  }
  return out;
}

}  // namespace

ZeroSet find_zeros(const RealAxisEvaluator& evaluator, ZeroTarget target, std::size_t count_pos,
                   std::size_t count_neg, const ZeroOptions& options) {
  if (!(options.scan_step > 0.0) || !(options.refine_tol > 0.0)) {
    throw DomainError("scan step and refine tolerance must be positive");
  }
  const double wanted = options.horizon > 0.0 ? options.horizon : default_horizon(std::max(count_pos, count_neg));
  const double horizon = std::min(wanted, evaluator.horizon());
  ZeroSet set{evaluator.params(), target, {}, {}, options.refine_tol, false};
  set.positive = scan_side(evaluator, target, +1, count_pos, horizon, options);
  set.negative = scan_side(evaluator, target, -1, count_neg, horizon, options);
  set.truncated = set.positive.size() < count_pos || set.negative.size() < count_neg;
  return set;
}

ZeroSet find_zeros(const CoulombParams& params, ZeroTarget target, std::size_t count_pos, std::size_t count_neg,
                   const ZeroOptions& options) {
  const double horizon = options.horizon > 0.0 ? options.horizon : default_horizon(std::max(count_pos, count_neg));
  const RealAxisEvaluator evaluator(params, horizon);
  return find_zeros(evaluator, target, count_pos, count_neg, options);
}

InterlacingReport interlacing_check(const ZeroSet& zeros_f, const ZeroSet& zeros_fprime) {
  if (zeros_f.target != ZeroTarget::F || zeros_fprime.target != ZeroTarget::F_prime) {
    throw DomainError("interlacing_check expects a zero set of F and one of F'");
  }
  if (zeros_f.params.L() != zeros_fprime.params.L() || zeros_f.params.eta() != zeros_fprime.params.eta()) {
    throw DomainError("interlacing_check: zero sets come from different parameters " + zeros_f.params.describe() +
                      " vs " + zeros_fprime.params.describe());
  }
  if (!(zeros_f.params.L() > -0.5)) {
    throw DomainError("interlacing of F and F' requires L > -1/2");
  }
  const std::size_t pos = std::min(zeros_f.positive.size(), zeros_fprime.positive.size());
  const std::size_t neg = std::min(zeros_f.negative.size(), zeros_fprime.negative.size());
  if (pos < 2 || neg < 2) {
    throw DomainError("interlacing_check needs at least two zeros per side in each set");
  }

  std::ostringstream detail;
  detail.precision(15);
  for (std::size_t i = 0; i < pos; ++i) {
    const double xp = zeros_fprime.positive[i].x;
    const double x = zeros_f.positive[i].x;
    if (!(xp < x)) {
      detail << "x'_" << i + 1 << " = " << xp << " is not below x_" << i + 1 << " = " << x;
      return {false, pos + neg, detail.str()};
    }
    if (i + 1 < pos && !(x < zeros_fprime.positive[i + 1].x)) {
      detail << "x_" << i + 1 << " = " << x << " is not below x'_" << i + 2 << " = " << zeros_fprime.positive[i + 1].x;
      return {false, pos + neg, detail.str()};
    }
  }
  for (std::size_t i = 0; i < neg; ++i) {
    const double yp = zeros_fprime.negative[i].x;
    const double y = zeros_f.negative[i].x;
    if (!(yp > y)) {
      detail << "y'_" << i + 1 << " = " << yp << " is not above y_" << i + 1 << " = " << y;
      return {false, pos + neg, detail.str()};
    }
    if (i + 1 < neg && !(y > zeros_fprime.negative[i + 1].x)) {
      detail << "y_" << i + 1 << " = " << y << " is not above y'_" << i + 2 << " = " << zeros_fprime.negative[i + 1].x;
      return {false, pos + neg, detail.str()};
    }
  }
  return {true, pos + neg, {}};
}

ProductValue product_eval(const ZeroSet& zeros, double z, std::size_t K) {
  if (zeros.target != ZeroTarget::F) {
    throw DomainError("product_eval needs the zeros of F");
  }
  if (K > zeros.positive.size() || K > zeros.negative.size()) {
    throw DomainError("product_eval: K = " + std::to_string(K) + " exceeds the available zeros");
  }
  const double L = zeros.params.L();
  double exponent = zeros.params.eta() * z / (L + 1.0);
  double comp = 0.0;
  const auto add = [&](double term) {
    const double t = exponent + term;
    comp += std::abs(exponent) >= std::abs(term) ? (exponent - t) + term : (term - t) + exponent;
    exponent = t;
  };
  double product = z;
  for (std::size_t n = 0; n < K; ++n) {
    for (const double rho : {zeros.positive[n].x, zeros.negative[n].x}) {
      product *= 1.0 - z / rho;
      add(z / rho);
    }
  }
  return {product * std::exp(exponent + comp), K};
}

}  // namespace coulomb
