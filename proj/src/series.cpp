#include "coulomb/series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "coulomb/error.hpp"
#include "coulomb/gamma.hpp"

namespace coulomb {

namespace {

constexpr double kPoleTolerance = 1e-14;

double magnitude(Wide x) { return static_cast<double>(wide_abs(x)); }
double magnitude(std::complex<double> x) { return std::abs(x); }

void require_n_max(std::size_t n_max) {
  if (n_max < 1) {
    throw DomainError("n_max must be at least 1");
  }
  if (n_max > kMaxNMax) {
    throw DomainError("n_max = " + std::to_string(n_max) + " exceeds the limit " + std::to_string(kMaxNMax));
  }
}

[[noreturn]] void throw_degenerate(std::size_t n) {
  throw DomainError("degenerate recurrence: n(n+2L+1) = 0 at n = " + std::to_string(n));
}

// Two-step geometric majorant 2 M q / (1 - q) for a sequence x_n obeying
// x_n <= q max(x_{n-1}, x_{n-2}) beyond the cut.
double block_tail(double m, double q) {
  if (m == 0.0) return 0.0;
  if (!(q < 1.0)) return std::numeric_limits<double>::infinity();
  return 2.0 * m * q / (1.0 - q);
}

// Shared summation for Wide (real axis) and complex<double> (disk).
template <class T>
BasicSeriesValue<T> sum_series(std::span<const T> a, T z, double re_L, double abs_eta, double tolerance,
                               double epsilon) {
  BasicSeriesValue<T> out;
  const std::size_t n_max = a.size() - 1;
  const double abs_z = magnitude(z);
  if (abs_z == 0.0) {
    out.p0 = a[0];
    out.p1 = n_max >= 1 ? a[1] : T(0);
    out.p2 = n_max >= 2 ? T(2) * a[2] : T(0);
    out.truncation_terms = std::min<std::size_t>(3, n_max + 1);
    return out;
  }

  T s0(0), s1(0), s2(0);
  T power(1);
  double scale = 0.0;
  int quiet = 0;
  double prev_abs = 0.0;
  for (std::size_t n = 0; n <= n_max; ++n) {
    const T term = a[n] * power;
    const T wn = static_cast<T>(static_cast<double>(n));
    s0 += term;
    s1 += wn * term;
    s2 += wn * (wn - T(1)) * term;
    const double t_abs = magnitude(term);
    scale += t_abs;
    quiet = (t_abs <= epsilon * scale) ? quiet + 1 : 0;

    if (quiet >= 3 && n >= 3) {
      const double nd = static_cast<double>(n);
      const double denom = (nd + 1.0) * (nd + 2.0 * re_L + 2.0);
      if (denom > 0.0) {
        const double q = (2.0 * abs_eta * abs_z + abs_z * abs_z) / denom;
        const double q1 = q * (nd + 1.0) / (nd - 1.0);
        const double q2 = q * (nd + 1.0) * nd / ((nd - 1.0) * (nd - 2.0));
        const double m0 = std::max(t_abs, prev_abs);
        const double m1 = std::max(nd * t_abs, (nd - 1.0) * prev_abs);
        const double m2 = std::max(nd * (nd - 1.0) * t_abs, (nd - 1.0) * (nd - 2.0) * prev_abs);
        const double tail0 = block_tail(m0, q);
        const double tail1 = block_tail(m1, q1) / abs_z;
        const double tail2 = block_tail(m2, q2) / (abs_z * abs_z);
        const T p1 = s1 / z;
        const T p2 = s2 / (z * z);
        if (tail0 <= tolerance * std::max(1.0, magnitude(s0)) && tail1 <= tolerance * std::max(1.0, magnitude(p1)) &&
            tail2 <= tolerance * std::max(1.0, magnitude(p2))) {
          out.p0 = s0;
          out.p1 = p1;
          out.p2 = p2;
          out.truncation_terms = n + 1;
          out.tail_estimate = std::max({tail0, tail1, tail2});
          return out;
        }
      }
    }
    prev_abs = t_abs;
    power *= z;
  }
  throw ConvergenceError("series tail bound not reached within n_max = " + std::to_string(n_max) +
                         " terms at |z| = " + std::to_string(abs_z) + "; regenerate with a larger n_max");
}

}  // namespace

std::vector<double> CoefficientTable::to_doubles() const {
  std::vector<double> out(a_.size());
  std::transform(a_.begin(), a_.end(), out.begin(), [](Wide x) { return static_cast<double>(x); });
  return out;
}

CoefficientTable coefficients(const CoulombParams& params, std::size_t n_max) {
  require_n_max(n_max);
  const Wide L = params.L();
  const Wide eta = params.eta();
  std::vector<Wide> a(n_max + 1);
  a[0] = 1;
  a[1] = eta / (L + 1);
  for (std::size_t n = 2; n <= n_max; ++n) {
    const Wide wn = static_cast<Wide>(static_cast<double>(n));
    const Wide denom = wn * (wn + 2 * L + 1);
    if (denom == 0) throw_degenerate(n);
    a[n] = (2 * eta * a[n - 1] - a[n - 2]) / denom;
  }
  return CoefficientTable(params, std::move(a));
}

ComplexCoefficientTable coefficients(const ComplexParams& params, std::size_t n_max) {
  require_n_max(n_max);
  using C = std::complex<double>;
  if (params.L + 1.0 == C(0.0)) {
    throw DomainError("L = -1 makes a_1 = eta/(L+1) undefined");
  }
  std::vector<C> a(n_max + 1);
  a[0] = 1.0;
  a[1] = params.eta / (params.L + 1.0);
  for (std::size_t n = 2; n <= n_max; ++n) {
    const double nd = static_cast<double>(n);
    const C denom = nd * (nd + 2.0 * params.L + 1.0);
    if (denom == C(0.0)) throw_degenerate(n);
    a[n] = (2.0 * params.eta * a[n - 1] - a[n - 2]) / denom;
  }
  return ComplexCoefficientTable(params, std::move(a));
}

BasicSeriesValue<Wide> eval_series_wide(const CoefficientTable& table, Wide z, double tolerance) {
  return sum_series<Wide>(table.wide(), z, table.params().L(), std::abs(table.params().eta()), tolerance,
                          static_cast<double>(kWideEpsilon));
}

SeriesValue eval_series(const CoefficientTable& table, double z, double tolerance) {
  if (!std::isfinite(z)) {
    throw DomainError("series evaluation point must be finite");
  }
  const auto w = eval_series_wide(table, static_cast<Wide>(z), tolerance);
  return SeriesValue{static_cast<double>(w.p0), static_cast<double>(w.p1), static_cast<double>(w.p2),
                     w.truncation_terms, w.tail_estimate};
}

ComplexSeriesValue eval_series(const ComplexCoefficientTable& table, std::complex<double> z, double tolerance) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw DomainError("series evaluation point must be finite");
  }
  return sum_series<std::complex<double>>(table.values(), z, table.params().L.real(), std::abs(table.params().eta),
                                          tolerance, std::numeric_limits<double>::epsilon());
}

CoulombSeries::CoulombSeries(const CoulombParams& params, std::size_t n_max, double tolerance)
    : table_(coefficients(params, n_max)), tolerance_(tolerance) {}

SeriesValue CoulombSeries::eval(double z) const {
  try {
    return eval_series(table_, z, tolerance_);
  } catch (const ConvergenceError&) {
    for (std::size_t n = 2 * table_.n_max(); n <= kMaxNMax; n *= 2) {
      const auto bigger = coefficients(table_.params(), n);
      try {
        return eval_series(bigger, z, tolerance_);
      } catch (const ConvergenceError&) {
      }
    }
    throw;
  }
}

ComplexCoulombSeries::ComplexCoulombSeries(const ComplexParams& params, std::size_t n_max, double tolerance)
    : table_(coefficients(params, n_max)), tolerance_(tolerance) {}

ComplexSeriesValue ComplexCoulombSeries::eval(std::complex<double> z) const {
  try {
    return eval_series(table_, z, tolerance_);
  } catch (const ConvergenceError&) {
    for (std::size_t n = 2 * table_.n_max(); n <= kMaxNMax; n *= 2) {
      const auto bigger = coefficients(table_.params(), n);
      try {
        return eval_series(bigger, z, tolerance_);
      } catch (const ConvergenceError&) {
      }
    }
    throw;
  }
}

double star_ratio_from(const SeriesValue& v, double L, FunctionKind kind, double r) noexcept {
  if (r == 0.0) return 1.0;
  const double num = r * v.p1;
  double g_ratio = 0.0;
  if (v.p0 == 0.0) {
    g_ratio = num > 0.0 ? std::numeric_limits<double>::infinity() : -std::numeric_limits<double>::infinity();
  } else {
    g_ratio = 1.0 + num / v.p0;
  }
  return kind == FunctionKind::g ? g_ratio : (L + g_ratio) / (L + 1.0);
}

double conv_ratio_from(const SeriesValue& v, double L, FunctionKind kind, double r) noexcept {
  constexpr double inf = std::numeric_limits<double>::infinity();
  if (r == 0.0) return 1.0;
  if (kind == FunctionKind::g) {
    const double gp = v.p0 + r * v.p1;
    const double num = r * (2.0 * v.p1 + r * v.p2);
    if (gp == 0.0) return num > 0.0 ? inf : -inf;
    return 1.0 + num / gp;
  }
  const double a = v.p0;
  const double b = (L + 1.0) * v.p0 + r * v.p1;
  const double d = L * (L + 1.0) * v.p0 + 2.0 * (L + 1.0) * r * v.p1 + r * r * v.p2;
  if (b == 0.0) return d > 0.0 ? inf : -inf;
  if (a == 0.0) return L * b > 0.0 ? -inf : inf;
  return 1.0 + d / b - (L / (L + 1.0)) * (b / a);
}

namespace {

void require_point(double r) {
  if (!std::isfinite(r)) {
    throw DomainError("ratio evaluation point must be finite");
  }
}

bool near_zero(double value, double other) {
  return std::abs(value) <= kPoleTolerance * (std::abs(value) + std::abs(other));
}

}  // namespace

double star_ratio(const CoulombSeries& series, FunctionKind kind, double r) {
  require_point(r);
  if (r == 0.0) return 1.0;
  const auto v = series.eval(r);
  if (near_zero(v.p0, r * v.p1)) {
    throw PoleError("star ratio pole: P(r) vanishes at r = " + std::to_string(r));
  }
  return star_ratio_from(v, series.params().L(), kind, r);
}

double star_ratio(const CoulombParams& params, FunctionKind kind, double r) {
  return star_ratio(CoulombSeries(params), kind, r);
}

double conv_ratio(const CoulombSeries& series, FunctionKind kind, double r) {
  require_point(r);
  if (r == 0.0) return 1.0;
  const auto v = series.eval(r);
  const double L = series.params().L();
  if (kind == FunctionKind::g) {
    if (near_zero(v.p0 + r * v.p1, std::abs(v.p0) + std::abs(r * v.p1))) {
      throw PoleError("convexity ratio pole: g'(r) vanishes at r = " + std::to_string(r));
    }
  } else {
    const double b = (L + 1.0) * v.p0 + r * v.p1;
    if (near_zero(b, std::abs((L + 1.0) * v.p0) + std::abs(r * v.p1))) {
      throw PoleError("convexity ratio pole: F'(r) vanishes at r = " + std::to_string(r));
    }
    if (L != 0.0 && near_zero(v.p0, r * v.p1)) {
      throw PoleError("convexity ratio pole: F(r) vanishes at r = " + std::to_string(r));
    }
  }
  return conv_ratio_from(v, L, kind, r);
}

double conv_ratio(const CoulombParams& params, FunctionKind kind, double r) {
  return conv_ratio(CoulombSeries(params), kind, r);
}

double normalization_constant(double L, double eta) {
  using std::numbers::pi;
  if (!(L > -1.0) || !std::isfinite(L) || !std::isfinite(eta)) {
    throw DomainError("normalization constant requires finite L > -1");
  }
  const double log2 = std::numbers::ln2;
  if (L == std::floor(L)) {
    // 2^L/(2L+1)! * sqrt(2 pi prod_{k=0}^{L}(k^2+eta^2) / (eta (e^{2 pi eta} - 1))),
    // with the k = 0 factor eta^2 cancelled against the eta in the denominator.
    const auto l = static_cast<long>(L);
    double log_c = L * log2 - std::lgamma(2.0 * L + 2.0);
    if (eta == 0.0) {
      return std::exp(log_c + std::lgamma(L + 1.0));
    }
    double log_prod = 0.0;
    for (long k = 1; k <= l; ++k) {
      log_prod += std::log(static_cast<double>(k * k) + eta * eta);
    }
    const double two_pi_eta = 2.0 * pi * eta;
    const double log_ratio = std::log(eta / std::expm1(two_pi_eta));
    return std::exp(log_c + 0.5 * (std::log(2.0 * pi) + log_prod + log_ratio));
  }
  const double log_abs_gamma = log_gamma({L + 1.0, eta}).real();
  return std::exp(L * log2 - pi * eta / 2.0 + log_abs_gamma - std::lgamma(2.0 * L + 2.0));
}

double inverse_normalization_duplication(double L) {
  using std::numbers::pi;
  if (!(L > -1.0)) {
    throw DomainError("duplication form requires L > -1");
  }
  return std::exp((L + 1.0) * std::numbers::ln2 + std::lgamma(L + 1.5) - 0.5 * std::log(pi));
}

}  // namespace coulomb
