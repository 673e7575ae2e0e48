#pragma once

// Power-series core for the regular Coulomb wave function.
//
// F_{L,eta}(z) = C_L(eta) z^{L+1} P(z) with P(z) = sum_n a_n z^n, where
//   a_0 = 1, a_1 = eta/(L+1), n(n+2L+1) a_n = 2 eta a_{n-1} - a_{n-2}.
// Every ratio used downstream is expressed through P, P' and P'', so neither
// the fractional power z^{L+1} nor C_L(eta) is ever formed.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "coulomb/params.hpp"
#include "coulomb/wide.hpp"

namespace coulomb {

inline constexpr std::size_t kDefaultNMax = 256;
inline constexpr std::size_t kMaxNMax = 4096;
inline constexpr double kDefaultSeriesTolerance = 1e-10;

// a_0..a_{n_max} for real (L, eta), generated and stored in Wide precision.
class CoefficientTable {
 public:
  const CoulombParams& params() const noexcept { return params_; }
  std::size_t n_max() const noexcept { return a_.size() - 1; }
  double operator[](std::size_t n) const { return static_cast<double>(a_.at(n)); }
  std::span<const Wide> wide() const noexcept { return a_; }
  std::vector<double> to_doubles() const;

 private:
  friend CoefficientTable coefficients(const CoulombParams& params, std::size_t n_max);
  CoefficientTable(CoulombParams params, std::vector<Wide> a) : params_(params), a_(std::move(a)) {}

  CoulombParams params_;
  std::vector<Wide> a_;
};

// Same recurrence with complex L and eta.
class ComplexCoefficientTable {
 public:
  const ComplexParams& params() const noexcept { return params_; }
  std::size_t n_max() const noexcept { return a_.size() - 1; }
  std::complex<double> operator[](std::size_t n) const { return a_.at(n); }
  std::span<const std::complex<double>> values() const noexcept { return a_; }

 private:
  friend ComplexCoefficientTable coefficients(const ComplexParams& params, std::size_t n_max);
  ComplexCoefficientTable(ComplexParams params, std::vector<std::complex<double>> a)
      : params_(params), a_(std::move(a)) {}

  ComplexParams params_;
  std::vector<std::complex<double>> a_;
};

/// Generates a_0..a_{n_max}. Throws DomainError when n(n+2L+1) vanishes for
/// some n <= n_max (the message names the index) or when n_max < 1.
CoefficientTable coefficients(const CoulombParams& params, std::size_t n_max);
ComplexCoefficientTable coefficients(const ComplexParams& params, std::size_t n_max);

// P, P', P'' at a point together with truncation diagnostics.
template <class T>
struct BasicSeriesValue {
  T p0{};
  T p1{};
  T p2{};
  std::size_t truncation_terms = 0;
  double tail_estimate = 0.0;
};

using SeriesValue = BasicSeriesValue<double>;
using ComplexSeriesValue = BasicSeriesValue<std::complex<double>>;

/// Truncated sums of P, P', P''.
///
/// Summation stops at the first index N where three consecutive terms are
/// below the working epsilon times the running absolute sum and the
/// two-step geometric majorant of the discarded tail,
///   2 M q / (1 - q),  q = (2|eta||z| + |z|^2) / ((N+1)(N+2L+2)),
///   M = max(|a_N z^N|, |a_{N-1} z^{N-1}|),
/// is below `tolerance * max(1, |P|)`. The same construction bounds the
/// derivative tails. Throws ConvergenceError if the table ends first.
SeriesValue eval_series(const CoefficientTable& table, double z, double tolerance = kDefaultSeriesTolerance);
ComplexSeriesValue eval_series(const ComplexCoefficientTable& table, std::complex<double> z,
                               double tolerance = kDefaultSeriesTolerance);

// Wide-precision variant used by the zero finder near the origin.
BasicSeriesValue<Wide> eval_series_wide(const CoefficientTable& table, Wide z, double tolerance);

/// Real-parameter series with automatic table growth: starts from `n_max`
/// coefficients and doubles up to kMaxNMax when a point needs more terms.
/// Immutable; eval() never mutates the stored table.
class CoulombSeries {
 public:
  explicit CoulombSeries(const CoulombParams& params, std::size_t n_max = kDefaultNMax,
                         double tolerance = kDefaultSeriesTolerance);

  const CoulombParams& params() const noexcept { return table_.params(); }
  const CoefficientTable& table() const noexcept { return table_; }
  double tolerance() const noexcept { return tolerance_; }

  SeriesValue eval(double z) const;

 private:
  CoefficientTable table_;
  double tolerance_;
};

class ComplexCoulombSeries {
 public:
  explicit ComplexCoulombSeries(const ComplexParams& params, std::size_t n_max = kDefaultNMax,
                                double tolerance = kDefaultSeriesTolerance);

  const ComplexParams& params() const noexcept { return table_.params(); }
  ComplexSeriesValue eval(std::complex<double> z) const;

 private:
  ComplexCoefficientTable table_;
  double tolerance_;
};

enum class FunctionKind { f, g };

// r g'(r)/g(r) = 1 + r P'/P for g; (L + r g'/g)/(L+1) for f.
double star_ratio(const CoulombSeries& series, FunctionKind kind, double r);
double star_ratio(const CoulombParams& params, FunctionKind kind, double r);

// 1 + r g''/g' for g; 1 + r F''/F' - L/(L+1) r F'/F for f.
double conv_ratio(const CoulombSeries& series, FunctionKind kind, double r);
double conv_ratio(const CoulombParams& params, FunctionKind kind, double r);

// Ratios from an already evaluated (P, P', P'') triple. They return
// +-infinity at poles instead of throwing; used by the root solvers.
double star_ratio_from(const SeriesValue& v, double L, FunctionKind kind, double r) noexcept;
double conv_ratio_from(const SeriesValue& v, double L, FunctionKind kind, double r) noexcept;

/// C_L(eta) = 2^L e^{-pi eta/2} |Gamma(L+1+i eta)| / Gamma(2L+2), L > -1.
/// Integer L uses the finite-product form; other L go through the complex
/// log-gamma.
double normalization_constant(double L, double eta);

// 1 / C_L(0) = 2^{L+1} Gamma(L+3/2) / sqrt(pi).
double inverse_normalization_duplication(double L);

}  // namespace coulomb
