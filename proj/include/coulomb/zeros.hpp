#pragma once

#include <cstddef>
#include <numbers>
#include <string>
#include <vector>

#include "coulomb/params.hpp"
#include "coulomb/real_axis.hpp"

namespace coulomb {

// Which function's real zeros to locate. All three are reduced to P:
//   F        ~ P(x)               (zeros of F and of g for x != 0)
//   F_prime  ~ (L+1) P + x P'
//   g_prime  ~ P + x P'           (also the zeros of x F' - L F)
enum class ZeroTarget { F, F_prime, g_prime };

std::string to_string(ZeroTarget target);

struct Zero {
  double x;
  double lo;
  double hi;
  double residual;  // |target| at x, in the P-normalization above
  int iterations = 0;
};

struct ZeroSet {
  CoulombParams params;
  ZeroTarget target;
  std::vector<Zero> positive;  // ascending
  std::vector<Zero> negative;  // descending: -0.5 > -2 > ...
  double refine_tol;
  bool truncated = false;  // a requested count was not reached within the horizon

  std::vector<double> positive_abscissas() const;
  std::vector<double> negative_abscissas() const;
};

struct ZeroOptions {
  double scan_step = std::numbers::pi / 8.0;
  double refine_tol = 1e-12;
  int max_bisections = 80;
  // Scan horizon per side; zero selects max(20, 1.5 * count * pi).
  double horizon = 0.0;
};

double default_horizon(std::size_t count);

// Target value and its derivative in the P-normalization.
double target_value(ZeroTarget target, double L, const SeriesValue& v, double x) noexcept;
double target_derivative(ZeroTarget target, double L, const SeriesValue& v, double x) noexcept;

/// First `count_pos` positive and `count_neg` negative real zeros of the
/// target. The scan samples the target every `scan_step` from the origin and
/// refines each sign change by bisection. Negative zeros come from the same
/// scan applied to P(-x). Requests that do not fit in the horizon return a
/// partial set with `truncated` set. A refined point where target and
/// derivative vanish together raises NumericalError.
ZeroSet find_zeros(const CoulombParams& params, ZeroTarget target, std::size_t count_pos, std::size_t count_neg,
                   const ZeroOptions& options = {});

// Same, reusing an evaluator whose horizon covers the scan.
ZeroSet find_zeros(const RealAxisEvaluator& evaluator, ZeroTarget target, std::size_t count_pos,
                   std::size_t count_neg, const ZeroOptions& options = {});

struct InterlacingReport {
  bool interlaced;
  std::size_t pairs_checked;
  std::string detail;  // first violated link, empty when interlaced
};

/// Checks x'_1 < x_1 < x'_2 < x_2 < ... on the positive side and the mirrored
/// chain y'_1 > y_1 > y'_2 > ... on the negative side, over the pairs both
/// sets provide. Requires a zero set of F and one of F', same params,
/// L > -1/2 and at least two zeros per side in each.
InterlacingReport interlacing_check(const ZeroSet& zeros_f, const ZeroSet& zeros_fprime);

struct ProductValue {
  double value;
  std::size_t K;
};

/// Truncated canonical product
///   z e^{eta z/(L+1)} prod_{n<=K} (1 - z/rho_n) e^{z/rho_n}
/// over the first K positive and first K negative zeros of F. Converges to
/// g(z) = z P(z) as K grows.
ProductValue product_eval(const ZeroSet& zeros, double z, std::size_t K);

}  // namespace coulomb
