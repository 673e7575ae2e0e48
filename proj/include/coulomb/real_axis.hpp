#pragma once

#include <cstddef>
#include <vector>

#include "coulomb/params.hpp"
#include "coulomb/series.hpp"
#include "coulomb/wide.hpp"

namespace coulomb {

/// P, P', P'' anywhere on [-horizon, horizon].
///
/// Near the origin the power series is summed in Wide precision. Past
/// kSeriesReach the series loses digits to cancellation (its terms grow like
/// e^{|x|}), so the solution is instead carried outward by Taylor steps of
/// the ODE that P satisfies,
///   x P'' + 2(L+1) P' + (x - 2 eta) P = 0,
/// and node values are stored so any point costs one local expansion.
/// Negative abscissas are served by the reflected pair (L, -eta), for which
/// P(-x) is the ordinary series.
class RealAxisEvaluator {
 public:
  static constexpr double kSeriesReach = 20.0;
  static constexpr double kStep = 1.0;

  RealAxisEvaluator(const CoulombParams& params, double horizon, std::size_t n_max = kDefaultNMax);

  const CoulombParams& params() const noexcept { return params_; }
  double horizon() const noexcept { return horizon_; }

  SeriesValue eval(double x) const;
  BasicSeriesValue<Wide> eval_wide(double x) const;

 private:
  struct Node {
    Wide x;
    Wide p0;
    Wide p1;
  };

  struct Branch {
    CoefficientTable table;
    double reach;
    std::vector<Node> nodes;
  };

  Branch make_branch(const CoulombParams& params, std::size_t n_max) const;
  BasicSeriesValue<Wide> eval_branch(const Branch& branch, double L, double eta, Wide x) const;

  CoulombParams params_;
  double horizon_;
  Branch positive_;
  Branch negative_;
};

}  // namespace coulomb
