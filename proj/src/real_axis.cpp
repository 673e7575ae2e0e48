#include "coulomb/real_axis.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "coulomb/error.hpp"

namespace coulomb {

namespace {

constexpr std::size_t kMaxTaylorTerms = 400;

struct TaylorResult {
  Wide p0;
  Wide p1;
  Wide p2;
};

// Local expansion of P about x0 > 0 from P(x0), P'(x0), evaluated at x0 + delta.
TaylorResult taylor_step(Wide L, Wide eta, Wide x0, Wide p0, Wide p1, Wide delta) {
  if (delta == 0) {
    const Wide p2 = -(2 * (L + 1) * p1 + (x0 - 2 * eta) * p0) / x0;
    return {p0, p1, p2};
  }
  Wide b_prev = 0;  // b_{k-1}
  Wide b_k = p0;    // b_k
  Wide b_next = p1; // b_{k+1}
  Wide s0 = p0 + p1 * delta;
  Wide s1 = p1;
  Wide s2 = 0;
  Wide dpow = delta;  // delta^{k+1}
  Wide scale = wide_abs(p0) + wide_abs(p1);
  int quiet = 0;
  for (std::size_t k = 0; k < kMaxTaylorTerms; ++k) {
    const Wide wk = static_cast<Wide>(static_cast<double>(k));
    const Wide b_new = -((wk + 1) * (wk + 2 * L + 2) * b_next + (x0 - 2 * eta) * b_k + b_prev) / (x0 * (wk + 1) * (wk + 2));
    const Wide m = wk + 2;  // index of b_new
    // dpow = delta^{m-1}
    s2 += m * (m - 1) * b_new * (dpow / delta);
    s1 += m * b_new * dpow;
    dpow *= delta;
    s0 += b_new * dpow;
    const Wide size = m * m * wide_abs(b_new) * (dpow / (delta * delta));
    scale += wide_abs(b_new * dpow);
    quiet = (size <= 16 * kWideEpsilon * (scale + wide_abs(s1) + wide_abs(s2))) ? quiet + 1 : 0;
    if (quiet >= 3) {
      return {s0, s1, s2};
    }
    b_prev = b_k;
    b_k = b_next;
    b_next = b_new;
  }
  throw ConvergenceError("Taylor continuation step did not converge at x = " + std::to_string(static_cast<double>(x0)));
}

}  // namespace

RealAxisEvaluator::RealAxisEvaluator(const CoulombParams& params, double horizon, std::size_t n_max)
    : params_(params),
      horizon_(horizon),
      positive_(make_branch(params, n_max)),
      negative_(make_branch(params.reflected(), n_max)) {
  if (!(horizon > 0.0) || !std::isfinite(horizon)) {
    throw DomainError("real-axis horizon must be positive and finite");
  }
}

RealAxisEvaluator::Branch RealAxisEvaluator::make_branch(const CoulombParams& params, std::size_t n_max) const {
  const double reach = std::min(kSeriesReach, horizon_);
  // Grow the table until the series converges at the reach.
  std::size_t n = n_max;
  for (;;) {
    auto table = coefficients(params, n);
    try {
      const auto v = eval_series_wide(table, static_cast<Wide>(reach), kDefaultSeriesTolerance);
      Branch branch{std::move(table), reach, {}};
      if (horizon_ > reach) {
        const Wide L = params.L();
        const Wide eta = params.eta();
        Node node{static_cast<Wide>(reach), v.p0, v.p1};
        branch.nodes.push_back(node);
        while (static_cast<double>(node.x) < horizon_) {
          const auto next = taylor_step(L, eta, node.x, node.p0, node.p1, static_cast<Wide>(kStep));
          node = Node{node.x + static_cast<Wide>(kStep), next.p0, next.p1};
          branch.nodes.push_back(node);
        }
      }
      return branch;
    } catch (const ConvergenceError&) {
      if (2 * n > kMaxNMax) throw;
      n *= 2;
    }
  }
}

BasicSeriesValue<Wide> RealAxisEvaluator::eval_branch(const Branch& branch, double L, double eta, Wide x) const {
  if (static_cast<double>(x) <= branch.reach || branch.nodes.empty()) {
    return eval_series_wide(branch.table, x, kDefaultSeriesTolerance);
  }
  const double offset = (static_cast<double>(x) - branch.reach) / kStep;
  auto index = static_cast<std::size_t>(std::floor(offset));
  index = std::min(index, branch.nodes.size() - 1);
  const Node& node = branch.nodes[index];
  const auto t = taylor_step(L, eta, node.x, node.p0, node.p1, x - node.x);
  BasicSeriesValue<Wide> out;
  out.p0 = t.p0;
  out.p1 = t.p1;
  out.p2 = t.p2;
  return out;
}

BasicSeriesValue<Wide> RealAxisEvaluator::eval_wide(double x) const {
  if (!std::isfinite(x) || std::abs(x) > horizon_) {
    throw DomainError("real-axis evaluation at x = " + std::to_string(x) + " outside the horizon " +
                      std::to_string(horizon_));
  }
  if (x >= 0.0) {
    return eval_branch(positive_, params_.L(), params_.eta(), static_cast<Wide>(x));
  }
  auto v = eval_branch(negative_, params_.L(), -params_.eta(), static_cast<Wide>(-x));
  v.p1 = -v.p1;
  return v;
}

SeriesValue RealAxisEvaluator::eval(double x) const {
  const auto w = eval_wide(x);
  return SeriesValue{static_cast<double>(w.p0), static_cast<double>(w.p1), static_cast<double>(w.p2),
                     w.truncation_terms, w.tail_estimate};
}

}  // namespace coulomb
