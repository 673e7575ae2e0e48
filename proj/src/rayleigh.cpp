#include "coulomb/rayleigh.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "coulomb/error.hpp"

namespace coulomb {

std::string to_string(Family family) { return family == Family::sigma ? "sigma" : "varsigma"; }

std::string to_string(SumMethod method) { return method == SumMethod::closed_form ? "closed_form" : "extracted"; }

Family family_for(FunctionKind kind) { return kind == FunctionKind::f ? Family::sigma : Family::varsigma; }

std::vector<double> logderiv_coeffs(std::span<const double> c, std::size_t m_max) {
  if (c.empty() || c[0] != 1.0) {
    throw DomainError("logderiv_coeffs requires c_0 = 1");
  }
  if (c.size() < m_max + 2) {
    throw DomainError("logderiv_coeffs needs c_0..c_{m_max+1}");
  }
  std::vector<double> t(m_max + 1);
  for (std::size_t k = 0; k <= m_max; ++k) {
    double s = static_cast<double>(k + 1) * c[k + 1];
    for (std::size_t j = 1; j <= k; ++j) s -= c[j] * t[k - j];
    t[k] = s;
  }
  return t;
}

std::vector<double> family_series(const CoefficientTable& table, Family family) {
  const double L = table.params().L();
  std::vector<double> c(table.n_max() + 1);
  for (std::size_t n = 0; n <= table.n_max(); ++n) {
    const double nd = static_cast<double>(n);
    const double weight = family == Family::sigma ? (nd + L + 1.0) / (L + 1.0) : nd + 1.0;
    c[n] = weight * table[n];
  }
  return c;
}

double sigma2_closed(double L, double eta) {
  const double e2 = eta * eta;
  const double num = std::pow(L, 4) + 6.0 * std::pow(L, 3) + (e2 + 12.0) * L * L + 2.0 * (3.0 * e2 + 5.0) * L +
                     3.0 * (2.0 * e2 + 1.0);
  return num / (std::pow(L + 1.0, 4) * (2.0 * L + 3.0));
}

double sigma3_closed(double L, double eta) {
  const double e2 = eta * eta;
  const double eta1 = 41.0 - 8.0 * e2;
  const double eta2 = 163.0 - 74.0 * e2;
  const double eta3 = 41.0 - 32.0 * e2;
  const double eta4 = 178.0 - 223.0 * e2;
  const double eta5 = 199.0 - 438.0 * e2;
  const double poly = 4.0 * std::pow(L, 7) + eta1 * std::pow(L, 6) + eta2 * std::pow(L, 5) +
                      8.0 * eta3 * std::pow(L, 4) + 2.0 * eta4 * std::pow(L, 3) + eta5 * L * L +
                      9.0 * (5.0 - 28.0 * e2) * L - 72.0 * e2;
  return eta * poly / (2.0 * std::pow(L + 1.0, 6) * (L + 2.0) * (2.0 * L + 3.0));
}

double varsigma2_closed(double L, double eta) {
  const double e2 = eta * eta;
  return (3.0 * L * L + 2.0 * (e2 + 3.0) * L + 3.0 * (2.0 * e2 + 1.0)) / ((L + 1.0) * (L + 1.0) * (2.0 * L + 3.0));
}

double varsigma3_closed(double L, double eta) {
  const double e2 = eta * eta;
  const double poly = 8.0 * std::pow(L, 4) + (31.0 - 16.0 * e2) * std::pow(L, 3) + 2.0 * (19.0 - 26.0 * e2) * L * L +
                      3.0 * (5.0 - 22.0 * e2) * L - 36.0 * e2;
  return eta * poly / (std::pow(L + 1.0, 3) * (L + 2.0) * (2.0 * L + 3.0));
}

namespace {

constexpr double kDiscrepancyTolerance = 1e-8;

std::map<int, double> extract(const CoulombParams& params, Family family, std::size_t m_max, std::size_t n_max) {
  const auto table = coefficients(params, std::max(n_max, m_max + 1));
  const auto c = family_series(table, family);
  const auto t = logderiv_coeffs(c, m_max - 1);
  std::map<int, double> values;
  for (std::size_t m = 2; m <= m_max; ++m) values[static_cast<int>(m)] = -t[m - 1];
  return values;
}

bool differs(double printed, double extracted) {
  const double scale = std::max(std::abs(printed), std::abs(extracted));
  return std::abs(printed - extracted) > kDiscrepancyTolerance * std::max(scale, 1e-300);
}

}  // namespace

RayleighSums sums(const CoulombParams& params, Family family, SumMethod method, std::size_t m_max,
                  std::size_t n_max) {
  if (m_max < 2) {
    throw DomainError("Rayleigh sums start at m = 2");
  }
  RayleighSums out{params, family, method, {}, {}};
  if (method == SumMethod::extracted) {
    out.values = extract(params, family, m_max, n_max);
    return out;
  }
  if (m_max > 3) {
    throw UnsupportedError("closed forms exist only for m = 2 and m = 3; requested m_max = " + std::to_string(m_max));
  }
  const double L = params.L();
  const double eta = params.eta();
  const bool sigma = family == Family::sigma;
  out.values[2] = sigma ? sigma2_closed(L, eta) : varsigma2_closed(L, eta);
  if (m_max >= 3) out.values[3] = sigma ? sigma3_closed(L, eta) : varsigma3_closed(L, eta);
  const auto reference = extract(params, family, m_max, n_max);
  for (const auto& [m, printed] : out.values) {
    const double value = reference.at(m);
    if (differs(printed, value)) out.discrepancies[m] = value;
  }
  return out;
}

EulerRayleighBounds euler_rayleigh_bounds(const CoulombParams& params, FunctionKind kind, int m, SumMethod method) {
  if (m < 2 || m % 2 != 0) {
    throw DomainError("Euler-Rayleigh order m must be even and at least 2; got " + std::to_string(m));
  }
  if (method == SumMethod::closed_form && m != 2) {
    throw UnsupportedError("closed-form bounds exist only for m = 2");
  }
  const Family family = family_for(kind);
  const auto s = sums(params, family, method, static_cast<std::size_t>(m + 1));
  const double s_m = s.values.at(m);
  const double s_m1 = s.values.at(m + 1);
  if (!(s_m > 0.0)) {
    throw NumericalError("Rayleigh sum S_" + std::to_string(m) + " is not positive for " + params.describe());
  }
  EulerRayleighBounds bounds{family, method, m, s_m, s_m1, std::pow(s_m, -1.0 / m), std::nullopt};
  if (s_m1 > 0.0) bounds.upper = s_m / s_m1;
  return bounds;
}

}  // namespace coulomb
