#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "coulomb/params.hpp"
#include "coulomb/series.hpp"

namespace coulomb {

// sigma: zeros of F' (serves f); varsigma: zeros of g' (serves g).
enum class Family { sigma, varsigma };
enum class SumMethod { closed_form, extracted };

std::string to_string(Family family);
std::string to_string(SumMethod method);

inline constexpr std::size_t kDefaultRayleighOrder = 8;

struct RayleighSums {
  CoulombParams params;
  Family family;
  SumMethod method;
  std::map<int, double> values;  // m -> S_m, m >= 2
  // closed_form only: m -> extracted S_m where the printed polynomial differs
  // from extraction by more than 1e-8 relative.
  std::map<int, double> discrepancies;
};

/// Taylor coefficients t_0..t_{m_max} of c'(z)/c(z) for a series with c_0 = 1,
/// from (k+1) c_{k+1} = sum_{j=0..k} c_j t_{k-j}. Needs c_0..c_{m_max+1}.
std::vector<double> logderiv_coeffs(std::span<const double> c, std::size_t m_max);

/// Coefficients of the entire function whose zeros define the family,
/// normalized to c_0 = 1: (n+L+1)/(L+1) a_n for sigma, (n+1) a_n for varsigma.
std::vector<double> family_series(const CoefficientTable& table, Family family);

/// Rayleigh sums S_2..S_{m_max}. `extracted` negates shifted log-derivative
/// coefficients (S_m = -t_{m-1}); `closed_form` evaluates the printed
/// displays for m = 2, 3 and records any disagreement with extraction.
RayleighSums sums(const CoulombParams& params, Family family, SumMethod method,
                  std::size_t m_max = kDefaultRayleighOrder, std::size_t n_max = kDefaultNMax);

// Printed closed forms.
double sigma2_closed(double L, double eta);
double sigma3_closed(double L, double eta);
double varsigma2_closed(double L, double eta);
double varsigma3_closed(double L, double eta);

struct EulerRayleighBounds {
  Family family;
  SumMethod method;
  int m;
  double s_m;
  double s_m1;
  double lower;                 // S_m^{-1/m}
  std::optional<double> upper;  // S_m / S_{m+1} when S_{m+1} > 0
};

Family family_for(FunctionKind kind);

/// Euler-Rayleigh bracket S_m^{-1/m} < |first zero| < S_m/S_{m+1} for the
/// radius of starlikeness of `kind`. `m` must be even and >= 2; the closed
/// form supports m = 2 only.
EulerRayleighBounds euler_rayleigh_bounds(const CoulombParams& params, FunctionKind kind, int m,
                                          SumMethod method = SumMethod::extracted);

}  // namespace coulomb
