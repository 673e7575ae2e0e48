#pragma once

#include <complex>
#include <cstddef>

#include "coulomb/params.hpp"

namespace coulomb {

struct RegionMargins {
  double re_L_minus_half;   // Re L - 1/2, must be >= 0
  double im_L_minus_one;    // Im L - 1, must be >= 0
  double square_gap;        // (Re L - 1/2)^2 - (1 + Im L + |eta|)^2, must be >= 0
  double starlike_slack;    // Re L - (Im L)^2/3 - 1/4 - |eta|, must be >= 0
};

// Parameter conditions for Re g > 0 and for starlikeness of g on the unit disk.
struct RegionReport {
  bool re_positive_ok;
  bool starlike_ok;
  RegionMargins margins;
};

// Evaluates both condition sets exactly as printed; no harmonization.
RegionReport region_check(std::complex<double> L, std::complex<double> eta);

enum class DiskQuantity {
  g,     // g(z) = z P(z)
  zgpg,  // z g'(z)/g(z) = 1 + z P'(z)/P(z)
};

struct DiskMinimum {
  double min_real;
  std::complex<double> argmin;
  std::size_t points;
  // Largest |z^2 g'' + 2L z g' + (z^2 - 2 eta z - 2L) g| seen on the grid,
  // relative to the size of its terms.
  double ode_residual;
};

/// Minimum of the real part of `quantity` over the polar grid with rings at
/// k/grid_n * radius_cap (k = 1..grid_n) and 4 grid_n equispaced angles.
/// A positive minimum is grid evidence, not a proof.
DiskMinimum disk_min_real(std::complex<double> L, std::complex<double> eta, DiskQuantity quantity,
                          std::size_t grid_n = 64, double radius_cap = 0.99);

enum class LemmaSign { minus, plus };

/// Signed gap of the two-zero real-part inequality,
///   [lambda Re(z^2/(a(a+-z))) - Re(z^2/(b(b+-z)))]
///     - [lambda |z|^2/(a(a+-|z|)) - |z|^2/(b(b+-|z|))],
/// with the same sign choice in every denominator. Requires lambda in [0, 1],
/// a > b > 0 and |z| < b.
double lemma1_gap(double lambda, double a, double b, std::complex<double> z, LemmaSign sign);

}  // namespace coulomb
