#include "coulomb/geom.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "coulomb/error.hpp"
#include "coulomb/series.hpp"

namespace coulomb {

RegionReport region_check(std::complex<double> L, std::complex<double> eta) {
  const double re = L.real();
  const double im = L.imag();
  const double abs_eta = std::abs(eta);
  RegionMargins m{};
  m.re_L_minus_half = re - 0.5;
  m.im_L_minus_one = im - 1.0;
  m.square_gap = (re - 0.5) * (re - 0.5) - (1.0 + im + abs_eta) * (1.0 + im + abs_eta);
  m.starlike_slack = re - im * im / 3.0 - 0.25 - abs_eta;
  RegionReport report{};
  report.margins = m;
  report.re_positive_ok = m.re_L_minus_half >= 0.0 && m.im_L_minus_one >= 0.0 && m.square_gap >= 0.0;
  report.starlike_ok = m.starlike_slack >= 0.0;
  return report;
}

DiskMinimum disk_min_real(std::complex<double> L, std::complex<double> eta, DiskQuantity quantity,
                          std::size_t grid_n, double radius_cap) {
  if (grid_n < 16) {
    throw DomainError("disk grid needs grid_n >= 16");
  }
  if (!(radius_cap > 0.0 && radius_cap < 1.0)) {
    throw DomainError("radius_cap must lie in (0, 1)");
  }
  const ComplexCoulombSeries series(ComplexParams{L, eta});
  const std::size_t angles = 4 * grid_n;
  DiskMinimum out{std::numeric_limits<double>::infinity(), {}, 0, 0.0};
  for (std::size_t k = 1; k <= grid_n; ++k) {
    const double radius = radius_cap * static_cast<double>(k) / static_cast<double>(grid_n);
    for (std::size_t j = 0; j < angles; ++j) {
      const double theta = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(angles);
      const std::complex<double> z = std::polar(radius, theta);
      const auto v = series.eval(z);
      const std::complex<double> g = z * v.p0;
      const std::complex<double> gp = v.p0 + z * v.p1;
      const std::complex<double> gpp = 2.0 * v.p1 + z * v.p2;

      const std::complex<double> t1 = z * z * gpp;
      const std::complex<double> t2 = 2.0 * L * z * gp;
      const std::complex<double> t3 = (z * z - 2.0 * eta * z - 2.0 * L) * g;
      const double size = std::abs(t1) + std::abs(t2) + std::abs(t3);
      if (size > 0.0) out.ode_residual = std::max(out.ode_residual, std::abs(t1 + t2 + t3) / size);

      std::complex<double> value;
      if (quantity == DiskQuantity::g) {
        value = g;
      } else {
        if (v.p0 == std::complex<double>(0.0)) {
          throw NumericalError("z g'/g has a pole on the disk grid");
        }
        value = 1.0 + z * v.p1 / v.p0;
      }
      ++out.points;
      if (value.real() < out.min_real) {
        out.min_real = value.real();
        out.argmin = z;
      }
    }
  }
  return out;
}

double lemma1_gap(double lambda, double a, double b, std::complex<double> z, LemmaSign sign) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw DomainError("lemma1_gap requires lambda in [0, 1]");
  }
  if (!(a > b && b > 0.0)) {
    throw DomainError("lemma1_gap requires a > b > 0");
  }
  const double m = std::abs(z);
  if (!(m < b)) {
    throw DomainError("lemma1_gap requires |z| < b");
  }
  const double s = sign == LemmaSign::minus ? -1.0 : 1.0;
  const std::complex<double> z2 = z * z;
  const double lhs = lambda * (z2 / (a * (a + s * z))).real() - (z2 / (b * (b + s * z))).real();
  const double rhs = lambda * m * m / (a * (a + s * m)) - m * m / (b * (b + s * m));
  return lhs - rhs;
}

}  // namespace coulomb
