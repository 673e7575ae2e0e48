#include "coulomb/gamma.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "coulomb/error.hpp"

namespace coulomb {

namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosCoefficients = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

}  // namespace

std::complex<double> log_gamma(std::complex<double> z) {
  using std::numbers::pi;
  if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real())) {
    throw DomainError("log_gamma evaluated at a pole");
  }
  if (z.real() < 0.5) {
    const std::complex<double> s = std::sin(pi * z);
    if (std::abs(s) == 0.0) {
      throw DomainError("log_gamma evaluated at a pole");
    }
    return std::log(pi / s) - log_gamma(1.0 - z);
  }
  const std::complex<double> w = z - 1.0;
  std::complex<double> x = kLanczosCoefficients[0];
  for (std::size_t i = 1; i < kLanczosCoefficients.size(); ++i) {
    x += kLanczosCoefficients[i] / (w + static_cast<double>(i));
  }
  const std::complex<double> t = w + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * pi) + (w + 0.5) * std::log(t) - t + std::log(x);
}

}  // namespace coulomb
