#include "coulomb/bessel.hpp"

#include <cmath>
#include <string>

#include "coulomb/error.hpp"
#include "coulomb/wide.hpp"

namespace coulomb {

double bessel_j(double nu, double x) {
  if (!(nu > -1.0)) {
    throw DomainError("bessel_j requires nu > -1");
  }
  if (!(x >= 0.0)) {
    throw DomainError("bessel_j requires x >= 0");
  }
  if (x > kBesselSeriesReach) {
    throw ConvergenceError("bessel_j ascending series not trusted at x = " + std::to_string(x));
  }
  if (x == 0.0) {
    return nu == 0.0 ? 1.0 : 0.0;
  }
  // The leading factor is a common multiplier, so double precision suffices
  // for it; the alternating sum needs the extra digits.
  const double half = 0.5 * x;
  const double lead = std::exp(nu * std::log(half) - std::lgamma(nu + 1.0));
  const Wide q = -static_cast<Wide>(half) * static_cast<Wide>(half);
  const Wide wnu = nu;
  Wide term = 1;
  Wide sum = 1;
  Wide comp = 0;
  int quiet = 0;
  for (int k = 1; k < 1000; ++k) {
    term *= q / (static_cast<Wide>(k) * (static_cast<Wide>(k) + wnu));
    const Wide t = sum + term;
    comp += wide_abs(sum) >= wide_abs(term) ? (sum - t) + term : (term - t) + sum;
    sum = t;
    if (k > half && wide_abs(term) <= kWideEpsilon * wide_abs(sum + comp)) {
      if (++quiet >= 3) return lead * static_cast<double>(sum + comp);
    } else {
      quiet = 0;
    }
  }
  throw ConvergenceError("bessel_j series did not converge at x = " + std::to_string(x));
}

}  // namespace coulomb
