#pragma once

namespace coulomb {

// Largest argument the ascending series is trusted at; beyond it the
// alternating terms cancel past double precision.
inline constexpr double kBesselSeriesReach = 25.0;

/// J_nu(x) from the ascending series sum_k (-1)^k (x/2)^{2k+nu} / (k! Gamma(k+nu+1)),
/// summed in Wide precision with Neumaier compensation. Oracle for the
/// eta = 0 cross-checks, where F_{L,0}(z) = sqrt(pi z / 2) J_{L+1/2}(z).
/// Requires nu > -1 and 0 <= x <= kBesselSeriesReach.
double bessel_j(double nu, double x);

}  // namespace coulomb
