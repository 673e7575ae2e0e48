#pragma once

#include <complex>

namespace coulomb {

// Principal-branch-free log-gamma: real part is log|Gamma(z)|, imaginary part
// is an argument of Gamma(z) (not unwrapped). Lanczos approximation with
// g = 7, nine terms; reflection for Re z < 1/2. Relative error of
// exp(real part) is below 1e-14 away from the poles.
std::complex<double> log_gamma(std::complex<double> z);

}  // namespace coulomb
