#pragma once

#include <complex>
#include <string>

namespace coulomb {

// Tag requesting construction outside the proven parameter region.
struct Unsafe {};
inline constexpr Unsafe unsafe{};

/// Real order L and Sommerfeld parameter eta.
///
/// The checked constructor accepts only L > -1 and eta <= 0, the region in
/// which the zeros are real and the radius equations have certified
/// solutions. Anything else must be built with the `Unsafe` tag, which is
/// recorded on the value and propagated into every downstream result as a
/// missing certificate.
class CoulombParams {
 public:
  CoulombParams(double L, double eta);
  CoulombParams(double L, double eta, Unsafe);

  double L() const noexcept { return L_; }
  double eta() const noexcept { return eta_; }
  bool unsafe() const noexcept { return unsafe_; }

  // L > -1 and eta <= 0.
  bool in_radii_region() const noexcept;
  // L > -1/2 and eta <= 0; convexity of f and interlacing need this.
  bool in_convexity_region() const noexcept;

  // Same L, eta negated: P(-z) for these params equals the series of the
  // reflected pair at z.
  CoulombParams reflected() const;

  std::string describe() const;

  friend bool operator==(const CoulombParams&, const CoulombParams&) = default;

 private:
  double L_;
  double eta_;
  bool unsafe_;
};

// Complex (L, eta) used by the subordination checks. No region is enforced.
struct ComplexParams {
  std::complex<double> L;
  std::complex<double> eta;
};

}  // namespace coulomb
