#include "coulomb/params.hpp"

#include <cmath>
#include <sstream>

#include "coulomb/error.hpp"

namespace coulomb {

CoulombParams::CoulombParams(double L, double eta) : L_(L), eta_(eta), unsafe_(false) {
  if (!std::isfinite(L) || !std::isfinite(eta)) {
    throw DomainError("parameters must be finite");
  }
  if (!(L > -1.0)) {
    throw DomainError("L = " + std::to_string(L) + " violates L > -1 (pass --unsafe to override)");
  }
  if (!(eta <= 0.0)) {
    throw DomainError("eta = " + std::to_string(eta) + " violates eta <= 0 (pass --unsafe to override)");
  }
}

CoulombParams::CoulombParams(double L, double eta, Unsafe) : L_(L), eta_(eta), unsafe_(true) {
  if (!std::isfinite(L) || !std::isfinite(eta)) {
    throw DomainError("parameters must be finite");
  }
  if (L == -1.0) {
    throw DomainError("L = -1 makes a_1 = eta/(L+1) undefined");
  }
}

bool CoulombParams::in_radii_region() const noexcept { return L_ > -1.0 && eta_ <= 0.0; }

bool CoulombParams::in_convexity_region() const noexcept { return L_ > -0.5 && eta_ <= 0.0; }

CoulombParams CoulombParams::reflected() const {
  // The reflected pair has eta > 0 whenever this one has eta < 0, so it
  // always lives outside the checked region.
  CoulombParams out(L_, -eta_, Unsafe{});
  out.unsafe_ = unsafe_;
  return out;
}

std::string CoulombParams::describe() const {
  std::ostringstream os;
  os.precision(17);
  os << "(L=" << L_ << ", eta=" << eta_ << (unsafe_ ? ", unsafe" : "") << ")";
  return os.str();
}

}  // namespace coulomb
