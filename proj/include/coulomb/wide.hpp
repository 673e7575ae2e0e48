#pragma once

// Extended-precision scalar for coefficient generation and real-axis
// summation. binary128 where the compiler provides it, x87 extended
// otherwise.

namespace coulomb {

#if defined(__SIZEOF_FLOAT128__) && !defined(COULOMB_NO_FLOAT128)
using Wide = __float128;
// 2^-112
inline constexpr Wide kWideEpsilon = static_cast<Wide>(1.0) / static_cast<Wide>(5192296858534827628530496329220096.0);
#else
using Wide = long double;
inline constexpr Wide kWideEpsilon = 1.0842021724855044340e-19L;
#endif

inline constexpr Wide wide_abs(Wide x) noexcept { return x < 0 ? -x : x; }

}  // namespace coulomb
