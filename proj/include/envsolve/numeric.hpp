#pragma once

#include <cmath>
#include <cstdlib>

namespace envsolve {

/// x^k for k >= 0 by repeated squaring.
constexpr double ipow(double x, int k) noexcept {
  double result = 1.0;
  double base = x;
  while (k > 0) {
    if (k & 1) result *= base;
    base *= base;
    k >>= 1;
  }
  return result;
}

/// Real k-th root keeping the sign of y. Only meaningful for negative y when k
/// is odd; callers enforce that.
inline double signed_root(double y, int k) {
  if (k == 1) return y;
  if (k == 2) return std::copysign(std::sqrt(std::abs(y)), y);
  if (k == 3) return std::cbrt(y);
  return std::copysign(std::pow(std::abs(y), 1.0 / k), y);
}

inline constexpr double kRelativeFloor = 1e-300;

/// |a - b| <= rel * max(|a|, |b|, floor).
inline bool approx_equal(double a, double b, double rel) noexcept {
  const double scale = std::fmax(std::fmax(std::abs(a), std::abs(b)), kRelativeFloor);
  return std::abs(a - b) <= rel * scale;
}

inline bool all_finite(double a) noexcept { return std::isfinite(a); }

template <typename... Ts>
inline bool all_finite(double a, Ts... rest) noexcept {
  return std::isfinite(a) && all_finite(rest...);
}

}  // namespace envsolve
