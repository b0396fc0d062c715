#pragma once

#include <cmath>
#include <limits>

namespace sgas {

/// A real number stored as (sign, ln|value|) so that products of many gamma
/// factors neither overflow nor underflow. sign == 0 means exactly zero.
struct LogMagnitude {
  double log_abs = 0.0;
  int sign = 1;

  static LogMagnitude zero() { return {-std::numeric_limits<double>::infinity(), 0}; }

  static LogMagnitude from_log(double log_abs, int sign = 1) { return {log_abs, sign}; }

  static LogMagnitude from_value(double v) {
    if (v == 0.0) return zero();
    return {std::log(std::fabs(v)), v < 0.0 ? -1 : 1};
  }

  double value() const { return sign == 0 ? 0.0 : sign * std::exp(log_abs); }

  bool is_zero() const { return sign == 0; }

  LogMagnitude& operator*=(const LogMagnitude& o) {
    if (sign == 0 || o.sign == 0) return *this = zero();
    log_abs += o.log_abs;
    sign *= o.sign;
    return *this;
  }

  LogMagnitude& operator/=(const LogMagnitude& o);

  friend LogMagnitude operator*(LogMagnitude a, const LogMagnitude& b) { return a *= b; }
  friend LogMagnitude operator/(LogMagnitude a, const LogMagnitude& b) { return a /= b; }
};

}  // namespace sgas
