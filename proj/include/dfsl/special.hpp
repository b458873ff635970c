#pragma once

#include "dfsl/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace dfsl {

namespace detail {

inline bool is_integral(double x) { return x == std::floor(x); }

// Sign of Gamma(x) away from poles: positive for x > 0, alternating on the
// negative unit intervals.
inline double gamma_sign(double x) {
  if (x > 0) return 1.0;
  const double k = std::floor(x);
  return std::fmod(k, 2.0) == 0.0 ? 1.0 : -1.0;
}

inline void require_off_pole(double x, const char* who) {
  if (x <= 0 && is_integral(x))
    throw std::domain_error(std::string(who) + ": gamma argument at a nonpositive integer");
}

}  // namespace detail

inline double log_gamma(double x) {
  if (!(x > 0)) throw std::domain_error("log_gamma: requires x > 0");
  return std::lgamma(x);
}

// Gamma(t+1) / Gamma(t-alpha+1); for nonnegative integers this is the
// product t(t-1)...(t-alpha+1).
inline double falling_factorial(double t, double alpha) {
  const double x1 = t + 1;
  const double x2 = t - alpha + 1;
  detail::require_off_pole(x1, "falling_factorial");
  detail::require_off_pole(x2, "falling_factorial");
  const double sign = detail::gamma_sign(x1) * detail::gamma_sign(x2);
  return sign * std::exp(std::lgamma(x1) - std::lgamma(x2));
}

// Gamma(t+alpha) / Gamma(t); for integer inputs this is t(t+1)...(t+alpha-1).
inline double rising_factorial(double t, double alpha) {
  const double x1 = t + alpha;
  const double x2 = t;
  detail::require_off_pole(x1, "rising_factorial");
  detail::require_off_pole(x2, "rising_factorial");
  const double sign = detail::gamma_sign(x1) * detail::gamma_sign(x2);
  return sign * std::exp(std::lgamma(x1) - std::lgamma(x2));
}

// Exact overloads; the exact backend only admits integer arguments, where the
// gamma ratios reduce to finite products.
inline Rational falling_factorial(const Rational& t, const Rational& alpha) {
  if (!t.is_integer() || !alpha.is_integer() || alpha.num() < 0 || t.num() < alpha.num())
    throw std::domain_error("falling_factorial: exact backend requires integers t >= alpha >= 0");
  BigInt prod = 1;
  for (BigInt f = t.num(); f > t.num() - alpha.num(); --f) prod *= f;
  return Rational(prod);
}

inline Rational rising_factorial(const Rational& t, const Rational& alpha) {
  if (!t.is_integer() || !alpha.is_integer() || t.num() < 1 || alpha.num() < 0)
    throw std::domain_error("rising_factorial: exact backend requires integer t >= 1 and integer alpha >= 0");
  BigInt prod = 1;
  for (BigInt f = t.num(); f < t.num() + alpha.num(); ++f) prod *= f;
  return Rational(prod);
}

}  // namespace dfsl
