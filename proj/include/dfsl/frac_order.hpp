#pragma once

#include "dfsl/rational.hpp"

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string_view>

namespace dfsl {

enum class Backend { ExactRational, Float64 };

inline const char* backend_name(Backend b) {
  return b == Backend::ExactRational ? "rational" : "float64";
}

// Fractional order mu in (0,1], stored in lowest terms with den > 0.
class FracOrder {
 public:
  FracOrder(std::int64_t num, std::int64_t den, Backend backend)
      : num_(num), den_(den), backend_(backend) {
    if (den_ == 0) throw std::domain_error("mu must lie in (0,1]");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    if (num_ <= 0 || num_ > den_) throw std::domain_error("mu must lie in (0,1]");
    const std::int64_t g = std::gcd(num_, den_);
    num_ /= g;
    den_ /= g;
  }

  static FracOrder parse(std::string_view text, Backend backend) {
    const Rational r = Rational::parse(text);
    if (r.num() < -(BigInt(1) << 62) || r.num() > (BigInt(1) << 62) ||
        r.den() > (BigInt(1) << 62))
      throw std::domain_error("mu must lie in (0,1]");
    return FracOrder(r.num().convert_to<std::int64_t>(),
                     r.den().convert_to<std::int64_t>(), backend);
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  Backend backend() const { return backend_; }
  bool is_one() const { return num_ == den_; }

  Rational as_rational() const { return Rational(BigInt(num_), BigInt(den_)); }
  double as_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }
  std::string str() const { return as_rational().str(); }

  friend bool operator==(const FracOrder& a, const FracOrder& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const FracOrder& a, const FracOrder& b) { return !(a == b); }

 private:
  std::int64_t num_;
  std::int64_t den_;
  Backend backend_;
};

template <class Scalar>
Scalar frac_value(const FracOrder& mu);

template <>
inline Rational frac_value<Rational>(const FracOrder& mu) {
  return mu.as_rational();
}

template <>
inline double frac_value<double>(const FracOrder& mu) {
  return mu.as_double();
}

}  // namespace dfsl
