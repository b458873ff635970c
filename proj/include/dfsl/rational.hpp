#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <Eigen/Core>

#include <cmath>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace dfsl {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational scalar. Numerators/denominators are arbitrary-precision
// because kernel denominators grow factorially with the sequence length.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(int v) : num_(v), den_(1) {}
  Rational(long v) : num_(v), den_(1) {}
  Rational(long long v) : num_(v), den_(1) {}
  Rational(BigInt v) : num_(std::move(v)), den_(1) {}
  Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw std::domain_error("Rational: zero denominator");
    normalize();
  }

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

  double to_double() const {
    if (num_ == 0) return 0.0;
    const bool neg = num_ < 0;
    BigInt n = neg ? BigInt(-num_) : num_;
    BigInt d = den_;
    const long nb = static_cast<long>(boost::multiprecision::msb(n));
    const long db = static_cast<long>(boost::multiprecision::msb(d));
    // Aim for ~80 significant quotient bits so the final rounding is the
    // only loss; a plain num/den in doubles overflows past ~10^308.
    const long shift = 80 - (nb - db);
    if (shift > 0) n <<= shift;
    if (shift < 0) d <<= -shift;
    const double q = (n / d).convert_to<double>();
    const double r = std::ldexp(q, static_cast<int>(-shift));
    return neg ? -r : r;
  }

  // Accepts "p", "p/q", and decimal literals like "0.3" (all exact).
  static Rational parse(std::string_view text) {
    const auto fail = [&] {
      throw std::invalid_argument("not a rational literal: '" + std::string(text) + "'");
    };
    std::string_view s = text;
    bool neg = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
      neg = s.front() == '-';
      s.remove_prefix(1);
    }
    if (s.empty()) fail();
    const auto digits = [&](std::string_view part) -> BigInt {
      if (part.empty()) fail();
      BigInt v = 0;
      for (char c : part) {
        if (c < '0' || c > '9') fail();
        v = v * 10 + (c - '0');
      }
      return v;
    };
    BigInt num, den = 1;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
      num = digits(s.substr(0, slash));
      den = digits(s.substr(slash + 1));
      if (den == 0) throw std::domain_error("Rational: zero denominator");
    } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
      const std::string_view frac = s.substr(dot + 1);
      num = digits(s.substr(0, dot));
      for (char c : frac) {
        if (c < '0' || c > '9') fail();
        num = num * 10 + (c - '0');
        den *= 10;
      }
    } else {
      num = digits(s);
    }
    if (neg) num = -num;
    return Rational(std::move(num), std::move(den));
  }

  std::string str() const {
    std::string out = num_.str();
    if (den_ != 1) {
      out += '/';
      out += den_.str();
    }
    return out;
  }

  friend Rational operator-(const Rational& a) { return Rational(-a.num_, a.den_, raw_tag{}); }
  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  friend Rational abs(const Rational& a) {
    return a.num_ < 0 ? Rational(-a.num_, a.den_, raw_tag{}) : a;
  }
  friend std::ostream& operator<<(std::ostream& os, const Rational& a) { return os << a.str(); }

 private:
  struct raw_tag {};
  Rational(BigInt num, BigInt den, raw_tag) : num_(std::move(num)), den_(std::move(den)) {}

  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    if (num_ == 0) {
      den_ = 1;
      return;
    }
    const BigInt g =
        boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  BigInt num_;
  BigInt den_;
};

}  // namespace dfsl

namespace Eigen {

template <>
struct NumTraits<dfsl::Rational> : GenericNumTraits<dfsl::Rational> {
  typedef dfsl::Rational Real;
  typedef dfsl::Rational NonInteger;
  typedef dfsl::Rational Nested;
  static inline Real epsilon() { return dfsl::Rational(0); }
  static inline Real dummy_precision() { return dfsl::Rational(0); }
  static inline int digits10() { return 0; }
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 60,
    MulCost = 40
  };
};

}  // namespace Eigen
