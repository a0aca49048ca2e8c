#pragma once

#include <compare>
#include <ostream>
#include <string>

#include "bnlat/integer.hpp"

namespace bnlat {

/// Exact rational number num/den with den > 0 and gcd(num, den) = 1.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(Int n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(Int n, Int d) : num_(n), den_(d) {
    if (d == 0) throw DomainError("rational with zero denominator");
    normalize();
  }

  /// The half-integer d/2.
  static Rational half(Int doubled) { return {doubled, 2}; }

  Int num() const noexcept { return num_; }
  Int den() const noexcept { return den_; }

  bool is_integer() const noexcept { return den_ == 1; }
  bool is_half_integer() const noexcept { return den_ == 1 || den_ == 2; }

  /// Twice the value; requires the value to lie in (1/2)Z.
  Int doubled() const {
    if (den_ == 1) return checked::mul(num_, 2);
    if (den_ == 2) return num_;
    throw DomainError("value " + str() + " is not a half-integer");
  }

  Int to_integer() const {
    if (den_ != 1) throw DomainError("value " + str() + " is not an integer");
    return num_;
  }

  std::string str() const {
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  }

  Rational operator-() const { return {checked::neg(num_), den_}; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    const Int g = gcd(a.den_, b.den_);
    const Int l = checked::mul(a.den_ / g, b.den_);
    return {checked::add(checked::mul(a.num_, l / a.den_), checked::mul(b.num_, l / b.den_)), l};
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    const Int g1 = gcd(a.num_, b.den_);
    const Int g2 = gcd(b.num_, a.den_);
    const Int n1 = g1 ? a.num_ / g1 : a.num_;
    const Int d2 = g1 ? b.den_ / g1 : b.den_;
    const Int n2 = g2 ? b.num_ / g2 : b.num_;
    const Int d1 = g2 ? a.den_ / g2 : a.den_;
    return {checked::mul(n1, n2), checked::mul(d1, d2)};
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw DomainError("division by zero");
    return a * Rational(b.den_, b.num_);
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    // Cross-multiplication in 128 bits cannot overflow for 64-bit operands.
    const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  void normalize() {
    if (den_ < 0) {
      num_ = checked::neg(num_);
      den_ = checked::neg(den_);
    }
    const Int g = gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  Int num_ = 0;
  Int den_ = 1;
};

}  // namespace bnlat
