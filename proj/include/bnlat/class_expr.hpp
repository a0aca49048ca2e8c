#pragma once

// Text form of Kummer classes.
//
//   expr   := [sign] term { sign term }
//   term   := [coef ['*']] atom  |  '0'
//   atom   := symbol | '(' expr ')'
//   coef   := digits ['/' digits] | digits '.' digits
//   symbol := L | E0 | Eij (1<=i<j<=6) | Ti (1..6) | Tij6 (1<=i<j<=5) | Fk (1..4)
//   sign   := '+' | '-'
//
// Whitespace is free between tokens. Every coefficient must have
// denominator 1 or 2 and so must every coordinate of the result.
// Example: "2L - 1/2 F1 - 1/2 F2 - 0.5 F3 - 1/2(F4)".

#include <cctype>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bnlat/errors.hpp"
#include "bnlat/kummer_model.hpp"
#include "bnlat/rational.hpp"

namespace bnlat {

namespace detail {

using RationalVec = std::vector<Rational>;

inline RationalVec to_rational(const HalfIntVector& v) {
  RationalVec r;
  for (std::size_t i = 0; i < v.rank(); ++i) r.push_back(v.coord(i));
  return r;
}

class ClassParser {
 public:
  explicit ClassParser(std::string_view text) : text_(text) {}

  HalfIntVector parse() {
    skip_ws();
    if (at_end()) fail("empty expression");
    RationalVec v = expr();
    skip_ws();
    if (!at_end()) fail(peek() == ')' ? "unbalanced ')'" : "unexpected character");
    std::vector<Int> doubled;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!v[i].is_half_integer()) {
        pos_ = 0;
        fail("coordinate " + std::to_string(i) + " is " + v[i].str() + ", not a half-integer");
      }
      doubled.push_back(v[i].doubled());
    }
    return {kKummerBasis, std::move(doubled)};
  }

  /// A single number: integer, p/q or decimal, required to lie in (1/2)Z.
  Rational number_only() {
    skip_ws();
    Rational sign = 1;
    if (!at_end() && (peek() == '-' || peek() == '+')) {
      if (peek() == '-') sign = -1;
      ++pos_;
      skip_ws();
    }
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
    Rational c = sign * coefficient();
    skip_ws();
    if (!at_end()) fail("unexpected character");
    return c;
  }

 private:
  RationalVec expr() {
    RationalVec acc(kKummerRank, Rational(0));
    bool first = true;
    for (;;) {
      skip_ws();
      Rational sign = 1;
      if (!at_end() && (peek() == '+' || peek() == '-')) {
        if (peek() == '-') sign = -1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        break;
      }
      RationalVec t = term();
      for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += sign * t[i];
      first = false;
    }
    return acc;
  }

  RationalVec term() {
    if (at_end()) fail("expected a term");
    const std::size_t start = pos_;
    std::optional<Rational> coef;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coef = coefficient();
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_ws();
      } else if (at_end() || peek() == '+' || peek() == '-' || peek() == ')') {
        if (*coef == Rational(0)) return RationalVec(kKummerRank, Rational(0));
        pos_ = start;
        fail("constant term has no class");
      }
    }
    RationalVec a = atom();
    if (coef)
      for (auto& x : a) x *= *coef;
    return a;
  }

  RationalVec atom() {
    if (at_end()) fail("expected a class symbol");
    if (peek() == '(') {
      ++pos_;
      RationalVec inner = expr();
      skip_ws();
      if (at_end() || peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    return to_rational(symbol());
  }

  HalfIntVector symbol() {
    const std::size_t start = pos_;
    const char head = peek();
    if (head != 'L' && head != 'E' && head != 'T' && head != 'F') fail("expected a class symbol");
    ++pos_;
    std::string digits;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) digits += text_[pos_++];
    auto bad = [&](const std::string& what) {
      pos_ = start;
      fail(what);
    };
    auto d = [&](std::size_t k) { return digits[k] - '0'; };
    switch (head) {
      case 'L':
        if (!digits.empty()) bad("L takes no index");
        return kummer_L();
      case 'E':
        if (digits == "0") return node(0);
        if (digits.size() == 2 && d(0) >= 1 && d(0) < d(1) && d(1) <= 6) return node(d(0), d(1));
        bad("unknown node E" + digits);
        break;
      case 'T':
        if (digits.size() == 1 && d(0) >= 1 && d(0) <= 6) return trope(d(0));
        if (digits.size() == 3 && d(2) == 6 && d(0) >= 1 && d(0) < d(1) && d(1) <= 5) return trope(d(0), d(1));
        bad("unknown trope T" + digits);
        break;
      default:
        if (digits.size() == 1 && d(0) >= 1 && d(0) <= 4) return f_vector(d(0));
        bad("unknown class F" + digits);
    }
    return kummer_zero();
  }

  Rational coefficient() {
    const std::size_t start = pos_;
    const Int whole = integer();
    Rational value = whole;
    if (!at_end() && peek() == '/') {
      ++pos_;
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a denominator");
      const std::size_t den_pos = pos_;
      const Int den = integer();
      if (den == 0) {
        pos_ = den_pos;
        fail("zero denominator");
      }
      value = Rational(whole, den);
    } else if (!at_end() && peek() == '.') {
      ++pos_;
      Int frac = 0, scale = 1;
      std::size_t ndigits = 0;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
        if (++ndigits > 17) fail("too many decimal digits");
        frac = checked::add(checked::mul(frac, 10), peek() - '0');
        scale = checked::mul(scale, 10);
        ++pos_;
      }
      if (ndigits == 0) fail("expected decimal digits");
      value = Rational(whole) + Rational(frac, scale);
    }
    if (!value.is_half_integer()) {
      pos_ = start;
      fail("coefficient " + value.str() + " has denominator larger than 2");
    }
    return value;
  }

  Int integer() {
    Int v = 0;
    std::size_t n = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      if (++n > 18) fail("number too long");
      v = v * 10 + (peek() - '0');
      ++pos_;
    }
    return v;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(std::string(text_), pos_, what); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parse a Kummer class expression into basis coordinates.
inline HalfIntVector parse_class(std::string_view text) { return detail::ClassParser(text).parse(); }

/// Parse a half-integer token such as "3", "-1/2" or "0.5".
inline Rational parse_half_integer(std::string_view text) { return detail::ClassParser(text).number_only(); }

/// Name of basis vector i: L, E0, E12, ...
inline std::string kummer_basis_name(std::size_t i) {
  if (i == kLIndex) return "L";
  return node_label_at(i).name();
}

/// Basis-coordinate text form, e.g. "2L - 1/2 E0 - 1/2 E12". Inverse of
/// parse_class.
inline std::string format_class(const HalfIntVector& v) {
  if (v.basis() != kKummerBasis || v.rank() != kKummerRank) throw BasisMismatch(v.basis(), kKummerBasis);
  std::string out;
  for (std::size_t i = 0; i < v.rank(); ++i) {
    const Rational c = v.coord(i);
    if (c == Rational(0)) continue;
    const bool negative = c < Rational(0);
    const Rational mag = negative ? -c : c;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (mag.is_integer()) {
      if (mag != Rational(1)) out += mag.str();
    } else {
      out += mag.str() + " ";
    }
    out += kummer_basis_name(i);
  }
  return out.empty() ? "0" : out;
}

}  // namespace bnlat
