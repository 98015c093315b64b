#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <ostream>
#include <string>
#include <string_view>

namespace stratavol {

using Integer = mpz_class;

Integer to_integer(long v);
Integer parse_integer(std::string_view s);

// Exact rational in lowest terms, denominator > 0.
class Rational {
 public:
  Rational() = default;
  template <std::integral T>
  Rational(T v) : q_(static_cast<long>(v)) {}
  Rational(const Integer& v) : q_(v) {}
  Rational(const Integer& num, const Integer& den);

  static Rational parse(std::string_view s);

  Integer num() const { return q_.get_num(); }
  Integer den() const { return q_.get_den(); }
  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  std::string str() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.q_, b.q_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return cmp(a.q_, b.q_) <=> 0;
  }

 private:
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational pow(const Rational& base, unsigned e);

}  // namespace stratavol
