#include "stratavol/rational.hpp"

#include <cctype>

#include "stratavol/errors.hpp"

namespace stratavol {

Integer to_integer(long v) { return Integer(v); }

Integer parse_integer(std::string_view s) {
  std::string t(s);
  size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
  if (i == t.size()) throw DomainError("not an integer: '" + t + "'");
  for (size_t j = i; j < t.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(t[j])))
      throw DomainError("not an integer: '" + t + "'");
  if (t[0] == '+') t.erase(0, 1);
  return Integer(t, 10);
}

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view s) {
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(s));
  auto num = parse_integer(s.substr(0, slash));
  auto den_s = s.substr(slash + 1);
  if (!den_s.empty() && (den_s[0] == '-' || den_s[0] == '+'))
    throw DomainError("sign on denominator: '" + std::string(s) + "'");
  return Rational(num, parse_integer(den_s));
}

std::string Rational::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational Rational::operator-() const {
  Rational r;
  r.q_ = -q_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  q_ += o.q_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  q_ -= o.q_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  q_ *= o.q_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  q_ /= o.q_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational pow(const Rational& base, unsigned e) {
  Rational r = 1;
  for (unsigned i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace stratavol
