#include "stratavol/core.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace stratavol {

MissingVolume::MissingVolume(std::vector<std::string> k, std::string g)
    : Error([&] {
        std::string msg = "missing volume";
        if (!g.empty()) msg += " for " + g;
        for (const auto& key : k) msg += "\n  " + key;
        return msg;
      }()),
      keys(std::move(k)),
      graph(std::move(g)) {}

Integer dfact2(long a) {
  if (a < -1) throw DomainError("dfact2: argument " + std::to_string(a) + " < -1");
  Integer r = 1;
  for (long t = a; t > 1; t -= 2) r *= t;
  return r;
}

Rational f2(long a, long n) {
  if (n < 1) throw DomainError("f2: n = " + std::to_string(n) + " < 1");
  if (n == 1) {
    if (a + 2 <= 0) throw DomainError("f2: (" + std::to_string(a) + ", 1) has no value");
    return Rational(Integer(1), Integer(a + 2));
  }
  Integer r = 1;
  for (long t = 0; t < n - 2; ++t) r *= a - 2 * t;
  return Rational(r);
}

Rational bracket(long a, long r) {
  if (r < 0) throw DomainError("bracket: negative index");
  if (a < 2 * (r - 1)) return 0;
  if (r == 0 && a == -2) return 0;
  return f2(a, r + 1);
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Integer factorial(long n) {
  if (n < 0) throw DomainError("factorial of negative number");
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

PiValue::PiValue(Rational c, int p) : coefficient(std::move(c)), pi_power(p) {
  if (pi_power < 0) throw DomainError("negative pi power");
  if (coefficient.is_zero()) pi_power = 0;
}

std::string PiValue::str() const {
  if (pi_power == 0) return coefficient.str();
  return coefficient.str() + "*pi^" + std::to_string(pi_power);
}

PiValue operator+(const PiValue& a, const PiValue& b) {
  if (a.coefficient.is_zero()) return b;
  if (b.coefficient.is_zero()) return a;
  if (a.pi_power != b.pi_power) throw DomainError("adding unlike pi powers");
  return PiValue(a.coefficient + b.coefficient, a.pi_power);
}

Signature::Signature(int k, std::vector<int> orders) : k_(k), orders_(std::move(orders)) {
  if (k_ < 1) throw InvalidSignature("k must be >= 1");
  if (orders_.empty()) throw InvalidSignature("empty signature");
  long s = std::accumulate(orders_.begin(), orders_.end(), 0L);
  long two_k = 2L * k_;
  if ((s + two_k) % two_k != 0)
    throw InvalidSignature("sum of orders " + std::to_string(s) + " is not k(2g-2)");
  long g = s / two_k + 1;
  if (g < 0) throw InvalidSignature("negative genus for " + join_ints(orders_));
  genus_ = static_cast<int>(g);
}

std::vector<int> parse_int_list(const std::string& csv) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    auto b = tok.find_first_not_of(" \t");
    auto e = tok.find_last_not_of(" \t");
    if (b == std::string::npos) throw InvalidSignature("empty entry in '" + csv + "'");
    tok = tok.substr(b, e - b + 1);
    size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size() || tok.empty())
      throw InvalidSignature("not an integer: '" + tok + "'");
    out.push_back(v);
  }
  if (out.empty()) throw InvalidSignature("empty order list");
  return out;
}

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

Signature Signature::parse(int k, const std::string& csv) { return Signature(k, parse_int_list(csv)); }

std::string Signature::canonical_key() const {
  auto o = orders_;
  std::sort(o.begin(), o.end(), std::greater<>());
  return "k=" + std::to_string(k_) + "; mu=" + join_ints(o);
}

std::string Signature::orders_str() const { return join_ints(orders_); }

int genus(const Signature& sig) { return sig.genus(); }

bool is_holo_abelian(const Signature& sig) {
  return std::all_of(sig.orders().begin(), sig.orders().end(),
                     [&](int m) { return m >= 0 && m % sig.k() == 0; });
}

int proj_dim(const Signature& sig) {
  int d = 2 * sig.genus() - 3 + sig.n();
  return is_holo_abelian(sig) ? d + 1 : d;
}

namespace {

// (-1)^{p/2} for even p
int i_power_sign(long p) {
  if (p % 2 != 0) throw UnsupportedConversion("odd power of i");
  return (p / 2) % 2 == 0 ? 1 : -1;
}

}  // namespace

PiValue mv_convert(const Signature& sig, const Rational& v, VolumeKind kind) {
  const long g = sig.genus(), n = sig.n();
  if (sig.k() == 1) {
    if (kind != VolumeKind::Stratum || n != 1)
      throw UnsupportedConversion("k=1 conversion needs a single zero and a stratum volume");
    if (g < 1) throw UnsupportedConversion("k=1 conversion needs genus >= 1");
    // 2 (2 pi i)^{2g} / (2g-1)!
    Integer two_pow;
    mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(2 * g));
    Rational c = Rational(2 * two_pow * i_power_sign(2 * g), factorial(2 * g - 1));
    return PiValue(c * v, static_cast<int>(2 * g));
  }
  if (sig.k() == 2) {
    for (int m : sig.orders())
      if (m % 2 == 0 || m < -1)
        throw UnsupportedConversion("k=2 conversion needs odd orders > -2, got " + sig.orders_str());
    const long p = 2 * g - 2 + n;
    Rational c;
    if (kind == VolumeKind::Stratum) {
      // 2^{3-n} (2 pi i)^p / (2g-3+n)!
      c = pow(Rational(2), static_cast<unsigned>(p)) * i_power_sign(p) /
          Rational(factorial(2 * g - 3 + n));
      c *= (3 - n >= 0) ? pow(Rational(2), static_cast<unsigned>(3 - n))
                        : Rational(1) / pow(Rational(2), static_cast<unsigned>(n - 3));
    } else {
      // 2^{2g+1} (-1)^{g-1+n/2} / (2g-3+n)!
      int sign = ((g - 1 + n / 2) % 2 == 0) ? 1 : -1;
      c = pow(Rational(2), static_cast<unsigned>(2 * g + 1)) * sign /
          Rational(factorial(2 * g - 3 + n));
    }
    return PiValue(c * v, static_cast<int>(p));
  }
  throw UnsupportedConversion("no conversion for k=" + std::to_string(sig.k()));
}

}  // namespace stratavol
