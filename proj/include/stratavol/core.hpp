#pragma once

#include <string>
#include <vector>

#include "stratavol/errors.hpp"
#include "stratavol/rational.hpp"

namespace stratavol {

// a(a-2)(a-4)... down to 1 or 2; (-1)!! = 0!! = 1.
Integer dfact2(long a);

// f2(a,1) = 1/(a+2); for n >= 2 the falling 2-step product
// a(a-2)...(a-2(n-3)), which is a!!/(a-2(n-2))!! wherever the latter is defined.
Rational f2(long a, long n);

// [a]_r = 1_{a >= 2(r-1)} f2(a, r+1), with the pole [-2]_0 read as 0.
Rational bracket(long a, long r);

Integer binomial(long n, long k);
Integer factorial(long n);

struct PiValue {
  Rational coefficient;
  int pi_power = 0;

  PiValue() = default;
  PiValue(Rational c, int p);

  std::string str() const;
  friend bool operator==(const PiValue&, const PiValue&) = default;
};

PiValue operator+(const PiValue& a, const PiValue& b);

class Signature {
 public:
  Signature(int k, std::vector<int> orders);

  static Signature parse(int k, const std::string& csv);

  int k() const { return k_; }
  const std::vector<int>& orders() const { return orders_; }
  int n() const { return static_cast<int>(orders_.size()); }
  int genus() const { return genus_; }

  // "k=2; mu=5,3" with orders sorted descending.
  std::string canonical_key() const;
  // orders as given, comma separated
  std::string orders_str() const;

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  int k_;
  std::vector<int> orders_;
  int genus_;
};

std::vector<int> parse_int_list(const std::string& csv);
std::string join_ints(const std::vector<int>& v);

int genus(const Signature& sig);
bool is_holo_abelian(const Signature& sig);
int proj_dim(const Signature& sig);

enum class VolumeKind { Stratum, Completed };

PiValue mv_convert(const Signature& sig, const Rational& v, VolumeKind kind);

}  // namespace stratavol
