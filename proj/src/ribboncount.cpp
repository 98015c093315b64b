#include "stratavol/ribboncount.hpp"

#include <algorithm>
#include <numeric>

namespace stratavol {

namespace {

int sum_of(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); }

int c_value(int m, const std::vector<int>& genera, const std::vector<int>& idx) {
  int c = m + 2;
  for (int i : idx) c -= 4 * genera[i];
  return c;
}

// D_L = sum of kappa_i = 4g_i - 2 over L
int d_value(const std::vector<int>& genera, const std::vector<int>& idx) {
  int d = 0;
  for (int i : idx) d += 4 * genera[i] - 2;
  return d;
}

std::vector<std::vector<int>> subsets(const std::vector<int>& s) {
  std::vector<std::vector<int>> out;
  const int n = static_cast<int>(s.size());
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<int> sub;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) sub.push_back(s[i]);
    out.push_back(std::move(sub));
  }
  return out;
}

std::vector<int> range(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

int parity(size_t n) { return n % 2 == 0 ? 1 : -1; }

Integer r_product(const StarData& d) {
  Integer r = 1;
  for (int g : d.genera) r *= 2 * g - 1;
  return r;
}

bool contains(const std::vector<int>& v, int x) { return std::find(v.begin(), v.end(), x) != v.end(); }

}  // namespace

void require_genus_zero(const StarData& d) {
  if (d.genera.empty()) throw InvalidSignature("star data without components");
  for (int g : d.genera)
    if (g < 1) throw InvalidSignature("component genus < 1");
  if (d.m1 + d.m2 + 4 != 4 * sum_of(d.genera))
    throw InvalidSignature("m1 + m2 + 4 ≠ 4 sum g_i");
}

PartitionIJK make_partition(const StarData& d, std::vector<int> I, std::vector<int> J,
                            std::vector<int> K) {
  const int h = static_cast<int>(d.genera.size());
  std::vector<int> seen(h, 0);
  for (const auto* block : {&I, &J, &K})
    for (int i : *block) {
      if (i < 0 || i >= h) throw DomainError("partition index out of range");
      ++seen[i];
    }
  if (std::any_of(seen.begin(), seen.end(), [](int s) { return s != 1; }))
    throw DomainError("I, J, K must partition the components");
  std::sort(I.begin(), I.end());
  std::sort(J.begin(), J.end());
  std::sort(K.begin(), K.end());
  PartitionIJK p{I, J, K, c_value(d.m1, d.genera, I), c_value(d.m2, d.genera, J)};
  return p;
}

std::vector<PartitionIJK> all_partitions(const StarData& d) {
  const int h = static_cast<int>(d.genera.size());
  std::vector<PartitionIJK> out;
  int total = 1;
  for (int i = 0; i < h; ++i) total *= 3;
  for (int code = 0; code < total; ++code) {
    std::vector<int> blocks[3];
    int c = code;
    for (int i = 0; i < h; ++i, c /= 3) blocks[c % 3].push_back(i);
    out.push_back(make_partition(d, blocks[0], blocks[1], blocks[2]));
  }
  return out;
}

HLocation h_location(const PartitionIJK& p, int h) {
  if (contains(p.I, h)) return HLocation::InI;
  if (contains(p.J, h)) return HLocation::InJ;
  if (contains(p.K, h)) return HLocation::InK;
  throw DomainError("component not in partition");
}

Rational alpha_closed(int eps, int u, int m2, const std::vector<int>& lprime, int h_size) {
  const int c = m2 + 2 - 4 * sum_of(lprime);
  const int r = h_size + eps;
  // [−2]_0 is a genuine pole of the closed form
  if (r == 0 && c + u - 2 == -2) throw DomainError("alpha_closed: pole of [a]_0 at a = -2");
  return Rational(-u) * bracket(c + u - 2, r) *
         f2(m2 - c - u, static_cast<long>(lprime.size()) + 1);
}

Rational alpha_brute(int eps, int u, int m2, const std::vector<int>& lprime, int h_size) {
  Rational sum;
  const auto all = range(static_cast<int>(lprime.size()));
  for (const auto& jp : subsets(all)) {
    std::vector<int> rest;
    for (int i : all)
      if (!contains(jp, i)) rest.push_back(i);
    const int c2 = c_value(m2, lprime, jp);
    const int a = c2 - 2 - d_value(lprime, rest) + u;
    sum += Rational(parity(rest.size()) * c2) * f2(m2, static_cast<long>(jp.size()) + 1) *
           bracket(a, h_size + static_cast<int>(rest.size()) + eps);
  }
  return sum;
}

Rational s_sum(int m1, int m2, const std::vector<int>& lprime, const std::vector<int>& u_genera) {
  if (u_genera.empty()) throw DomainError("s_sum needs the maximal component in u_genera");
  if (m1 + m2 + 4 != 4 * (sum_of(lprime) + sum_of(u_genera)))
    throw InvalidSignature("s_sum: genus-0 constraint fails");
  const int gh = u_genera.back();
  const std::vector<int> U(u_genera.begin(), u_genera.end() - 1);
  const int c2l = m2 + 2 - 4 * sum_of(lprime);
  Rational sum;
  for (const auto& ip : subsets(range(static_cast<int>(U.size())))) {
    const int i_size = static_cast<int>(ip.size());
    const int h_size = static_cast<int>(U.size()) - i_size;
    const int c1 = c_value(m1, U, ip);
    const long lin = static_cast<long>(m1 - 2 * i_size + 2) * (c1 - 4 * gh - 1) +
                     static_cast<long>(c1) * (c2l - 2 * h_size + 1);
    sum += f2(m1, i_size + 1) * bracket(c2l - 1, h_size) * Rational(lin);
  }
  return sum;
}

Rational n_count(const StarData& d, const PartitionIJK& p, HLocation where) {
  if (!p.admissible()) throw DomainError("n_count: partition not admissible");
  const int h = static_cast<int>(d.genera.size()) - 1;
  if (h_location(p, h) != where) throw DomainError("n_count: h is not where claimed");
  const auto& g = d.genera;
  const int k = static_cast<int>(p.K.size());
  const Rational base = f2(d.m1, static_cast<long>(p.I.size()) + 1) *
                        f2(d.m2, static_cast<long>(p.J.size()) + 1);
  Rational s;
  switch (where) {
    case HLocation::InI:
      for (const auto& l : subsets(p.K)) s += parity(l.size()) * bracket(p.c2 - 1 - d_value(g, l), k);
      return Rational(p.c2) * base * Rational(p.c1 - 1) * s;
    case HLocation::InJ:
      for (const auto& l : subsets(p.K)) s += parity(l.size()) * bracket(p.c2 - 3 - d_value(g, l), k);
      return Rational(p.c1) * base * Rational(p.c2 - 1) * s;
    case HLocation::InK: {
      std::vector<int> kp;
      for (int i : p.K)
        if (i != h) kp.push_back(i);
      for (auto l : subsets(kp)) {
        s += parity(l.size()) * bracket(p.c2 - 1 - d_value(g, l), k);
        l.push_back(h);
        s -= parity(l.size() - 1) * bracket(p.c2 - 3 - d_value(g, l), k);
      }
      return Rational(p.c1) * Rational(p.c2) * base * s;
    }
  }
  return 0;
}

Rational f_term(const StarData& d, const PartitionIJK& p) {
  if (!p.admissible()) throw DomainError("f_term: partition not admissible");
  const auto& g = d.genera;
  const long k = static_cast<long>(p.K.size());
  Rational s;
  for (const auto& l : subsets(p.K)) {
    std::vector<int> jl = p.J;
    jl.insert(jl.end(), l.begin(), l.end());
    if (c_value(d.m2, g, jl) <= 0) continue;
    s += parity(l.size()) * f2(p.c2 - 2 - d_value(g, l), k + 1);
  }
  return Rational(p.c1) * f2(d.m1, static_cast<long>(p.I.size()) + 1) * Rational(p.c2) *
         f2(d.m2, static_cast<long>(p.J.size()) + 1) * s;
}

Rational g_count(const StarData& d) {
  require_genus_zero(d);
  const int h = static_cast<int>(d.genera.size()) - 1;
  Rational sum;
  for (const auto& p : all_partitions(d))
    if (p.admissible()) sum += n_count(d, p, h_location(p, h));
  return Rational(r_product(d)) * sum;
}

Rational f_count(const StarData& d) {
  require_genus_zero(d);
  Rational sum;
  for (const auto& p : all_partitions(d))
    if (p.admissible()) sum += f_term(d, p);
  return Rational(r_product(d)) * sum;
}

VandermondeSides vandermonde_sides(int m2, const std::vector<int>& lprime, int u) {
  if (lprime.empty()) throw DomainError("vandermonde: L' must be nonempty");
  const long n = static_cast<long>(lprime.size());
  const long c = m2 + 2 - 4 * sum_of(lprime);
  VandermondeSides v;
  try {
    for (long r = 0; r < n; ++r)
      v.lhs += Rational(parity(r) * binomial(n - 1, r)) * f2(m2, n + 1 - r) * f2(c + u + 2 * r - 2, r + 2);
  } catch (const DomainError& e) {
    throw DomainError(std::string("vandermonde lhs: ") + e.what());
  }
  try {
    v.rhs = f2(m2 - c - u, n + 1);
  } catch (const DomainError& e) {
    throw DomainError(std::string("vandermonde rhs: ") + e.what());
  }
  return v;
}

bool vandermonde_check(int m2, const std::vector<int>& lprime, int u) {
  auto v = vandermonde_sides(m2, lprime, u);
  return v.lhs == v.rhs;
}

}  // namespace stratavol
