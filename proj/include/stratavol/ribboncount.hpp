#pragma once

#include <vector>

#include "stratavol/core.hpp"

namespace stratavol {

// Two zeros m1, m2 and components of genera g_1..g_h (kappa_i = 4g_i - 2).
struct StarData {
  int m1 = 0;
  int m2 = 0;
  std::vector<int> genera;
};

struct PartitionIJK {
  std::vector<int> I, J, K;  // 0-based component indices
  int c1 = 0;
  int c2 = 0;
  bool admissible() const { return c1 > 0 && c2 > 0 && !K.empty(); }
};

enum class HLocation { InI, InJ, InK };

void require_genus_zero(const StarData& d);

PartitionIJK make_partition(const StarData& d, std::vector<int> I, std::vector<int> J,
                            std::vector<int> K);
std::vector<PartitionIJK> all_partitions(const StarData& d);  // 3^h assignments
HLocation h_location(const PartitionIJK& p, int h);

// alpha^eps_{L',H}(u)
Rational alpha_closed(int eps, int u, int m2, const std::vector<int>& lprime_genera, int h_size);
Rational alpha_brute(int eps, int u, int m2, const std::vector<int>& lprime_genera, int h_size);

// u_genera lists U followed by the distinguished maximal component h.
Rational s_sum(int m1, int m2, const std::vector<int>& lprime_genera,
               const std::vector<int>& u_genera);

Rational n_count(const StarData& d, const PartitionIJK& p, HLocation where);
Rational f_term(const StarData& d, const PartitionIJK& p);

Rational g_count(const StarData& d);
Rational f_count(const StarData& d);

struct VandermondeSides {
  Rational lhs;
  Rational rhs;
};

VandermondeSides vandermonde_sides(int m2, const std::vector<int>& lprime_genera, int u);
bool vandermonde_check(int m2, const std::vector<int>& lprime_genera, int u);

}  // namespace stratavol
