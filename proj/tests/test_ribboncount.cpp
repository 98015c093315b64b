#include <gtest/gtest.h>

#include "stratavol/ribboncount.hpp"
#include "stratavol/suites.hpp"
#include "stratavol/volumes.hpp"

using namespace stratavol;

namespace {

// The S-sum spelled out without the genus-0 guard, over U = (g_1..g_{n-1}), h = g_n.
Rational s_sum_raw(int m1, int m2, const std::vector<int>& lp, const std::vector<int>& u) {
  int c2l = m2 + 2;
  for (int x : lp) c2l -= 4 * x;
  const int gh = u.back(), n = static_cast<int>(u.size()) - 1;
  Rational s;
  for (int mask = 0; mask < (1 << n); ++mask) {
    int c1 = m1 + 2, in = 0;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) c1 -= 4 * u[i], ++in;
    int hs = n - in;
    s += f2(m1, in + 1) * bracket(c2l - 1, hs) *
         Rational((m1 - 2 * in + 2) * (c1 - 4 * gh - 1) + c1 * (c2l - 2 * hs + 1));
  }
  return s;
}

}  // namespace

TEST(Alpha, Examples) {
  for (int m2 : {3, 5, 7})
    for (int hs : {0, 1, 2})
      if (hs > 0) EXPECT_EQ(alpha_closed(0, 0, m2, {1}, hs), 0);
  EXPECT_EQ(alpha_closed(0, 1, 5, {1}, 1), -1);
  EXPECT_EQ(alpha_closed(1, 1, 5, {1}, 0), -1);
  EXPECT_EQ(alpha_brute(0, 1, 5, {1}, 1), -1);
  EXPECT_EQ(alpha_brute(0, 0, 7, {1, 1}, 0), 0);
  EXPECT_EQ(alpha_brute(1, 2, 9, {2}, 1), alpha_closed(1, 2, 9, {2}, 1));
}

TEST(Alpha, BruteTermsByHand) {
  // eps=0, u=1, m2=5, L'=(1), |H|=1: J'={} gives -7*(1/7)*[4]_2 = -4, J'=L' gives 3*1*[2]_1 = 3
  Rational t_empty = Rational(-1) * Rational(7) * f2(5, 1) * bracket(7 - 2 - 2 + 1, 2);
  Rational t_full = Rational(3) * f2(5, 2) * bracket(3 - 2 + 1, 1);
  EXPECT_EQ(t_empty + t_full, alpha_brute(0, 1, 5, {1}, 1));
}

TEST(Alpha, PoleIsUndefined) {
  // c_{2,L'} + u - 2 = -2 with |H| + eps = 0
  EXPECT_THROW(alpha_closed(0, -3, 5, {1}, 0), DomainError);
  EXPECT_NO_THROW(alpha_brute(0, -3, 5, {1}, 0));
}

TEST(SSum, Examples) {
  EXPECT_EQ(s_sum(5, 3, {1}, {1, 1}), 0);
  EXPECT_EQ(s_sum(5, 3, {}, {3}), 0);
  EXPECT_EQ(s_sum(7, 5, {2}, {1, 1}), 0);
  EXPECT_THROW(s_sum(7, 5, {2}, {1}), InvalidSignature);
  EXPECT_THROW(s_sum(5, 3, {3}, {}), DomainError);
}

TEST(SSum, NeedsTheGenusZeroConstraint) {
  // off the constraint the sum does not vanish
  int nonzero = 0;
  for (int m1 = 1; m1 <= 9; m1 += 2)
    for (int m2 = 1; m2 <= 9; m2 += 2)
      for (const auto& u : {std::vector<int>{1, 1}, {2, 1}, {1, 2}, {1, 1, 1}})
        nonzero += !s_sum_raw(m1, m2, {1}, u).is_zero();
  EXPECT_GT(nonzero, 0);
  for (auto [m1, m2] : {std::pair{5, 3}, {3, 5}, {7, 5}, {9, 3}})
    for (const auto& lp : {std::vector<int>{}, {1}, {2}, {1, 1}})
      for (const auto& u : {std::vector<int>{1}, {2}, {3}, {1, 1}, {2, 1}, {1, 2}, {1, 1, 1}}) {
        int total = 0;
        for (int x : lp) total += x;
        for (int x : u) total += x;
        if (m1 + m2 + 4 == 4 * total) EXPECT_EQ(s_sum(m1, m2, lp, u), s_sum_raw(m1, m2, lp, u));
      }
}

TEST(Partitions, Enumeration) {
  StarData d{5, 7, {1, 2}};
  auto ps = all_partitions(d);
  EXPECT_EQ(ps.size(), 9u);
  auto p = make_partition(d, {0}, {}, {1});
  EXPECT_EQ(p.c1, 3);
  EXPECT_EQ(p.c2, 9);
  EXPECT_TRUE(p.admissible());
  EXPECT_EQ(h_location(p, 1), HLocation::InK);
  EXPECT_THROW(make_partition(d, {0}, {0}, {1}), DomainError);
  EXPECT_THROW(make_partition(d, {0}, {}, {}), DomainError);
}

TEST(NCount, Examples) {
  StarData d{5, 3, {3}};
  auto p = make_partition(d, {}, {}, {0});
  EXPECT_EQ(n_count(d, p, HLocation::InK), 1);
  EXPECT_THROW(n_count(d, p, HLocation::InI), DomainError);
  auto no_k = make_partition(StarData{5, 3, {2, 1}}, {0}, {1}, {});
  EXPECT_THROW(n_count(StarData{5, 3, {2, 1}}, no_k, HLocation::InJ), DomainError);
  EXPECT_THROW(f_term(StarData{5, 3, {2, 1}}, no_k), DomainError);
}

TEST(NCount, PartitionSumsAgreeWithFSide) {
  StarData d{5, 7, {1, 2}};
  auto p = make_partition(d, {0}, {}, {1});
  Rational n_side, f_side;
  for (const auto& pp : all_partitions(d))
    if (pp.admissible()) {
      n_side += n_count(d, pp, h_location(pp, 1));
      f_side += f_term(d, pp);
    }
  EXPECT_EQ(n_side, f_side);
  EXPECT_NO_THROW(n_count(d, p, HLocation::InK));
}

TEST(GCount, Examples) {
  EXPECT_EQ(g_count({5, 3, {3}}), 5);
  EXPECT_EQ(g_count({5, 3, {2, 1}}), 18);
  EXPECT_EQ(g_count({5, 3, {1, 1, 1}}), 30);
  EXPECT_EQ(f_count({5, 3, {3}}), 5);
  EXPECT_EQ(f_count({5, 3, {2, 1}}), g_count({5, 3, {2, 1}}));
  EXPECT_EQ(f_count({7, 5, {1, 1, 2}}), g_count({7, 5, {1, 1, 2}}));
  EXPECT_THROW(g_count({5, 3, {2}}), InvalidSignature);
  EXPECT_THROW(f_count({5, 3, {}}), InvalidSignature);
}

TEST(GCount, ClosedForm) {
  for (auto g : {std::vector<int>{3}, {2, 1}, {1, 1, 1}}) {
    Rational r = vol_q0_two_poles(5, 3, g);
    for (int x : g) r *= Rational(4 * x - 2) / 2;
    EXPECT_EQ(g_count({5, 3, g}), r);
  }
}

TEST(GCount, IndependentOfWhichComponentIsLast) {
  for (const auto& ms : {std::vector<int>{3, 1}, {2, 1, 1}, {3, 2}, {2, 2, 1}, {1, 2, 1, 1}}) {
    int total = 0;
    for (int x : ms) total += x;
    for (int m1 = 1; m1 <= 4 * total - 5; m1 += 2) {
      Rational want = g_count({m1, 4 * total - 4 - m1, ms});
      for (const auto& perm : distinct_permutations(ms))
        EXPECT_EQ(g_count({m1, 4 * total - 4 - m1, perm}), want);
    }
  }
}

TEST(Vandermonde, Examples) {
  EXPECT_TRUE(vandermonde_check(5, {1}, 1));
  EXPECT_TRUE(vandermonde_check(9, {1, 1}, 0));
  EXPECT_TRUE(vandermonde_check(7, {2}, 2));
  auto v = vandermonde_sides(9, {1, 1}, 0);
  EXPECT_EQ(v.lhs, v.rhs);
  EXPECT_EQ(v.rhs, 6);
  EXPECT_THROW(vandermonde_sides(5, {}, 1), DomainError);
}

TEST(Suites, AllPassOnDefaultGrids) {
  for (const auto& name : suite_names()) {
    if (name == "tables") continue;
    auto r = run_suite(name, {}, "");
    EXPECT_TRUE(r.ok()) << name << ": " << (r.failures.empty() ? "no instances" : r.failures[0]);
  }
}

TEST(Suites, GridSizes) {
  EXPECT_GE(run_alpha_suite().instances, 1000);
  EXPECT_EQ(run_gf_suite().instances, 188);
  EXPECT_EQ(run_vandermonde_suite().instances, 594);
}
