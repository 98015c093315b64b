#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "stratavol/core.hpp"

namespace stratavol {

enum class GraphKind { SpecialStar, Sunflower };

struct TopVertex {
  int genus = 0;
  std::vector<int> legs;  // 0-based marking indices
  bool is_sun = false;
  bool is_abelian_flower = false;
};

struct BottomVertex {
  int genus = 0;
  std::vector<int> legs;
};

struct Edge {
  int top = 0;
  int bottom = 0;
  int m_top = 0;
  int m_bot = 0;
  int kappa = 0;
};

struct TwoLevelGraph {
  Signature mu;
  GraphKind kind;
  std::vector<TopVertex> tops;
  std::vector<BottomVertex> bottoms;
  std::vector<Edge> edges;

  int k() const { return mu.k(); }
};

// Flowers attached to one marked bottom vertex.
struct Petal {
  int leg;  // 0-based
  std::vector<int> flowers;
};

TwoLevelGraph make_special_star(const Signature& mu, std::vector<int> parts);
TwoLevelGraph make_sunflower(const Signature& mu, std::vector<Petal> petals);

std::vector<std::string> validate(const TwoLevelGraph& g);

using EdgeDatum = std::tuple<int, int, int>;  // (m_top, m_bot, kappa)
std::vector<EdgeDatum> edge_data(const TwoLevelGraph& g);

Integer aut_order(const TwoLevelGraph& g);
int h_ab(const TwoLevelGraph& g);
Rational prefactor(const TwoLevelGraph& g);
Integer kappa_product(const TwoLevelGraph& g);

// Sun (or flowers, for stars) first, then bottoms. Flowers come back as k=1.
std::vector<Signature> vertex_signatures(const TwoLevelGraph& g);

bool top_dim_check(const TwoLevelGraph& g);

// Genera of the flowers above bottom vertex b, descending.
std::vector<int> flowers_of(const TwoLevelGraph& g, int b);

std::string serialize(const TwoLevelGraph& g);

struct EnumerationStats {
  int unstable_suns = 0;  // candidates dropped only because the sun was unstable
};

std::vector<TwoLevelGraph> enumerate_special_stars(const Signature& mu);
std::vector<TwoLevelGraph> enumerate_sunflowers(const Signature& mu,
                                                EnumerationStats* stats = nullptr);
std::vector<TwoLevelGraph> all_graphs(const Signature& mu, EnumerationStats* stats = nullptr);

// Partitions of n into parts <= max_part, reverse-lexicographic: (3),(2,1),(1,1,1).
std::vector<std::vector<int>> partitions(int n, int max_part);
std::vector<std::vector<int>> partitions(int n);

}  // namespace stratavol
