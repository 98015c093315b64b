#include "stratavol/graphs.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace stratavol {

namespace {

void partitions_rec(int n, int max_part, std::vector<int>& cur,
                    std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(n - p, p, cur, out);
    cur.pop_back();
  }
}

Edge flower_edge(int k, int top, int bottom, int h) {
  Edge e{top, bottom, k * (2 * h - 2), -2 * k * h, 0};
  e.kappa = e.m_top + k;
  return e;
}

std::string list_str(const std::vector<int>& v) { return "[" + join_ints(v) + "]"; }

std::vector<int> one_based(std::vector<int> v) {
  for (int& x : v) ++x;
  return v;
}

int sun_index(const TwoLevelGraph& g) {
  for (size_t t = 0; t < g.tops.size(); ++t)
    if (g.tops[t].is_sun) return static_cast<int>(t);
  return -1;
}

}  // namespace

std::vector<std::vector<int>> partitions(int n, int max_part) {
  std::vector<std::vector<int>> out;
  if (n < 0) return out;
  std::vector<int> cur;
  partitions_rec(n, max_part, cur, out);
  return out;
}

std::vector<std::vector<int>> partitions(int n) { return partitions(n, n); }

TwoLevelGraph make_special_star(const Signature& mu, std::vector<int> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<>());
  TwoLevelGraph g{mu, GraphKind::SpecialStar, {}, {}, {}};
  BottomVertex center;
  for (int i = 0; i < mu.n(); ++i) center.legs.push_back(i);
  g.bottoms.push_back(center);
  for (int h : parts) {
    g.tops.push_back({h, {}, false, true});
    g.edges.push_back(flower_edge(mu.k(), static_cast<int>(g.tops.size()) - 1, 0, h));
  }
  return g;
}

TwoLevelGraph make_sunflower(const Signature& mu, std::vector<Petal> petals) {
  const int k = mu.k();
  std::sort(petals.begin(), petals.end(),
            [](const Petal& a, const Petal& b) { return a.leg < b.leg; });
  TwoLevelGraph g{mu, GraphKind::Sunflower, {}, {}, {}};

  TopVertex sun{mu.genus(), {}, true, false};
  std::vector<bool> on_bottom(mu.n(), false);
  for (auto& p : petals) {
    std::sort(p.flowers.begin(), p.flowers.end(), std::greater<>());
    on_bottom.at(p.leg) = true;
    sun.genus -= std::accumulate(p.flowers.begin(), p.flowers.end(), 0);
  }
  for (int i = 0; i < mu.n(); ++i)
    if (!on_bottom[i]) sun.legs.push_back(i);
  g.tops.push_back(sun);

  for (const auto& p : petals) {
    int b = static_cast<int>(g.bottoms.size());
    g.bottoms.push_back({0, {p.leg}});
    int G = std::accumulate(p.flowers.begin(), p.flowers.end(), 0);
    Edge e{0, b, mu.orders()[p.leg] - 2 * k * G, 0, 0};
    e.m_bot = -2 * k - e.m_top;
    e.kappa = e.m_top + k;
    g.edges.push_back(e);
    for (int h : p.flowers) {
      g.tops.push_back({h, {}, false, true});
      g.edges.push_back(flower_edge(k, static_cast<int>(g.tops.size()) - 1, b, h));
    }
  }
  return g;
}

std::vector<std::string> validate(const TwoLevelGraph& g) {
  std::vector<std::string> out;
  const int k = g.k();
  const int nt = static_cast<int>(g.tops.size());
  const int nb = static_cast<int>(g.bottoms.size());
  const auto& mu = g.mu.orders();

  std::vector<int> top_deg(nt, 0), bot_deg(nb, 0);
  std::vector<long> top_sum(nt, 0), bot_sum(nb, 0);
  std::vector<int> bot_flowers(nb, 0);
  std::vector<bool> sun_touches(nb, false);

  for (size_t i = 0; i < g.edges.size(); ++i) {
    const Edge& e = g.edges[i];
    std::string tag = " on edge " + std::to_string(i);
    if (e.top < 0 || e.top >= nt || e.bottom < 0 || e.bottom >= nb) {
      out.push_back("dangling endpoint" + tag);
      continue;
    }
    if (e.m_top + e.m_bot != -2 * k) out.push_back("m_top + m_bot ≠ -2k" + tag);
    if (e.kappa != e.m_top + k) out.push_back("kappa ≠ m_top + k" + tag);
    if (e.kappa < 1) out.push_back("kappa < 1" + tag);
    ++top_deg[e.top];
    ++bot_deg[e.bottom];
    top_sum[e.top] += e.m_top;
    bot_sum[e.bottom] += e.m_bot;
    if (g.tops[e.top].is_abelian_flower) ++bot_flowers[e.bottom];
    if (g.tops[e.top].is_sun) sun_touches[e.bottom] = true;
  }

  // markings
  std::vector<int> seen(mu.size(), 0);
  auto mark = [&](const std::vector<int>& legs, long& sum) {
    for (int l : legs) {
      if (l < 0 || l >= static_cast<int>(mu.size())) {
        out.push_back("leg index " + std::to_string(l) + " out of range");
        continue;
      }
      ++seen[l];
      sum += mu[l];
    }
  };
  for (int t = 0; t < nt; ++t) mark(g.tops[t].legs, top_sum[t]);
  for (int b = 0; b < nb; ++b) mark(g.bottoms[b].legs, bot_sum[b]);
  for (size_t i = 0; i < seen.size(); ++i)
    if (seen[i] != 1)
      out.push_back("marking " + std::to_string(i + 1) + " appears " + std::to_string(seen[i]) +
                    " times");

  // tree: connected with |E| = |V| - 1
  const int nv = nt + nb;
  if (static_cast<int>(g.edges.size()) != nv - 1) {
    out.push_back("not a tree: " + std::to_string(g.edges.size()) + " edges on " +
                  std::to_string(nv) + " vertices");
  } else {
    std::vector<int> parent(nv);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (const Edge& e : g.edges)
      if (e.top >= 0 && e.top < nt && e.bottom >= 0 && e.bottom < nb)
        parent[find(e.top)] = find(nt + e.bottom);
    for (int v = 1; v < nv; ++v)
      if (find(v) != find(0)) {
        out.push_back("not a tree: disconnected");
        break;
      }
  }

  for (int t = 0; t < nt; ++t) {
    const TopVertex& v = g.tops[t];
    std::string tag = "top vertex " + std::to_string(t);
    if (top_sum[t] != static_cast<long>(k) * (2 * v.genus - 2))
      out.push_back(tag + ": order sum ≠ k(2g-2)");
    if (v.is_abelian_flower) {
      if (v.is_sun) out.push_back(tag + ": flower marked as sun");
      if (v.genus < 1) out.push_back(tag + ": flower of genus < 1");
      if (!v.legs.empty()) out.push_back(tag + ": flower carries legs");
      if (top_deg[t] != 1) out.push_back(tag + ": flower without exactly one edge");
    } else if (!v.is_sun) {
      out.push_back(tag + ": neither sun nor abelian flower");
    }
  }
  for (int b = 0; b < nb; ++b) {
    const BottomVertex& v = g.bottoms[b];
    std::string tag = "bottom vertex " + std::to_string(b);
    if (v.genus != 0) out.push_back(tag + ": genus ≠ 0");
    if (bot_sum[b] != static_cast<long>(k) * (2 * v.genus - 2))
      out.push_back(tag + ": order sum ≠ k(2g-2)");
    if (bot_flowers[b] == 0 || v.legs.size() + bot_deg[b] < 3) out.push_back(tag + " unstable");
  }

  int suns = 0;
  for (const auto& v : g.tops) suns += v.is_sun;
  if (suns > 1) out.push_back("more than one sun");

  if (g.kind == GraphKind::Sunflower) {
    int s = sun_index(g);
    if (s < 0) {
      out.push_back("sunflower without a sun");
    } else {
      for (int b = 0; b < nb; ++b) {
        if (!sun_touches[b]) out.push_back("sun not joined to bottom vertex " + std::to_string(b));
        if (g.bottoms[b].legs.size() != 1)
          out.push_back("bottom vertex " + std::to_string(b) + ": not exactly one leg");
      }
      bool abelian = true;
      for (int l : g.tops[s].legs)
        if (l >= 0 && l < static_cast<int>(mu.size()))
          abelian = abelian && mu[l] >= 0 && mu[l] % k == 0;
      for (const Edge& e : g.edges)
        if (e.top == s) abelian = abelian && e.m_top >= 0 && e.m_top % k == 0;
      if (abelian) out.push_back("sun of holomorphic abelian type");
    }
  } else {
    if (suns != 0) out.push_back("special star with a sun");
    if (nb != 1) {
      out.push_back("special star without exactly one center");
    } else {
      size_t legs = g.bottoms[0].legs.size();
      if (!(legs == 2 || (legs == 1 && k == 1)))
        out.push_back("center carries " + std::to_string(legs) + " markings");
    }
    int total = 0;
    for (const auto& v : g.tops) total += v.genus;
    if (total != g.mu.genus()) out.push_back("flower genera do not sum to g");
  }
  return out;
}

std::vector<EdgeDatum> edge_data(const TwoLevelGraph& g) {
  std::vector<EdgeDatum> out;
  for (const Edge& e : g.edges) out.emplace_back(e.m_top, e.m_bot, e.kappa);
  return out;
}

std::vector<int> flowers_of(const TwoLevelGraph& g, int b) {
  std::vector<int> out;
  for (const Edge& e : g.edges)
    if (e.bottom == b && g.tops[e.top].is_abelian_flower) out.push_back(g.tops[e.top].genus);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

Integer aut_order(const TwoLevelGraph& g) {
  Integer r = 1;
  for (int b = 0; b < static_cast<int>(g.bottoms.size()); ++b) {
    std::map<int, int> mult;
    for (int h : flowers_of(g, b)) ++mult[h];
    for (auto [h, m] : mult) r *= factorial(m);
  }
  return r;
}

int h_ab(const TwoLevelGraph& g) {
  return static_cast<int>(std::count_if(g.tops.begin(), g.tops.end(),
                                        [](const TopVertex& v) { return v.is_abelian_flower; }));
}

Rational prefactor(const TwoLevelGraph& g) {
  Integer d = aut_order(g);
  for (int i = 0; i < h_ab(g); ++i) d *= g.k();
  return Rational(Integer(1), d);
}

Integer kappa_product(const TwoLevelGraph& g) {
  Integer r = 1;
  for (const Edge& e : g.edges) r *= e.kappa;
  return r;
}

std::vector<Signature> vertex_signatures(const TwoLevelGraph& g) {
  std::vector<Signature> out;
  const auto& mu = g.mu.orders();
  for (int t = 0; t < static_cast<int>(g.tops.size()); ++t) {
    const TopVertex& v = g.tops[t];
    std::vector<int> o;
    for (int l : v.legs) o.push_back(mu[l]);
    for (const Edge& e : g.edges)
      if (e.top == t) o.push_back(e.m_top);
    if (v.is_abelian_flower) {
      for (int& m : o) m /= g.k();
      out.emplace_back(1, o);
    } else {
      out.emplace_back(g.k(), o);
    }
  }
  for (int b = 0; b < static_cast<int>(g.bottoms.size()); ++b) {
    std::vector<int> o;
    for (int l : g.bottoms[b].legs) o.push_back(mu[l]);
    for (const Edge& e : g.edges)
      if (e.bottom == b) o.push_back(e.m_bot);
    out.emplace_back(g.k(), o);
  }
  return out;
}

bool top_dim_check(const TwoLevelGraph& g) {
  int total = -1;
  for (int t = 0; t < static_cast<int>(g.tops.size()); ++t) {
    const TopVertex& v = g.tops[t];
    int nv = static_cast<int>(v.legs.size());
    for (const Edge& e : g.edges) nv += (e.top == t);
    total += 2 * v.genus + nv + (v.is_abelian_flower ? -1 : -2);
  }
  return total == proj_dim(g.mu);
}

std::string serialize(const TwoLevelGraph& g) {
  const std::string k = std::to_string(g.k());
  if (g.kind == GraphKind::SpecialStar) {
    std::vector<int> center, parts;
    if (!g.bottoms.empty())
      for (int l : g.bottoms[0].legs) center.push_back(g.mu.orders()[l]);
    for (const auto& v : g.tops) parts.push_back(v.genus);
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return "ST{k=" + k + ";center=" + list_str(center) + ";parts=" + list_str(parts) + "}";
  }
  int s = sun_index(g);
  std::string out = "SF{k=" + k + ";sun={g=" + std::to_string(s < 0 ? 0 : g.tops[s].genus) +
                    ",legs=" + list_str(one_based(s < 0 ? std::vector<int>{} : g.tops[s].legs)) +
                    "};petals=[";
  std::vector<std::pair<int, int>> order;
  for (int b = 0; b < static_cast<int>(g.bottoms.size()); ++b)
    order.emplace_back(g.bottoms[b].legs.empty() ? -1 : g.bottoms[b].legs[0], b);
  std::sort(order.begin(), order.end());
  for (size_t i = 0; i < order.size(); ++i) {
    if (i) out += ',';
    out += "{leg=" + std::to_string(order[i].first + 1) +
           ",flowers=" + list_str(flowers_of(g, order[i].second)) + "}";
  }
  return out + "]}";
}

std::vector<TwoLevelGraph> enumerate_special_stars(const Signature& mu) {
  std::vector<TwoLevelGraph> out;
  const int n = mu.n(), g = mu.genus();
  if (n == 2) {
    if (is_holo_abelian(mu)) return out;
  } else if (!(n == 1 && mu.k() == 1)) {
    return out;
  }
  for (auto& parts : partitions(g)) {
    if (n == 1 && parts.size() < 2) continue;
    out.push_back(make_special_star(mu, parts));
  }
  return out;
}

std::vector<TwoLevelGraph> enumerate_sunflowers(const Signature& mu, EnumerationStats* stats) {
  std::vector<TwoLevelGraph> out;
  const int n = mu.n(), k = mu.k(), g = mu.genus();
  const auto& m = mu.orders();

  // S by size, then lexicographically
  std::vector<std::vector<int>> subsets;
  for (int mask = 1; mask < (1 << n); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) s.push_back(i);
    subsets.push_back(s);
  }
  std::stable_sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });

  for (const auto& S : subsets) {
    // flower multisets per petal, descending lexicographic
    std::vector<std::vector<std::vector<int>>> options;
    for (int i : S) {
      std::vector<std::vector<int>> opts;
      for (int G = 1; G <= g; ++G) {
        if (m[i] - 2 * k * G + k < 1) break;
        for (auto& p : partitions(G)) opts.push_back(p);
      }
      std::sort(opts.begin(), opts.end(), std::greater<>());
      options.push_back(std::move(opts));
    }
    if (std::any_of(options.begin(), options.end(), [](const auto& o) { return o.empty(); }))
      continue;

    std::vector<size_t> idx(S.size(), 0);
    while (true) {
      int used = 0;
      std::vector<int> sun_orders;
      std::vector<bool> in_s(n, false);
      for (int i : S) in_s[i] = true;
      for (int i = 0; i < n; ++i)
        if (!in_s[i]) sun_orders.push_back(m[i]);
      for (size_t j = 0; j < S.size(); ++j) {
        const auto& fl = options[j][idx[j]];
        int G = std::accumulate(fl.begin(), fl.end(), 0);
        used += G;
        sun_orders.push_back(m[S[j]] - 2 * k * G);
      }
      const int sun_genus = g - used;
      bool keep = sun_genus >= 0;
      if (keep) {
        bool abelian = std::all_of(sun_orders.begin(), sun_orders.end(),
                                   [&](int x) { return x >= 0 && x % k == 0; });
        keep = !abelian;
      }
      if (keep && sun_genus == 0 && sun_orders.size() < 3) {
        keep = false;
        if (stats) ++stats->unstable_suns;
      }
      if (keep) {
        std::vector<Petal> petals;
        for (size_t j = 0; j < S.size(); ++j) petals.push_back({S[j], options[j][idx[j]]});
        out.push_back(make_sunflower(mu, petals));
      }
      // odometer, last petal fastest
      int j = static_cast<int>(S.size()) - 1;
      while (j >= 0 && ++idx[j] == options[j].size()) idx[j--] = 0;
      if (j < 0) break;
    }
  }
  return out;
}

std::vector<TwoLevelGraph> all_graphs(const Signature& mu, EnumerationStats* stats) {
  auto out = enumerate_special_stars(mu);
  auto sf = enumerate_sunflowers(mu, stats);
  out.insert(out.end(), sf.begin(), sf.end());
  return out;
}

}  // namespace stratavol
