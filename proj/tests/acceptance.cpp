// One line per acceptance criterion; exit status is nonzero if any fails.
#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "stratavol/completed.hpp"
#include "stratavol/ribboncount.hpp"
#include "stratavol/suites.hpp"

using namespace stratavol;

namespace {

Rational q(const char* s) { return Rational::parse(s); }

VolumeTable fixture(const std::string& name) {
  return VolumeTable::load(std::string(STRATAVOL_FIXTURES) + "/" + name);
}

struct Row {
  std::string graph;  // empty for the main row
  Rational prefactor;
  long kappa;
  Rational vol_prod;
  Rational total;
};

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Compares every cell of a report against the rows of a printed table.
Outcome compare_table(const Report& rep, const std::vector<Row>& rows, const Rational& sum) {
  Outcome o;
  if (rep.contributions.size() + 1 != rows.size())
    o.fail(std::to_string(rep.contributions.size() + 1) + " rows, expected " + std::to_string(rows.size()));
  if (rep.main_vol != rows[0].total) o.fail("main row " + rep.main_vol.str());
  for (size_t i = 1; i < rows.size(); ++i) {
    const Row& want = rows[i];
    auto it = std::find_if(rep.contributions.begin(), rep.contributions.end(),
                           [&](const Contribution& c) { return serialize(c.graph) == want.graph; });
    if (it == rep.contributions.end()) {
      o.fail("no graph " + want.graph);
      continue;
    }
    if (it->prefactor != want.prefactor || it->kappa_prod != want.kappa ||
        it->vol_prod != want.vol_prod || it->total != want.total)
      o.fail("row " + std::to_string(i) + " " + want.graph + " got " + it->prefactor.str() + " " +
             it->kappa_prod.get_str() + " " + it->vol_prod.str() + " " + it->total.str());
  }
  if (rep.completed_vol != sum) o.fail("sum " + rep.completed_vol.str());
  return o;
}

Outcome criterion_53_table() {
  auto t0 = std::chrono::steady_clock::now();
  const std::vector<Row> rows = {
      {"", 1, 1, q("-35/648"), q("-35/648")},
      {"ST{k=2;center=[5,3];parts=[3]}", q("1/2"), 10, q("-305/18144"), q("-1525/18144")},
      {"ST{k=2;center=[5,3];parts=[2,1]}", q("1/4"), 12, q("-1/160"), q("-3/160")},
      {"ST{k=2;center=[5,3];parts=[1,1,1]}", q("1/48"), 8, q("-5/288"), q("-5/1728")},
      {"SF{k=2;sun={g=2,legs=[1]};petals=[{leg=2,flowers=[1]}]}", q("1/2"), 2, q("-7/2160"), q("-7/2160")},
      {"SF{k=2;sun={g=2,legs=[2]};petals=[{leg=1,flowers=[1]}]}", q("1/2"), 6, 0, 0},
      {"SF{k=2;sun={g=1,legs=[]};petals=[{leg=1,flowers=[1]},{leg=2,flowers=[1]}]}", q("1/4"), 12, 0, 0},
  };
  Report rep = completed_volume(Signature(2, {5, 3}), fixture("mu53.vol"));
  Outcome o = compare_table(rep, rows, q("-73/448"));
  double s = seconds_since(t0);
  if (s >= 1.0) o.fail("took " + std::to_string(s) + " s");
  if (o.ok) o.detail = "7 rows and sum -73/448 exact";
  return o;
}

Outcome criterion_422_table() {
  auto t0 = std::chrono::steady_clock::now();
  const std::vector<Row> rows = {
      {"", 1, 1, q("23/9216"), q("23/9216")},
      {"SF{k=1;sun={g=1,legs=[2,3]};petals=[{leg=1,flowers=[2]}]}", 1, 3, q("1/5120"), q("3/5120")},
      {"SF{k=1;sun={g=1,legs=[2,3]};petals=[{leg=1,flowers=[1,1]}]}", q("1/2"), 1, q("1/1152"), q("1/2304")},
      {"SF{k=1;sun={g=2,legs=[2,3]};petals=[{leg=1,flowers=[1]}]}", 1, 3, q("-1/1536"), q("-1/512")},
      {"SF{k=1;sun={g=2,legs=[1,3]};petals=[{leg=2,flowers=[1]}]}", 1, 1, q("-23/27648"), q("-23/27648")},
      {"SF{k=1;sun={g=0,legs=[3]};petals=[{leg=1,flowers=[2]},{leg=2,flowers=[1]}]}", 1, 3, q("-1/15360"), q("-1/5120")},
      {"SF{k=1;sun={g=0,legs=[3]};petals=[{leg=1,flowers=[1,1]},{leg=2,flowers=[1]}]}", q("1/2"), 1, q("-1/3456"), q("-1/6912")},
      {"SF{k=1;sun={g=1,legs=[3]};petals=[{leg=1,flowers=[1]},{leg=2,flowers=[1]}]}", 1, 3, q("1/4608"), q("1/1536")},
  };
  Report rep = completed_volume(Signature(1, {4, 2, -2}), fixture("mu422.vol"));
  Outcome o = compare_table(rep, rows, q("1/960"));
  for (const auto& c : rep.contributions)
    if (c.total.is_zero()) o.fail("zero row " + serialize(c.graph));
  double s = seconds_since(t0);
  if (s >= 1.0) o.fail("took " + std::to_string(s) + " s");
  if (o.ok) o.detail = "8 rows, no zeros, sum 1/960 exact";
  return o;
}

Outcome criterion_normalization() {
  Outcome o;
  Signature sig(2, {5, 3});
  PiValue v = mv_convert(sig, q("-73/448"), VolumeKind::Completed);
  if (v.coefficient != q("73/420")) o.fail("coefficient " + v.coefficient.str());
  const int expected_power = 2 * sig.genus() - 2 + sig.n();
  if (v.pi_power != expected_power) o.fail("pi power " + std::to_string(v.pi_power));
  // the worked example's prose prints pi^4; the conversion formula gives pi^6
  const int printed_power = 4;
  if (v.pi_power == printed_power) o.fail("pi power matches the printed value; discrepancy note is stale");
  if (o.ok) o.detail = v.str() + " (known issue: prose prints pi^4, formula gives pi^6)";
  return o;
}

// Exact cube root of a rational cube, or nothing.
std::optional<Rational> cube_root(const Rational& x) {
  auto root = [](Integer z) -> std::optional<Integer> {
    bool neg = z < 0;
    if (neg) z = -z;
    Integer r;
    if (mpz_root(r.get_mpz_t(), z.get_mpz_t(), 3) == 0) return std::nullopt;
    return neg ? Integer(-r) : r;
  };
  auto n = root(x.num()), d = root(x.den());
  if (!n || !d) return std::nullopt;
  return Rational(*n, *d);
}

Outcome criterion_genus_zero() {
  Outcome o;
  const Rational b1 = vol_q0_two_poles(5, 3, {3}), b6 = vol_q0_two_poles(5, 3, {2, 1}),
                 b30 = vol_q0_two_poles(5, 3, {1, 1, 1});
  if (b1 != 1 || b6 != 6 || b30 != 30) o.fail("bottoms " + b1.str() + "," + b6.str() + "," + b30.str());

  // printed star rows: prefactor * kappa * vol(flowers) * vol(centre) = total
  auto x0 = cube_root(q("-5/1728") / (q("1/48") * 8 * b30));
  if (!x0) {
    o.fail("D3 row has no rational solution");
    return o;
  }
  Rational x2 = q("-3/160") / (q("1/4") * 12 * b6 * *x0);
  Rational x4 = q("-1525/18144") / (q("1/2") * 10 * b1);

  auto table = fixture("mu53.vol");
  auto tv = [&](std::vector<int> mu, int k) { return lookup({Signature(k, mu), Role::Flower}, table); };
  if (*x0 != tv({0}, 1) || x2 != tv({2}, 1) || x4 != tv({4}, 1))
    o.fail("solved " + x0->str() + ", " + x2.str() + ", " + x4.str() + " differ from the fixture");

  if (x4 * b1 != q("-305/18144") || x2 * *x0 * b6 != q("-1/160") || pow(*x0, 3) * b30 != q("-5/288"))
    o.fail("re-multiplied volume products differ");

  // over-determination: the sunflower row with sun (5,-1) reuses vol(H(0))
  Rational sun = lookup({Signature(2, {5, -1}), Role::Sun}, table);
  Rational bottom = lookup({Signature(2, {3, -3, -4}), Role::Bottom}, table);
  if (q("1/2") * 2 * sun * *x0 * bottom != q("-7/2160")) o.fail("sunflower row inconsistent");
  if (o.ok) o.detail = "bottoms 1, 6, 30; vol(H(0),H(2),H(4)) = " + x0->str() + ", " + x2.str() + ", " + x4.str();
  return o;
}

Outcome criterion_identities() {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  std::ostringstream counts;
  for (auto* run : {&run_alpha_suite, &run_s_sum_suite, &run_gf_suite, &run_vandermonde_suite}) {
    SuiteResult r = (*run)({});
    counts << r.name << "=" << r.instances << " ";
    if (!r.ok()) o.fail(r.name + ": " + (r.failures.empty() ? "empty grid" : r.failures[0]));
  }
  double s = seconds_since(t0);
  if (s >= 60.0) o.fail("took " + std::to_string(s) + " s");
  if (o.ok) o.detail = counts.str() + "instances exact";
  return o;
}

Outcome criterion_counts() {
  Outcome o;
  struct Want {
    Signature sig;
    size_t stars, sunflowers;
  };
  for (const auto& w : {Want{Signature(2, {5, 3}), 3, 3}, Want{Signature(1, {4, 2, -2}), 0, 7},
                        Want{Signature(2, {1, 1, 1, 1}), 0, 0}}) {
    auto st = enumerate_special_stars(w.sig);
    auto sf = enumerate_sunflowers(w.sig);
    if (st.size() != w.stars || sf.size() != w.sunflowers)
      o.fail(w.sig.canonical_key() + ": " + std::to_string(st.size()) + " stars, " +
             std::to_string(sf.size()) + " sunflowers");
    for (const auto& g : all_graphs(w.sig)) {
      if (!validate(g).empty()) o.fail(serialize(g) + ": " + validate(g)[0]);
      if (!top_dim_check(g)) o.fail(serialize(g) + ": top-level dimension");
    }
  }
  if (o.ok) o.detail = "3+3, 0+7, 0+0; all valid";
  return o;
}

Outcome criterion_cgg() {
  Outcome o;
  SuiteResult r = run_cgg_suite();
  if (!r.ok()) o.fail(r.failures.empty() ? "no sunflowers" : r.failures[0]);
  if (o.ok) o.detail = std::to_string(r.instances) + " sunflowers with m1, m2 <= 9";
  return o;
}

Outcome criterion_permutation() {
  Outcome o;
  auto table = fixture("mu53.vol");
  Rational a = completed_volume(Signature(2, {5, 3}), table).completed_vol;
  Rational b = completed_volume(Signature(2, {3, 5}), table).completed_vol;
  if (a != b) o.fail(a.str() + " vs " + b.str());
  if (o.ok) o.detail = "(5,3) and (3,5) both " + a.str();
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"mu=(5,3) k=2 table reproduction", criterion_53_table},
      {"mu=(4,2,-2) k=1 table reproduction", criterion_422_table},
      {"Masur-Veech normalization", criterion_normalization},
      {"genus-zero closed forms and solved abelian volumes", criterion_genus_zero},
      {"identity suites", criterion_identities},
      {"enumeration counts", criterion_counts},
      {"coefficient identity", criterion_cgg},
      {"label-permutation invariance", criterion_permutation},
  };
  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::cout << (o.ok ? "PASS" : "FAIL") << " [" << i + 1 << "] " << criteria[i].first << ": "
              << o.detail << "\n";
    failed += !o.ok;
  }
  return failed == 0 ? 0 : 1;
}
