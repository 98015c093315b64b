#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "stratavol/completed.hpp"
#include "stratavol/ribboncount.hpp"
#include "stratavol/suites.hpp"

using namespace stratavol;

namespace {

constexpr int kOk = 0, kInvalid = 1, kMissing = 2, kSuiteFailure = 3;

VolumeTable load_tables(const std::vector<std::string>& paths) {
  VolumeTable t;
  for (const auto& p : paths) t.merge(VolumeTable::load(p));
  return t;
}

int cmd_enumerate(int k, const std::string& mu, const std::string& format) {
  Signature sig = Signature::parse(k, mu);
  EnumerationStats stats;
  auto graphs = all_graphs(sig, &stats);
  if (stats.unstable_suns)
    std::cerr << "note: sun stability filter dropped " << stats.unstable_suns << " candidate(s)\n";
  if (format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (size_t i = 0; i < graphs.size(); ++i) {
      const auto& g = graphs[i];
      nlohmann::json e = nlohmann::json::array(), vs = nlohmann::json::array();
      for (auto [mt, mb, kap] : edge_data(g)) e.push_back({mt, mb, kap});
      for (const auto& s : vertex_signatures(g))
        vs.push_back({{"k", s.k()}, {"mu", s.orders()}, {"genus", s.genus()}});
      arr.push_back({{"label", row_label(i)},
                     {"graph", serialize(g)},
                     {"kind", g.kind == GraphKind::SpecialStar ? "star" : "sunflower"},
                     {"edge_data", e},
                     {"vertex_signatures", vs},
                     {"aut", aut_order(g).get_str()},
                     {"h_ab", h_ab(g)},
                     {"prefactor", prefactor(g).str()},
                     {"kappa_prod", kappa_product(g).get_str()}});
    }
    std::cout << arr.dump(2) << "\n";
  } else if (format == "text") {
    for (const auto& g : graphs) std::cout << serialize(g) << "\n";
  } else {
    throw Error("enumerate supports --format text|json");
  }
  return kOk;
}

int cmd_completed(int k, const std::string& mu, const std::vector<std::string>& volumes,
                  const std::string& format) {
  Signature sig = Signature::parse(k, mu);
  Report rep = completed_volume(sig, load_tables(volumes));
  for (const auto& w : rep.warnings) std::cerr << "warning: " << w << "\n";
  std::cout << render(rep, parse_format(format));
  return kOk;
}

int cmd_vol0(const std::string& mu) {
  auto o = parse_int_list(mu);
  if (o.size() < 3) throw InvalidSignature("vol0 expects m1,m2,-4g1,...");
  std::vector<int> genera;
  for (size_t i = 2; i < o.size(); ++i) {
    if (o[i] >= 0 || o[i] % 4 != 0) throw InvalidSignature("pole orders must be -4g with g >= 1");
    genera.push_back(-o[i] / 4);
  }
  std::cout << vol_q0_two_poles(o[0], o[1], genera) << "\n";
  return kOk;
}

int cmd_check(std::vector<std::string> suites, GridBounds b, const std::string& fixtures) {
  if (suites.empty()) suites = suite_names();
  bool all_ok = true;
  for (const auto& name : suites) {
    SuiteResult r = run_suite(name, b, fixtures);
    std::cout << (r.ok() ? "PASS " : "FAIL ") << r.name << " (" << r.instances << " instances";
    if (r.skipped) std::cout << ", " << r.skipped << " undefined";
    std::cout << ")\n";
    for (const auto& f : r.failures) std::cout << "  failed: " << f << "\n";
    all_ok = all_ok && r.ok();
  }
  return all_ok ? kOk : kSuiteFailure;
}

int cmd_convert(int k, const std::string& mu, const std::string& vol, const std::string& kind) {
  Signature sig = Signature::parse(k, mu);
  VolumeKind vk;
  if (kind == "stratum") vk = VolumeKind::Stratum;
  else if (kind == "completed") vk = VolumeKind::Completed;
  else throw Error("--kind must be stratum or completed");
  std::cout << mv_convert(sig, Rational::parse(vol), vk).str() << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Completed volumes of strata of k-differentials"};
  app.require_subcommand(1);

  int k = 1;
  std::string mu, enum_format, report_format, vol, kind = "completed", fixtures = STRATAVOL_FIXTURES;
  std::vector<std::string> volumes, suites;
  GridBounds bounds;

  auto* en = app.add_subcommand("enumerate", "List sunflower and special star graphs");
  en->add_option("--k", k, "order of the differential")->required();
  en->add_option("--mu", mu, "orders, comma separated")->required();
  en->add_option("--format", enum_format, "text|json")->default_val("text");

  auto* co = app.add_subcommand("completed", "Evaluate the completed volume");
  co->add_option("--k", k)->required();
  co->add_option("--mu", mu)->required();
  co->add_option("--volumes", volumes, "volume table file (repeatable)");
  co->add_option("--format", report_format, "text|table|csv|json")->default_val("table");

  auto* v0 = app.add_subcommand("vol0", "Genus-zero quadratic volume (m1,m2,-4g1,...)");
  v0->add_option("--mu", mu)->required();

  auto* ch = app.add_subcommand("check", "Run identity suites");
  ch->add_option("--suite", suites, "alpha|s-sum|gf|vandermonde|cgg|tables (repeatable)");
  ch->add_option("--max-genus", bounds.max_genus);
  ch->add_option("--max-h", bounds.max_h);
  ch->add_option("--fixtures", fixtures, "directory holding mu53.vol and mu422.vol");

  auto* cv = app.add_subcommand("convert", "Masur-Veech normalisation");
  cv->add_option("--k", k)->required();
  cv->add_option("--mu", mu)->required();
  cv->add_option("--vol", vol)->required();
  cv->add_option("--kind", kind, "stratum|completed")->default_val("completed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kInvalid;
  }

  try {
    if (*en) return cmd_enumerate(k, mu, enum_format);
    if (*co) return cmd_completed(k, mu, volumes, report_format);
    if (*v0) return cmd_vol0(mu);
    if (*ch) return cmd_check(suites, bounds, fixtures);
    if (*cv) return cmd_convert(k, mu, vol, kind);
  } catch (const MissingVolume& e) {
    std::cerr << "missing volumes; add these lines to a volume file:\n";
    for (const auto& key : e.keys) std::cerr << key << "; vol=\n";
    return kMissing;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }
  return kInvalid;
}
