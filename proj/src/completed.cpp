#include "stratavol/completed.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace stratavol {

namespace {

void add_missing(std::vector<std::string>& acc, const std::vector<std::string>& keys) {
  for (const auto& k : keys)
    if (std::find(acc.begin(), acc.end(), k) == acc.end()) acc.push_back(k);
}

Role role_of(const TwoLevelGraph& g, size_t vertex) {
  if (vertex >= g.tops.size()) return Role::Bottom;
  return g.tops[vertex].is_sun ? Role::Sun : Role::Flower;
}

// Contribution, or the keys it is missing.
std::optional<Contribution> try_contribution(const TwoLevelGraph& g, const VolumeTable& table,
                                             std::vector<std::string>& missing,
                                             std::vector<std::string>* warnings) {
  auto sigs = vertex_signatures(g);
  Rational vol_prod = 1;
  bool complete = true;
  for (size_t v = 0; v < sigs.size(); ++v) {
    try {
      auto r = resolve({sigs[v], role_of(g, v)}, table);
      if (r.warning && warnings) warnings->push_back(*r.warning);
      vol_prod *= r.value;
    } catch (const MissingVolume& e) {
      add_missing(missing, e.keys);
      complete = false;
    }
  }
  if (!complete) return std::nullopt;
  Contribution c{g, prefactor(g), kappa_product(g), vol_prod, 0};
  c.total = c.prefactor * Rational(c.kappa_prod) * c.vol_prod;
  return c;
}

size_t display_width(const std::string& s) {
  size_t w = 0;
  for (unsigned char ch : s) w += (ch & 0xC0) != 0x80;
  return w;
}

std::string pad(const std::string& s, size_t w) {
  return s + std::string(w > display_width(s) ? w - display_width(s) : 0, ' ');
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

nlohmann::json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

Integer integer_from_json(const nlohmann::json& j) {
  if (j.is_string()) return parse_integer(j.get<std::string>());
  return Integer(j.get<long>());
}

const char* main_label = "•";

}  // namespace

std::string row_label(size_t index) { return "D" + std::to_string(index + 1); }

Contribution contribution(const TwoLevelGraph& g, const VolumeTable& table,
                          std::vector<std::string>* warnings) {
  std::vector<std::string> missing;
  auto c = try_contribution(g, table, missing, warnings);
  if (!c) throw MissingVolume(missing, serialize(g));
  return *c;
}

Report completed_volume(const Signature& sig, const VolumeTable& table) {
  Report rep{sig, 0, {}, 0, std::nullopt, {}, {}, 0};
  std::vector<std::string> missing;
  try {
    auto r = resolve({sig, Role::Main}, table);
    if (r.warning) rep.warnings.push_back(*r.warning);
    rep.main_vol = r.value;
  } catch (const MissingVolume& e) {
    add_missing(missing, e.keys);
  }

  EnumerationStats stats;
  auto graphs = all_graphs(sig, &stats);
  rep.unstable_suns = stats.unstable_suns;
  if (stats.unstable_suns > 0)
    rep.warnings.push_back("sun stability filter dropped " + std::to_string(stats.unstable_suns) +
                           " candidate sunflower(s) for " + sig.canonical_key());

  for (const auto& g : graphs) {
    auto c = try_contribution(g, table, missing, &rep.warnings);
    if (c) rep.contributions.push_back(std::move(*c));
  }
  if (!missing.empty()) throw MissingVolume(missing);

  rep.completed_vol = rep.main_vol;
  for (const auto& c : rep.contributions) rep.completed_vol += c.total;

  try {
    rep.mv_value = mv_convert(sig, rep.completed_vol, VolumeKind::Completed);
  } catch (const UnsupportedConversion& e) {
    rep.mv_note = std::string("no Masur-Veech conversion: ") + e.what();
  }
  return rep;
}

Rational coefficient_Cgg(const std::vector<int>& mvec, const std::vector<std::vector<int>>& gvec) {
  if (mvec.size() != gvec.size()) throw DomainError("coefficient_Cgg: size mismatch");
  Rational c = 1;
  for (size_t i = 0; i < mvec.size(); ++i) {
    const auto& gs = gvec[i];
    if (gs.empty()) continue;
    const int m = mvec[i];
    const int r = static_cast<int>(gs.size());
    const int gi = std::accumulate(gs.begin(), gs.end(), 0);
    if (gi == 0) continue;
    c *= Rational(dfact2(m)) / Rational(dfact2(m - 2 * (r - 1)));
    c *= Rational(Integer(m - 4 * gi + 2), factorial(r) * (Integer(1) << r));
    std::map<int, int> mult;
    for (int h : gs) ++mult[h];
    Integer aut = 1;
    for (auto [h, k] : mult) aut *= factorial(k);
    c *= Rational(factorial(r), aut);
    for (int h : gs) c *= 2 * h - 1;
  }
  return c;
}

std::vector<std::vector<int>> petal_genera(const TwoLevelGraph& g) {
  std::vector<std::vector<int>> out(g.mu.n());
  for (int b = 0; b < static_cast<int>(g.bottoms.size()); ++b)
    for (int l : g.bottoms[b].legs) out[l] = flowers_of(g, b);
  return out;
}

Rational cgg_graph_form(const TwoLevelGraph& g) {
  if (g.kind != GraphKind::Sunflower || g.k() != 2)
    throw DomainError("graph form is defined for k=2 sunflowers");
  Integer d = aut_order(g) * (Integer(1) << (2 * h_ab(g)));
  Rational r = Rational(kappa_product(g), d);
  auto sigs = vertex_signatures(g);
  for (size_t v = g.tops.size(); v < sigs.size(); ++v) {
    auto b = builtin_volume(sigs[v]);
    if (!b || b->second != Provider::SunflowerBottom)
      throw DomainError("bottom " + sigs[v].canonical_key() + " has no closed form");
    r *= b->first;
  }
  return r;
}

Format parse_format(const std::string& s) {
  if (s == "text") return Format::Text;
  if (s == "table") return Format::Table;
  if (s == "csv") return Format::Csv;
  if (s == "json") return Format::Json;
  throw Error("unknown format '" + s + "'");
}

ReportSummary summarize(const Report& r) {
  ReportSummary s;
  s.signature = r.sig.canonical_key();
  s.k = r.sig.k();
  s.main_vol = r.main_vol;
  for (size_t i = 0; i < r.contributions.size(); ++i) {
    const auto& c = r.contributions[i];
    s.rows.push_back({row_label(i), serialize(c.graph), c.prefactor, c.kappa_prod, c.vol_prod,
                      c.total});
  }
  s.completed_vol = r.completed_vol;
  if (r.mv_value) s.mv_value = r.mv_value->str();
  return s;
}

std::string render(const Report& r, Format f) {
  std::ostringstream out;
  const auto s = summarize(r);

  if (f == Format::Json) {
    nlohmann::json j;
    j["signature"] = s.signature;
    j["k"] = s.k;
    j["mu"] = r.sig.orders();
    j["main_vol"] = s.main_vol.str();
    j["rows"] = nlohmann::json::array();
    for (size_t i = 0; i < s.rows.size(); ++i) {
      const auto& row = s.rows[i];
      nlohmann::json e;
      for (auto [mt, mb, kap] : edge_data(r.contributions[i].graph))
        e.push_back({mt, mb, kap});
      j["rows"].push_back({{"label", row.label},
                           {"graph", row.graph},
                           {"edge_data", e},
                           {"prefactor", row.prefactor.str()},
                           {"kappa_prod", integer_json(row.kappa_prod)},
                           {"vol_prod", row.vol_prod.str()},
                           {"total", row.total.str()}});
    }
    j["completed_vol"] = s.completed_vol.str();
    if (s.mv_value) j["mv_value"] = *s.mv_value;
    else j["mv_note"] = r.mv_note;
    out << j.dump(2) << "\n";
    return out.str();
  }

  std::vector<std::vector<std::string>> rows;
  rows.push_back({main_label, "1", "1", s.main_vol.str(), s.main_vol.str()});
  for (const auto& row : s.rows)
    rows.push_back({row.label, row.prefactor.str(), row.kappa_prod.get_str(), row.vol_prod.str(),
                    row.total.str()});

  if (f == Format::Csv) {
    out << "label,graph,prefactor,kappa_prod,vol_prod,total\n";
    for (size_t i = 0; i < rows.size(); ++i) {
      std::string graph = i == 0 ? s.signature : s.rows[i - 1].graph;
      out << csv_field(rows[i][0]) << ',' << csv_field(graph);
      for (size_t c = 1; c < rows[i].size(); ++c) out << ',' << csv_field(rows[i][c]);
      out << "\n";
    }
    out << "completed,,,,," << s.completed_vol.str() << "\n";
    return out.str();
  }

  if (f == Format::Text) {
    out << "signature " << s.signature << "\n";
    out << "main " << s.main_vol.str() << "\n";
    for (const auto& row : s.rows) out << row.label << " " << row.graph << " " << row.total.str() << "\n";
    out << "completed " << s.completed_vol.str() << "\n";
    if (s.mv_value) out << "mv " << *s.mv_value << "\n";
    return out.str();
  }

  // table
  out << "# " << s.signature << "\n";
  for (const auto& row : s.rows) out << "# " << row.label << " = " << row.graph << "\n";
  if (s.mv_value)
    out << "# mv = " << *s.mv_value << "\n";
  else if (!r.mv_note.empty())
    out << "# " << r.mv_note << "\n";
  const std::vector<std::string> header = {"Γ", "prefactor", "∏κ_e", "∏vol", "vol(Γ)"};
  std::vector<size_t> w(header.size());
  for (size_t c = 0; c < header.size(); ++c) {
    w[c] = display_width(header[c]);
    for (const auto& row : rows) w[c] = std::max(w[c], display_width(row[c]));
  }
  auto emit = [&](const std::vector<std::string>& cells) {
    std::string line;
    for (size_t c = 0; c < cells.size(); ++c) {
      if (c) line += " | ";
      line += pad(cells[c], w[c]);
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << "\n";
  };
  emit(header);
  std::string rule;
  for (size_t c = 0; c < w.size(); ++c) {
    if (c) rule += "-+-";
    rule += std::string(w[c], '-');
  }
  out << rule << "\n";
  for (const auto& row : rows) emit(row);
  out << "completed = " << s.completed_vol.str() << "\n";
  return out.str();
}

ReportSummary parse_report_json(const std::string& text) {
  try {
    auto j = nlohmann::json::parse(text);
    ReportSummary s;
    s.signature = j.at("signature").get<std::string>();
    s.k = j.at("k").get<int>();
    s.main_vol = Rational::parse(j.at("main_vol").get<std::string>());
    for (const auto& row : j.at("rows"))
      s.rows.push_back({row.at("label").get<std::string>(), row.at("graph").get<std::string>(),
                        Rational::parse(row.at("prefactor").get<std::string>()),
                        integer_from_json(row.at("kappa_prod")),
                        Rational::parse(row.at("vol_prod").get<std::string>()),
                        Rational::parse(row.at("total").get<std::string>())});
    s.completed_vol = Rational::parse(j.at("completed_vol").get<std::string>());
    if (j.contains("mv_value")) s.mv_value = j.at("mv_value").get<std::string>();
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("bad report json: ") + e.what());
  }
}

}  // namespace stratavol
