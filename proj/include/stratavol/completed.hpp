#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stratavol/graphs.hpp"
#include "stratavol/volumes.hpp"

namespace stratavol {

struct Contribution {
  TwoLevelGraph graph;
  Rational prefactor;
  Integer kappa_prod;
  Rational vol_prod;
  Rational total;
};

struct Report {
  Signature sig;
  Rational main_vol;
  std::vector<Contribution> contributions;
  Rational completed_vol;
  std::optional<PiValue> mv_value;
  std::string mv_note;
  std::vector<std::string> warnings;
  int unstable_suns = 0;
};

Contribution contribution(const TwoLevelGraph& g, const VolumeTable& table,
                          std::vector<std::string>* warnings = nullptr);

// Missing keys are collected over the whole recursion before throwing.
Report completed_volume(const Signature& sig, const VolumeTable& table);

Rational coefficient_Cgg(const std::vector<int>& mvec, const std::vector<std::vector<int>>& gvec);

// 1/(2^{2 h_ab} |Aut|) * prod kappa * prod of bottom volumes, for k=2 sunflowers.
Rational cgg_graph_form(const TwoLevelGraph& g);

// Flower genera per marking, as coefficient_Cgg expects.
std::vector<std::vector<int>> petal_genera(const TwoLevelGraph& g);

enum class Format { Text, Table, Csv, Json };

Format parse_format(const std::string& s);
std::string render(const Report& r, Format f);

// What a rendered JSON report carries; used for round trips.
struct ReportRow {
  std::string label;
  std::string graph;
  Rational prefactor;
  Integer kappa_prod;
  Rational vol_prod;
  Rational total;
  friend bool operator==(const ReportRow&, const ReportRow&) = default;
};

struct ReportSummary {
  std::string signature;
  int k = 0;
  Rational main_vol;
  std::vector<ReportRow> rows;
  Rational completed_vol;
  std::optional<std::string> mv_value;
  friend bool operator==(const ReportSummary&, const ReportSummary&) = default;
};

ReportSummary summarize(const Report& r);
ReportSummary parse_report_json(const std::string& text);

std::string row_label(size_t index);  // D1, D2, ...

}  // namespace stratavol
