#pragma once

#include <string>
#include <vector>

namespace stratavol {

struct SuiteResult {
  std::string name;
  long instances = 0;
  long skipped = 0;  // points where one side is undefined
  std::vector<std::string> failures;
  bool ok() const { return failures.empty() && instances > 0; }
};

// Negative bounds select each suite's default grid.
struct GridBounds {
  int max_genus = -1;
  int max_h = -1;
};

SuiteResult run_alpha_suite(GridBounds b = {});
SuiteResult run_s_sum_suite(GridBounds b = {});
SuiteResult run_gf_suite(GridBounds b = {});
SuiteResult run_vandermonde_suite(GridBounds b = {});
SuiteResult run_cgg_suite(GridBounds b = {});
SuiteResult run_tables_suite(const std::string& fixtures_dir);

std::vector<std::string> suite_names();
SuiteResult run_suite(const std::string& name, GridBounds b, const std::string& fixtures_dir);

// Multisets of positive integers with the given total, descending entries.
std::vector<std::vector<int>> multisets(int total);
// All distinct orderings of v.
std::vector<std::vector<int>> distinct_permutations(std::vector<int> v);

}  // namespace stratavol
