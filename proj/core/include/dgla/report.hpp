#pragma once

#include <string>

#include "json.hpp"

namespace dgla {

struct JobSpec {
  std::string command;
  std::string in_path;
  std::string rep_path;
  int max_weight = 3;
  int depth = 2;
  bool has_window = false;
  int window_lo = 0, window_hi = 0;
  unsigned long long seed = 20240801;
  std::string format = "json";  // json | csv | table
};

struct RunResult {
  nlohmann::ordered_json report;
  int exit_code = 0;  // 0 ok, 2 input error, 3 verdict failure, 4 truncation
};

// Parses inputs, dispatches to the owning module, assembles the report.
// Deterministic: identical JobSpecs produce identical reports apart from the
// trailing timing field.
RunResult run(const JobSpec& job);

// Renders a report in the requested format (json dumps the document; csv and
// table flatten the dimension tables).
std::string render(const nlohmann::ordered_json& report, const std::string& format);

// The report minus its volatile timing field, for byte comparisons.
std::string stable_render(const nlohmann::ordered_json& report,
                          const std::string& format);

}  // namespace dgla
