#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "report.hpp"

namespace iwb::checks {

struct RunConfig {
  long qseries_n = 60;
  long two_variable_n = 40;
  long hilbert_n = 30;
  long groebner_n = 22;
  long virasoro_n = 15;
  long e8_n = 12;
  long modules_n = 50;
  long partitions_n = 60;
  long families_n = 40;
  long recurrence_n = 30;
  long prop51_k = 5;
  long slice_limit = 40;
  long gap_n = 24;
  std::vector<std::string> hilbert_gens{"a", "b"};
  std::optional<long> trunc;  // overrides the main order of a single check
  std::string format = "text";
  long jobs = 1;
  std::string out;

  // Throws InvalidArgument on unknown keys or bad values.
  void set(const std::string& key, const std::string& value);
  // key = value lines; '#' starts a comment.
  void load_file(const std::string& path);
  void validate() const;
  // Every order halved (at least 1).
  RunConfig halved() const;
};

struct Report {
  std::string check;
  std::string claim;
  std::string order;  // what the check was verified to
  bool passed = true;
  double seconds = 0;
  CheckItems items;
};

// The fourteen checks, in the order `all` runs them.
const std::vector<std::string>& check_names();
bool is_check(const std::string& name);

// Throws InvalidArgument for an unknown name; any other error inside the check
// is recorded as a failed item.
Report run_check(const std::string& name, const RunConfig& cfg);
// Runs names on cfg.jobs threads; results keep the order of names.
std::vector<Report> run_checks(const std::vector<std::string>& names, const RunConfig& cfg);

nlohmann::json to_json(const Report& r);
// {"schema": 1, "passed": ..., "reports": [...]}; `all` appends a summary report.
nlohmann::json run_to_json(const std::vector<Report>& reports);
Report summary_report(const std::vector<Report>& reports);

}  // namespace iwb::checks
