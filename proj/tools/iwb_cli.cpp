#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "iwb/iwb.h"

namespace {

using nlohmann::json;

constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string seconds(double s) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3) << s << " s";
  return os.str();
}

std::string render_text(const json& run) {
  std::ostringstream os;
  for (const auto& r : run["reports"]) {
    os << (r["passed"].get<bool>() ? "PASS " : "FAIL ") << r["check"].get<std::string>() << "  ["
       << r["order"].get<std::string>() << ", " << seconds(r["seconds"].get<double>()) << "]\n";
    os << "  " << r["claim"].get<std::string>() << "\n";
    for (const auto& i : r["items"]) {
      os << "    " << (i["passed"].get<bool>() ? "ok   " : "FAIL ") << i["name"].get<std::string>();
      const auto& d = i["detail"].get_ref<const std::string&>();
      if (!d.empty()) os << ": " << d;
      os << "\n";
    }
    if (!r["first_failure"].is_null())
      os << "  first failure: " << r["first_failure"]["name"].get<std::string>() << ": "
         << r["first_failure"]["detail"].get<std::string>() << "\n";
  }
  os << (run["passed"].get<bool>() ? "all checks passed" : "some checks FAILED") << "\n";
  return os.str();
}

std::string render_csv(const json& run) {
  std::ostringstream os;
  os << "check,item,passed,order,seconds,detail\n";
  for (const auto& r : run["reports"])
    for (const auto& i : r["items"])
      os << csv_field(r["check"].get<std::string>()) << ',' << csv_field(i["name"].get<std::string>()) << ','
         << (i["passed"].get<bool>() ? "true" : "false") << ',' << csv_field(r["order"].get<std::string>()) << ','
         << r["seconds"].get<double>() << ',' << csv_field(i["detail"].get<std::string>()) << '\n';
  return os.str();
}

int config_error(const std::string& what) {
  std::cerr << "iwb_cli: " << what << "\n";
  return kExitConfig;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification workbench for the Ising model character identities"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_file, format, out, gens;
  long trunc = 0, jobs = 0;
  bool half = false;
  std::vector<std::string> sets;
  app.add_option("--config", config_file, "key = value config file")->check(CLI::ExistingFile);
  app.add_option("--trunc", trunc, "main order of the selected check");
  app.add_option("--format", format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--jobs", jobs, "worker threads");
  app.add_option("--out", out, "write the report here instead of stdout");
  app.add_option("--gens", gens, "generators for hilbert: a, b or a,b");
  app.add_option("--set", sets, "override a config key, key=value");
  app.add_flag("--half", half, "halve every order");

  std::vector<std::string> names;
  for (size_t i = 0; i < iwb_check_count(); ++i) names.emplace_back(iwb_check_name(i));
  names.emplace_back("all");
  for (const auto& n : names) app.add_subcommand(n, n == "all" ? "run every check" : "run the " + n + " check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitConfig;
  }
  std::string check = app.get_subcommands().front()->get_name();

  iwb_config* cfg = nullptr;
  if (iwb_config_new(&cfg) != IWB_OK) return config_error(iwb_last_error());
  auto set = [&](const std::string& k, const std::string& v) { return iwb_config_set(cfg, k.c_str(), v.c_str()) == IWB_OK; };
  bool ok = true;
  if (!config_file.empty()) ok = iwb_config_load(cfg, config_file.c_str()) == IWB_OK;
  if (ok && half) ok = iwb_config_halve(cfg) == IWB_OK;
  if (ok && app.count("--trunc")) ok = set("trunc", std::to_string(trunc));
  if (ok && !format.empty()) ok = set("format", format);
  if (ok && app.count("--jobs")) ok = set("jobs", std::to_string(jobs));
  if (ok && !out.empty()) ok = set("out", out);
  if (ok && !gens.empty()) ok = set("gens", gens);
  for (const auto& s : sets) {
    if (!ok) break;
    auto eq = s.find('=');
    if (eq == std::string::npos) {
      iwb_config_free(cfg);
      return config_error("--set expects key=value, got '" + s + "'");
    }
    ok = set(s.substr(0, eq), s.substr(eq + 1));
  }
  if (!ok) {
    std::string msg = iwb_last_error();
    iwb_config_free(cfg);
    return config_error(msg);
  }

  const char* fmt = nullptr;
  const char* path = nullptr;
  iwb_config_get(cfg, "format", &fmt);
  std::string fmt_s = fmt;
  iwb_config_get(cfg, "out", &path);
  std::string path_s = path;

  iwb_report* rep = nullptr;
  if (iwb_run(cfg, check.c_str(), &rep) != IWB_OK) {
    std::string msg = iwb_last_error();
    iwb_config_free(cfg);
    return config_error(msg);
  }
  iwb_config_free(cfg);
  json run = json::parse(iwb_report_json(rep));
  bool passed = iwb_report_passed(rep) != 0;
  iwb_report_free(rep);

  std::string text = fmt_s == "json" ? run.dump(2) + "\n" : fmt_s == "csv" ? render_csv(run) : render_text(run);
  if (path_s.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(path_s);
    if (!f) return config_error("cannot write " + path_s);
    f << text;
    std::cout << (passed ? "PASS" : "FAIL") << " " << check << " -> " << path_s << "\n";
  }
  return passed ? 0 : kExitFail;
}
