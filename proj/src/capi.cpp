#include "iwb/iwb.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "characters.hpp"
#include "checks.hpp"
#include "diffalg.hpp"
#include "error.hpp"
#include "nahm.hpp"
#include "partitions.hpp"
#include "qseries.hpp"
#include "virasoro.hpp"

struct iwb_config {
  iwb::checks::RunConfig cfg;
  mutable std::string scratch;
};

struct iwb_report {
  std::vector<iwb::checks::Report> reports;
  bool passed = true;
  std::string json;
};

struct iwb_series {
  iwb::QSeries s;
};

namespace {

thread_local std::string last_error;

iwb_status fail(iwb_status s, const std::string& msg) {
  last_error = msg;
  return s;
}

template <class F>
iwb_status guard(F&& f) {
  try {
    last_error.clear();
    f();
    return IWB_OK;
  } catch (const iwb::Error& e) {
    return fail(static_cast<iwb_status>(e.status()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(IWB_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(IWB_INTERNAL, e.what());
  }
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

void need(const void* p, const char* what) {
  if (!p) throw iwb::Error(iwb::Status::InvalidArgument, std::string(what) + " is NULL");
}

}  // namespace

extern "C" {

const char* iwb_version(void) { return "1.0.0"; }

const char* iwb_status_string(iwb_status s) { return iwb::status_name(static_cast<iwb::Status>(s)); }

const char* iwb_last_error(void) { return last_error.c_str(); }

void iwb_string_free(char* s) { std::free(s); }

iwb_status iwb_config_new(iwb_config** out) {
  return guard([&] {
    need(out, "out");
    *out = new iwb_config();
  });
}

void iwb_config_free(iwb_config* cfg) { delete cfg; }

iwb_status iwb_config_set(iwb_config* cfg, const char* key, const char* value) {
  return guard([&] {
    need(cfg, "cfg");
    need(key, "key");
    need(value, "value");
    cfg->cfg.set(key, value);
  });
}

iwb_status iwb_config_load(iwb_config* cfg, const char* path) {
  return guard([&] {
    need(cfg, "cfg");
    need(path, "path");
    cfg->cfg.load_file(path);
  });
}

iwb_status iwb_config_halve(iwb_config* cfg) {
  return guard([&] {
    need(cfg, "cfg");
    cfg->cfg = cfg->cfg.halved();
  });
}

iwb_status iwb_config_get(const iwb_config* cfg, const char* key, const char** value) {
  return guard([&] {
    need(cfg, "cfg");
    need(key, "key");
    need(value, "value");
    std::string k = key;
    if (k == "format")
      cfg->scratch = cfg->cfg.format;
    else if (k == "out")
      cfg->scratch = cfg->cfg.out;
    else if (k == "jobs")
      cfg->scratch = std::to_string(cfg->cfg.jobs);
    else
      throw iwb::Error(iwb::Status::InvalidArgument, "unknown key '" + k + "'");
    *value = cfg->scratch.c_str();
  });
}

size_t iwb_check_count(void) { return iwb::checks::check_names().size(); }

const char* iwb_check_name(size_t i) {
  const auto& n = iwb::checks::check_names();
  return i < n.size() ? n[i].c_str() : nullptr;
}

iwb_status iwb_run(const iwb_config* cfg, const char* check, iwb_report** out) {
  return guard([&] {
    need(cfg, "cfg");
    need(check, "check");
    need(out, "out");
    auto r = std::make_unique<iwb_report>();
    std::string name = check;
    if (name == "all") {
      r->reports = iwb::checks::run_checks(iwb::checks::check_names(), cfg->cfg);
      r->reports.push_back(iwb::checks::summary_report(r->reports));
    } else {
      if (!iwb::checks::is_check(name)) throw iwb::Error(iwb::Status::InvalidArgument, "unknown check '" + name + "'");
      r->reports.push_back(iwb::checks::run_check(name, cfg->cfg));
    }
    for (const auto& rep : r->reports) r->passed = r->passed && rep.passed;
    r->json = iwb::checks::run_to_json(r->reports).dump();
    *out = r.release();
  });
}

void iwb_report_free(iwb_report* r) { delete r; }

int iwb_report_passed(const iwb_report* r) { return r && r->passed ? 1 : 0; }

size_t iwb_report_count(const iwb_report* r) { return r ? r->reports.size() : 0; }

const char* iwb_report_json(const iwb_report* r) { return r ? r->json.c_str() : ""; }

iwb_status iwb_series_character(const char* which, long p, long pp, long trunc, iwb_series** out) {
  return guard([&] {
    need(which, "which");
    need(out, "out");
    if (trunc < 0) throw iwb::Error(iwb::Status::InvalidArgument, "trunc must be nonnegative");
    using namespace iwb::chars;
    std::string w = which;
    iwb::QSeries s;
    if (w == "feigin-fuchs")
      s = feigin_fuchs_character(MinimalModel(p, pp), trunc);
    else if (w == "bgg")
      s = alt_expression(AltForm::BGG, trunc);
    else if (w == "fermion-half")
      s = alt_expression(AltForm::FermionHalf, trunc);
    else if (w == "euler")
      s = alt_expression(AltForm::Euler, trunc);
    else if (w == "quintuple")
      s = alt_expression(AltForm::QuintupleProduct, trunc);
    else if (w == "quasiparticle")
      s = quasiparticle_chi(trunc);
    else if (w == "e8-nahm")
      s = nahm_sum(e8_nahm_data(), trunc);
    else if (w == "andrews-gordon")
      s = andrews_gordon_product(p, trunc);
    else
      throw iwb::Error(iwb::Status::InvalidArgument, "unknown character '" + w + "'");
    *out = new iwb_series{std::move(s)};
  });
}

void iwb_series_free(iwb_series* s) { delete s; }

iwb_status iwb_series_coeff(const iwb_series* s, long num, long den, char** out) {
  return guard([&] {
    need(s, "series");
    need(out, "out");
    if (den <= 0) throw iwb::Error(iwb::Status::InvalidArgument, "denominator must be positive");
    *out = dup(iwb::to_string(s->s.coeff(iwb::frac(num, den))));
  });
}

iwb_status iwb_series_json(const iwb_series* s, char** out) {
  return guard([&] {
    need(s, "series");
    need(out, "out");
    *out = dup(iwb::to_json(s->s).dump());
  });
}

iwb_status iwb_series_equal(const iwb_series* a, const iwb_series* b, int* equal, char** description) {
  return guard([&] {
    need(a, "a");
    need(b, "b");
    need(equal, "equal");
    iwb::SeriesComparison c = iwb::compare(a->s, b->s);
    *equal = c.equal ? 1 : 0;
    if (description) *description = dup(c.describe());
  });
}

iwb_status iwb_count_avoiding(long n, long* out) {
  return guard([&] {
    need(out, "out");
    if (n < 0) throw iwb::Error(iwb::Status::InvalidArgument, "n must be nonnegative");
    *out = static_cast<long>(iwb::enumerate_P(n).size());
  });
}

iwb_status iwb_quotient_dims(long p, long pp, long n, long* dims) {
  return guard([&] {
    need(dims, "dims");
    auto d = iwb::vir::quotient_graded_dims(iwb::chars::MinimalModel(p, pp), n);
    for (std::size_t i = 0; i < d.size(); ++i) dims[i] = d[i];
  });
}

iwb_status iwb_singular_vector_json(long p, long pp, char** out) {
  return guard([&] {
    need(out, "out");
    *out = dup(iwb::vir::to_json(iwb::vir::solve_singular_vector(iwb::chars::MinimalModel(p, pp))).dump());
  });
}

iwb_status iwb_hilbert_series(const char* gens, long n, iwb_series** out) {
  return guard([&] {
    need(gens, "gens");
    need(out, "out");
    if (n < 0) throw iwb::Error(iwb::Status::InvalidArgument, "n must be nonnegative");
    std::vector<iwb::diff::DiffPoly> g;
    std::stringstream ss(gens);
    std::string part;
    while (std::getline(ss, part, ',')) {
      if (part == "a")
        g.push_back(iwb::diff::gen_a());
      else if (part == "b")
        g.push_back(iwb::diff::gen_b());
      else
        throw iwb::Error(iwb::Status::InvalidArgument, "unknown generator '" + part + "'");
    }
    *out = new iwb_series{iwb::diff::hilbert_quotient(g, n)};
  });
}

iwb_status iwb_nahm_alpha(const double* A, size_t n, double* Q, double* alpha, double* g) {
  return guard([&] {
    need(A, "A");
    need(Q, "Q");
    if (n == 0) throw iwb::Error(iwb::Status::InvalidArgument, "empty matrix");
    iwb::chars::Matrix m(n, std::vector<iwb::Rational>(n));
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) m[i][j] = iwb::Rational(A[i * n + j]);
    auto sol = iwb::nahm::alpha_of(m);
    for (size_t i = 0; i < n; ++i) Q[i] = static_cast<double>(sol.Q[i]);
    if (alpha) *alpha = static_cast<double>(sol.alpha);
    if (g) *g = static_cast<double>(sol.g);
  });
}

}  // extern "C"
