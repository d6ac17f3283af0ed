#include "checks.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <thread>

#include "characters.hpp"
#include "diffalg.hpp"
#include "error.hpp"
#include "groebner.hpp"
#include "nahm.hpp"
#include "partitions.hpp"
#include "polyfamilies.hpp"
#include "virasoro.hpp"

namespace iwb::checks {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

long parse_long(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    long v = std::stol(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw Error(Status::InvalidArgument, "bad integer for " + key + ": '" + value + "'");
  }
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ',')) {
    part = trim(part);
    if (!part.empty()) out.push_back(part);
  }
  return out;
}

CheckItem series_item(std::string name, const SeriesComparison& c) {
  return CheckItem{std::move(name), c.equal, c.describe()};
}

CheckItem tq_item(std::string name, const TQComparison& c) {
  return CheckItem{std::move(name), c.equal, c.describe()};
}

void append(CheckItems& to, const CheckItems& from, const std::string& prefix = {}) {
  for (const auto& i : from) to.push_back(CheckItem{prefix + i.name, i.passed, i.detail});
}

std::string mod_q(long n) { return "mod q^" + std::to_string(n); }

chars::MinimalModel ising() { return chars::MinimalModel(3, 4); }

// prod 1/(1 - q^k) over allowed k, coefficients below q^N.
std::vector<long> restricted_product(long N, const std::function<bool(long)>& allowed) {
  std::vector<long> c(N, 0);
  if (N > 0) c[0] = 1;
  for (long k = 1; k < N; ++k)
    if (allowed(k))
      for (long n = k; n < N; ++n) c[n] += c[n - k];
  return c;
}

using CheckFn = std::function<void(const RunConfig&, Report&)>;

void characters_equal(const RunConfig& cfg, Report& r) {
  long N = cfg.trunc.value_or(cfg.qseries_n);
  r.claim = "BGG = FermionHalf = Euler = QuintupleProduct = Feigin-Fuchs; quasi-particle form = Euler form";
  r.order = mod_q(N);
  QSeries ref = chars::alt_expression(chars::AltForm::BGG, N);
  for (auto f : {chars::AltForm::FermionHalf, chars::AltForm::Euler, chars::AltForm::QuintupleProduct})
    r.items.push_back(series_item(std::string(chars::name(f)) + " = BGG", compare(chars::alt_expression(f, N), ref)));
  r.items.push_back(series_item("Feigin-Fuchs chi(3,4) = BGG", compare(chars::feigin_fuchs_character(ising(), N), ref)));
  r.items.push_back(series_item("quasi-particle sum = Euler form",
                                compare(chars::quasiparticle_chi(N), chars::alt_expression(chars::AltForm::Euler, N))));
}

void nahm_e8(const RunConfig& cfg, Report& r) {
  long N = cfg.trunc.value_or(cfg.e8_n);
  r.claim = "Nahm sum with A = 2 C_E8^{-1} equals chi(3,4)";
  r.order = mod_q(N);
  r.items.push_back(series_item("E8 Nahm sum = chi(3,4)",
                                compare(chars::nahm_sum(chars::e8_nahm_data(), N), chars::feigin_fuchs_character(ising(), N))));
}

void modules_identities(const RunConfig& cfg, Report& r) {
  long N = cfg.trunc.value_or(cfg.modules_n);
  r.claim = "characters of V0, V1/2, V1/16: product side = new quasi-particle side";
  r.order = mod_q(N);
  for (auto m : {chars::Module::V0, chars::Module::VHalf, chars::Module::VSixteenth})
    r.items.push_back(series_item(std::string(chars::name(m)),
                                  compare(chars::module_character(m, chars::Side::Classical, N),
                                          chars::module_character(m, chars::Side::New, N))));
}

void partitions_count(const RunConfig& cfg, Report& r) {
  long N = cfg.trunc.value_or(cfg.partitions_n);
  r.claim = "|P(n)| = coefficient of q^n in prod_{k = +-2,+-3,+-4,+-5 mod 16} 1/(1-q^k) = dim Vir(3,4)_n";
  r.order = "n <= " + std::to_string(N);
  CountTable t = count_table(N);
  auto prod = restricted_product(N + 1, [](long k) {
    long m = k % 16;
    return (m >= 2 && m <= 5) || (m >= 11 && m <= 14);
  });
  QSeries ff = chars::feigin_fuchs_character(ising(), N + 1);
  CheckItem mod16{"|P(n)| = mod-16 product", true, "equal for n <= " + std::to_string(N)};
  CheckItem chi{"|P(n)| = chi(3,4) coefficient", true, "equal for n <= " + std::to_string(N)};
  for (long n = 0; n <= N; ++n) {
    if (mod16.passed && t.total(n) != prod[n]) {
      mod16.passed = false;
      mod16.detail = "n = " + std::to_string(n) + ": " + std::to_string(t.total(n)) + " vs " + std::to_string(prod[n]);
    }
    if (chi.passed && Rational(t.total(n)) != ff.coeff(n)) {
      chi.passed = false;
      chi.detail = "n = " + std::to_string(n) + ": " + std::to_string(t.total(n)) + " vs " + iwb::to_string(ff.coeff(n));
    }
  }
  r.items.push_back(mod16);
  r.items.push_back(chi);
  long M = std::min(N + 1, cfg.two_variable_n);
  TQSeries P = chars::P_of_t_q(M);
  CheckItem bi{"p(n, m) = coefficient of t^m q^n in P(t, q)", true, "equal for n < " + std::to_string(M)};
  for (long n = 0; n < M && bi.passed; ++n)
    for (long m = 0; m <= n; ++m)
      if (P.coeff(n, m) != t.p(n, m)) {
        bi.passed = false;
        bi.detail = "(n, m) = (" + std::to_string(n) + ", " + std::to_string(m) + ")";
        break;
      }
  r.items.push_back(bi);
}

void recursion(const RunConfig& cfg, Report& r) {
  long N = cfg.trunc.value_or(cfg.two_variable_n);
  r.claim = "the five recursions for a, b, c, d, e(n, m)";
  r.order = "n <= " + std::to_string(N);
  r.items = recursion_check(N);
}

void functional_eqs(const RunConfig& cfg, Report& r) {
  long N = cfg.trunc.value_or(cfg.two_variable_n);
  r.claim = "P(t, q) = A + B + C + D + E and the five functional equations";
  r.order = mod_q(N);
  append(r.items, chars::functional_equation_check(N));
  TQSeries sum(N);
  for (auto b : chars::kBlocks) {
    TQSeries closed = chars::closed_form(b, N);
    r.items.push_back(tq_item(std::string("block ") + chars::name(b) + ": closed form = quasi-particle form",
                              compare(closed, chars::quasi_particle_form(b, N))));
    sum = sum + closed;
  }
  TQSeries P = chars::P_of_t_q(N);
  r.items.push_back(tq_item("A + B + C + D + E = P(t, q)", compare(sum, P)));
  CountTable t = count_table(N - 1);
  CheckItem counts{"P(t, q) counts the avoidance set by length", true, "equal for n < " + std::to_string(N)};
  for (long n = 0; n < N && counts.passed; ++n)
    for (long m = 0; m <= n; ++m)
      if (P.coeff(n, m) != t.p(n, m)) {
        counts.passed = false;
        counts.detail = "(n, m) = (" + std::to_string(n) + ", " + std::to_string(m) + ")";
        break;
      }
  r.items.push_back(counts);
  r.items.push_back(series_item("bigraded character at t = 1 is chi(3,4)",
                                compare(chars::bigraded_character(N).at_t_one(), chars::feigin_fuchs_character(ising(), N))));
}

void families(const RunConfig& cfg, Report& r) {
  long N = cfg.trunc.value_or(cfg.families_n);
  r.claim = "S_n = T_n in the vacuum, 1/2 and 1/16 sectors";
  r.order = "n <= " + std::to_string(N) + ", exact";
  for (auto s : {poly::Sector::Vac, poly::Sector::Half, poly::Sector::Sixteenth})
    append(r.items, poly::equality_check(s, N), std::string(poly::name(s)) + ": ");
  long n = std::max(2L, std::min(N, 30L));
  long q = std::max(1L, n / 2);
  for (auto s : {poly::Sector::Vac, poly::Sector::Half, poly::Sector::Sixteenth})
    append(r.items, poly::limit_check(s, n, std::min(q, 12L)), std::string(poly::name(s)) + " limit: ");
}

void recurrence_s(const RunConfig& cfg, Report& r) {
  long N = cfg.trunc.value_or(cfg.recurrence_n);
  r.claim = "the eighth-order recurrence annihilates S_n and T_n";
  r.order = "n <= " + std::to_string(N) + ", exact";
  r.items = poly::recurrence_check(N);
}

void hilbert(const RunConfig& cfg, Report& r) {
  long N = cfg.trunc.value_or(cfg.hilbert_n);
  std::vector<diff::DiffPoly> gens;
  std::string names;
  for (const auto& g : cfg.hilbert_gens) {
    if (g == "a")
      gens.push_back(diff::gen_a());
    else if (g == "b")
      gens.push_back(diff::gen_b());
    else
      throw Error(Status::InvalidArgument, "unknown generator '" + g + "' (use a, b)");
    names += (names.empty() ? "" : ", ") + g;
  }
  r.claim = "Hilbert series of C[L_{-2}, L_{-3}, ...]/(" + names + ")_d equals chi(3,4)";
  r.order = mod_q(N + 1);
  r.items.push_back(series_item("quotient by (" + names + ")_d = chi(3,4)",
                                compare(diff::hilbert_quotient(gens, N), chars::feigin_fuchs_character(ising(), N + 1))));
  long G = cfg.gap_n;
  diff::GapReport gap = diff::strict_gap(5, G);
  append(r.items, gap.items, "(3,5): ");
  r.items.push_back(CheckItem{"(3,5): first strict excess at weight >= 19", gap.first_strict && *gap.first_strict >= 19,
                              gap.first_strict ? "first strict excess at weight " + std::to_string(*gap.first_strict)
                                               : "no strict excess up to weight " + std::to_string(G)});
}

void prop51(const RunConfig& cfg, Report& r) {
  diff::Prop51Options opt;
  opt.k_max = cfg.trunc.value_or(cfg.prop51_k);
  opt.slice_limit = cfg.slice_limit;
  r.claim = "each pattern is the leading monomial of an element of (a, b)_d";
  r.order = "k <= " + std::to_string(opt.k_max) + ", membership by reduction up to weight " + std::to_string(opt.slice_limit);
  append(r.items, diff::verify_derivative_formulas(std::min(3L, opt.k_max)), "derivative formula: ");
  diff::SliceCache slices({diff::gen_a(), diff::gen_b()});
  append(r.items, diff::prop51_check(opt, slices));
  append(r.items, diff::exceptional_membership_check(slices), "exceptional: ");
}

void groebner(const RunConfig& cfg, Report& r) {
  long N = cfg.trunc.value_or(cfg.groebner_n);
  r.claim = "the leading monomials generate the leading ideal of (a, b)_d";
  r.order = "weight <= " + std::to_string(N);
  diff::SliceCache slices({diff::gen_a(), diff::gen_b()});
  r.items = diff::groebner_check(N, slices).items;
}

void singular_vector(const RunConfig& cfg, Report& r) {
  long N = cfg.trunc.value_or(cfg.virasoro_n);
  r.claim = "v_{3,4} is singular and Vir(3,4) has graded dimensions chi(3,4) = |P(n)|";
  r.order = "degree <= " + std::to_string(N);
  r.items = vir::singular_vector_report();
  auto dims = vir::quotient_graded_dims(ising(), N);
  QSeries ff = chars::feigin_fuchs_character(ising(), N + 1);
  CheckItem chi{"dim Vir(3,4)_n = chi(3,4) coefficient", true, "equal for n <= " + std::to_string(N)};
  CheckItem pn{"dim Vir(3,4)_n = |P(n)|", true, "equal for n <= " + std::to_string(N)};
  for (long n = 0; n <= N; ++n) {
    if (chi.passed && Rational(dims[n]) != ff.coeff(n)) {
      chi.passed = false;
      chi.detail = "n = " + std::to_string(n);
    }
    if (pn.passed && dims[n] != static_cast<long>(enumerate_P(n).size())) {
      pn.passed = false;
      pn.detail = "n = " + std::to_string(n);
    }
  }
  r.items.push_back(chi);
  r.items.push_back(pn);
}

void lemma_b(const RunConfig&, Report& r) {
  r.claim = "the lowest piece of the kernel is spanned by b (p' = 4) and b^(p') (p' = 5, 7)";
  r.order = "exact";
  r.items = vir::lemma_b_check();
  for (long pp : {4, 5, 7}) append(r.items, vir::lemma_bp_check(pp), "p' = " + std::to_string(pp) + ": ");
}

void nahm_alpha(const RunConfig&, Report& r) {
  using nahm::Real;
  r.claim = "Q_1, Q_2 match the closed forms and alpha = pi^2/12";
  r.order = "numerical, 50 digits";
  auto within = [](const Real& a, const Real& b, const char* tol) { return abs(a - b) < Real(tol); };
  auto show = [](const Real& x) { return nahm::to_string(x, 15); };
  Real p2 = nahm::pi() * nahm::pi();
  nahm::NahmSolution s = nahm::alpha_of({{8, 3}, {3, 2}});
  auto [q1, q2] = nahm::ising_closed_form();
  r.items.push_back({"Q_1 = (sqrt(2 sqrt 2 - 1) + sqrt 2 - 1)/2", within(s.Q[0], q1, "1e-10"), show(s.Q[0])});
  r.items.push_back({"Q_2 = 2/(sqrt(2 sqrt 2 - 1) - sqrt 2 + 3)", within(s.Q[1], q2, "1e-10"), show(s.Q[1])});
  r.items.push_back({"Q_1 = 0.8832035059", within(s.Q[0], Real("0.8832035059"), "1e-10"), show(s.Q[0])});
  r.items.push_back({"Q_2 = 0.6807398542", within(s.Q[1], Real("0.6807398542"), "1e-10"), show(s.Q[1])});
  r.items.push_back({"residual < 1e-12", s.residual < Real("1e-12"), nahm::to_string(s.residual, 3)});
  r.items.push_back({"alpha = pi^2/12", within(s.alpha, p2 / 12, "1e-10"), show(s.alpha)});
  r.items.push_back({"g = 1/2", within(s.g, Real(0.5), "1e-10"), show(s.g)});
  Real worst = 0;
  for (int k = 1; k <= 9; ++k) {
    Real z = Real(k) / 10;
    worst = std::max(worst, Real(abs(nahm::rogers_dilog_series(z) + nahm::rogers_dilog_series(1 - z) - p2 / 6)));
  }
  r.items.push_back({"L(z) + L(1-z) = pi^2/6, z = 0.1..0.9", worst < Real("1e-12"), nahm::to_string(worst, 3)});
  nahm::NahmSolution rr = nahm::alpha_of({{2}});
  r.items.push_back({"A = (2): g = 2/5", within(rr.g, Real(2) / 5, "1e-10"), show(rr.g)});
  nahm::NahmSolution e8 = nahm::alpha_of(chars::e8_nahm_data().A);
  r.items.push_back({"A = 2 C_E8^{-1}: g = 1/2", within(e8.g, Real(0.5), "1e-8"), show(e8.g)});
}

const std::vector<std::pair<std::string, CheckFn>>& registry() {
  static const std::vector<std::pair<std::string, CheckFn>> r{
      {"characters-equal", characters_equal}, {"nahm-e8", nahm_e8},
      {"modules-identities", modules_identities}, {"partitions-count", partitions_count},
      {"recursion", recursion}, {"functional-eqs", functional_eqs},
      {"families", families}, {"recurrence-s", recurrence_s},
      {"hilbert", hilbert}, {"prop51", prop51},
      {"groebner", groebner}, {"singular-vector", singular_vector},
      {"lemma-b", lemma_b}, {"nahm-alpha", nahm_alpha},
  };
  return r;
}

}  // namespace

void RunConfig::set(const std::string& key_in, const std::string& value_in) {
  std::string key = trim(key_in), value = trim(value_in);
  std::replace(key.begin(), key.end(), '-', '_');
  static const std::map<std::string, long RunConfig::*> orders{
      {"qseries_n", &RunConfig::qseries_n},       {"two_variable_n", &RunConfig::two_variable_n},
      {"hilbert_n", &RunConfig::hilbert_n},       {"groebner_n", &RunConfig::groebner_n},
      {"virasoro_n", &RunConfig::virasoro_n},     {"e8_n", &RunConfig::e8_n},
      {"modules_n", &RunConfig::modules_n},       {"partitions_n", &RunConfig::partitions_n},
      {"families_n", &RunConfig::families_n},     {"recurrence_n", &RunConfig::recurrence_n},
      {"prop51_k", &RunConfig::prop51_k},         {"slice_limit", &RunConfig::slice_limit},
      {"gap_n", &RunConfig::gap_n},               {"jobs", &RunConfig::jobs},
  };
  if (auto it = orders.find(key); it != orders.end()) {
    long v = parse_long(key, value);
    if (v < 1 && key != "prop51_k") throw Error(Status::InvalidArgument, key + " must be at least 1");
    if (v < 0) throw Error(Status::InvalidArgument, key + " must be nonnegative");
    this->*(it->second) = v;
  } else if (key == "trunc") {
    long v = parse_long(key, value);
    if (v < 1) throw Error(Status::InvalidArgument, "trunc must be at least 1");
    trunc = v;
  } else if (key == "format") {
    if (value != "json" && value != "csv" && value != "text")
      throw Error(Status::InvalidArgument, "format must be json, csv or text");
    format = value;
  } else if (key == "out") {
    out = value;
  } else if (key == "hilbert_gens" || key == "gens") {
    hilbert_gens = split_list(value);
    if (hilbert_gens.empty()) throw Error(Status::InvalidArgument, "gens must not be empty");
  } else {
    throw Error(Status::InvalidArgument, "unknown config key '" + key_in + "'");
  }
}

void RunConfig::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Status::InvalidArgument, "cannot read config file " + path);
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    if (trim(line).empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw Error(Status::InvalidArgument, path + ":" + std::to_string(lineno) + ": expected key = value");
    set(line.substr(0, eq), line.substr(eq + 1));
  }
}

void RunConfig::validate() const {
  for (long v : {qseries_n, two_variable_n, hilbert_n, groebner_n, virasoro_n, e8_n, modules_n, partitions_n,
                 families_n, recurrence_n, slice_limit, gap_n, jobs})
    if (v < 1) throw Error(Status::InvalidArgument, "all orders must be at least 1");
  if (prop51_k < 0) throw Error(Status::InvalidArgument, "prop51_k must be nonnegative");
}

RunConfig RunConfig::halved() const {
  RunConfig h = *this;
  for (long* v : {&h.qseries_n, &h.two_variable_n, &h.hilbert_n, &h.groebner_n, &h.virasoro_n, &h.e8_n, &h.modules_n,
                  &h.partitions_n, &h.families_n, &h.recurrence_n, &h.slice_limit})
    *v = std::max(1L, *v / 2);
  h.prop51_k = prop51_k / 2;
  h.gap_n = std::min(gap_n, std::max(20L, gap_n / 2));  // the first excess sits at 19
  return h;
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [name, fn] : registry()) n.push_back(name);
    return n;
  }();
  return names;
}

bool is_check(const std::string& name) {
  const auto& n = check_names();
  return std::find(n.begin(), n.end(), name) != n.end();
}

Report run_check(const std::string& name, const RunConfig& cfg) {
  cfg.validate();
  const auto& reg = registry();
  auto it = std::find_if(reg.begin(), reg.end(), [&](const auto& e) { return e.first == name; });
  if (it == reg.end()) throw Error(Status::InvalidArgument, "unknown check '" + name + "'");
  Report r;
  r.check = name;
  auto t0 = std::chrono::steady_clock::now();
  try {
    it->second(cfg, r);
  } catch (const Error& e) {
    r.items.push_back({"completed without error", false, std::string(status_name(e.status())) + ": " + e.what()});
  } catch (const std::exception& e) {
    r.items.push_back({"completed without error", false, e.what()});
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  r.passed = !r.items.empty() && all_passed(r.items);
  return r;
}

std::vector<Report> run_checks(const std::vector<std::string>& names, const RunConfig& cfg) {
  cfg.validate();
  for (const auto& n : names)
    if (!is_check(n)) throw Error(Status::InvalidArgument, "unknown check '" + n + "'");
  std::vector<Report> out(names.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < names.size();) out[i] = run_check(names[i], cfg);
  };
  std::size_t threads = std::min<std::size_t>(static_cast<std::size_t>(cfg.jobs), names.size());
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

nlohmann::json to_json(const Report& r) {
  nlohmann::json items = nlohmann::json::array();
  for (const auto& i : r.items) items.push_back({{"name", i.name}, {"passed", i.passed}, {"detail", i.detail}});
  const CheckItem* f = first_failure(r.items);
  nlohmann::json failure = nullptr;
  if (f) failure = {{"name", f->name}, {"detail", f->detail}};
  return {{"check", r.check}, {"claim", r.claim}, {"order", r.order}, {"passed", r.passed},
          {"seconds", r.seconds}, {"items", items}, {"first_failure", failure}};
}

Report summary_report(const std::vector<Report>& reports) {
  Report s;
  s.check = "all";
  s.claim = "every check passed";
  s.order = std::to_string(reports.size()) + " checks";
  for (const auto& r : reports) {
    s.items.push_back({r.check, r.passed, r.order});
    s.seconds += r.seconds;
  }
  s.passed = all_passed(s.items);
  return s;
}

nlohmann::json run_to_json(const std::vector<Report>& reports) {
  nlohmann::json arr = nlohmann::json::array();
  bool ok = true;
  for (const auto& r : reports) {
    arr.push_back(to_json(r));
    ok = ok && r.passed;
  }
  return {{"schema", 1}, {"passed", ok}, {"reports", arr}};
}

}  // namespace iwb::checks
