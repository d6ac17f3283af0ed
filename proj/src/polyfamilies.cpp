#include "polyfamilies.hpp"

#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "characters.hpp"

namespace iwb::poly {
namespace {

using Poly = std::vector<Integer>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// acc += sign * q^shift * a
void add_shifted(Poly& acc, const Poly& a, long shift, int sign = 1) {
  if (a.empty()) return;
  if (acc.size() < a.size() + shift) acc.resize(a.size() + shift);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sign > 0)
      acc[i + shift] += a[i];
    else
      acc[i + shift] -= a[i];
  }
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  return out;
}

const Poly& binom(long m, long k) {
  static const Poly zero;
  if (k < 0 || k > m) return zero;
  static std::map<std::pair<long, long>, Poly> cache;
  static std::mutex mu;
  std::lock_guard lock(mu);
  auto key = std::make_pair(m, std::min(k, m - k));
  auto it = cache.find(key);
  if (it == cache.end()) {
    QSeries b = q_binomial(m, k);
    Poly p;
    for (const auto& [e, c] : b.terms()) {
      if (p.size() <= static_cast<std::size_t>(e)) p.resize(e + 1);
      p[e] = c.get_num();
    }
    it = cache.emplace(key, std::move(p)).first;
  }
  return it->second;
}

QSeries to_series(const Poly& p) {
  QSeries::Terms t;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != 0) t.emplace_hint(t.end(), static_cast<long>(i), Rational(p[i]));
  return QSeries::from_terms(1, std::move(t), std::nullopt);
}

Poly S_poly(Sector sector, long n) {
  Poly acc;
  switch (sector) {
    case Sector::Vac:
      for (long k = 0; 3 * k <= n; ++k) add_shifted(acc, binom(n - k, 2 * k), 2 * k * k);
      break;
    case Sector::Half:
      for (long k = 1; 3 * k - 1 <= n; ++k) add_shifted(acc, binom(n - k, 2 * k - 1), 2 * k * k - 2 * k);
      break;
    case Sector::Sixteenth:
      for (long k = 0; 3 * k + 1 <= n; ++k) add_shifted(acc, binom(n - k, 2 * k + 1), 2 * k * k + k);
      break;
  }
  trim(acc);
  return acc;
}

Poly T_poly(Sector sector, long n) {
  Poly acc;
  // Every term carries binom(n - 3k - m - c, k) binom(n - 4k - m - c, m) with
  // c >= 0, so k, m are bounded by 4k + m <= n.
  for (long k = 0; 4 * k <= n; ++k)
    for (long m = 0; 4 * k + m <= n; ++m) {
      const long base = m * m + 3 * k * m + 4 * k * k;
      switch (sector) {
        case Sector::Vac:
          add_shifted(acc, mul(binom(n - 3 * k - m, k), binom(n - 4 * k - m, m)), base);
          add_shifted(acc, mul(binom(n - 3 * k - m - 1, k), binom(n - 4 * k - m - 1, m - 1)), base + k, -1);
          break;
        case Sector::Half:
          add_shifted(acc, mul(binom(n - 3 * k - m - 1, k), binom(n - 4 * k - m - 1, m)), base + 2 * k);
          add_shifted(acc, mul(binom(n - 3 * k - m - 5, k), binom(n - 4 * k - m - 5, m)),
                      base + 2 * k + 4 * m + 8 * k + 6, -1);
          break;
        case Sector::Sixteenth:
          add_shifted(acc, mul(binom(n - 3 * k - m - 1, k), binom(n - 4 * k - m - 1, m)), base + k + m);
          add_shifted(acc, mul(binom(n - 3 * k - m - 2, k), binom(n - 4 * k - m - 2, m)), base + m + 4 * k + 1);
          break;
      }
    }
  trim(acc);
  return acc;
}

Poly family(Sector sector, Side side, long n) {
  long lowest = sector == Sector::Vac ? 0 : 1;
  if (n < lowest)
    throw Error(Status::InvalidArgument, std::string("family index must be >= ") + std::to_string(lowest));
  return side == Side::S ? S_poly(sector, n) : T_poly(sector, n);
}

// Series the families converge to: the q^{1/2} of V_{1/2} is stripped.
QSeries limit_series(Sector sector, Side side, long trunc) {
  using namespace chars;
  switch (sector) {
    case Sector::Vac:
      return side == Side::S ? alt_expression(AltForm::Euler, trunc) : quasiparticle_chi(trunc);
    case Sector::Half: {
      auto s = module_character(Module::VHalf, side == Side::S ? chars::Side::Classical : chars::Side::New, trunc + 1);
      return s.shifted(Rational(-1, 2)).truncated(trunc);
    }
    case Sector::Sixteenth:
      return module_character(Module::VSixteenth, side == Side::S ? chars::Side::Classical : chars::Side::New, trunc);
  }
  throw Error(Status::InvalidArgument, "unknown sector");
}

std::string first_difference(const Poly& a, const Poly& b) {
  std::size_t n = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    Integer x = i < a.size() ? a[i] : Integer(0), y = i < b.size() ? b[i] : Integer(0);
    if (x != y) return "first difference at q^" + std::to_string(i) + ": " + x.get_str() + " vs " + y.get_str();
  }
  return "equal";
}

}  // namespace

const char* name(Sector s) {
  switch (s) {
    case Sector::Vac: return "vac";
    case Sector::Half: return "half";
    case Sector::Sixteenth: return "sixteenth";
  }
  return "?";
}

const char* name(Side s) { return s == Side::S ? "S" : "T"; }

QSeries family_poly(Sector sector, Side side, long n) { return to_series(family(sector, side, n)); }

CheckItems equality_check(Sector sector, long n_max) {
  CheckItems out;
  long start = sector == Sector::Vac ? 0 : 1;
  if (sector == Sector::Half && n_max >= 1) {
    // S_1 is an empty sum while the k = m = 0 term of T_1 is 1.
    Poly s = family(sector, Side::S, 1), t = family(sector, Side::T, 1);
    bool as_known = s.empty() && t == Poly{1};
    out.push_back({"n=1 boundary: S_1 = 0, T_1 = 1", as_known, first_difference(s, t)});
    start = 2;
  }
  for (long n = start; n <= n_max; ++n) {
    Poly s = family(sector, Side::S, n), t = family(sector, Side::T, n);
    out.push_back({std::string("S_") + std::to_string(n) + " = T_" + std::to_string(n), s == t,
                   first_difference(s, t)});
  }
  return out;
}

CheckItems recurrence_check(long n_max) {
  CheckItems out;
  for (Side side : {Side::S, Side::T}) {
    std::vector<Poly> f;
    for (long n = 0; n <= n_max + 8; ++n) f.push_back(family(Sector::Vac, side, n));
    CheckItem item{std::string("recurrence for ") + name(side), true, "holds for n <= " + std::to_string(n_max)};
    for (long n = 0; n <= n_max; ++n) {
      Poly r;
      add_shifted(r, f[n], 4 * n + 15);
      for (long s : {0L, 1L}) {
        add_shifted(r, f[n + 3], 2 * n + 11 + s);
        add_shifted(r, f[n + 4], 2 * n + 11 + s, -1);
      }
      add_shifted(r, f[n + 5], 3, -1);
      for (long s : {0L, 1L, 2L}) {
        add_shifted(r, f[n + 6], 1 + s);
        add_shifted(r, f[n + 7], s, -1);
      }
      add_shifted(r, f[n + 8], 0);
      trim(r);
      if (!r.empty()) {
        item.passed = false;
        item.detail = "residual at n=" + std::to_string(n) + ": " + first_difference(r, {});
        break;
      }
    }
    out.push_back(std::move(item));
  }
  return out;
}

CheckItems limit_check(Sector sector, long n, long trunc) {
  CheckItems out;
  for (Side side : {Side::S, Side::T}) {
    QSeries a = family_poly(sector, side, n).truncated(trunc);
    QSeries b = family_poly(sector, side, n + 1).truncated(trunc);
    if (!(a == b))
      throw Error(Status::StabilizationNotReached,
                  std::string(name(side)) + "_" + std::to_string(n) + " not stable mod q^" + std::to_string(trunc));
    SeriesComparison c = compare(a, limit_series(sector, side, trunc));
    out.push_back({std::string(name(side)) + "_" + std::to_string(n) + " -> " + name(sector) + " character",
                   c.equal, c.describe()});
  }
  return out;
}

}  // namespace iwb::poly
