#include "qseries.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace iwb {
namespace {

long key_of(const Rational& exponent, long denom) {
  Rational k = exponent * denom;
  if (!is_integer(k))
    throw Error(Status::InvalidArgument, "exponent " + to_string(exponent) +
                                             " not representable with denominator " +
                                             std::to_string(denom));
  return to_long(k.get_num());
}

long denom_lcm(long a, long b) { return to_long(lcm(Integer(a), Integer(b))); }

// Keys strictly below this bound are meaningful for the given truncation.
std::optional<long> key_limit(const std::optional<Rational>& trunc, long denom) {
  if (!trunc) return std::nullopt;
  return to_long(ceil(*trunc * denom));
}

std::optional<Rational> min_trunc(const std::optional<Rational>& a,
                                  const std::optional<Rational>& b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

}  // namespace

QSeries QSeries::constant(const Rational& c) {
  QSeries s;
  if (c != 0) s.terms_.emplace(0, c);
  return s;
}

QSeries QSeries::monomial(const Rational& exponent, const Rational& coeff) {
  if (exponent < 0) throw Error(Status::InvalidArgument, "negative exponent in QSeries");
  QSeries s;
  s.denom_ = to_long(Integer(exponent.get_den()));
  if (coeff != 0) s.terms_.emplace(key_of(exponent, s.denom_), coeff);
  return s;
}

QSeries QSeries::zero(const Rational& trunc) {
  if (trunc < 0) throw Error(Status::InvalidArgument, "negative truncation order");
  QSeries s;
  s.trunc_ = trunc;
  return s;
}

QSeries QSeries::from_terms(long denom, Terms terms, std::optional<Rational> trunc) {
  if (denom <= 0) throw Error(Status::InvalidArgument, "series denominator must be positive");
  if (trunc && *trunc < 0) throw Error(Status::InvalidArgument, "negative truncation order");
  QSeries s;
  s.denom_ = denom;
  s.trunc_ = std::move(trunc);
  s.terms_ = std::move(terms);
  if (!s.terms_.empty() && s.terms_.begin()->first < 0)
    throw Error(Status::InvalidArgument, "negative exponent in QSeries");
  s.normalize();
  return s;
}

void QSeries::normalize() {
  auto limit = key_limit(trunc_, denom_);
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second == 0 || (limit && it->first >= *limit))
      it = terms_.erase(it);
    else
      ++it;
  }
}

Rational QSeries::coeff(const Rational& exponent) const {
  Rational k = exponent * denom_;
  if (!is_integer(k)) return 0;
  auto it = terms_.find(to_long(k.get_num()));
  return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<Rational> QSeries::lowest_exponent() const {
  if (terms_.empty()) return std::nullopt;
  return frac(terms_.begin()->first, denom_);
}

std::optional<Rational> QSeries::highest_exponent() const {
  if (terms_.empty()) return std::nullopt;
  return frac(terms_.rbegin()->first, denom_);
}

std::optional<Rational> QSeries::order() const {
  if (!terms_.empty()) return lowest_exponent();
  return trunc_;
}

QSeries QSeries::truncated(const Rational& n) const {
  QSeries s = *this;
  s.trunc_ = min_trunc(trunc_, n);
  s.normalize();
  return s;
}

QSeries QSeries::with_denom(long d) const {
  if (d == denom_) return *this;
  if (d <= 0 || d % denom_ != 0)
    throw Error(Status::InvalidArgument, "new denominator must be a multiple of the old one");
  long f = d / denom_;
  QSeries s;
  s.denom_ = d;
  s.trunc_ = trunc_;
  for (const auto& [k, c] : terms_) s.terms_.emplace_hint(s.terms_.end(), k * f, c);
  return s;
}

QSeries QSeries::shifted(const Rational& e) const {
  long d = denom_lcm(denom_, to_long(Integer(e.get_den())));
  QSeries base = with_denom(d);
  long shift = key_of(e, d);
  QSeries s;
  s.denom_ = d;
  if (trunc_) {
    s.trunc_ = *trunc_ + e;
    if (*s.trunc_ < 0) throw Error(Status::InvalidArgument, "shift makes truncation negative");
  }
  for (const auto& [k, c] : base.terms_) {
    if (k + shift < 0) throw Error(Status::InvalidArgument, "shift produces a negative exponent");
    s.terms_.emplace_hint(s.terms_.end(), k + shift, c);
  }
  return s;
}

QSeries QSeries::operator-() const {
  QSeries s = *this;
  for (auto& [k, c] : s.terms_) c = -c;
  return s;
}

QSeries& QSeries::operator+=(const QSeries& other) {
  long d = denom_lcm(denom_, other.denom_);
  if (d != denom_) *this = with_denom(d);
  const QSeries& rhs = other.denom_ == d ? other : other.with_denom(d);
  trunc_ = min_trunc(trunc_, rhs.trunc_);
  auto limit = key_limit(trunc_, denom_);
  for (const auto& [k, c] : rhs.terms_) {
    if (limit && k >= *limit) break;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  normalize();
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& other) { return *this += -other; }

QSeries& QSeries::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, c] : terms_) c *= scalar;
  return *this;
}

QSeries operator*(const QSeries& a_in, const QSeries& b_in) {
  long d = denom_lcm(a_in.denom_, b_in.denom_);
  QSeries a = a_in.with_denom(d);
  QSeries b = b_in.with_denom(d);

  // An exact zero annihilates anything, including unknown coefficients.
  if ((a.is_exact() && a.is_zero()) || (b.is_exact() && b.is_zero())) {
    QSeries z;
    z.denom_ = d;
    return z;
  }

  std::optional<Rational> trunc;
  if (!a.is_exact()) trunc = *a.trunc_ + *b.order();
  if (!b.is_exact()) trunc = min_trunc(trunc, *b.trunc_ + *a.order());

  QSeries out;
  out.denom_ = d;
  out.trunc_ = trunc;
  if (a.terms_.empty() || b.terms_.empty()) return out;

  long lo = a.terms_.begin()->first + b.terms_.begin()->first;
  long hi = a.terms_.rbegin()->first + b.terms_.rbegin()->first + 1;
  if (auto limit = key_limit(trunc, d)) hi = std::min(hi, *limit);
  if (hi <= lo) return out;

  std::vector<Rational> acc(static_cast<std::size_t>(hi - lo));
  Rational prod;
  for (const auto& [ka, ca] : a.terms_) {
    if (ka + b.terms_.begin()->first >= hi) break;
    for (const auto& [kb, cb] : b.terms_) {
      long k = ka + kb;
      if (k >= hi) break;
      mpq_mul(prod.get_mpq_t(), ca.get_mpq_t(), cb.get_mpq_t());
      acc[static_cast<std::size_t>(k - lo)] += prod;
    }
  }
  for (std::size_t i = 0; i < acc.size(); ++i)
    if (acc[i] != 0) out.terms_.emplace_hint(out.terms_.end(), lo + static_cast<long>(i), acc[i]);
  return out;
}

bool operator==(const QSeries& a, const QSeries& b) {
  if (a.trunc_ != b.trunc_) return false;
  long d = denom_lcm(a.denom_, b.denom_);
  return a.with_denom(d).terms_ == b.with_denom(d).terms_;
}

QSeries inverse(const QSeries& a, std::optional<Rational> trunc) {
  std::optional<Rational> n = min_trunc(a.trunc(), trunc);
  if (!n) throw Error(Status::InvalidArgument, "inverse of an exact polynomial needs a truncation order");
  const auto& t = a.terms();
  if (t.empty() || t.begin()->first != 0)
    throw Error(Status::ZeroConstantTerm, "series has zero constant term");

  long d = a.denom();
  long limit = to_long(ceil(*n * d));
  Rational inv0 = 1 / t.begin()->second;
  // b_k = -inv0 * sum_{j>0} a_j b_{k-j}
  std::vector<Rational> b(static_cast<std::size_t>(std::max(limit, 0L)));
  Rational acc, prod;
  for (long k = 0; k < limit; ++k) {
    if (k == 0) {
      b[0] = inv0;
      continue;
    }
    acc = 0;
    for (auto it = std::next(t.begin()); it != t.end() && it->first <= k; ++it) {
      const Rational& bk = b[static_cast<std::size_t>(k - it->first)];
      if (bk == 0) continue;
      mpq_mul(prod.get_mpq_t(), it->second.get_mpq_t(), bk.get_mpq_t());
      acc += prod;
    }
    b[static_cast<std::size_t>(k)] = -inv0 * acc;
  }
  QSeries::Terms terms;
  for (long k = 0; k < limit; ++k)
    if (b[static_cast<std::size_t>(k)] != 0) terms.emplace_hint(terms.end(), k, b[static_cast<std::size_t>(k)]);
  return QSeries::from_terms(d, std::move(terms), *n);
}

std::string SeriesComparison::describe() const {
  std::ostringstream os;
  if (equal) {
    if (order)
      os << "equal mod q^" << to_string(*order);
    else
      os << "equal as exact polynomials";
  } else {
    os << "mismatch at q^" << to_string(*first_mismatch) << ": " << to_string(lhs) << " vs "
       << to_string(rhs);
  }
  return os.str();
}

SeriesComparison compare(const QSeries& a, const QSeries& b) {
  SeriesComparison r;
  r.order = min_trunc(a.trunc(), b.trunc());
  long d = denom_lcm(a.denom(), b.denom());
  QSeries diff = a.with_denom(d) - b.with_denom(d);
  if (r.order) diff = diff.truncated(*r.order);
  if (!diff.is_zero()) {
    r.equal = false;
    r.first_mismatch = diff.lowest_exponent();
    r.lhs = a.coeff(*r.first_mismatch);
    r.rhs = b.coeff(*r.first_mismatch);
  }
  return r;
}

QSeries pochhammer(long n, std::optional<Rational> trunc) {
  if (n < 0) throw Error(Status::InvalidArgument, "pochhammer index must be nonnegative");
  QSeries p = QSeries::constant(1);
  if (trunc) p = p.truncated(*trunc);
  for (long j = 1; j <= n; ++j) {
    if (trunc && Rational(j) >= *trunc) break;  // factor is 1 below q^trunc
    p = p * (QSeries::constant(1) - QSeries::monomial(j));
  }
  return p;
}

QSeries pochhammer_inf(const Rational& trunc) {
  if (trunc < 0) throw Error(Status::InvalidArgument, "negative truncation order");
  // Factors (1 - q^j) with j >= N do not touch coefficients below q^N.
  long top = to_long(ceil(trunc)) - 1;
  return pochhammer(std::max(top, 0L), trunc);
}

QSeries q_binomial(long m, long n) {
  if (n < 0 || n > m) return QSeries();
  n = std::min(n, m - n);
  // [m-n+j choose j]_q for j = 0..n, each step an exact division by (1-q^j).
  std::vector<Integer> p{1};
  for (long j = 1; j <= n; ++j) {
    long up = m - n + j;
    std::vector<Integer> next(p.size() + static_cast<std::size_t>(up));
    for (std::size_t i = 0; i < p.size(); ++i) {
      next[i] += p[i];
      next[i + static_cast<std::size_t>(up)] -= p[i];
    }
    // divide by (1 - q^j): b_i = c_i + b_{i-j}
    for (std::size_t i = static_cast<std::size_t>(j); i < next.size(); ++i)
      next[i] += next[i - static_cast<std::size_t>(j)];
    while (!next.empty() && next.back() == 0) next.pop_back();
    p = std::move(next);
  }
  QSeries::Terms terms;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != 0) terms.emplace_hint(terms.end(), static_cast<long>(i), Rational(p[i]));
  return QSeries::from_terms(1, std::move(terms), std::nullopt);
}

nlohmann::json to_json(const QSeries& s) {
  nlohmann::json j;
  j["denom"] = s.denom();
  j["trunc"] = s.trunc() ? nlohmann::json(to_string(*s.trunc())) : nlohmann::json(nullptr);
  auto coeffs = nlohmann::json::array();
  for (const auto& [k, c] : s.terms())
    coeffs.push_back({to_string(frac(k, s.denom())), to_string(c)});
  j["coeffs"] = std::move(coeffs);
  return j;
}

QSeries series_from_json(const nlohmann::json& j) {
  try {
    long d = j.at("denom").get<long>();
    if (d <= 0) throw Error(Status::ParseError, "denom must be positive");
    std::optional<Rational> trunc;
    const auto& jt = j.at("trunc");
    if (!jt.is_null()) trunc = jt.is_string() ? parse_rational(jt.get<std::string>()) : Rational(jt.get<long>());
    QSeries::Terms terms;
    for (const auto& entry : j.at("coeffs")) {
      if (!entry.is_array() || entry.size() != 2) throw Error(Status::ParseError, "coefficient entry must be a pair");
      Rational e = parse_rational(entry[0].get<std::string>());
      Rational c = parse_rational(entry[1].get<std::string>());
      Rational k = e * d;
      if (!is_integer(k) || k < 0) throw Error(Status::ParseError, "exponent incompatible with denom");
      terms[to_long(k.get_num())] += c;
    }
    return QSeries::from_terms(d, std::move(terms), std::move(trunc));
  } catch (const nlohmann::json::exception& e) {
    throw Error(Status::ParseError, e.what());
  }
}

std::string to_string(const QSeries& s) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : s.terms()) {
    Rational e(k, s.denom());
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    Rational a = abs(c);
    if (e == 0) {
      os << to_string(a);
      continue;
    }
    if (a != 1) os << to_string(a) << "*";
    os << "q";
    if (e != 1) os << "^" << to_string(e);
  }
  if (first) os << "0";
  if (s.trunc()) os << " + O(q^" << to_string(*s.trunc()) << ")";
  return os.str();
}

}  // namespace iwb
