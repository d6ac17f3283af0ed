#include "tqseries.hpp"

#include <algorithm>
#include <sstream>

namespace iwb {

Rational TQSeries::coeff(long n, long m) const {
  auto it = coeffs_.find(n);
  if (it == coeffs_.end()) return 0;
  auto jt = it->second.find(m);
  return jt == it->second.end() ? Rational(0) : jt->second;
}

void TQSeries::add(long n, long m, const Rational& c) {
  if (n < 0) throw Error(Status::InvalidArgument, "negative q-exponent in TQSeries");
  if (n >= trunc_ || c == 0) return;
  auto& poly = coeffs_[n];
  auto [it, inserted] = poly.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) poly.erase(it);
  }
  if (poly.empty()) coeffs_.erase(n);
}

void TQSeries::add_term(long tdeg, const QSeries& qpart, const Rational& scale) {
  if (qpart.trunc() && *qpart.trunc() < trunc_)
    throw Error(Status::InvalidArgument, "q-part known to lower order than the target series");
  if (qpart.denom() != 1 && !qpart.is_zero()) {
    for (const auto& [k, c] : qpart.terms())
      if (k % qpart.denom() != 0) throw Error(Status::InvalidArgument, "fractional exponent in TQSeries term");
  }
  for (const auto& [k, c] : qpart.terms()) {
    long n = k / qpart.denom();
    if (n >= trunc_) break;
    add(n, tdeg, c * scale);
  }
}

TQSeries& TQSeries::operator+=(const TQSeries& other) {
  trunc_ = std::min(trunc_, other.trunc_);
  for (auto it = coeffs_.begin(); it != coeffs_.end();)
    it = it->first >= trunc_ ? coeffs_.erase(it) : std::next(it);
  for (const auto& [n, poly] : other.coeffs_)
    for (const auto& [m, c] : poly) add(n, m, c);
  return *this;
}

TQSeries& TQSeries::operator-=(const TQSeries& other) {
  trunc_ = std::min(trunc_, other.trunc_);
  for (auto it = coeffs_.begin(); it != coeffs_.end();)
    it = it->first >= trunc_ ? coeffs_.erase(it) : std::next(it);
  for (const auto& [n, poly] : other.coeffs_)
    for (const auto& [m, c] : poly) add(n, m, -c);
  return *this;
}

TQSeries TQSeries::shear(long a) const {
  if (a < 0) throw Error(Status::InvalidArgument, "negative shear would need unknown coefficients");
  TQSeries out(trunc_);
  for (const auto& [n, poly] : coeffs_)
    for (const auto& [m, c] : poly) out.add(n + a * m, m, c);
  return out;
}

TQSeries TQSeries::times(long tdeg, long qdeg) const {
  if (qdeg < 0) throw Error(Status::InvalidArgument, "negative q-shift");
  TQSeries out(trunc_);
  for (const auto& [n, poly] : coeffs_)
    for (const auto& [m, c] : poly) out.add(n + qdeg, m + tdeg, c);
  return out;
}

QSeries TQSeries::at_t_one() const {
  QSeries::Terms terms;
  for (const auto& [n, poly] : coeffs_) {
    Rational s = 0;
    for (const auto& [m, c] : poly) s += c;
    if (s != 0) terms.emplace(n, s);
  }
  return QSeries::from_terms(1, std::move(terms), Rational(trunc_));
}

QSeries TQSeries::at_t_zero() const {
  QSeries::Terms terms;
  for (const auto& [n, poly] : coeffs_) {
    auto it = poly.find(0);
    if (it != poly.end()) terms.emplace(n, it->second);
  }
  return QSeries::from_terms(1, std::move(terms), Rational(trunc_));
}

TQSeries TQSeries::li_substitution() const {
  TQSeries out(trunc_);
  for (const auto& [n, poly] : coeffs_)
    for (const auto& [m, c] : poly) {
      if (n - 2 * m < 0)
        throw Error(Status::InvalidArgument, "t-exponent n-2m negative at q^" + std::to_string(n));
      out.add(n, n - 2 * m, c);
    }
  return out;
}

std::string TQComparison::describe() const {
  std::ostringstream os;
  if (equal)
    os << "equal mod q^" << order;
  else
    os << "mismatch at t^" << m << " q^" << n << ": " << to_string(lhs) << " vs " << to_string(rhs);
  return os.str();
}

TQComparison compare(const TQSeries& a, const TQSeries& b) {
  TQComparison r;
  r.order = std::min(a.trunc(), b.trunc());
  TQSeries diff = a - b;
  if (!diff.is_zero()) {
    const auto& [n, poly] = *diff.coeffs().begin();
    r.equal = false;
    r.n = n;
    r.m = poly.begin()->first;
    r.lhs = a.coeff(r.n, r.m);
    r.rhs = b.coeff(r.n, r.m);
  }
  return r;
}

nlohmann::json to_json(const TQSeries& s) {
  nlohmann::json j;
  j["trunc"] = s.trunc();
  auto coeffs = nlohmann::json::array();
  for (const auto& [n, poly] : s.coeffs()) {
    auto tp = nlohmann::json::array();
    for (const auto& [m, c] : poly) tp.push_back({m, to_string(c)});
    coeffs.push_back({n, std::move(tp)});
  }
  j["coeffs"] = std::move(coeffs);
  return j;
}

TQSeries tqseries_from_json(const nlohmann::json& j) {
  try {
    TQSeries s(j.at("trunc").get<long>());
    for (const auto& entry : j.at("coeffs")) {
      long n = entry.at(0).get<long>();
      for (const auto& tc : entry.at(1)) s.add(n, tc.at(0).get<long>(), parse_rational(tc.at(1).get<std::string>()));
    }
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Status::ParseError, e.what());
  }
}

}  // namespace iwb
