#include "diffalg.hpp"

#include <algorithm>
#include <sstream>

namespace iwb::diff {

DiffPoly DiffPoly::monomial(const Partition& p, const Rational& c) {
  DiffPoly f;
  f.add(p, c);
  return f;
}

DiffPoly DiffPoly::generator(long n) { return monomial(Partition({n})); }

Rational DiffPoly::coeff(const Partition& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<long> DiffPoly::weight() const {
  if (terms_.empty()) return std::nullopt;
  long w = terms_.begin()->first.weight();
  if (terms_.rbegin()->first.weight() != w) throw Error(Status::InvalidArgument, "polynomial is not homogeneous");
  return w;
}

void DiffPoly::add(const Partition& p, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

DiffPoly& DiffPoly::operator+=(const DiffPoly& o) {
  for (const auto& [p, c] : o.terms_) add(p, c);
  return *this;
}

DiffPoly& DiffPoly::operator-=(const DiffPoly& o) {
  for (const auto& [p, c] : o.terms_) add(p, -c);
  return *this;
}

DiffPoly& DiffPoly::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [p, c] : terms_) c *= s;
  return *this;
}

DiffPoly operator*(const DiffPoly& a, const DiffPoly& b) {
  DiffPoly out;
  for (const auto& [p, c] : a.terms_)
    for (const auto& [q, d] : b.terms_) out.add(p * q, c * d);
  return out;
}

DiffPoly DiffPoly::times(const Partition& mu) const {
  DiffPoly out;
  // Multiplication by a monomial preserves the order.
  for (const auto& [p, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), mu * p, c);
  return out;
}

DiffPoly derive(const DiffPoly& f) {
  DiffPoly out;
  for (const auto& [p, c] : f.terms()) {
    const auto& v = p.parts();
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i > 0 && v[i] == v[i - 1]) continue;
      std::size_t mult = 1;
      while (i + mult < v.size() && v[i + mult] == v[i]) ++mult;
      std::vector<long> w = v;
      w[i] += 1;
      out.add(Partition(std::move(w)), c * static_cast<long>(mult) * (v[i] - 1));
    }
  }
  return out;
}

DiffPoly divided_derivative(const DiffPoly& f, long n) {
  if (n < 0) throw Error(Status::InvalidArgument, "derivative order must be >= 0");
  DiffPoly g = f;
  for (long j = 1; j <= n; ++j) g = derive(g) * frac(1, j);
  return g;
}

Partition leading_monomial(const DiffPoly& f) {
  if (f.is_zero()) throw Error(Status::ZeroPolynomial, "leading monomial of zero");
  return f.terms().rbegin()->first;
}

Rational leading_coefficient(const DiffPoly& f) {
  if (f.is_zero()) throw Error(Status::ZeroPolynomial, "leading coefficient of zero");
  return f.terms().rbegin()->second;
}

std::string to_string(const DiffPoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const auto& [p, c] = *it;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    Rational a = abs(c);
    if (a != 1 || p.empty()) os << iwb::to_string(a);
    if (!p.empty()) os << (a != 1 ? "*" : "") << "L" << iwb::to_string(p);
  }
  return os.str();
}

nlohmann::json to_json(const DiffPoly& f) {
  nlohmann::json j;
  auto w = f.weight();
  j["weight"] = w ? nlohmann::json(*w) : nlohmann::json(nullptr);
  auto terms = nlohmann::json::array();
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it)
    terms.push_back({iwb::to_json(it->first), iwb::to_string(it->second)});
  j["terms"] = std::move(terms);
  return j;
}

DiffPoly diffpoly_from_json(const nlohmann::json& j) {
  try {
    DiffPoly f;
    for (const auto& t : j.at("terms")) f.add(partition_from_json(t.at(0)), parse_rational(t.at(1).get<std::string>()));
    if (j.contains("weight") && !j["weight"].is_null() && f.weight() && *f.weight() != j["weight"].get<long>())
      throw Error(Status::ParseError, "weight field disagrees with terms");
    return f;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Status::ParseError, e.what());
  }
}

DiffPoly power_of_L2(long s) {
  if (s < 1) throw Error(Status::InvalidArgument, "power must be >= 1");
  return DiffPoly::monomial(Partition(std::vector<long>(static_cast<std::size_t>(s), 2)));
}

DiffPoly gen_a() { return power_of_L2(3); }
DiffPoly gen_b() { return gen_b_3(4); }

DiffPoly gen_a_3(long pp) {
  if (pp < 4) throw Error(Status::InvalidArgument, "p' must be >= 4");
  return power_of_L2(pp - 1);
}

DiffPoly gen_b_3(long pp) {
  if (pp < 4) throw Error(Status::InvalidArgument, "p' must be >= 4");
  std::vector<long> first{5}, second{4, 3};
  first.insert(first.end(), static_cast<std::size_t>(pp - 2), 2);
  second.insert(second.end(), static_cast<std::size_t>(pp - 3), 2);
  DiffPoly b = DiffPoly::monomial(Partition(second));
  b.add(Partition(first), frac(9 - 2 * pp, 3 * (pp - 2)));
  return b;
}

const DiffPoly& DerivativeCache::operator[](long k) {
  if (k < 0) throw Error(Status::InvalidArgument, "derivative order must be >= 0");
  while (static_cast<long>(d_.size()) <= k) {
    long j = static_cast<long>(d_.size());
    d_.push_back(derive(d_.back()) * frac(1, j));
  }
  return d_[static_cast<std::size_t>(k)];
}

namespace {

using SparseRow = std::vector<std::pair<long, Rational>>;

// row -= factor * pivot, both sorted by column.
SparseRow axpy(const SparseRow& row, const Rational& factor, const SparseRow& pivot) {
  SparseRow out;
  out.reserve(row.size() + pivot.size());
  std::size_t i = 0, j = 0;
  while (i < row.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
      out.push_back(row[i++]);
    } else if (i == row.size() || pivot[j].first < row[i].first) {
      out.emplace_back(pivot[j].first, -factor * pivot[j].second);
      ++j;
    } else {
      Rational v = row[i].second - factor * pivot[j].second;
      if (v != 0) out.emplace_back(row[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

// Reduce by leading entries until the row vanishes or has a new pivot.
void top_reduce(SparseRow& row, const std::map<long, SparseRow>& rows) {
  while (!row.empty()) {
    auto it = rows.find(row.front().first);
    if (it == rows.end()) return;
    row = axpy(row, row.front().second, it->second);
  }
}

SparseRow to_row(const DiffPoly& f, const std::map<Partition, long>& index) {
  SparseRow r;
  r.reserve(f.terms().size());
  for (const auto& [p, c] : f.terms()) {
    auto it = index.find(p);
    if (it == index.end()) throw Error(Status::InvalidArgument, "monomial " + to_string(p) + " outside the slice");
    r.emplace_back(it->second, c);
  }
  std::sort(r.begin(), r.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return r;
}

std::map<Partition, long> column_index(const std::vector<Partition>& cols) {
  std::map<Partition, long> index;
  for (std::size_t i = 0; i < cols.size(); ++i) index.emplace(cols[i], static_cast<long>(i));
  return index;
}

}  // namespace

std::vector<Partition> IdealSlice::leading_monomials() const {
  std::vector<Partition> out;
  for (const auto& [c, r] : rows) out.push_back(columns[static_cast<std::size_t>(c)]);
  return out;
}

bool IdealSlice::contains(const DiffPoly& f) const {
  if (f.is_zero()) return true;
  if (*f.weight() != weight) return false;
  SparseRow r = to_row(f, column_index(columns));
  top_reduce(r, rows);
  return r.empty();
}

IdealSlice ideal_slice(const std::vector<DiffPoly>& gens, long d) {
  IdealSlice s;
  s.weight = d;
  s.columns = partitions_min2(d);
  std::reverse(s.columns.begin(), s.columns.end());
  const auto index = column_index(s.columns);

  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    const long wg = *g.weight();
    DerivativeCache derivs(g);
    for (long k = 0; wg + k <= d; ++k) {
      const DiffPoly& dg = derivs[k];
      for (const auto& mu : partitions_min2(d - wg - k)) {
        SparseRow r = to_row(dg.times(mu), index);
        ++s.spanning_rows;
        top_reduce(r, s.rows);
        if (r.empty()) continue;
        Rational inv = 1 / r.front().second;
        for (auto& e : r) e.second *= inv;
        s.rows.emplace(r.front().first, std::move(r));
      }
    }
  }
  return s;
}

QSeries hilbert_quotient(const std::vector<DiffPoly>& gens, long N) {
  QSeries::Terms t;
  for (long d = 0; d <= N; ++d) {
    IdealSlice s = ideal_slice(gens, d);
    long v = s.dimension() - s.rank();
    if (v != 0) t.emplace(d, v);
  }
  return QSeries::from_terms(1, std::move(t), Rational(N + 1));
}

bool membership(const DiffPoly& f, const std::vector<DiffPoly>& gens) {
  if (f.is_zero()) return true;
  return ideal_slice(gens, *f.weight()).contains(f);
}

}  // namespace iwb::diff
