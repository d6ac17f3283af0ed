#pragma once

#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "rational.hpp"

namespace iwb {

// Truncated power series in q with exact rational coefficients. Exponents
// live in (1/D)Z>=0 for a per-series denominator D and are stored as the
// integer key e*D. A series is either an exact polynomial (no truncation)
// or known only modulo q^trunc, with trunc an arbitrary nonnegative rational.
class QSeries {
 public:
  using Key = long;
  using Terms = std::map<Key, Rational>;

  QSeries() = default;  // exact zero

  static QSeries constant(const Rational& c);
  static QSeries monomial(const Rational& exponent, const Rational& coeff = 1);
  // Zero modulo q^trunc.
  static QSeries zero(const Rational& trunc);
  static QSeries from_terms(long denom, Terms terms, std::optional<Rational> trunc);

  long denom() const { return denom_; }
  bool is_exact() const { return !trunc_.has_value(); }
  const std::optional<Rational>& trunc() const { return trunc_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coeff(const Rational& exponent) const;
  std::optional<Rational> lowest_exponent() const;
  std::optional<Rational> highest_exponent() const;

  // Lowest exponent that can carry a nonzero coefficient: the lowest stored
  // term, or trunc for a series that is zero mod q^trunc. Unset for exact 0.
  std::optional<Rational> order() const;

  QSeries truncated(const Rational& n) const;
  QSeries with_denom(long d) const;
  // Multiply by q^e. Negative shifts are allowed as long as no stored
  // exponent and no truncation order drops below zero.
  QSeries shifted(const Rational& e) const;

  QSeries operator-() const;
  QSeries& operator+=(const QSeries& other);
  QSeries& operator-=(const QSeries& other);
  QSeries& operator*=(const Rational& scalar);

  friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
  friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
  friend QSeries operator*(QSeries a, const Rational& s) { return a *= s; }
  friend QSeries operator*(const QSeries& a, const QSeries& b);

  // Structural equality: same truncation and the same coefficients.
  friend bool operator==(const QSeries& a, const QSeries& b);

 private:
  void normalize();  // drop zeros and terms at or above trunc

  long denom_ = 1;
  std::optional<Rational> trunc_;
  Terms terms_;
};

// b with a*b = 1 mod q^N, N = trunc(a) or the explicit order for exact a.
QSeries inverse(const QSeries& a, std::optional<Rational> trunc = std::nullopt);

// Comparison of two series up to the order both are known to.
struct SeriesComparison {
  bool equal = true;
  std::optional<Rational> order;  // unset: both exact, compared absolutely
  std::optional<Rational> first_mismatch;
  Rational lhs, rhs;  // coefficients at first_mismatch
  std::string describe() const;
};
SeriesComparison compare(const QSeries& a, const QSeries& b);

// (q)_n = prod_{j=1}^n (1 - q^j), exact unless a storage truncation is given.
QSeries pochhammer(long n, std::optional<Rational> trunc = std::nullopt);
// (q)_infinity mod q^N.
QSeries pochhammer_inf(const Rational& trunc);
// Gaussian binomial; the zero polynomial outside 0 <= n <= m.
QSeries q_binomial(long m, long n);

nlohmann::json to_json(const QSeries& s);
QSeries series_from_json(const nlohmann::json& j);

std::string to_string(const QSeries& s);

}  // namespace iwb
