#pragma once

#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "qseries.hpp"

namespace iwb {

// Two-variable series sum c(n, m) t^m q^n, known for q-degree n < trunc and
// polynomial in t at every q-degree. q-exponents are integers.
class TQSeries {
 public:
  using TPoly = std::map<long, Rational>;  // t-degree -> coefficient

  explicit TQSeries(long trunc = 0) : trunc_(trunc) {}

  long trunc() const { return trunc_; }
  const std::map<long, TPoly>& coeffs() const { return coeffs_; }
  Rational coeff(long n, long m) const;
  bool is_zero() const { return coeffs_.empty(); }

  void add(long n, long m, const Rational& c);
  // Adds scale * t^tdeg * qpart; qpart must be known at least to q^trunc
  // and have integer exponents.
  void add_term(long tdeg, const QSeries& qpart, const Rational& scale = 1);

  TQSeries& operator+=(const TQSeries& other);
  TQSeries& operator-=(const TQSeries& other);
  friend TQSeries operator+(TQSeries a, const TQSeries& b) { return a += b; }
  friend TQSeries operator-(TQSeries a, const TQSeries& b) { return a -= b; }
  friend bool operator==(const TQSeries& a, const TQSeries& b) {
    return a.trunc_ == b.trunc_ && a.coeffs_ == b.coeffs_;
  }

  // f(t, q) -> f(t q^a, q): t^m q^n becomes t^m q^{n + a m}.
  TQSeries shear(long a) const;
  // Multiply by t^tdeg q^qdeg (qdeg >= 0).
  TQSeries times(long tdeg, long qdeg) const;
  // f(1, q)
  QSeries at_t_one() const;
  // f(0, q)
  QSeries at_t_zero() const;
  // t^m q^n -> t^{n-2m} q^n, i.e. f(t^{-2}, t q).
  TQSeries li_substitution() const;

 private:
  long trunc_;
  std::map<long, TPoly> coeffs_;
};

struct TQComparison {
  bool equal = true;
  long order = 0;
  long n = 0, m = 0;  // first mismatch, by q-degree then t-degree
  Rational lhs, rhs;
  std::string describe() const;
};
TQComparison compare(const TQSeries& a, const TQSeries& b);

nlohmann::json to_json(const TQSeries& s);
TQSeries tqseries_from_json(const nlohmann::json& j);

}  // namespace iwb
