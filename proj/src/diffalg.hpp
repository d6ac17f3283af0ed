#pragma once

#include <deque>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "partitions.hpp"
#include "qseries.hpp"
#include "rational.hpp"
#include "report.hpp"

namespace iwb::diff {

// Element of C[L_{-2}, L_{-3}, ...]; monomials are partitions.
class DiffPoly {
 public:
  using Terms = std::map<Partition, Rational>;  // ascending grevlex

  DiffPoly() = default;
  static DiffPoly monomial(const Partition& p, const Rational& c = 1);
  // L_{-n}
  static DiffPoly generator(long n);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(const Partition& p) const;
  // Common weight, unset for zero; throws InvalidArgument if inhomogeneous.
  std::optional<long> weight() const;

  void add(const Partition& p, const Rational& c);
  DiffPoly& operator+=(const DiffPoly& o);
  DiffPoly& operator-=(const DiffPoly& o);
  DiffPoly& operator*=(const Rational& s);
  friend DiffPoly operator+(DiffPoly a, const DiffPoly& b) { return a += b; }
  friend DiffPoly operator-(DiffPoly a, const DiffPoly& b) { return a -= b; }
  friend DiffPoly operator*(DiffPoly a, const Rational& s) { return a *= s; }
  friend DiffPoly operator*(const Rational& s, DiffPoly a) { return a *= s; }
  friend DiffPoly operator*(const DiffPoly& a, const DiffPoly& b);
  friend bool operator==(const DiffPoly& a, const DiffPoly& b) { return a.terms_ == b.terms_; }

  // L_mu * f
  DiffPoly times(const Partition& mu) const;

 private:
  Terms terms_;
};

// The derivation with d L_{-n} = (n-1) L_{-n-1}.
DiffPoly derive(const DiffPoly& f);
// d^n f / n!
DiffPoly divided_derivative(const DiffPoly& f, long n);
// Throws ZeroPolynomial.
Partition leading_monomial(const DiffPoly& f);
Rational leading_coefficient(const DiffPoly& f);

std::string to_string(const DiffPoly& f);
nlohmann::json to_json(const DiffPoly& f);
DiffPoly diffpoly_from_json(const nlohmann::json& j);

// a = L_{-2}^3 and b = L_{-4}L_{-3}L_{-2} + (1/6) L_{-5}L_{-2}^2.
DiffPoly gen_a();
DiffPoly gen_b();
// L_{-2}^s
DiffPoly power_of_L2(long s);
// The (3, p') analogs: L_{-2}^{p'-1} and the degree 2p'+1 element.
DiffPoly gen_a_3(long pp);
DiffPoly gen_b_3(long pp);

// Divided derivatives of one generator, computed on demand.
class DerivativeCache {
 public:
  explicit DerivativeCache(DiffPoly g) : d_{std::move(g)} {}
  const DiffPoly& operator[](long k);

 private:
  std::deque<DiffPoly> d_;  // references stay valid as it grows
};

// Weight-d component of the differential ideal generated by gens, as a
// row-echelon basis over the weight-d monomials in descending grevlex.
struct IdealSlice {
  long weight = 0;
  std::vector<Partition> columns;  // descending grevlex; column 0 is the largest
  // Pivot column -> row with leading entry 1; entries (column, value) ascending column.
  std::map<long, std::vector<std::pair<long, Rational>>> rows;
  long spanning_rows = 0;

  long rank() const { return static_cast<long>(rows.size()); }
  long dimension() const { return static_cast<long>(columns.size()); }
  // Leading monomials of the ideal in this weight, descending grevlex.
  std::vector<Partition> leading_monomials() const;
  // f homogeneous of this weight (or zero).
  bool contains(const DiffPoly& f) const;
};

IdealSlice ideal_slice(const std::vector<DiffPoly>& gens, long d);

// sum_{d <= N} (monomials of weight d - dim I_d) q^d, known mod q^{N+1}.
QSeries hilbert_quotient(const std::vector<DiffPoly>& gens, long N);

bool membership(const DiffPoly& f, const std::vector<DiffPoly>& gens);

}  // namespace iwb::diff
