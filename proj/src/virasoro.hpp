#pragma once

#include <map>
#include <vector>

#include <json.hpp>

#include "characters.hpp"
#include "diffalg.hpp"
#include "report.hpp"

namespace iwb::vir {

// Vector in the vacuum module Vir^c, in the PBW basis L_{-n1}...L_{-nm}|0>,
// n1 >= ... >= nm >= 2. Normal ordering removes every L_{-1}.
class VirVector {
 public:
  explicit VirVector(Rational c = 0) : c_(std::move(c)) {}
  VirVector(Rational c, diff::DiffPoly v) : c_(std::move(c)), v_(std::move(v)) {}
  static VirVector vacuum(const Rational& c) { return VirVector(c, diff::DiffPoly::monomial(Partition())); }
  static VirVector monomial(const Rational& c, const Partition& p, const Rational& k = 1) {
    return VirVector(c, diff::DiffPoly::monomial(p, k));
  }

  const Rational& central_charge() const { return c_; }
  const diff::DiffPoly& poly() const { return v_; }
  const diff::DiffPoly::Terms& terms() const { return v_.terms(); }
  bool is_zero() const { return v_.is_zero(); }
  Rational coeff(const Partition& p) const { return v_.coeff(p); }
  std::optional<long> degree() const { return v_.weight(); }

  VirVector& operator+=(const VirVector& o);
  VirVector& operator-=(const VirVector& o);
  VirVector& operator*=(const Rational& s);
  friend VirVector operator+(VirVector a, const VirVector& b) { return a += b; }
  friend VirVector operator-(VirVector a, const VirVector& b) { return a -= b; }
  friend VirVector operator*(const Rational& s, VirVector a) { return a *= s; }
  friend bool operator==(const VirVector& a, const VirVector& b) { return a.c_ == b.c_ && a.v_ == b.v_; }

 private:
  Rational c_;
  diff::DiffPoly v_;
};

std::string to_string(const VirVector& v);
nlohmann::json to_json(const VirVector& v);
VirVector virvector_from_json(const nlohmann::json& j);

// L_m v, normal ordered with [L_m, L_n] = (m-n) L_{m+n} + (m^3-m)/12 delta_{m,-n} c.
VirVector apply_mode(long m, const VirVector& v);
// Right to left: word {m1, m2} gives L_{m1} L_{m2} v.
VirVector apply_word(const std::vector<long>& word, const VirVector& v);

bool singular_vector_check(const VirVector& v, const std::vector<long>& positive_modes = {1, 2});

// Degree (p-1)(p'-1) vector killed by L_1, L_2 at c_{p,p'}, with L_{-2}^s coefficient 1.
// Throws NoSolution / NonUniqueSolution.
VirVector solve_singular_vector(const chars::MinimalModel& label);

// The vector as printed for (3,4): L_{-2}^3 + 93/64 L_{-3}^2 - 27/16 L_{-6} - 33/8 L_{-4}L_{-2}.
VirVector printed_v34();

// dim of Vir_{p,p'} in degrees 0..N.
std::vector<long> quotient_graded_dims(const chars::MinimalModel& label, long N);

// Solved v_{3,4} against the printed coefficients.
CheckItems singular_vector_report();
// The degree 9 identity for w_{3,4} = L_{-5}L_{-2}^2 + 6 L_{-4}L_{-3}L_{-2}.
CheckItems lemma_b_check();
// The image of f in gr_F Vir_{p,p'} is zero (f homogeneous).
bool symbol_vanishes(const chars::MinimalModel& label, const diff::DiffPoly& f);
// Lowest piece of ker(C[L]/(L_{-2}^{p'-1}) -> gr Vir_{3,p'}) is spanned by b^{(p')}.
CheckItems lemma_bp_check(long pp);

}  // namespace iwb::vir
