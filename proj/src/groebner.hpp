#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "diffalg.hpp"

namespace iwb::diff {

// sum_i c_i L_{mu_i} d^{(n_i)} g_i with g_0 = a and g_1 = 6b =
// L_{-5}L_{-2}^2 + 6 L_{-4}L_{-3}L_{-2}: an element of (a, b)_d together
// with the expression that proves it.
class IdealCombination {
 public:
  struct Term {
    Partition mult;
    int gen = 0;  // 0: a, 1: 6b
    long order = 0;
    Rational coeff;
  };

  static IdealCombination derivative(int gen, long order, const Rational& c = 1);

  const std::vector<Term>& terms() const { return terms_; }
  IdealCombination& operator+=(const IdealCombination& o);
  IdealCombination& operator-=(const IdealCombination& o);
  IdealCombination& operator*=(const Rational& s);
  friend IdealCombination operator+(IdealCombination x, const IdealCombination& y) { return x += y; }
  friend IdealCombination operator-(IdealCombination x, const IdealCombination& y) { return x -= y; }
  friend IdealCombination operator*(const Rational& s, IdealCombination x) { return x *= s; }
  IdealCombination times(const Partition& mu) const;

  DiffPoly evaluate() const;

 private:
  std::vector<Term> terms_;
};

enum class Element { r, s, t, u, v, w, y, z, e1, e2, e3, e4 };
const char* name(Element e);
bool element_is_indexed(Element e);
// The combination as printed; k is ignored for e1..e4.
IdealCombination build_element(Element e, long k);
DiffPoly element_poly(Element e, long k);

// The pattern families and the element claimed to have each as leading monomial.
struct PatternInstance {
  std::string family;     // e.g. "[p+2,p+1,p]"
  long index = 0;         // family index k = p - p_min
  Partition target;
  std::string element;    // e.g. "t_0", "d^(6)a"
  // Build the element.
  std::optional<Element> kind;
  long element_k = 0;
  long a_order = -1;  // >= 0: the element is d^(a_order) a
};
std::vector<PatternInstance> pattern_instances(long k_max);

// Coefficients of the top monomials of d^(n) a and d^(n) (6b) against the
// closed forms in k, for 0 <= k <= k_max.
CheckItems verify_derivative_formulas(long k_max);

// Caches slices of (a, b)_d by weight.
class SliceCache {
 public:
  explicit SliceCache(std::vector<DiffPoly> gens) : gens_(std::move(gens)) {}
  const IdealSlice& at(long d);

 private:
  std::vector<DiffPoly> gens_;
  std::map<long, IdealSlice> cache_;
};

struct Prop51Options {
  long k_max = 5;
  long slice_limit = 40;  // weights above this rely on the combination alone
};
CheckItems prop51_check(const Prop51Options& opt, SliceCache& slices);

// Pivot sets against the divisibility closure of the leading monomials of
// d^(k)a, r, s, t, u, v, y, z, e1..e4; w is tracked separately.
struct GroebnerSummary {
  CheckItems items;
  std::vector<Partition> w_only;  // monomials covered only through some w_k
};
GroebnerSummary groebner_check(long N, SliceCache& slices);

// The combination L_{-5}L_{-4}L_{-2}^2 = (1/204)(3 L_{-2} d^2 b - 18 L_{-4} b
// - 19 L_{-5} d^2 a - 88 L_{-6} d a - 60 L_{-7} a) and membership of the
// exceptional monomials.
CheckItems exceptional_membership_check(SliceCache& slices);

// Quotient by (L_{-2}^{p'-1}, b^{(p')})_d against the Vir(3, p') character.
struct GapReport {
  CheckItems items;
  std::optional<long> first_strict;  // first weight where the quotient is larger
};
GapReport strict_gap(long pp, long N);

}  // namespace iwb::diff
