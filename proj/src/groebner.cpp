#include "groebner.hpp"

#include <algorithm>
#include <mutex>
#include <set>

#include "characters.hpp"

namespace iwb::diff {
namespace {

// c_0 k^n + c_1 k^{n-1} + ... + c_n
Rational horner(std::initializer_list<long> coeffs, long k) {
  Rational v = 0;
  for (long c : coeffs) v = v * k + c;
  return v;
}

Partition L(std::initializer_list<long> parts) { return Partition(std::vector<long>(parts)); }

IdealCombination da(long n, const Rational& c = 1) { return IdealCombination::derivative(0, n, c); }
IdealCombination db(long n, const Rational& c = 1) { return IdealCombination::derivative(1, n, c); }

IdealCombination r(long k) { return db(3 * k + 1) - horner({19, 55, 48, 12}, k) / 6 * da(3 * k + 4); }
IdealCombination s(long k) { return db(3 * k + 2) - horner({19, 74, 91, 36}, k) / 6 * da(3 * k + 5); }
IdealCombination t(long k) { return db(3 * k) - horner({19, 36, 17, 0}, k) / 6 * da(3 * k + 3); }

IdealCombination u(long k) {
  if (k == 0) return Rational(8) * t(0).times(L({5})) - Rational(6) * t(1).times(L({2}));
  const long j = k - 1;
  return Rational(2 * j + 10) * t(j + 1).times(L({6 + j})) - Rational(2 * j + 8) * t(j + 2).times(L({3 + j})) -
         frac((2 * j + 10) * (3 * j + 20), 3) * da(3 * j + 10).times(L({2 + j}));
}

IdealCombination v(long k) {
  return horner({11, 318, 3061, 9426}, k) * t(k + 2).times(L({2 + k})) -
         horner({7, 90, 349, 370}, k) * s(k).times(L({6 + k})) -
         horner({11, 191, 1029, 1745}, k) * s(k + 1).times(L({3 + k})) -
         8 * horner({1, 19, 121, 255}, k) * r(k + 1).times(L({4 + k})) +
         horner({35, 709, 5075, 14763, 13690}, k) / 3 * da(3 * k + 5).times(L({6 + k})) +
         Rational(8, 3) * horner({1, 26, 254, 1102, 1785}, k) * da(3 * k + 8).times(L({3 + k}));
}

IdealCombination w(long k) {
  return Rational(k + 2) * r(k).times(L({6 + k})) - Rational(k + 6) * s(k + 1).times(L({2 + k}));
}

IdealCombination y(long j) {
  if (j == 0)
    return Rational(42) * r(0).times(L({5})) - da(7, 84).times(L({2})) - Rational(12) * r(1).times(L({2})) +
           Rational(108) * t(0).times(L({6}));
  if (j == 1)
    return Rational(-640) * r(1).times(L({6})) + Rational(2584) * r(2).times(L({3})) -
           Rational(4480) * s(1).times(L({5})) + Rational(81856, 3) * s(2).times(L({2})) +
           Rational(1216) * t(1).times(L({7})) - Rational(10304) * t(2).times(L({4})) +
           da(6, 72128).times(L({7})) + da(7, Rational(112000, 3)).times(L({6}));
  const long k = j - 2;
  return 2 * horner({-1, -23, -189, -657, -810}, k) * r(k + 2).times(L({7 + k})) +
         horner({-7, -162, -1129, -2198, 1360}, k) * r(k + 3).times(L({4 + k})) -
         4 * horner({1, 28, 289, 1302, 2160}, k) * s(k + 2).times(L({6 + k})) +
         16 * horner({13, 384, 3849, 14962, 16600}, k) / (k + 4) * s(k + 3).times(L({3 + k})) -
         horner({5, 162, 1911, 7850, 4880}, k) * t(k + 2).times(L({8 + k})) -
         horner({7, 207, 2265, 10841, 19080}, k) * t(k + 3).times(L({5 + k})) +
         da(3 * k + 9, horner({21, 691, 8865, 55173, 165650, 190800}, k)).times(L({8 + k})) -
         da(3 * k + 15, 2 * horner({1, 47, 901, 8393, 37218, 62640}, k)).times(L({2 + k})) +
         da(3 * k + 10, Rational(2, 3) * horner({9, 311, 4253, 28769, 96258, 127440}, k)).times(L({7 + k}));
}

IdealCombination z(long k) {
  return Rational(k + 6) * y(k + 2).times(L({2 + k})) -
         32 * horner({4, 165, 2427, 14184, 27440}, k) * r(k).times(L({8 + k, 7 + k}));
}

IdealCombination e(int i) {
  switch (i) {
    case 1: return Rational(3) * s(0).times(L({2})) - da(2).times(L({5}));
    case 2:
      return y(0).times(L({6})) + da(11, 384).times(L({2, 2})) - Rational(832) * s(2).times(L({2, 2})) -
             Rational(12) * u(0).times(L({7}));
    case 3:
      return Rational(432) * w(1).times(L({2})) + db(0, 11520).times(L({7, 6})) + Rational(73) * y(0).times(L({7})) +
             da(2, 53088).times(L({7, 7}));
    case 4:
      return u(0).times(L({9, 8})) + da(2, 8).times(L({9, 8, 6})) + Rational(112, 1415040) * y(3).times(L({2, 2}));
  }
  throw Error(Status::InvalidArgument, "no such exceptional element");
}

std::string derivative_name(long n, char g) { return "d^(" + std::to_string(n) + ")" + g; }

}  // namespace

IdealCombination IdealCombination::derivative(int gen, long order, const Rational& c) {
  if (gen != 0 && gen != 1) throw Error(Status::InvalidArgument, "generator index must be 0 or 1");
  if (order < 0) throw Error(Status::InvalidArgument, "derivative order must be >= 0");
  IdealCombination x;
  if (c != 0) x.terms_.push_back({Partition(), gen, order, c});
  return x;
}

IdealCombination& IdealCombination::operator+=(const IdealCombination& o) {
  terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
  return *this;
}

IdealCombination& IdealCombination::operator-=(const IdealCombination& o) {
  for (auto t : o.terms_) {
    t.coeff = -t.coeff;
    terms_.push_back(std::move(t));
  }
  return *this;
}

IdealCombination& IdealCombination::operator*=(const Rational& sc) {
  if (sc == 0) terms_.clear();
  for (auto& t : terms_) t.coeff *= sc;
  return *this;
}

IdealCombination IdealCombination::times(const Partition& mu) const {
  IdealCombination x = *this;
  for (auto& t : x.terms_) t.mult = t.mult * mu;
  return x;
}

DiffPoly IdealCombination::evaluate() const {
  static DerivativeCache cache_a(gen_a()), cache_b(gen_b() * 6);
  static std::mutex mu;
  DiffPoly out;
  for (const auto& t : terms_) {
    const DiffPoly* dp;
    {
      std::lock_guard lock(mu);
      dp = t.gen == 0 ? &cache_a[t.order] : &cache_b[t.order];
    }
    const DiffPoly& d = *dp;
    for (const auto& [p, c] : d.terms()) out.add(t.mult * p, c * t.coeff);
  }
  return out;
}

const char* name(Element e) {
  switch (e) {
    case Element::r: return "r";
    case Element::s: return "s";
    case Element::t: return "t";
    case Element::u: return "u";
    case Element::v: return "v";
    case Element::w: return "w";
    case Element::y: return "y";
    case Element::z: return "z";
    case Element::e1: return "e1";
    case Element::e2: return "e2";
    case Element::e3: return "e3";
    case Element::e4: return "e4";
  }
  return "?";
}

bool element_is_indexed(Element e) {
  return !(e == Element::e1 || e == Element::e2 || e == Element::e3 || e == Element::e4);
}

IdealCombination build_element(Element el, long k) {
  if (element_is_indexed(el) && k < 0) throw Error(Status::InvalidArgument, "element index must be >= 0");
  switch (el) {
    case Element::r: return r(k);
    case Element::s: return s(k);
    case Element::t: return t(k);
    case Element::u: return u(k);
    case Element::v: return v(k);
    case Element::w: return w(k);
    case Element::y: return y(k);
    case Element::z: return z(k);
    case Element::e1: return e(1);
    case Element::e2: return e(2);
    case Element::e3: return e(3);
    case Element::e4: return e(4);
  }
  throw Error(Status::InvalidArgument, "unknown element");
}

DiffPoly element_poly(Element e, long k) { return build_element(e, k).evaluate(); }

std::vector<PatternInstance> pattern_instances(long k_max) {
  std::vector<PatternInstance> out;
  auto add_a = [&](std::string fam, long idx, std::vector<long> parts, long n) {
    out.push_back({std::move(fam), idx, Partition(std::move(parts)), derivative_name(n, 'a'), std::nullopt, 0, n});
  };
  auto add_e = [&](std::string fam, long idx, std::vector<long> parts, Element el, long k) {
    std::string label = std::string(name(el)) + (element_is_indexed(el) ? "_" + std::to_string(k) : "");
    out.push_back({std::move(fam), idx, Partition(std::move(parts)), std::move(label), el, k, -1});
  };
  for (long i = 0; i <= k_max; ++i) {
    const long p = 2 + i;
    add_a("[p,p,p]", i, {p, p, p}, 3 * p - 6);
    add_a("[p+1,p,p]", i, {p + 1, p, p}, 3 * p - 5);
    add_a("[p+1,p+1,p]", i, {p + 1, p + 1, p}, 3 * p - 4);
    add_e("[p+2,p+1,p]", i, {p + 2, p + 1, p}, Element::t, i);
    add_e("[p+2,p+2,p]", i, {p + 2, p + 2, p}, Element::r, i);
    add_e("[p+2,p,p]", i, {p + 3, p + 1, p + 1}, Element::s, i);
    add_e("[p+3,p+3,p,p]", i, {p + 3, p + 3, p, p}, Element::u, i);
    add_e("[p+4,p+3,p,p]", i, {p + 4, p + 3, p, p}, Element::y, i);
    add_e("[p+4,p+3,p+1,p]", i, {p + 4, p + 3, p + 1, p}, Element::w, i);
    add_e("[p+4,p+4,p+1,p]", i, {p + 4, p + 4, p + 1, p}, Element::v, i);
    add_e("[p+6,p+5,p+3,p+1,p]", i, {p + 6, p + 5, p + 3, p + 1, p}, Element::z, i);
  }
  add_e("exceptional", 0, {5, 4, 2, 2}, Element::e1, 0);
  add_e("exceptional", 0, {7, 6, 4, 2, 2}, Element::e2, 0);
  add_e("exceptional", 0, {7, 7, 4, 2, 2}, Element::e3, 0);
  add_e("exceptional", 0, {9, 8, 6, 4, 2, 2}, Element::e4, 0);
  return out;
}

CheckItems verify_derivative_formulas(long k_max) {
  struct Top {
    std::vector<long> parts;  // at k = 0
    std::vector<long> poly;   // coefficient polynomial in k, highest first
    long den;
  };
  struct Formula {
    const char* label;
    int gen;
    long shift;      // derivative order 3k + shift
    Rational scale;  // left-hand side is scale * d^(n) g
    std::vector<Top> tops;
  };
  const std::vector<Formula> formulas = {
      {"d^(3k+9)a", 0, 9, 1,
       {{{5, 5, 5}, {1}, 1}, {{6, 5, 4}, {6}, 1}, {{6, 6, 3}, {3}, 1}, {{7, 4, 4}, {3}, 1}, {{7, 5, 3}, {6}, 1},
        {{7, 6, 2}, {6}, 1}}},
      {"(1/3) d^(3k+10)a", 0, 10, Rational(1, 3),
       {{{6, 5, 5}, {1}, 1}, {{6, 6, 4}, {1}, 1}, {{7, 5, 4}, {2}, 1}, {{7, 6, 3}, {2}, 1}, {{7, 7, 2}, {1}, 1},
        {{8, 4, 4}, {1}, 1}, {{8, 5, 3}, {2}, 1}, {{8, 6, 2}, {2}, 1}}},
      {"(1/3) d^(3k+11)a", 0, 11, Rational(1, 3),
       {{{6, 6, 5}, {1}, 1}, {{7, 5, 5}, {1}, 1}, {{7, 6, 4}, {2}, 1}, {{7, 7, 3}, {1}, 1}, {{8, 5, 4}, {2}, 1},
        {{8, 6, 3}, {2}, 1}, {{8, 7, 2}, {2}, 1}}},
      {"d^(3k+6)b", 1, 6, 1,
       {{{5, 5, 5}, {19, 150, 389, 330}, 6},
        {{6, 5, 4}, {19, 150, 391, 340}, 1},
        {{6, 6, 3}, {19, 150, 395, 376}, 2},
        {{7, 4, 4}, {19, 150, 395, 344}, 2},
        {{7, 5, 3}, {19, 150, 397, 370}, 1},
        {{7, 6, 2}, {19, 150, 403, 448}, 1}}},
      {"d^(3k+7)b", 1, 7, 1,
       {{{6, 5, 5}, {19, 169, 496, 480}, 2},
        {{6, 6, 4}, {19, 169, 498, 496}, 2},
        {{7, 5, 4}, {19, 169, 500, 496}, 1},
        {{7, 6, 3}, {19, 169, 504, 544}, 1},
        {{7, 7, 2}, {19, 169, 512, 640}, 2},
        {{8, 4, 4}, {19, 169, 506, 496}, 2},
        {{8, 5, 3}, {19, 169, 508, 528}, 1},
        {{8, 6, 2}, {19, 169, 514, 624}, 1}}},
      {"d^(3k+8)b", 1, 8, 1,
       {{{6, 6, 5}, {19, 188, 615, 666}, 2},
        {{7, 5, 5}, {19, 188, 617, 672}, 2},
        {{7, 6, 4}, {19, 188, 619, 694}, 1},
        {{7, 7, 3}, {19, 188, 625, 760}, 2},
        {{8, 5, 4}, {19, 188, 623, 690}, 1},
        {{8, 6, 3}, {19, 188, 627, 750}, 1},
        {{8, 7, 2}, {19, 188, 635, 870}, 1}}},
  };

  DerivativeCache ca(gen_a()), cb(gen_b() * 6);
  CheckItems out;
  for (const auto& f : formulas) {
    for (long k = 0; k <= k_max; ++k) {
      const long n = 3 * k + f.shift;
      DiffPoly lhs = (f.gen == 0 ? ca[n] : cb[n]) * f.scale;
      CheckItem item{std::string(f.label) + " at k=" + std::to_string(k), true, "top terms match"};
      std::set<Partition> listed;
      for (const auto& top : f.tops) {
        std::vector<long> parts = top.parts;
        for (auto& x : parts) x += k;
        Partition mono(parts);
        listed.insert(mono);
        Rational expect = 0;
        for (long c : top.poly) expect = expect * k + c;
        expect /= top.den;
        Rational got = lhs.coeff(mono);
        if (got != expect && item.passed) {
          item.passed = false;
          item.detail = "coefficient of L" + to_string(mono) + ": " + iwb::to_string(got) + " vs printed " +
                        iwb::to_string(expect);
        }
      }
      // Everything above the smallest listed monomial must be listed.
      const Partition& floor_mono = *listed.begin();
      for (auto it = lhs.terms().upper_bound(floor_mono); it != lhs.terms().end() && item.passed; ++it)
        if (!listed.count(it->first)) {
          item.passed = false;
          item.detail = "unlisted monomial L" + to_string(it->first) + " above the listed terms";
        }
      out.push_back(std::move(item));
    }
  }
  return out;
}

const IdealSlice& SliceCache::at(long d) {
  auto it = cache_.find(d);
  if (it == cache_.end()) it = cache_.emplace(d, ideal_slice(gens_, d)).first;
  return it->second;
}

CheckItems prop51_check(const Prop51Options& opt, SliceCache& slices) {
  CheckItems out;
  DerivativeCache ca(gen_a());
  for (const auto& inst : pattern_instances(opt.k_max)) {
    if (inst.index > opt.k_max) continue;
    DiffPoly f;
    bool certified = true;
    if (inst.kind) {
      IdealCombination comb = build_element(*inst.kind, inst.element_k);
      f = comb.evaluate();
    } else {
      f = ca[inst.a_order];
    }
    CheckItem item{inst.family + " k=" + std::to_string(inst.index) + ": L" + to_string(inst.target) + " <- " +
                       inst.element,
                   true, ""};
    const long wt = inst.target.weight();
    if (f.is_zero()) {
      item.passed = false;
      item.detail = "element is zero";
      out.push_back(std::move(item));
      continue;
    }
    Partition lm = leading_monomial(f);
    bool slice_checked = wt <= opt.slice_limit;
    std::string membership = slice_checked ? "member of I_" + std::to_string(wt) + " by slice reduction"
                                           : "member by its expression in derivatives of a and b";
    if (slice_checked && !slices.at(wt).contains(f)) {
      certified = false;
      membership = "NOT in the slice I_" + std::to_string(wt);
    }
    if (lm == inst.target) {
      item.passed = certified;
      item.detail = "LM matches; " + membership;
    } else {
      // The printed combination misses; fall back to the slice pivots.
      std::string miss = "printed combination has LM L" + to_string(lm) + " (LeadingMonomialMismatch)";
      if (slice_checked) {
        auto lms = slices.at(wt).leading_monomials();
        bool pivot = std::find(lms.begin(), lms.end(), inst.target) != lms.end();
        item.passed = pivot && certified;
        item.detail = miss + "; target " + (pivot ? "is" : "is NOT") + " a leading monomial of I_" +
                      std::to_string(wt) + " by slice reduction";
      } else {
        item.passed = false;
        item.detail = miss + "; weight " + std::to_string(wt) + " is beyond the slice limit";
      }
    }
    out.push_back(std::move(item));
  }
  return out;
}

GroebnerSummary groebner_check(long N, SliceCache& slices) {
  std::vector<Partition> listed, w_lms;
  {
    DerivativeCache ca(gen_a());
    for (long n = 0; 6 + n <= N; ++n) listed.push_back(leading_monomial(ca[n]));
  }
  // Weights: r 10+3k, s 11+3k, t 9+3k, u 14+4k, v 17+4k, w 16+4k, y 15+4k, z 25+5k.
  auto add_family = [&](Element el, long base, long step, std::vector<Partition>& into) {
    for (long k = 0; base + step * k <= N; ++k) into.push_back(leading_monomial(element_poly(el, k)));
  };
  add_family(Element::r, 10, 3, listed);
  add_family(Element::s, 11, 3, listed);
  add_family(Element::t, 9, 3, listed);
  add_family(Element::u, 14, 4, listed);
  add_family(Element::v, 17, 4, listed);
  add_family(Element::y, 15, 4, listed);
  add_family(Element::z, 25, 5, listed);
  add_family(Element::w, 16, 4, w_lms);
  const std::pair<Element, long> ex[] = {{Element::e1, 13}, {Element::e2, 21}, {Element::e3, 22}, {Element::e4, 31}};
  for (const auto& [el, wt] : ex)
    if (wt <= N) listed.push_back(leading_monomial(element_poly(el, 0)));

  auto covered = [](const Partition& m, const std::vector<Partition>& lms) {
    for (const auto& l : lms)
      if (l.weight() <= m.weight() && contains(m, l)) return true;
    return false;
  };

  GroebnerSummary out;
  for (long d = 0; d <= N; ++d) {
    auto pivots = slices.at(d).leading_monomials();
    std::set<Partition> pivot_set(pivots.begin(), pivots.end());
    std::vector<Partition> missing, extra;
    for (const auto& m : partitions_min2(d)) {
      bool by_listed = covered(m, listed);
      bool by_w = covered(m, w_lms);
      if (!by_listed && by_w) out.w_only.push_back(m);
      bool claimed = by_listed || by_w;
      bool is_pivot = pivot_set.count(m) > 0;
      if (is_pivot && !claimed) missing.push_back(m);
      if (!is_pivot && claimed) extra.push_back(m);
    }
    CheckItem item{"weight " + std::to_string(d) + ": pivots = closure of claimed leading monomials",
                   missing.empty() && extra.empty(), std::to_string(pivots.size()) + " pivots"};
    if (!missing.empty()) item.detail += "; pivot not covered: L" + to_string(missing.front());
    if (!extra.empty()) item.detail += "; covered but not a pivot: L" + to_string(extra.front());
    out.items.push_back(std::move(item));
  }
  std::string w_detail;
  if (out.w_only.empty()) {
    w_detail = "every w_k leading monomial is already generated by the listed elements";
  } else {
    w_detail = std::to_string(out.w_only.size()) + " monomials need w_k, first L" + to_string(out.w_only.front());
  }
  out.items.push_back({"w_k coverage", true, w_detail});
  return out;
}

CheckItems exceptional_membership_check(SliceCache& slices) {
  CheckItems out;
  DerivativeCache ca(gen_a()), cb(gen_b() * 6);
  // Plain (undivided) derivatives: d^2 = 2 d^(2).
  DiffPoly combo = (Rational(3) * cb[2] * 2).times(L({2})) - (Rational(18) * cb[0]).times(L({4})) -
                   (Rational(19) * ca[2] * 2).times(L({5})) - (Rational(88) * ca[1]).times(L({6})) -
                   (Rational(60) * ca[0]).times(L({7}));
  combo *= Rational(1, 204);
  DiffPoly target = DiffPoly::monomial(L({5, 4, 2, 2}));
  out.push_back({"L[5,4,2,2] equals the displayed combination", combo == target,
                 combo == target ? "exact" : "combination is " + to_string(combo)});
  for (const auto& parts : {std::vector<long>{5, 4, 2, 2}, std::vector<long>{7, 6, 4, 2, 2},
                            std::vector<long>{9, 8, 6, 4, 2, 2}, std::vector<long>{7, 7, 4, 2, 2}}) {
    Partition p(parts);
    bool in = slices.at(p.weight()).contains(DiffPoly::monomial(p));
    out.push_back({"L" + to_string(p) + " in I", true, in ? "yes" : "no"});
  }
  return out;
}

GapReport strict_gap(long pp, long N) {
  GapReport rep;
  std::vector<DiffPoly> gens{gen_a_3(pp), gen_b_3(pp)};
  QSeries h = hilbert_quotient(gens, N);
  QSeries chi = chars::feigin_fuchs_character(chars::MinimalModel(3, pp), N + 1);
  bool dominates = true;
  for (long d = 0; d <= N; ++d) {
    Rational x = h.coeff(d), c = chi.coeff(d);
    if (x < c) dominates = false;
    if (x > c && !rep.first_strict) rep.first_strict = d;
  }
  rep.items.push_back({"quotient dominates the character coefficientwise up to q^" + std::to_string(N), dominates,
                       dominates ? "yes" : "no"});
  rep.items.push_back({"first strict excess", true,
                       rep.first_strict ? "at weight " + std::to_string(*rep.first_strict)
                                        : "none up to weight " + std::to_string(N)});
  return rep;
}

}  // namespace iwb::diff
