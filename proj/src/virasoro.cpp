#include "virasoro.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <sstream>

#include "error.hpp"

namespace iwb::vir {

using diff::DiffPoly;
using Terms = DiffPoly::Terms;

namespace {

void require_same_c(const Rational& a, const Rational& b) {
  if (a != b) throw Error(Status::InvalidArgument, "central charges differ");
}

// Memoized L_m on PBW monomials at fixed c.
class Engine {
 public:
  explicit Engine(Rational c) : c_(std::move(c)) {}

  const Terms& act(long m, const Partition& mono) {
    auto key = std::make_pair(m, mono);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    Terms res = compute(m, mono);
    return memo_.emplace(std::move(key), std::move(res)).first->second;
  }

  DiffPoly apply(long m, const DiffPoly& v) {
    DiffPoly out;
    for (const auto& [mono, k] : v.terms())
      for (const auto& [r, k2] : act(m, mono)) out.add(r, k * k2);
    return out;
  }

 private:
  static void accumulate(Terms& t, const Partition& p, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = t.emplace(p, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) t.erase(it);
    }
  }

  Terms compute(long m, const Partition& mono) {
    Terms res;
    long deg = mono.weight();
    if (m == 0) {
      if (deg != 0) res.emplace(mono, Rational(deg));
      return res;
    }
    if (m > deg) return res;
    if (mono.empty()) {
      if (m <= -2) res.emplace(Partition({-m}), Rational(1));
      return res;
    }
    long n = mono[0];
    if (-m >= n) {
      std::vector<long> parts{-m};
      parts.insert(parts.end(), mono.parts().begin(), mono.parts().end());
      res.emplace(Partition(std::move(parts)), Rational(1));
      return res;
    }
    Partition rest(std::vector<long>(mono.parts().begin() + 1, mono.parts().end()));
    // L_m L_{-n} X = L_{-n} L_m X + (m+n) L_{m-n} X + delta_{m,n} (m^3-m)/12 c X
    Terms inner = act(m, rest);
    for (const auto& [x, k] : inner) {
      Terms moved = act(-n, x);
      for (const auto& [y, k2] : moved) accumulate(res, y, k * k2);
    }
    if (m + n != 0) {
      Terms comm = act(m - n, rest);
      for (const auto& [y, k] : comm) accumulate(res, y, Rational(m + n) * k);
    }
    if (m == n) accumulate(res, rest, frac(m * m * m - m, 12) * c_);
    return res;
  }

  Rational c_;
  std::map<std::pair<long, Partition>, Terms> memo_;
};

// Echelon basis of a subspace, rows keyed by leading monomial.
class Span {
 public:
  DiffPoly reduce(DiffPoly f) const {
    for (const auto& [p, row] : rows_) {
      Rational k = f.coeff(p);
      if (k != 0) f -= row * k;
    }
    return f;
  }
  // The reduced, normalized new row, or zero if f was already in the span.
  DiffPoly insert(const DiffPoly& f) {
    DiffPoly r = reduce(f);
    if (r.is_zero()) return r;
    r *= 1 / diff::leading_coefficient(r);
    rows_.emplace(diff::leading_monomial(r), r);
    return r;
  }
  long rank() const { return static_cast<long>(rows_.size()); }
  bool contains(const DiffPoly& f) const { return reduce(f).is_zero(); }

 private:
  std::map<Partition, DiffPoly, std::greater<>> rows_;
};

// Basis of the nullspace of a dense matrix.
std::vector<std::vector<Rational>> nullspace(std::vector<std::vector<Rational>> a, std::size_t ncols) {
  std::vector<long> pivot_col;
  std::size_t r = 0;
  for (std::size_t col = 0; col < ncols && r < a.size(); ++col) {
    std::size_t piv = r;
    while (piv < a.size() && a[piv][col] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[r]);
    Rational inv = 1 / a[r][col];
    for (auto& x : a[r]) x *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][col] == 0) continue;
      Rational f = a[i][col];
      for (std::size_t j = 0; j < ncols; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_col.push_back(static_cast<long>(col));
    ++r;
  }
  std::vector<bool> is_pivot(ncols, false);
  for (long c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(ncols, Rational(0));
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -a[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

// Degree slices 0..N of the submodule generated by v.
std::vector<Span> submodule_spans(Engine& eng, const DiffPoly& v, long N) {
  std::vector<Span> spans(N + 1);
  long d = *v.weight();
  if (d > N) return spans;
  std::deque<std::pair<long, DiffPoly>> work;
  work.emplace_back(d, spans[d].insert(v));
  while (!work.empty()) {
    auto [e, x] = std::move(work.front());
    work.pop_front();
    for (long m = -(N - e); m <= e - d; ++m) {
      if (m == 0) continue;
      DiffPoly y = eng.apply(m, x);
      if (y.is_zero()) continue;
      DiffPoly row = spans[e - m].insert(y);
      if (!row.is_zero()) work.emplace_back(e - m, std::move(row));
    }
  }
  return spans;
}

DiffPoly lemma_w() {
  return DiffPoly::monomial(Partition({5, 2, 2})) + DiffPoly::monomial(Partition({4, 3, 2}), 6);
}

CheckItem item(std::string name, bool ok, std::string detail = {}) {
  return CheckItem{std::move(name), ok, std::move(detail)};
}

}  // namespace

VirVector& VirVector::operator+=(const VirVector& o) {
  require_same_c(c_, o.c_);
  v_ += o.v_;
  return *this;
}

VirVector& VirVector::operator-=(const VirVector& o) {
  require_same_c(c_, o.c_);
  v_ -= o.v_;
  return *this;
}

VirVector& VirVector::operator*=(const Rational& s) {
  v_ *= s;
  return *this;
}

std::string to_string(const VirVector& v) {
  if (v.is_zero()) return "0";
  return iwb::diff::to_string(v.poly()) + " |0>";
}

nlohmann::json to_json(const VirVector& v) {
  nlohmann::json j = iwb::diff::to_json(v.poly());
  j["c"] = iwb::to_string(v.central_charge());
  return j;
}

VirVector virvector_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("c")) throw Error(Status::ParseError, "VirVector needs a \"c\" field");
  return VirVector(parse_rational(j.at("c").get<std::string>()), diff::diffpoly_from_json(j));
}

VirVector apply_mode(long m, const VirVector& v) {
  Engine eng(v.central_charge());
  return VirVector(v.central_charge(), eng.apply(m, v.poly()));
}

VirVector apply_word(const std::vector<long>& word, const VirVector& v) {
  Engine eng(v.central_charge());
  DiffPoly x = v.poly();
  for (auto it = word.rbegin(); it != word.rend(); ++it) x = eng.apply(*it, x);
  return VirVector(v.central_charge(), x);
}

bool singular_vector_check(const VirVector& v, const std::vector<long>& positive_modes) {
  Engine eng(v.central_charge());
  for (long m : positive_modes) {
    if (m <= 0) throw Error(Status::InvalidArgument, "modes must be positive");
    if (!eng.apply(m, v.poly()).is_zero()) return false;
  }
  return true;
}

VirVector solve_singular_vector(const chars::MinimalModel& label) {
  Rational c = label.central_charge();
  long d = label.singular_degree();
  Engine eng(c);
  auto basis = partitions_min2(d);
  std::map<Partition, std::size_t> row_of;
  std::vector<std::vector<std::pair<std::size_t, Rational>>> cols(basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    for (long m : {1L, 2L}) {
      for (const auto& [mono, k] : eng.act(m, basis[j])) {
        // monomials of degree d-1 and d-2 never coincide
        auto [it, fresh] = row_of.emplace(mono, row_of.size());
        cols[j].emplace_back(it->second, k);
      }
    }
  }
  std::vector<std::vector<Rational>> a(row_of.size(), std::vector<Rational>(basis.size(), Rational(0)));
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (const auto& [i, k] : cols[j]) a[i][j] += k;
  auto ns = nullspace(std::move(a), basis.size());
  if (ns.empty()) throw Error(Status::NoSolution, "no singular vector in degree " + std::to_string(d));
  if (ns.size() > 1) throw Error(Status::NonUniqueSolution, "singular vectors in degree " + std::to_string(d) + " are not unique up to scale");
  DiffPoly v;
  for (std::size_t j = 0; j < basis.size(); ++j) v.add(basis[j], ns[0][j]);
  v *= 1 / diff::leading_coefficient(v);
  return VirVector(c, v);
}

VirVector printed_v34() {
  Rational c = frac(1, 2);
  return VirVector::monomial(c, Partition({2, 2, 2})) + VirVector::monomial(c, Partition({3, 3}), frac(93, 64)) +
         VirVector::monomial(c, Partition({6}), frac(-27, 16)) + VirVector::monomial(c, Partition({4, 2}), frac(-33, 8));
}

std::vector<long> quotient_graded_dims(const chars::MinimalModel& label, long N) {
  if (N < 0) throw Error(Status::InvalidArgument, "negative degree");
  VirVector v = solve_singular_vector(label);
  Engine eng(v.central_charge());
  auto spans = submodule_spans(eng, v.poly(), N);
  std::vector<long> dims;
  for (long n = 0; n <= N; ++n)
    dims.push_back(static_cast<long>(partitions_min2(n).size()) - spans[n].rank());
  return dims;
}

CheckItems singular_vector_report() {
  CheckItems out;
  VirVector solved = solve_singular_vector(chars::MinimalModel(3, 4));
  out.push_back(item("solved v_{3,4} is annihilated by L_1, L_2", singular_vector_check(solved)));
  out.push_back(item("solved v_{3,4} has degree 6", solved.degree() == 6));
  VirVector printed = printed_v34();
  for (const auto& [mono, k] : printed.terms()) {
    Rational s = solved.coeff(mono);
    out.push_back(item("coefficient of L" + to_string(mono), s == k,
                       "printed " + iwb::to_string(k) + ", solved " + iwb::to_string(s)));
  }
  bool same_support = true;
  for (const auto& [mono, k] : solved.terms()) same_support = same_support && printed.coeff(mono) != 0;
  out.push_back(item("no further monomials", same_support, to_string(solved)));
  return out;
}

CheckItems lemma_b_check() {
  CheckItems out;
  Rational c = frac(1, 2);
  VirVector v = solve_singular_vector(chars::MinimalModel(3, 4));
  VirVector w(c, lemma_w());
  VirVector lhs = w + frac(256, 429) * apply_word({-3}, v) - frac(64, 429) * apply_word({-1, -2}, v) -
                  frac(31, 286) * apply_word({-1, -1, -1}, v);
  VirVector rhs = VirVector::monomial(c, Partition({6, 3}), frac(27, 8)) +
                  VirVector::monomial(c, Partition({7, 2}), frac(87, 4)) +
                  VirVector::monomial(c, Partition({9}), frac(147, 32)) +
                  VirVector::monomial(c, Partition({5, 4}), frac(-45, 16));
  out.push_back(item("degree 9 identity", lhs == rhs, to_string(lhs)));
  bool no_len3 = true, w_len3 = false, in_f5 = true;
  for (const auto& [mono, k] : lhs.terms()) {
    no_len3 = no_len3 && mono.length() < 3;
    in_f5 = in_f5 && 2 * mono.length() <= 9 - 5;
  }
  for (const auto& [mono, k] : w.terms()) w_len3 = w_len3 || mono.length() >= 3;
  out.push_back(item("length 3 components vanish", no_len3));
  out.push_back(item("w_{3,4} has length 3 components", w_len3));
  out.push_back(item("remainder lies in F_5", in_f5));
  return out;
}

bool symbol_vanishes(const chars::MinimalModel& label, const DiffPoly& f) {
  if (f.is_zero()) return true;
  long n = *f.weight();
  long len = 0;
  for (const auto& [mono, k] : f.terms()) len = std::max(len, mono.length());
  VirVector v = solve_singular_vector(label);
  Engine eng(v.central_charge());
  auto spans = submodule_spans(eng, v.poly(), n);
  // f lifts into F_{n-2len}; its symbol vanishes iff the lift lies in F_{n-2len+1} + submodule
  Span target = spans[n];
  for (const auto& mono : partitions_min2(n))
    if (mono.length() < len) target.insert(DiffPoly::monomial(mono));
  return target.contains(f);
}

CheckItems lemma_bp_check(long pp) {
  if (pp < 4) throw Error(Status::InvalidArgument, "p' must be at least 4");
  chars::MinimalModel label(3, pp);
  CheckItems out;
  long d0 = 2 * pp + 1;
  DiffPoly gen = diff::gen_a_3(pp);
  DiffPoly b = diff::gen_b_3(pp);
  QSeries arc = diff::hilbert_quotient({gen}, d0);

  VirVector v = solve_singular_vector(label);
  Engine eng(v.central_charge());
  auto spans = submodule_spans(eng, v.poly(), d0);
  std::vector<long> kernel;
  for (long n = 0; n <= d0; ++n) {
    long vir = static_cast<long>(partitions_min2(n).size()) - spans[n].rank();
    kernel.push_back(static_cast<long>(arc.coeff(n).get_num().get_si()) - vir);
  }
  bool below = true;
  std::ostringstream det;
  for (long n = 0; n < d0; ++n) {
    below = below && kernel[n] == 0;
    if (kernel[n] != 0) det << "weight " << n << ": " << kernel[n] << "; ";
  }
  out.push_back(item("kernel vanishes below weight " + std::to_string(d0), below, det.str()));
  out.push_back(item("kernel at weight " + std::to_string(d0) + " is one-dimensional", kernel[d0] == 1,
                     "dimension " + std::to_string(kernel[d0])));
  out.push_back(item("b^{(p')} is nonzero in the arc quotient", !diff::membership(b, {gen})));

  out.push_back(item("b^{(p')} maps to zero in gr Vir_{3,p'}", symbol_vanishes(label, b), iwb::diff::to_string(b)));
  return out;
}

}  // namespace iwb::vir
