#include "characters.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

namespace iwb::chars {
namespace {

// 1/(q)_k mod q^N for k = 0, 1, ..., built incrementally.
class InversePochhammers {
 public:
  explicit InversePochhammers(long trunc) : trunc_(trunc) {
    dense_.assign(1, std::vector<Rational>(static_cast<std::size_t>(std::max(trunc, 0L))));
    if (trunc > 0) dense_[0][0] = 1;
    series_.push_back(to_series(dense_[0]));
  }

  const QSeries& get(long k) {
    while (static_cast<long>(series_.size()) <= k) {
      long j = static_cast<long>(series_.size());
      std::vector<Rational> next = dense_.back();
      for (std::size_t i = static_cast<std::size_t>(j); i < next.size(); ++i)
        next[i] += next[i - static_cast<std::size_t>(j)];
      series_.push_back(to_series(next));
      dense_.push_back(std::move(next));
    }
    return series_[static_cast<std::size_t>(k)];
  }

 private:
  QSeries to_series(const std::vector<Rational>& v) const {
    QSeries::Terms t;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] != 0) t.emplace_hint(t.end(), static_cast<long>(i), v[i]);
    return QSeries::from_terms(1, std::move(t), Rational(trunc_));
  }

  long trunc_;
  std::vector<std::vector<Rational>> dense_;
  std::vector<QSeries> series_;
};

// Dense accumulator for series with integer exponents below N.
class DenseSeries {
 public:
  DenseSeries(long trunc, long denom = 1)
      : trunc_(trunc), denom_(denom), c_(static_cast<std::size_t>(trunc * denom)) {
    if (!c_.empty()) c_[0] = 1;
  }

  // *= (1 + sign q^e), e given in units of 1/denom.
  void mul_binomial(long e_key, int sign) {
    for (std::size_t i = c_.size(); i-- > static_cast<std::size_t>(e_key);)
      if (c_[i - e_key] != 0) c_[i] += sign > 0 ? c_[i - e_key] : -c_[i - e_key];
  }
  // /= (1 - q^e)
  void div_one_minus(long e_key) {
    for (std::size_t i = static_cast<std::size_t>(e_key); i < c_.size(); ++i) c_[i] += c_[i - e_key];
  }
  long size() const { return static_cast<long>(c_.size()); }

  QSeries to_series() const {
    QSeries::Terms t;
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (c_[i] != 0) t.emplace_hint(t.end(), static_cast<long>(i), c_[i]);
    return QSeries::from_terms(denom_, std::move(t), Rational(trunc_));
  }

 private:
  long trunc_, denom_;
  std::vector<Rational> c_;
};

// q^e / ((q)_{k1} (q)_{k2}) mod q^N, or zero if e >= N.
QSeries quotient_term(InversePochhammers& inv, long trunc, const Rational& e, long k1, long k2) {
  if (e >= trunc) return QSeries::zero(trunc);
  Rational room = trunc - e;
  QSeries t = inv.get(k1).truncated(room) * inv.get(k2).truncated(room);
  return t.shifted(e);
}

// Half-integer fermionic products prod_{m>=1} (1 + sign q^{m-1/2}) mod q^N.
QSeries half_product(long trunc, int sign) {
  DenseSeries s(trunc, 2);
  for (long key = 1; key < s.size(); key += 2) s.mul_binomial(key, sign);
  return s.to_series();
}

Rational quadratic_form(const Matrix& a, const std::vector<long>& k) {
  Rational q = 0;
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (k[i] == 0) continue;
    for (std::size_t j = 0; j < k.size(); ++j)
      if (k[j] != 0) q += a[i][j] * k[i] * k[j];
  }
  return q / 2;
}

bool coprime(long a, long b) { return std::gcd(a, b) == 1; }

}  // namespace

MinimalModel::MinimalModel(long p_, long pp_) : p(p_), pp(pp_) {
  if (p < 2 || pp <= p || !coprime(p, pp))
    throw Error(Status::InvalidArgument, "minimal model needs coprime p' > p >= 2");
}

Rational MinimalModel::central_charge() const {
  return 1 - frac(6 * (p - pp) * (p - pp), p * pp);
}

QSeries feigin_fuchs_character(const MinimalModel& label, long trunc) {
  const long p = label.p, pp = label.pp;
  // Exponents of the alternating sum factor as m (p p' m + p - p') and
  // (p m + 1)(p' m + 1); both are nonnegative for every integer m.
  auto e1 = [&](long m) { return m * (p * pp * m + p - pp); };
  auto e2 = [&](long m) { return (p * m + 1) * (pp * m + 1); };
  QSeries::Terms terms;
  auto add = [&](long e, long c) {
    if (e < trunc) terms[e] += c;
  };
  for (long m = 0;; ++m) {
    if (e1(m) >= trunc && e2(m) >= trunc) break;
    add(e1(m), 1);
    add(e2(m), -1);
  }
  for (long m = -1;; --m) {
    if (e1(m) >= trunc && e2(m) >= trunc) break;
    add(e1(m), 1);
    add(e2(m), -1);
  }
  QSeries numerator = QSeries::from_terms(1, std::move(terms), Rational(trunc));
  return numerator * inverse(pochhammer_inf(trunc));
}

const char* name(AltForm f) {
  switch (f) {
    case AltForm::BGG: return "BGG";
    case AltForm::FermionHalf: return "FermionHalf";
    case AltForm::Euler: return "Euler";
    case AltForm::QuintupleProduct: return "QuintupleProduct";
  }
  return "?";
}

QSeries alt_expression(AltForm which, long trunc) {
  switch (which) {
    case AltForm::BGG: {
      QSeries::Terms terms;
      for (long m = -trunc; m <= trunc; ++m) {
        long a = 12 * m * m + m, b = 12 * m * m + 7 * m + 1;
        if (a < trunc) terms[a] += 1;
        if (b < trunc) terms[b] -= 1;
      }
      return QSeries::from_terms(1, std::move(terms), Rational(trunc)) *
             inverse(pochhammer_inf(trunc));
    }
    case AltForm::FermionHalf: {
      QSeries s = (half_product(trunc, +1) + half_product(trunc, -1)) * Rational(1, 2);
      return QSeries::from_terms(1, [&] {
        QSeries::Terms t;
        for (const auto& [k, c] : s.terms()) {
          if (k % 2 != 0) throw Error(Status::Internal, "odd half-integer power survived");
          t.emplace(k / 2, c);
        }
        return t;
      }(), Rational(trunc));
    }
    case AltForm::Euler: {
      InversePochhammers inv(trunc);
      QSeries sum = QSeries::zero(trunc);
      for (long m = 0; 2 * m * m < trunc; ++m)
        sum += inv.get(2 * m).truncated(trunc - 2 * m * m).shifted(2 * m * m);
      return sum;
    }
    case AltForm::QuintupleProduct: {
      DenseSeries s(trunc);
      for (long k = 1; 8 * k - 5 < trunc || 2 * k < trunc; ++k) {
        if (8 * k - 5 < trunc) s.mul_binomial(8 * k - 5, +1);
        if (8 * k - 3 < trunc) s.mul_binomial(8 * k - 3, +1);
        if (8 * k < trunc) s.mul_binomial(8 * k, -1);
        if (2 * k < trunc) s.div_one_minus(2 * k);
      }
      return s.to_series();
    }
  }
  throw Error(Status::InvalidArgument, "unknown expression");
}

void NahmData::validate() const {
  const std::size_t n = A.size();
  if (n == 0) throw Error(Status::InvalidArgument, "empty Nahm matrix");
  if (B.size() != n) throw Error(Status::InvalidArgument, "B has wrong length");
  for (const auto& row : A)
    if (row.size() != n) throw Error(Status::InvalidArgument, "A is not square");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (A[i][j] != A[j][i]) throw Error(Status::InvalidArgument, "A is not symmetric");
  // Leading principal minors by fraction elimination: all pivots positive.
  Matrix m = A;
  for (std::size_t k = 0; k < n; ++k) {
    if (m[k][k] <= 0) throw Error(Status::NotPositiveDefinite, "A is not positive definite");
    for (std::size_t i = k + 1; i < n; ++i) {
      Rational f = m[i][k] / m[k][k];
      for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
}

Matrix inverse(const Matrix& in) {
  const std::size_t n = in.size();
  Matrix a = in, inv(n, std::vector<Rational>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw Error(Status::InvalidArgument, "singular matrix");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    Rational s = 1 / a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] *= s;
      inv[col][j] *= s;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a[i][col] == 0) continue;
      Rational f = a[i][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] -= f * a[col][j];
        inv[i][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

Matrix e8_cartan() {
  Matrix c(8, std::vector<Rational>(8, 0));
  for (int i = 0; i < 8; ++i) c[i][i] = 2;
  // Bourbaki: chain 1-3-4-5-6-7-8 with node 2 attached to node 4.
  const int edges[][2] = {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {2, 4}};
  for (const auto& e : edges) {
    c[e[0] - 1][e[1] - 1] = -1;
    c[e[1] - 1][e[0] - 1] = -1;
  }
  return c;
}

NahmData e8_nahm_data() {
  NahmData d;
  d.A = inverse(e8_cartan());
  for (auto& row : d.A)
    for (auto& x : row) x *= 2;
  d.B.assign(8, 0);
  return d;
}

NahmData andrews_gordon_nahm_data(long s) {
  if (s < 2) throw Error(Status::InvalidArgument, "Andrews-Gordon index must be >= 2");
  NahmData d;
  const long n = s - 1;
  d.A.assign(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
  for (long i = 1; i <= n; ++i)
    for (long j = 1; j <= n; ++j) d.A[i - 1][j - 1] = 2 * std::min(i, j);
  for (long i = 1; i <= n; ++i) d.B.push_back(i);
  return d;
}

QSeries nahm_sum(const NahmData& data, long trunc) {
  data.validate();
  const std::size_t n = data.A.size();

  // Exponents live in (1/D)Z.
  Integer den = data.C.get_den();
  for (std::size_t i = 0; i < n; ++i) {
    den = lcm(den, Rational(data.A[i][i] / 2).get_den());
    den = lcm(den, data.B[i].get_den());
    for (std::size_t j = i + 1; j < n; ++j) den = lcm(den, data.A[i][j].get_den());
  }
  const long D = to_long(den);

  bool monotone = data.C >= 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (data.B[i] < 0) monotone = false;
    for (std::size_t j = 0; j < n; ++j)
      if (data.A[i][j] < 0) monotone = false;
  }

  // Coordinate box from completing the square: with y = k + A^{-1}B,
  // y^T A y / 2 < R := N - C + B^T A^{-1} B / 2, and by Cauchy-Schwarz
  // y_i^2 <= 2 R (A^{-1})_ii.
  std::vector<long> upper(n);
  {
    Matrix ainv = inverse(data.A);
    std::vector<Rational> shift(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) shift[i] += ainv[i][j] * data.B[j];
    Rational r = Rational(trunc) - data.C;
    for (std::size_t i = 0; i < n; ++i) r += data.B[i] * shift[i] / 2;
    for (std::size_t i = 0; i < n; ++i) {
      Rational x = 2 * r * ainv[i][i];
      Integer fx = x > 0 ? floor(x) : Integer(0);
      Integer root;
      mpz_sqrt(root.get_mpz_t(), fx.get_mpz_t());
      upper[i] = std::max(0L, to_long(floor(-shift[i]) + root + 2));
    }
  }

  InversePochhammers inv(trunc);
  QSeries sum = QSeries::zero(trunc);
  std::vector<long> k(n, 0);

  auto add_term = [&]() {
    Rational e = quadratic_form(data.A, k) + data.C;
    for (std::size_t i = 0; i < n; ++i) e += data.B[i] * k[i];
    if (e >= trunc) return false;
    if (e < 0) throw Error(Status::InvalidArgument, "Nahm exponent is negative");
    Rational room = trunc - e;
    QSeries t = QSeries::constant(1).truncated(room);
    for (std::size_t i = 0; i < n; ++i)
      if (k[i] > 0) t = t * inv.get(k[i]).truncated(room);
    sum += t.with_denom(D).shifted(e);
    return true;
  };

  std::function<void(std::size_t)> walk = [&](std::size_t i) {
    if (i == n) {
      add_term();
      return;
    }
    for (long v = 0; v <= upper[i]; ++v) {
      k[i] = v;
      if (monotone) {
        // All later coordinates zero gives the smallest exponent in this branch.
        Rational e = quadratic_form(data.A, k) + data.C;
        for (std::size_t j = 0; j < n; ++j) e += data.B[j] * k[j];
        if (e >= trunc) break;
      }
      walk(i + 1);
    }
    k[i] = 0;
  };
  walk(0);
  return sum;
}

QSeries andrews_gordon_product(long s, long trunc) {
  if (s < 2) throw Error(Status::InvalidArgument, "Andrews-Gordon index must be >= 2");
  const long mod = 2 * s + 1;
  DenseSeries d(trunc);
  for (long n = 1; n < trunc; ++n) {
    long r = n % mod;
    if (r == 0 || r == 1 || r == mod - 1) continue;
    d.div_one_minus(n);
  }
  return d.to_series();
}

QSeries quasiparticle_chi(long trunc) {
  InversePochhammers inv(trunc);
  QSeries sum = QSeries::zero(trunc);
  for (long k1 = 0; 4 * k1 * k1 < trunc; ++k1)
    for (long k2 = 0;; ++k2) {
      long e = 4 * k1 * k1 + 3 * k1 * k2 + k2 * k2;
      if (e >= trunc) break;
      QSeries base = quotient_term(inv, trunc, e, k1, k2);
      sum += base;
      sum -= base.shifted(k1).truncated(trunc);
      sum += base.shifted(k1 + k2).truncated(trunc);
    }
  return sum;
}

const char* name(Module m) {
  switch (m) {
    case Module::V0: return "V0";
    case Module::VHalf: return "V1/2";
    case Module::VSixteenth: return "V1/16";
  }
  return "?";
}

QSeries module_character(Module which, Side side, long trunc) {
  if (side == Side::Classical) {
    switch (which) {
      case Module::V0: return alt_expression(AltForm::FermionHalf, trunc);
      case Module::VHalf: return (half_product(trunc, +1) - half_product(trunc, -1)) * Rational(1, 2);
      case Module::VSixteenth: {
        DenseSeries d(trunc);
        for (long m = 1; m < trunc; ++m) d.mul_binomial(m, +1);
        return d.to_series();
      }
    }
  }
  InversePochhammers inv(trunc);
  QSeries sum = QSeries::zero(trunc);
  for (long k1 = 0; 4 * k1 * k1 < trunc; ++k1)
    for (long k2 = 0;; ++k2) {
      long e = 4 * k1 * k1 + 3 * k1 * k2 + k2 * k2;
      if (e >= trunc) break;
      switch (which) {
        case Module::V0: {
          QSeries base = quotient_term(inv, trunc, e, k1, k2);
          sum += base;
          sum -= base.shifted(4 * k1 + 2 * k2 + 1).truncated(trunc);
          break;
        }
        case Module::VHalf: {
          Rational lead = Rational(e + 2 * k1) + Rational(1, 2);
          if (lead >= trunc) break;
          QSeries base = quotient_term(inv, trunc, lead, k1, k2);
          sum += base;
          sum -= base.shifted(8 * k1 + 4 * k2 + 6).truncated(trunc);
          break;
        }
        case Module::VSixteenth: {
          sum += quotient_term(inv, trunc, e + k1 + k2, k1, k2);
          sum += quotient_term(inv, trunc, e + 4 * k1 + k2 + 1, k1, k2);
          break;
        }
      }
    }
  return sum;
}

const char* name(Block b) {
  switch (b) {
    case Block::A: return "A";
    case Block::B: return "B";
    case Block::C: return "C";
    case Block::D: return "D";
    case Block::E: return "E";
  }
  return "?";
}

TQSeries closed_form(Block which, long trunc) {
  // Each block is sum_{m >= j} t^m / (q)_{m-j} sum_{k=0}^{m-j} t^k q^{e(m,k)} [m-j, k]_q.
  long j = 0;
  std::function<long(long, long)> e;
  switch (which) {
    case Block::A: j = 0; e = [](long m, long k) { return m * (m + 1) + (k + 1) * m + 2 * k * k; }; break;
    case Block::B: j = 1; e = [](long m, long k) { return m * (m + 1) + k * (m + 1) + 2 * k * k; }; break;
    case Block::C: j = 2; e = [](long m, long k) { return m * m + 1 + k * (m + 3) + 2 * k * k; }; break;
    case Block::D: j = 2; e = [](long m, long k) { return m * m + k * (m + 2) + 2 * k * k; }; break;
    case Block::E: j = 3; e = [](long m, long k) { return m * m - m + 2 + k * (m + 3) + 2 * k * k; }; break;
  }
  InversePochhammers inv(trunc);
  TQSeries out(trunc);
  for (long m = j; e(m, 0) < trunc; ++m) {
    for (long k = 0; k <= m - j; ++k) {
      long ex = e(m, k);
      if (ex >= trunc) break;
      QSeries term = (q_binomial(m - j, k) * inv.get(m - j).truncated(trunc - ex)).shifted(ex);
      out.add_term(m + k, term);
    }
  }
  return out;
}

TQSeries quasi_particle_form(Block which, long trunc) {
  long t0 = 0, q0 = 0, a1 = 0, a2 = 0;
  switch (which) {
    case Block::A: t0 = 0; q0 = 0; a1 = 2; a2 = 2; break;
    case Block::B: t0 = 1; q0 = 2; a1 = 5; a2 = 3; break;
    case Block::C: t0 = 2; q0 = 5; a1 = 9; a2 = 4; break;
    case Block::D: t0 = 2; q0 = 4; a1 = 8; a2 = 4; break;
    case Block::E: t0 = 3; q0 = 8; a1 = 11; a2 = 5; break;
  }
  InversePochhammers inv(trunc);
  TQSeries out(trunc);
  for (long k1 = 0; q0 + 4 * k1 * k1 < trunc; ++k1)
    for (long k2 = 0;; ++k2) {
      long e = q0 + 4 * k1 * k1 + 3 * k1 * k2 + k2 * k2 + a1 * k1 + a2 * k2;
      if (e >= trunc) break;
      out.add_term(t0 + 2 * k1 + k2, quotient_term(inv, trunc, e, k1, k2));
    }
  return out;
}

CheckItems functional_equation_check(long trunc) {
  const TQSeries A = closed_form(Block::A, trunc), B = closed_form(Block::B, trunc),
                 C = closed_form(Block::C, trunc), D = closed_form(Block::D, trunc),
                 E = closed_form(Block::E, trunc);
  CheckItems out;
  auto check = [&](std::string label, const TQSeries& lhs, const TQSeries& rhs) {
    TQComparison c = compare(lhs, rhs);
    out.push_back({std::move(label), c.equal, c.describe()});
  };
  // f(t q^a, q) is shear(a); t q^b f is times(1, b).
  check("A(t,q) = A(tq,q) + B(tq,q) + C(tq,q) + D(tq,q)", A, A.shear(1) + B.shear(1) + C.shear(1) + D.shear(1));
  check("B(t,q) = tq^2 A(tq,q) - tq^2 D(tq^2,q)", B, A.shear(1).times(1, 2) - D.shear(2).times(1, 2));
  check("C(t,q) = tq B(tq^2,q) + tq^2 D(tq^2,q)", C, B.shear(2).times(1, 1) + D.shear(2).times(1, 2));
  check("D(t,q) = tq B(tq,q) - tq E(tq^2,q)", D, B.shear(1).times(1, 1) - E.shear(2).times(1, 1));
  check("E(t,q) = tq C(tq,q)", E, C.shear(1).times(1, 1));

  auto initial = [&](std::string label, const TQSeries& f, const Rational& value) {
    SeriesComparison c = compare(f.at_t_zero(), QSeries::constant(value).truncated(trunc));
    out.push_back({std::move(label), c.equal, c.describe()});
  };
  initial("A(0,q) = 1", A, 1);
  initial("B(0,q) = 0", B, 0);
  initial("C(0,q) = 0", C, 0);
  initial("D(0,q) = 0", D, 0);
  initial("E(0,q) = 0", E, 0);
  return out;
}

TQSeries P_of_t_q(long trunc) {
  InversePochhammers inv(trunc);
  TQSeries out(trunc);
  for (long k1 = 0; 4 * k1 * k1 < trunc; ++k1)
    for (long k2 = 0;; ++k2) {
      long e = 4 * k1 * k1 + 3 * k1 * k2 + k2 * k2;
      if (e >= trunc) break;
      QSeries base = quotient_term(inv, trunc, e, k1, k2);
      QSeries term = base - base.shifted(k1).truncated(trunc) + base.shifted(k1 + k2).truncated(trunc);
      out.add_term(2 * k1 + k2, term);
    }
  return out;
}

TQSeries bigraded_character(long trunc) { return P_of_t_q(trunc).li_substitution(); }

}  // namespace iwb::chars
