#include <doctest.h>

#include <functional>

#include "characters.hpp"

using namespace iwb;
using namespace iwb::chars;

namespace {
QSeries poly(std::initializer_list<std::pair<long, long>> terms, long trunc) {
  QSeries::Terms t;
  for (auto [e, c] : terms) t[e] += c;
  return QSeries::from_terms(1, t, Rational(trunc));
}

// Independent count: partitions into parts from an allowed set, by brute force.
QSeries restricted_partitions(long trunc, const std::function<bool(long)>& allowed) {
  std::vector<Integer> c(static_cast<std::size_t>(trunc));
  c[0] = 1;
  for (long part = 1; part < trunc; ++part)
    if (allowed(part))
      for (long n = part; n < trunc; ++n) c[n] += c[n - part];
  QSeries::Terms t;
  for (long n = 0; n < trunc; ++n)
    if (c[n] != 0) t[n] = Rational(c[n]);
  return QSeries::from_terms(1, t, Rational(trunc));
}
}  // namespace

TEST_CASE("minimal model labels") {
  CHECK_THROWS_AS(MinimalModel(2, 4), Error);
  CHECK_THROWS_AS(MinimalModel(4, 3), Error);
  CHECK_THROWS_AS(MinimalModel(1, 2), Error);
  CHECK(MinimalModel(3, 4).central_charge() == Rational(1, 2));
  CHECK(MinimalModel(3, 4).singular_degree() == 6);
  CHECK(MinimalModel(2, 5).central_charge() == Rational(-22, 5));
}

TEST_CASE("vacuum characters at low order") {
  CHECK(feigin_fuchs_character({3, 4}, 8) == poly({{0, 1}, {2, 1}, {3, 1}, {4, 2}, {5, 2}, {6, 3}, {7, 3}}, 8));
  CHECK(feigin_fuchs_character({2, 5}, 6) == poly({{0, 1}, {2, 1}, {3, 1}, {4, 1}, {5, 1}}, 6));
}

TEST_CASE("Vir(2,5) is the Rogers-Ramanujan product") {
  const long N = 40;
  auto rr = restricted_partitions(N, [](long n) { return n % 5 == 2 || n % 5 == 3; });
  CHECK(compare(feigin_fuchs_character({2, 5}, N), rr).equal);
}

TEST_CASE("classical Ising expressions agree") {
  const long N = 40;
  QSeries ref = feigin_fuchs_character({3, 4}, N);
  for (AltForm f : {AltForm::BGG, AltForm::FermionHalf, AltForm::Euler, AltForm::QuintupleProduct}) {
    CAPTURE(name(f));
    CHECK(compare(alt_expression(f, N), ref).equal);
  }
}

TEST_CASE("Nahm sums") {
  NahmData one{{{2}}, {0}, 0};
  CHECK(nahm_sum(one, 6) == poly({{0, 1}, {1, 1}, {2, 1}, {3, 1}, {4, 2}, {5, 2}}, 6));
  CHECK(nahm_sum(andrews_gordon_nahm_data(2), 6) == poly({{0, 1}, {2, 1}, {3, 1}, {4, 1}, {5, 1}}, 6));
  for (long s = 2; s <= 4; ++s) CHECK(compare(nahm_sum(andrews_gordon_nahm_data(s), 30), andrews_gordon_product(s, 30)).equal);
  NahmData bad{{{1, 2}, {2, 1}}, {0, 0}, 0};
  CHECK_THROWS_AS(nahm_sum(bad, 5), Error);
  NahmData neg{{{2}}, {-3}, 0};
  // 1/(q)_1 q^{k^2 - 3k}: k = 1, 2 give q^{-2}
  CHECK_THROWS_AS(nahm_sum(neg, 5), Error);
}

TEST_CASE("E8 Nahm sum gives the Ising character") {
  CHECK(compare(nahm_sum(e8_nahm_data(), 12), feigin_fuchs_character({3, 4}, 12)).equal);
}

TEST_CASE("E8 data") {
  Matrix inv = inverse(e8_cartan());
  const long diag[] = {4, 8, 14, 30, 20, 12, 6, 2};
  for (int i = 0; i < 8; ++i) CHECK(inv[i][i] == diag[i]);
  const long row0[] = {4, 5, 7, 10, 8, 6, 4, 2};
  for (int j = 0; j < 8; ++j) CHECK(inv[0][j] == row0[j]);
}

TEST_CASE("Euler form at low order") {
  CHECK(alt_expression(AltForm::Euler, 8) == poly({{0, 1}, {2, 1}, {3, 1}, {4, 2}, {5, 2}, {6, 3}, {7, 3}}, 8));
  CHECK(quasiparticle_chi(8) == alt_expression(AltForm::Euler, 8));
}

TEST_CASE("Ising modules") {
  QSeries half = module_character(Module::VHalf, Side::Classical, 6);
  CHECK(*half.lowest_exponent() == Rational(1, 2));
  CHECK(module_character(Module::VSixteenth, Side::Classical, 5) ==
        poly({{0, 1}, {1, 1}, {2, 1}, {3, 2}, {4, 2}}, 5));
  const long N = 30;
  for (Module m : {Module::V0, Module::VHalf, Module::VSixteenth}) {
    CAPTURE(name(m));
    CHECK(compare(module_character(m, Side::Classical, N), module_character(m, Side::New, N)).equal);
  }
  CHECK(compare(quasiparticle_chi(N), feigin_fuchs_character({3, 4}, N)).equal);
}

TEST_CASE("block sums") {
  const long N = 25;
  for (Block b : kBlocks) {
    CAPTURE(name(b));
    CHECK(compare(closed_form(b, N), quasi_particle_form(b, N)).equal);
  }
  for (const auto& r : functional_equation_check(N)) {
    CAPTURE(r.name);
    CAPTURE(r.detail);
    CHECK(r.passed);
  }
  TQSeries total(N);
  for (Block b : kBlocks) total += closed_form(b, N);
  CHECK(compare(total, P_of_t_q(N)).equal);
  CHECK(compare(P_of_t_q(N).at_t_one(), quasiparticle_chi(N)).equal);
  CHECK(compare(bigraded_character(N).at_t_one(), quasiparticle_chi(N)).equal);
  CHECK(P_of_t_q(N).coeff(4, 2) == 1);
  CHECK(bigraded_character(N).coeff(2, 0) == 1);
  CHECK(closed_form(Block::B, N).coeffs().begin()->first == 2);
  CHECK(closed_form(Block::E, N).coeff(8, 3) == 1);
  CHECK(closed_form(Block::E, N).coeffs().begin()->first == 8);
}
