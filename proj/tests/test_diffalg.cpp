#include <doctest.h>

#include <algorithm>
#include <random>

#include "characters.hpp"
#include "groebner.hpp"

using namespace iwb;
using namespace iwb::diff;

namespace {
Partition P(std::initializer_list<long> p) { return Partition(std::vector<long>(p)); }

DiffPoly random_homogeneous(std::mt19937& rng, long w) {
  auto mons = partitions_min2(w);
  std::uniform_int_distribution<int> coef(-3, 3);
  DiffPoly f;
  for (const auto& m : mons)
    if (rng() % 3 == 0) f.add(m, coef(rng));
  if (f.is_zero() && !mons.empty()) f.add(mons.front(), 1);
  return f;
}

void require_all(const CheckItems& items) {
  for (const auto& i : items) {
    CAPTURE(i.name);
    CAPTURE(i.detail);
    CHECK(i.passed);
  }
}
}  // namespace

TEST_CASE("derivation") {
  CHECK(derive(DiffPoly::generator(2)) == DiffPoly::generator(3));
  CHECK(derive(gen_a()) == DiffPoly::monomial(P({3, 2, 2}), 3));
  CHECK(derive(DiffPoly::monomial(Partition())).is_zero());
  CHECK(divided_derivative(gen_b(), 0) == gen_b());
  DiffPoly d2 = DiffPoly::monomial(P({4, 2, 2}), 3) + DiffPoly::monomial(P({3, 3, 2}), 3);
  CHECK(divided_derivative(gen_a(), 2) == d2);
  CHECK(leading_monomial(d2) == P({3, 3, 2}));
  CHECK(leading_monomial(gen_b()) == P({4, 3, 2}));
  CHECK(leading_monomial(DiffPoly::generator(2)) == P({2}));
  CHECK_THROWS_AS(leading_monomial(DiffPoly()), Error);
  DiffPoly d9 = divided_derivative(gen_a(), 9);
  CHECK(leading_monomial(d9) == P({5, 5, 5}));
  CHECK(leading_coefficient(d9) == 1);
  CHECK(d9.coeff(P({6, 5, 4})) == 6);
  CHECK(divided_derivative(gen_b() * 6, 6).coeff(P({5, 5, 5})) == 55);
}

TEST_CASE("Leibniz rule and multiplicative leading monomials") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    DiffPoly f = random_homogeneous(rng, 4 + trial % 6), g = random_homogeneous(rng, 5 + trial % 5);
    CHECK(derive(f * g) == derive(f) * g + f * derive(g));
    CHECK(leading_monomial(f * g) == leading_monomial(f) * leading_monomial(g));
  }
}

TEST_CASE("json round trip") {
  DiffPoly b = gen_b();
  auto j = to_json(b);
  CHECK(j["weight"] == 9);
  CHECK(diffpoly_from_json(j) == b);
  CHECK(to_string(b) == "L[4,3,2] + 1/6*L[5,2,2]");
}

TEST_CASE("ideal slices") {
  auto s6 = ideal_slice({gen_a()}, 6);
  CHECK(s6.rank() == 1);
  CHECK(s6.leading_monomials() == std::vector<Partition>{P({2, 2, 2})});
  CHECK(ideal_slice({gen_a()}, 5).rank() == 0);
  std::vector<DiffPoly> ab{gen_a(), gen_b()};
  auto s8 = ideal_slice(ab, 8);
  auto lm8 = s8.leading_monomials();
  std::sort(lm8.begin(), lm8.end());
  CHECK(lm8 == std::vector<Partition>{P({3, 3, 2}), P({2, 2, 2, 2})});
  auto s9 = ideal_slice(ab, 9);
  auto lm9 = s9.leading_monomials();
  CHECK(std::find(lm9.begin(), lm9.end(), P({4, 3, 2})) != lm9.end());
  CHECK(membership(gen_a(), ab));
  CHECK_FALSE(membership(DiffPoly::monomial(P({3, 2})), ab));
  CHECK(membership(DiffPoly::monomial(P({5, 4, 2, 2})), ab));
}

TEST_CASE("Hilbert series") {
  CHECK(compare(hilbert_quotient({gen_a(), gen_b()}, 22), chars::feigin_fuchs_character({3, 4}, 23)).equal);
  for (long s = 2; s <= 3; ++s) CHECK(compare(hilbert_quotient({power_of_L2(s)}, 20), chars::andrews_gordon_product(s, 21)).equal);
  // free algebra
  QSeries free = hilbert_quotient({}, 15);
  CHECK(free.coeff(15) == static_cast<long>(partitions_min2(15).size()));
}

TEST_CASE("(3,p') generators") {
  CHECK(gen_b_3(4) == gen_b());
  CHECK(gen_b_3(5).coeff(P({5, 2, 2, 2})) == Rational(-1, 9));
  CHECK(*gen_b_3(5).weight() == 11);
  GapReport g = strict_gap(5, 20);
  REQUIRE(g.first_strict);
  CHECK(*g.first_strict == 19);
  require_all(g.items);
}

TEST_CASE("derivative formulas") { require_all(verify_derivative_formulas(3)); }

TEST_CASE("printed elements") {
  CHECK(leading_monomial(element_poly(Element::t, 0)) == P({4, 3, 2}));
  CHECK(element_poly(Element::t, 0) == gen_b() * 6);
  CHECK(leading_monomial(element_poly(Element::r, 0)) == P({4, 4, 2}));
  CHECK(leading_monomial(element_poly(Element::e1, 0)) == P({5, 4, 2, 2}));
  CHECK(leading_monomial(element_poly(Element::z, 0)) == P({8, 7, 5, 3, 2}));
  SliceCache slices({gen_a(), gen_b()});
  Prop51Options opt;
  opt.k_max = 1;
  opt.slice_limit = 24;
  require_all(prop51_check(opt, slices));
  require_all(exceptional_membership_check(slices));
}

TEST_CASE("Groebner property") {
  SliceCache slices({gen_a(), gen_b()});
  auto g = groebner_check(20, slices);
  require_all(g.items);
  CHECK(g.w_only == std::vector<Partition>{P({6, 5, 3, 2}), P({7, 6, 4, 3})});
  CHECK(slices.at(7).leading_monomials() == std::vector<Partition>{P({3, 2, 2})});
}
