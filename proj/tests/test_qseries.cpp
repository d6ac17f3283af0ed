#include <doctest.h>

#include "qseries.hpp"

using namespace iwb;

namespace {
QSeries poly(std::initializer_list<std::pair<long, long>> terms, std::optional<long> trunc = std::nullopt) {
  QSeries::Terms t;
  for (auto [e, c] : terms) t[e] += c;
  std::optional<Rational> tr;
  if (trunc) tr = Rational(*trunc);
  return QSeries::from_terms(1, t, tr);
}
}  // namespace

TEST_CASE("pochhammer small cases") {
  CHECK(pochhammer(2) == poly({{0, 1}, {1, -1}, {2, -1}, {3, 1}}));
  CHECK(pochhammer(3) == poly({{0, 1}, {1, -1}, {2, -1}, {4, 1}, {5, 1}, {6, -1}}));
  CHECK(pochhammer(0) == QSeries::constant(1));
}

TEST_CASE("inverse and infinite product") {
  CHECK(inverse(pochhammer(2), Rational(5)) == poly({{0, 1}, {1, 1}, {2, 2}, {3, 2}, {4, 3}}, 5));
  CHECK(pochhammer_inf(6) == poly({{0, 1}, {1, -1}, {2, -1}, {5, 1}}, 6));
  CHECK_THROWS_AS(inverse(poly({{1, 1}}), Rational(3)), Error);
}

TEST_CASE("gaussian binomial") {
  CHECK(q_binomial(4, 2) == poly({{0, 1}, {1, 1}, {2, 2}, {3, 1}, {4, 1}}));
  CHECK(q_binomial(3, 5).is_zero());
  CHECK(q_binomial(3, -1).is_zero());
  // symmetric and sums to the ordinary binomial at q = 1
  for (long m = 0; m <= 9; ++m)
    for (long n = 0; n <= m; ++n) {
      CHECK(q_binomial(m, n) == q_binomial(m, m - n));
      Rational total = 0;
      QSeries b_q = q_binomial(m, n);
      for (const auto& [k, c] : b_q.terms()) total += c;
      Integer b;
      mpz_bin_uiui(b.get_mpz_t(), m, n);
      CHECK(total == b);
    }
}

TEST_CASE("truncation rules in products") {
  QSeries a = poly({{0, 1}, {1, 1}}, 4);
  QSeries b = poly({{2, 1}}, 3);
  QSeries p = a * b;
  REQUIRE(p.trunc());
  CHECK(*p.trunc() == 3);  // min(4 + 2, 3 + 0)
  CHECK((QSeries() * a).is_zero());
  CHECK((QSeries() * a).is_exact());
}

TEST_CASE("half-integer exponents") {
  QSeries h = QSeries::monomial(Rational(1, 2));
  QSeries s = h * h;
  CHECK(s.coeff(1) == 1);
  CHECK(s.coeff(Rational(1, 2)) == 0);
}

TEST_CASE("comparison reports first mismatch") {
  auto c = compare(poly({{0, 1}, {3, 2}}, 6), poly({{0, 1}, {3, 5}}, 5));
  CHECK_FALSE(c.equal);
  CHECK(*c.first_mismatch == 3);
  CHECK(c.describe().find("q^3") != std::string::npos);
  CHECK(compare(poly({{0, 1}}, 4), poly({{0, 1}, {5, 1}}, 9)).equal);
}

TEST_CASE("json round trip") {
  QSeries s = inverse(pochhammer(3), Rational(11, 2)).with_denom(2);
  CHECK(series_from_json(to_json(s)) == s);
  CHECK_THROWS_AS(series_from_json(nlohmann::json::parse(R"({"denom":1})")), Error);
}
