#include <doctest.h>

#include "polyfamilies.hpp"

using namespace iwb;
using namespace iwb::poly;

namespace {
QSeries exact(std::initializer_list<std::pair<long, long>> terms) {
  QSeries::Terms t;
  for (auto [e, c] : terms) t[e] += c;
  return QSeries::from_terms(1, t, std::nullopt);
}

void require_all(const CheckItems& items) {
  for (const auto& i : items) {
    CAPTURE(i.name);
    CAPTURE(i.detail);
    CHECK(i.passed);
  }
}
}  // namespace

TEST_CASE("small family members") {
  CHECK(family_poly(Sector::Vac, Side::S, 0) == QSeries::constant(1));
  CHECK(family_poly(Sector::Vac, Side::S, 3) == exact({{0, 1}, {2, 1}}));
  CHECK(family_poly(Sector::Vac, Side::T, 3) == exact({{0, 1}, {2, 1}}));
  CHECK_THROWS_AS(family_poly(Sector::Half, Side::S, 0), Error);
}

TEST_CASE("S side has nonnegative integer coefficients") {
  for (Sector s : {Sector::Vac, Sector::Half, Sector::Sixteenth})
    for (long n = 1; n <= 25; ++n) {
      QSeries f = family_poly(s, Side::S, n);
      for (const auto& [e, c] : f.terms()) CHECK(c > 0);
    }
}

TEST_CASE("S = T") {
  require_all(equality_check(Sector::Vac, 24));
  require_all(equality_check(Sector::Half, 20));
  require_all(equality_check(Sector::Sixteenth, 20));
}

TEST_CASE("recurrence") {
  require_all(recurrence_check(12));
}

TEST_CASE("limits") {
  require_all(limit_check(Sector::Vac, 30, 15));
  require_all(limit_check(Sector::Half, 30, 12));
  require_all(limit_check(Sector::Sixteenth, 30, 12));
  require_all(limit_check(Sector::Vac, 2, 1));
  CHECK_THROWS_AS(limit_check(Sector::Vac, 3, 15), Error);
}
