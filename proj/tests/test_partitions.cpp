#include <doctest.h>

#include <algorithm>
#include <functional>

#include "characters.hpp"
#include "partitions.hpp"

using namespace iwb;

namespace {
std::vector<Partition> parts(std::initializer_list<std::vector<long>> ps) {
  std::vector<Partition> v;
  for (const auto& p : ps) v.emplace_back(p);
  return v;
}

// Independent oracle: filter all partitions by explicit containment.
std::vector<Partition> brute_P(long n) {
  auto pats = forbidden_patterns(n);
  std::vector<Partition> out;
  for (const auto& lam : partitions_min2(n))
    if (std::none_of(pats.begin(), pats.end(), [&](const Partition& mu) { return contains(lam, mu); }))
      out.push_back(lam);
  return out;
}

std::vector<Integer> restricted_counts(long trunc, const std::function<bool(long)>& allowed) {
  std::vector<Integer> c(static_cast<std::size_t>(trunc));
  c[0] = 1;
  for (long part = 1; part < trunc; ++part)
    if (allowed(part))
      for (long n = part; n < trunc; ++n) c[n] += c[n - part];
  return c;
}
}  // namespace

TEST_CASE("containment") {
  CHECK(contains(Partition({5, 3, 3, 2}), Partition({3, 3})));
  CHECK_FALSE(contains(Partition({4, 2}), Partition({2, 2})));
  CHECK(contains(Partition({4, 2}), Partition()));
  CHECK(contains(Partition(), Partition()));
  CHECK_THROWS_AS(Partition({3, 1}), Error);
}

TEST_CASE("grevlex order") {
  CHECK(Partition({4, 2, 2}) < Partition({3, 3, 2}));
  CHECK(Partition({5, 2, 2}) < Partition({4, 3, 2}));
  CHECK(Partition({9}) < Partition({2, 2, 2, 2, 2}));
  CHECK(Partition({2, 2, 2}) < Partition({7}));
  // total and multiplicative up to weight 14
  std::vector<Partition> all;
  for (long w = 0; w <= 14; ++w)
    for (const auto& p : partitions_min2(w)) all.push_back(p);
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = 0; j < all.size(); j += 7) {
      const auto& a = all[i];
      const auto& b = all[j];
      CHECK((a < b) + (b < a) + (a == b) == 1);
      if (a < b)
        for (std::size_t k = 0; k < all.size(); k += 23) CHECK(a * all[k] < b * all[k]);
    }
}

TEST_CASE("avoidance set small cases") {
  CHECK(enumerate_P(0) == parts({{}}));
  CHECK(enumerate_P(1).empty());
  CHECK(enumerate_P(6) == parts({{6}, {4, 2}, {3, 3}}));
  CHECK(enumerate_P(7) == parts({{7}, {5, 2}, {4, 3}}));
  CHECK(enumerate_P(9) == parts({{9}, {7, 2}, {6, 3}, {5, 4}, {5, 2, 2}}));
}

TEST_CASE("pruned enumeration agrees with brute force") {
  for (long n = 0; n <= 30; ++n) {
    CAPTURE(n);
    CHECK(enumerate_P(n) == brute_P(n));
  }
}

TEST_CASE("classification") {
  CHECK(classify(Partition({4, 2})) == PClass::B);
  CHECK(classify(Partition({3, 2})) == PClass::C);
  CHECK(classify(Partition({4, 2, 2})) == PClass::E);
  CHECK(classify(Partition()) == PClass::A);
  CHECK(classify(Partition({2})) == PClass::B);
  CHECK(classify(Partition({2, 2})) == PClass::D);
  CHECK(classify(Partition({6, 2, 2})) == PClass::D);
  CHECK_THROWS_AS(classify(Partition({2, 2, 2})), Error);
  for (long n = 0; n <= 40; ++n)
    for (const auto& lam : enumerate_P(n)) CHECK_NOTHROW(classify(lam));
}

TEST_CASE("count table") {
  CountTable t = count_table(12);
  CHECK(t.p(6, 1) == 1);
  CHECK(t.p(6, 2) == 2);
  CHECK(t.p(0, 0) == 1);
  for (long n = 1; n <= 12; ++n) CHECK(t.p(n, 0) == 0);
  CHECK(t.total(9) == 5);
}

TEST_CASE("recurrences") {
  for (const auto& item : recursion_check(30)) {
    CAPTURE(item.name);
    CAPTURE(item.detail);
    CHECK(item.passed);
  }
}

TEST_CASE("counts match the generating functions") {
  const long N = 36;
  CountTable t = count_table(N - 1);
  TQSeries P = chars::P_of_t_q(N);
  for (long n = 0; n < N; ++n)
    for (long m = 0; m <= n; ++m) CHECK(P.coeff(n, m) == t.p(n, m));
  auto mod16 = restricted_counts(N, [](long k) {
    long r = k % 16;
    return r == 2 || r == 3 || r == 4 || r == 5 || r == 11 || r == 12 || r == 13 || r == 14;
  });
  for (long n = 0; n < N; ++n) CHECK(t.total(n) == mod16[n]);
}

TEST_CASE("difference-two bases") {
  CHECK(mourtada_basis(2, 5) == parts({{5}}));
  CHECK(mourtada_basis(2, 0) == parts({{}}));
  for (long s = 2; s <= 3; ++s) {
    auto ag = restricted_counts(41, [s](long k) {
      long r = k % (2 * s + 1);
      return r != 0 && r != 1 && r != 2 * s;
    });
    for (long n = 0; n <= 40; ++n) CHECK(static_cast<long>(mourtada_basis(s, n).size()) == ag[n]);
  }
}
