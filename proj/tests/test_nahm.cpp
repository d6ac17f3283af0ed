#include <doctest.h>

#include "nahm.hpp"

using namespace iwb;
using namespace iwb::nahm;

namespace {
bool close(const Real& a, const Real& b, const char* tol) { return abs(a - b) < Real(tol); }
}  // namespace

TEST_CASE("Rogers dilogarithm") {
  Real p2 = pi() * pi();
  CHECK(close(rogers_dilog(Real(0.5)), p2 / 12, "1e-40"));
  CHECK(close(rogers_dilog_series(Real(0.5)), p2 / 12, "1e-40"));
  for (int k = 1; k <= 9; ++k) {
    Real z = Real(k) / 10;
    // both terms summed directly, no reflection
    CHECK(close(rogers_dilog_series(z) + rogers_dilog_series(1 - z), p2 / 6, "1e-30"));
    CHECK(close(rogers_dilog(z), rogers_dilog_series(z), "1e-30"));
  }
  Real golden = (sqrt(Real(5)) - 1) / 2;
  CHECK(close(rogers_dilog(golden), p2 / 10, "1e-40"));
  CHECK(rogers_dilog(Real("1e-20")) < Real("1e-17"));
  CHECK_THROWS_AS(rogers_dilog(Real(0)), Error);
  CHECK_THROWS_AS(rogers_dilog(Real(1)), Error);
  CHECK_THROWS_AS(rogers_dilog(Real(-0.5)), Error);
}

TEST_CASE("Nahm systems") {
  auto [q1, q2] = ising_closed_form();
  NahmSolution s = alpha_of({{8, 3}, {3, 2}});
  REQUIRE(s.Q.size() == 2);
  CHECK(close(s.Q[0], q1, "1e-35"));
  CHECK(close(s.Q[1], q2, "1e-35"));
  CHECK(close(s.Q[0], Real("0.8832035059"), "1e-10"));
  CHECK(close(s.Q[1], Real("0.6807398542"), "1e-10"));
  CHECK(s.residual < Real("1e-12"));
  CHECK(close(s.alpha, pi() * pi() / 12, "1e-35"));
  CHECK(close(s.g, Real(0.5), "1e-35"));

  NahmSolution rr = alpha_of({{2}});
  CHECK(close(rr.Q[0], (sqrt(Real(5)) - 1) / 2, "1e-35"));
  CHECK(close(1 - rr.Q[0], rr.Q[0] * rr.Q[0], "1e-35"));
  CHECK(close(rr.g, Real(2) / 5, "1e-35"));

  // effective central charge of Vir(2, 2k+1) is 1 - 3/(2k+1)
  for (long k = 2; k <= 4; ++k) {
    NahmSolution ag = alpha_of(chars::andrews_gordon_nahm_data(k).A);
    Real expected = Real(2 * (k - 1)) / (2 * k + 1);
    CHECK(close(ag.g, expected, "1e-30"));
  }

  NahmSolution e8 = alpha_of(chars::e8_nahm_data().A);
  for (const auto& q : e8.Q) CHECK((q > 0 && q < 1));
  CHECK(e8.residual < Real("1e-12"));
  CHECK(close(e8.g, Real(0.5), "1e-8"));

  CHECK_THROWS_AS(solve_nahm_system({{1, 2}, {2, 1}}), Error);
  auto j = to_json(s);
  CHECK(j["matrix"][0][0] == "8");
  CHECK(j["Q"].size() == 2);
}
