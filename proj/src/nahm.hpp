#pragma once

#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <json.hpp>

#include "characters.hpp"

namespace iwb::nahm {

using Real = boost::multiprecision::cpp_bin_float_50;

Real pi();

struct NahmSolution {
  chars::Matrix A;
  std::vector<Real> Q;
  Real residual = 0;  // max_i |1 - Q_i - prod_j Q_j^{A_ij}|
  Real alpha = 0;
  Real g = 0;  // 6 alpha / pi^2
  long iterations = 0;
  bool newton = false;  // the damped iteration stalled and Newton finished the solve
};

struct SolverOptions {
  Real tol = Real("1e-40");
  long max_iterations = 20000;
};

// 1 - Q_i = prod_j Q_j^{A_ij}, 0 < Q_i < 1. Throws NoConvergence, NotPositiveDefinite.
NahmSolution solve_nahm_system(const chars::Matrix& A, const SolverOptions& opt = {});

// sum z^n/n^2 + log(z) log(1-z)/2, reflected through 1/2 for z > 1/2. Throws DomainError.
Real rogers_dilog(const Real& z, const Real& tol = Real("1e-45"));
// The series alone, without reflection.
Real rogers_dilog_series(const Real& z, const Real& tol = Real("1e-45"));

// Solves the system and fills alpha = sum (pi^2/6 - L(Q_i)) and g.
NahmSolution alpha_of(const chars::Matrix& A, const SolverOptions& opt = {});

// The printed closed forms for A = [[8,3],[3,2]].
std::pair<Real, Real> ising_closed_form();

std::string to_string(const Real& x, int digits = 20);
nlohmann::json to_json(const NahmSolution& s);

}  // namespace iwb::nahm
