#include "nahm.hpp"

#include <boost/math/constants/constants.hpp>

#include "error.hpp"

namespace iwb::nahm {

namespace {

using Vec = std::vector<Real>;
using RMat = std::vector<Vec>;

RMat to_real(const chars::Matrix& A) {
  RMat out(A.size(), Vec(A.size()));
  for (std::size_t i = 0; i < A.size(); ++i)
    for (std::size_t j = 0; j < A.size(); ++j)
      out[i][j] = Real(A[i][j].get_num().get_str()) / Real(A[i][j].get_den().get_str());
  return out;
}

// prod_j Q_j^{A_ij}
Vec products(const RMat& A, const Vec& logQ) {
  Vec out(A.size());
  for (std::size_t i = 0; i < A.size(); ++i) {
    Real s = 0;
    for (std::size_t j = 0; j < A.size(); ++j) s += A[i][j] * logQ[j];
    out[i] = exp(s);
  }
  return out;
}

Real residual(const RMat& A, const Vec& Q) {
  Vec lq(Q.size());
  for (std::size_t i = 0; i < Q.size(); ++i) lq[i] = log(Q[i]);
  Vec p = products(A, lq);
  Real r = 0;
  for (std::size_t i = 0; i < Q.size(); ++i) r = std::max(r, Real(abs(1 - Q[i] - p[i])));
  return r;
}

bool inside(const Vec& Q) {
  for (const auto& q : Q)
    if (!(q > 0 && q < 1)) return false;
  return true;
}

Vec solve_linear(RMat m, Vec b) {
  std::size_t n = b.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (abs(m[r][c]) > abs(m[piv][c])) piv = r;
    std::swap(m[c], m[piv]);
    std::swap(b[c], b[piv]);
    for (std::size_t r = c + 1; r < n; ++r) {
      Real f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
      b[r] -= f * b[c];
    }
  }
  Vec x(n);
  for (std::size_t i = n; i-- > 0;) {
    Real s = b[i];
    for (std::size_t k = i + 1; k < n; ++k) s -= m[i][k] * x[k];
    x[i] = s / m[i][i];
  }
  return x;
}

// G_i(x) = log(1 - e^{x_i}) - sum_j A_ij x_j with x = log Q; its Jacobian -(D + A) is negative definite.
Vec newton_residual(const RMat& A, const Vec& x) {
  Vec g(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    Real s = 0;
    for (std::size_t j = 0; j < x.size(); ++j) s += A[i][j] * x[j];
    g[i] = log(1 - exp(x[i])) - s;
  }
  return g;
}

Real max_abs(const Vec& v) {
  Real m = 0;
  for (const auto& x : v) m = std::max(m, Real(abs(x)));
  return m;
}

}  // namespace

Real pi() { return boost::math::constants::pi<Real>(); }

NahmSolution solve_nahm_system(const chars::Matrix& A, const SolverOptions& opt) {
  chars::NahmData data{A, std::vector<Rational>(A.size(), Rational(0)), 0};
  data.validate();
  RMat a = to_real(A);
  std::size_t n = A.size();
  NahmSolution sol;
  sol.A = A;

  Vec Q(n, Real(0.5));
  Real r = residual(a, Q);
  Real theta = 1;
  long it = 0;
  while (r >= opt.tol && it < opt.max_iterations && theta > Real("1e-12")) {
    ++it;
    Vec lq(n);
    for (std::size_t i = 0; i < n; ++i) lq[i] = log(Q[i]);
    Vec p = products(a, lq);
    Vec next(n);
    for (std::size_t i = 0; i < n; ++i) next[i] = (1 - theta) * Q[i] + theta * (1 - p[i]);
    Real rn = inside(next) ? residual(a, next) : Real(2);
    if (rn < r) {
      Q = std::move(next);
      r = rn;
      theta = std::min(Real(1), theta * Real(1.5));
    } else {
      theta /= 2;
    }
  }

  if (r >= opt.tol) {
    // stalled: damped Newton in log coordinates from the current point
    sol.newton = true;
    Vec x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = log(Q[i]);
    Vec g = newton_residual(a, x);
    while (r >= opt.tol && it < opt.max_iterations) {
      ++it;
      RMat jac(n, Vec(n));
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) jac[i][j] = -a[i][j];
        Real e = exp(x[i]);
        jac[i][i] -= e / (1 - e);
      }
      Vec step = solve_linear(jac, g);
      Real lambda = 1;
      bool moved = false;
      while (lambda > Real("1e-30")) {
        Vec y(n);
        bool ok = true;
        for (std::size_t i = 0; i < n; ++i) {
          y[i] = x[i] - lambda * step[i];
          ok = ok && y[i] < 0;
        }
        if (ok) {
          Vec gy = newton_residual(a, y);
          if (max_abs(gy) < max_abs(g)) {
            x = std::move(y);
            g = std::move(gy);
            moved = true;
            break;
          }
        }
        lambda /= 2;
      }
      for (std::size_t i = 0; i < n; ++i) Q[i] = exp(x[i]);
      r = residual(a, Q);
      if (!moved) break;
    }
  }
  if (r >= opt.tol || !inside(Q))
    throw Error(Status::NoConvergence, "Nahm system did not converge, residual " + to_string(r, 6));
  sol.Q = std::move(Q);
  sol.residual = r;
  sol.iterations = it;
  return sol;
}

Real rogers_dilog_series(const Real& z, const Real& tol) {
  if (!(z > 0 && z < 1)) throw Error(Status::DomainError, "Rogers dilogarithm needs 0 < z < 1");
  Real sum = 0, zn = z;
  for (long k = 1;; ++k) {
    Real term = zn / (Real(k) * k);
    sum += term;
    // tail after term k is below z^{k+1} / ((k+1)^2 (1 - z))
    if (zn * z / (Real(k + 1) * (k + 1) * (1 - z)) < tol) break;
    if (k > 50'000'000) throw Error(Status::NoConvergence, "dilogarithm series too slow");
    zn *= z;
  }
  return sum + log(z) * log(1 - z) / 2;
}

Real rogers_dilog(const Real& z, const Real& tol) {
  if (!(z > 0 && z < 1)) throw Error(Status::DomainError, "Rogers dilogarithm needs 0 < z < 1");
  if (z > Real(0.5)) return pi() * pi() / 6 - rogers_dilog_series(1 - z, tol);
  return rogers_dilog_series(z, tol);
}

NahmSolution alpha_of(const chars::Matrix& A, const SolverOptions& opt) {
  NahmSolution sol = solve_nahm_system(A, opt);
  Real p2 = pi() * pi();
  sol.alpha = 0;
  for (const auto& q : sol.Q) sol.alpha += p2 / 6 - rogers_dilog(q);
  sol.g = 6 * sol.alpha / p2;
  return sol;
}

std::pair<Real, Real> ising_closed_form() {
  Real s2 = sqrt(Real(2));
  Real root = sqrt(2 * s2 - 1);
  return {(root + s2 - 1) / 2, 2 / (root - s2 + 3)};
}

std::string to_string(const Real& x, int digits) { return x.str(digits); }

nlohmann::json to_json(const NahmSolution& s) {
  nlohmann::json m = nlohmann::json::array();
  for (const auto& row : s.A) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& x : row) r.push_back(iwb::to_string(x));
    m.push_back(r);
  }
  nlohmann::json q = nlohmann::json::array();
  for (const auto& x : s.Q) q.push_back(static_cast<double>(x));
  return {{"matrix", m},
          {"Q", q},
          {"residual", static_cast<double>(s.residual)},
          {"alpha", static_cast<double>(s.alpha)},
          {"g", static_cast<double>(s.g)},
          {"iterations", s.iterations},
          {"method", s.newton ? "damped fixed point + Newton" : "damped fixed point"}};
}

}  // namespace iwb::nahm
