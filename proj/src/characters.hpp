#pragma once

#include <string>
#include <vector>

#include "qseries.hpp"
#include "report.hpp"
#include "tqseries.hpp"

namespace iwb::chars {

using Matrix = std::vector<std::vector<Rational>>;

struct MinimalModel {
  long p = 3, pp = 4;  // p' > p >= 2, coprime

  MinimalModel(long p_, long pp_);
  Rational central_charge() const;
  // Degree (p-1)(p'-1) of the vacuum singular vector.
  long singular_degree() const { return (p - 1) * (pp - 1); }
};

// Vacuum character of Vir(p, p') mod q^N.
QSeries feigin_fuchs_character(const MinimalModel& label, long trunc);

enum class AltForm { BGG, FermionHalf, Euler, QuintupleProduct };
const char* name(AltForm f);
// The four classical expressions for the Vir(3,4) character.
QSeries alt_expression(AltForm which, long trunc);

struct NahmData {
  Matrix A;
  std::vector<Rational> B;
  Rational C = 0;

  // Throws NotPositiveDefinite / InvalidArgument.
  void validate() const;
};

// sum_k q^{k^T A k / 2 + k^T B + C} / prod (q)_{k_i} mod q^N.
QSeries nahm_sum(const NahmData& data, long trunc);

// Cartan matrix of E8, Bourbaki labelling.
Matrix e8_cartan();
Matrix inverse(const Matrix& m);
NahmData e8_nahm_data();                 // A = 2 C_{E8}^{-1}
NahmData andrews_gordon_nahm_data(long s);  // A_ij = 2 min(i, j), B = (1..s-1)

// prod_{n >= 1, n != 0, +-1 mod 2s+1} 1/(1-q^n) mod q^N.
QSeries andrews_gordon_product(long s, long trunc);

// sum q^{4k1^2+3k1k2+k2^2} (1 - q^{k1} + q^{k1+k2}) / ((q)_{k1} (q)_{k2}).
QSeries quasiparticle_chi(long trunc);

enum class Module { V0, VHalf, VSixteenth };
enum class Side { Classical, New };
const char* name(Module m);
QSeries module_character(Module which, Side side, long trunc);

enum class Block { A, B, C, D, E };
const char* name(Block b);
inline constexpr Block kBlocks[] = {Block::A, Block::B, Block::C, Block::D, Block::E};

// Double sums in (m, k) with Gaussian binomials.
TQSeries closed_form(Block which, long trunc);
// The same series as two-index quasi-particle sums with a t^a q^b prefactor.
TQSeries quasi_particle_form(Block which, long trunc);

// The five q-difference equations in t and the t = 0 initial conditions.
CheckItems functional_equation_check(long trunc);

// Generating function of p(n, m) as a quasi-particle sum.
TQSeries P_of_t_q(long trunc);
// P(t^{-2}, t q).
TQSeries bigraded_character(long trunc);

}  // namespace iwb::chars
