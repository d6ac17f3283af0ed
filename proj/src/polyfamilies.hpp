#pragma once

#include "qseries.hpp"
#include "report.hpp"

namespace iwb::poly {

enum class Sector { Vac, Half, Sixteenth };
enum class Side { S, T };
const char* name(Sector s);
const char* name(Side s);

// Exact polynomial; n >= 0 for Vac and n >= 1 otherwise.
QSeries family_poly(Sector sector, Side side, long n);

// S_n = T_n for every n <= n_max, from n = 0 for Vac and n = 1 for
// Sixteenth. In the Half sector the identity starts at n = 2; n = 1 is
// reported as its own item (S_1 = 0, T_1 = 1).
CheckItems equality_check(Sector sector, long n_max);

// The eighth-order recurrence for S and for T (vacuum sector), 0 <= n <= n_max.
CheckItems recurrence_check(long n_max);

// The n-th polynomials against the limiting character mod q^trunc. Throws
// StabilizationNotReached when S_n and S_{n+1} differ below q^trunc.
CheckItems limit_check(Sector sector, long n, long trunc);

}  // namespace iwb::poly
