#pragma once

#include "apseries/real.hpp"
#include "apseries/series.hpp"

namespace apseries {

// zeta(m) for integer m >= 2, via the alternating eta series with CVZ
// acceleration and eta/(1 - 2^{1-m}). No pi dependence; cached per (m, bits).
Real zeta_int(int m, const PrecisionCtx& ctx);

// psi(s) for real s > 0: upward recurrence to s >= max(17, bits/4), then the
// Bernoulli asymptotic series (remainder bounded by the first omitted term).
Real digamma(const Real& s, const PrecisionCtx& ctx);

// log Gamma(s), s > 0.
Real log_gamma(const Real& s, const PrecisionCtx& ctx);

// Li_p(x) for integer p >= 1, x in [-1, 1], (p,x) != (1,1). Direct summation
// away from the unit circle, CVZ near x = -1, Euler reflection for p = 2 near
// x = 1.
Real polylog(int p, const Real& x, const PrecisionCtx& ctx);

// zeta({2}_r) = pi^{2r} / (2r+1)!  (r = 0 gives 1)
Real zeta_2r(int r, const PrecisionCtx& ctx);
// zeta^*({2}_r) = 2 eta(2r) for r >= 1 (1 for r = 0); used for tail bounds
Real zeta_star_2r(int r, const PrecisionCtx& ctx);

// Li_{{2}_r}(x) = sum_n zeta_{n-1}({2}_{r-1}) x^n / n^2 for x in [0, 1].
// Near x = 1 the limit zeta({2}_{r-1}) is split off so the remaining
// coefficients decay like 1/n (rigorous stopping bound); at x = 1 the series
// is Levin-accelerated.
SumResult mpl_2r(int r, const Real& x, const PrecisionCtx& ctx);

}  // namespace apseries
