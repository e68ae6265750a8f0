#pragma once

#include "apseries/real.hpp"
#include "apseries/series.hpp"

#include <vector>

namespace apseries {

// Gauss-Legendre rule mapped to (0,1), nodes ascending; n must be even.
// Rules are cached per (n, bits).
struct QuadratureRule {
    std::vector<Real> nodes;
    std::vector<Real> weights;
};
const QuadratureRule& gauss_legendre01(long n, long bits);

// 2 * int_0^1 Li over the depth-r index (2,...,2) of t^2, divided by (1+t),
// dt.  The constant endpoint part zeta({2}_r)/(1+t) integrates to log 2 in
// closed form; the vanishing remainder is integrated by Gauss-Legendre with
// node doubling (32 -> 1024) until two successive levels agree.
SumResult li_integral(int r, const PrecisionCtx& ctx);

// sum_{j=1}^{r+1} (-1)^{j+1} zeta({2}_{r-j+1}) A(j-1), where A(s) is the
// central-binomial series over depth-s star chains of twos (A(0) = 2 log 2,
// also evaluated by the series engine).
SumResult integral_series_lhs(int r, const PrecisionCtx& ctx);

// sum_{n>=1} hbar_{2n} zeta_{n-1}({2}_{r-1}) / n^2 for r >= 1, with
// hbar_{2n} = sum_{j=1}^{2n} (-1)^j / j.  Splits hbar_{2n} = -log2 + R_n
// where R_n = sum_{k>=0} (-1)^k/(2n+1+k) in (0, 1/(4n)), evaluates the
// log2 part against the series value of zeta({2}_r), and accelerates the
// R_n-weighted remainder.
SumResult alt_harmonic_series(int r, const PrecisionCtx& ctx);

// sum_{j=1}^{r} (-1)^j (1 - 4^{-j}) zeta({2}_{r-j}) zeta(2j+1)
Real alt_harmonic_closed_form(int r, const PrecisionCtx& ctx);

// sum_{n>=1} H_n zeta_{n-1}({2}_{r-1}) / n^2
SumResult h_weighted_series(int r, const PrecisionCtx& ctx);

// sum_{n>=1} (2 H_{2n} - H_n) zeta_{n-1}({2}_{r-1}) / n^2; the weight equals
// the half-shifted harmonic number sum_{m<=n} 1/(m - 1/2)
SumResult odd_weighted_series(int r, const PrecisionCtx& ctx);

// sum_{n>=1} C(2n,n)/(4^n n) * (depth-r star chains of 1/m^2)
//                            * (depth-k strict chains of 1/(m-1/2))
SumResult t_weighted_cb_series(int r, int k, const PrecisionCtx& ctx);

// 2 sum_{n>=1} (-1)^{n-1} / n^{2r+1} * sum_{i+j=k} (depth-i strict chains
// of 1/(m-1/2)) * (depth-j star chains of 1/(m-1/2))
SumResult t_weighted_cb_rhs(int r, int k, const PrecisionCtx& ctx);

}  // namespace apseries
