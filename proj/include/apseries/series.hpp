#pragma once

#include <functional>

#include "apseries/real.hpp"

namespace apseries {

enum class SumMethod {
  direct_geometric,
  cvz_alternating,
  levin_u,
  richardson,
  quadrature,
  exact
};

// Result of an infinite-sum evaluation. trunc_err covers the unsummed tail /
// extrapolation residual (rigorous for direct_geometric and totally monotone
// cvz inputs, heuristic cross-order discrepancy for levin_u); round_err is the
// accumulated working-precision budget. tolerance_met reports whether the
// engine believes est_err() <= the requested target.
struct SumResult {
  Real value;
  Real trunc_err;
  Real round_err;
  long terms_used = 0;
  SumMethod method = SumMethod::exact;
  bool tolerance_met = true;
  // optional rigorous-but-loose raw-tail bound, reported alongside the
  // heuristic error for accelerated central-binomial sums
  bool has_loose_bound = false;
  Real loose_bound;

  Real est_err() const { return trunc_err + round_err; }
};

// How the terms of a series decay; drives engine dispatch in sum_adaptive.
struct DecayClass {
  enum Kind { geometric, alternating, algebraic, algebraic_log } kind;
  double ratio_bound = 0.5;  // geometric: |t_{n+1}| <= ratio_bound |t_n| eventually
  double exponent = 2.0;     // algebraic: |t_n| ~ n^-exponent
  int log_power = 0;         // algebraic_log: extra log(n)^log_power factor

  static DecayClass geom(double ratio);
  static DecayClass alt() { return {alternating, 0, 0, 0}; }
  static DecayClass alg(double expo) { return {algebraic, 0, expo, 0}; }
  static DecayClass alg_log(double expo, int logp) { return {algebraic_log, 0, expo, logp}; }
};

struct TermSeq {
  std::function<Real(long)> term;  // signed term at index n
  DecayClass decay;
  long first_index = 1;
};

// Dispatches on the decay class: direct summation with a rigorous geometric
// tail bound, CVZ acceleration for alternating series, Levin-u extrapolation
// for algebraic (optionally log-weighted) decay.
SumResult sum_adaptive(const TermSeq& seq, const PrecisionCtx& ctx);

// --- engine cores (exposed for reuse by the identity modules and tests) ---

// Sum of term(n), n >= first; ratio_at(n) must upper-bound |t_{m+1}/t_m| for
// all m >= n (values < 1). Stops when |t| * r/(1-r) <= target. work_bits = 0
// picks a default from ctx.
SumResult sum_geometric_fn(const std::function<Real(long)>& term, long first,
                           const std::function<double(long)>& ratio_at,
                           const PrecisionCtx& ctx, long work_bits = 0);

// sign0 * sum_{k>=0} (-1)^k a_k via the Cohen–Rodríguez-Villegas–Zagier
// Chebyshev scheme; abs_term(k) = a_k >= 0. The error bound (3+sqrt8)^{-n}
// is rigorous-grade when {a_k} is totally monotone.
SumResult sum_cvz_alternating(const std::function<Real(long)>& abs_term, int sign0,
                              const PrecisionCtx& ctx);

struct AccelOpts {
  long order_cap = 400;
  long stall_window = 25;
};

// Working precision used by the Levin driver (callers generating stateful
// terms should compute them at this precision).
long accel_work_bits(const PrecisionCtx& ctx, const AccelOpts& opts = {});

// Levin u-transform (beta = 1) over the partial sums of term(n), n >= first.
// Heuristic error: |estimate(k) - estimate(k-2)| across orders.
SumResult sum_levin_u(const std::function<Real(long)>& term, long first,
                      const PrecisionCtx& ctx, const AccelOpts& opts = {});

// Extrapolates the limit of a slowly convergent sum from partial sums taken
// at geometrically spaced cutoffs.  The tail past N is modeled as
//   N^theta P0(log N) + N^(theta-1) P1(log N) + N^(theta-2) P2(log N)
// with deg Pi <= log_powers; requires exactly 2 + 3(log_powers+1) increasing
// nodes.  The error estimate compares solves on two shifted node windows.
SumResult extrapolate_log_power(const std::vector<long>& nodes,
                                const std::vector<Real>& sums, const Rat& theta,
                                int log_powers, const PrecisionCtx& ctx);

// --- central-binomial series over star sums of twos ---

// sum_{n>=1} C(2n,n)/(4^n n) * zeta_n^*({2}_r); Levin-accelerated, with the
// rigorous raw-tail bound attached (loose_bound).
SumResult apery_series(int r, const PrecisionCtx& ctx);

// Same series damped by (1-z)^n, z in [0,1]; direct summation with a
// rigorous geometric tail bound (z = 0 falls back to acceleration).
SumResult apery_series_z(int r, const Real& z, const PrecisionCtx& ctx);

// zeta^*({2}_r) * 2 / (sqrt(pi) * sqrt(N)): rigorous bound on the raw tail
// sum_{n>N} C(2n,n)/(4^n n) zeta_n^*({2}_r).
Real tail_bound_cb(long n_cut, int r, const PrecisionCtx& ctx);

}  // namespace apseries
