#include "apseries/series.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>
#include <vector>

#include "apseries/special_functions.hpp"

namespace apseries {

DecayClass DecayClass::geom(double ratio) {
  if (!(ratio > 0 && ratio < 1))
    throw std::invalid_argument("DecayClass: geometric ratio must be in (0,1)");
  return {geometric, ratio, 0, 0};
}

namespace {

long ceil_log2(long n) {
  long lg = 0;
  while ((1L << lg) < n && lg < 62) ++lg;
  return lg;
}

// bits of accuracy requested by eps (eps = 2^-b gives ~b)
long bits_of(const Real& eps) { return std::max<long>(8, -eps.exp2_of() + 1); }

Real round_budget(long work_bits, long terms, const Real& scale) {
  Real b = Real::pow2(-(work_bits - ceil_log2(std::max<long>(terms, 2)) - 4), 64);
  b *= (abs(scale) + 1L);
  return b;
}

}  // namespace

SumResult sum_geometric_fn(const std::function<Real(long)>& term, long first,
                           const std::function<double(long)>& ratio_at,
                           const PrecisionCtx& ctx, long work_bits) {
  const Real eps = ctx.target_abs_err;
  const long w = work_bits > 0 ? work_bits : ctx.sum_bits(4096);
  Real s = Real::zero(w);
  Real prev_abs = Real::zero(w);
  double obs1 = 0, obs2 = 0, obs3 = 0;
  const Real half_eps = eps * Real(Rat(1, 2), 64);
  SumResult res;
  res.method = SumMethod::direct_geometric;
  bool seen_nonzero = false;
  long n = first;
  for (;; ++n) {
    if (n - first >= ctx.max_terms_geometric) {
      res.tolerance_met = false;
      break;
    }
    Real t = term(n);
    s += t;
    const Real ta = abs(t);
    if (!prev_abs.is_zero()) {
      const double r = (ta / prev_abs).to_double();
      obs3 = obs2;
      obs2 = obs1;
      obs1 = r;
    }
    prev_abs = ta;
    if (!ta.is_zero()) seen_nonzero = true;
    // a leading zero block must not trip the tail bound
    if (!seen_nonzero) continue;
    double rho = ratio_at(n);
    rho = std::max({rho, obs1, obs2, obs3});
    if (rho < 1.0) {
      Real bound = ta;
      bound.mul_d(rho / (1.0 - rho));
      if (bound <= half_eps) {
        res.trunc_err = bound;
        break;
      }
    }
  }
  res.terms_used = n - first + 1;
  res.round_err = round_budget(w, res.terms_used, s);
  res.value = s.round_to(ctx.precision_bits);
  if (!res.tolerance_met) res.trunc_err = abs(prev_abs);
  return res;
}

SumResult sum_cvz_alternating(const std::function<Real(long)>& abs_term, int sign0,
                              const PrecisionCtx& ctx) {
  const Real eps = ctx.target_abs_err;
  // order from the (3+sqrt8)^-n decay; a0 probed at low precision
  Real a0 = abs_term(0);
  long mag = a0.is_zero() ? 0 : std::max<long>(0, a0.exp2_of());
  long n = static_cast<long>(0.3933 * (bits_of(eps) + mag)) + 8;
  n = std::max<long>(n, 12);
  const long w = bits_of(eps) + 48 + ceil_log2(n) + mag;

  Real d = pow_int(Real(3L, w) + sqrt(Real(8L, w)), n);
  Real dinv = 1L / d;
  d = (d + dinv) * Real(Rat(1, 2), w);
  Real b(-1L, w), c = -d, s = Real::zero(w);
  for (long k = 0; k < n; ++k) {
    c = b - c;
    s.fma(c, abs_term(k).round_to(w));
    // b *= (k+n)(k-n) / ((k+1/2)(k+1))
    b.mul_si(k + n);
    b.mul_si(k - n);
    b.mul_si(2);
    b.div_si(2 * k + 1);
    b.div_si(k + 1);
  }
  s /= d;
  if (sign0 < 0) s.neg();

  SumResult res;
  res.method = SumMethod::cvz_alternating;
  res.terms_used = n;
  res.trunc_err = (a0 + Real::pow2(-bits_of(eps) - 8, 64)) *
                  pow_int(Real(3L, 64) + sqrt(Real(8L, 64)), -n) * 8L;
  res.round_err = round_budget(w, n, s);
  res.value = s.round_to(ctx.precision_bits);
  res.tolerance_met = res.est_err() <= eps;
  return res;
}

long accel_work_bits(const PrecisionCtx& ctx, const AccelOpts& opts) {
  return ctx.precision_bits + 64 + opts.order_cap;
}

SumResult sum_levin_u(const std::function<Real(long)>& term, long first,
                      const PrecisionCtx& ctx, const AccelOpts& opts) {
  const Real eps = ctx.target_abs_err;
  const long w = accel_work_bits(ctx, opts);
  const long cap = std::min(opts.order_cap, ctx.max_terms_accel);

  // counter-diagonal arrays: after m pushes, num[k] = N_k^{(m-k)}
  std::vector<Real> num, den;
  num.reserve(static_cast<size_t>(cap) + 1);
  den.reserve(static_cast<size_t>(cap) + 1);
  Real partial = Real::zero(w);

  Real est = Real::zero(w), prev1 = Real::zero(w), prev2 = Real::zero(w);
  Real best = Real::zero(w), best_err = Real::zero(w);
  bool have_best = false;
  long best_at = 0;
  long stable = 0;
  SumResult res;
  res.method = SumMethod::levin_u;

  bool seen_nonzero = false;
  long m = -1;  // transform push count; lags j over any leading zero block
  for (long j = 0; j <= cap; ++j) {
    Real a = term(first + j).round_to(w);
    if (!seen_nonzero && a.is_zero()) {
      res.terms_used = j + 1;
      continue;
    }
    seen_nonzero = true;
    partial += a;
    ++m;
    // u-variant remainder estimate: omega_m = (beta + m) a_m, beta = 1
    Real omega = a * (m + 1);
    if (omega.is_zero()) {
      // series terminated: the partial sum is exact
      res.terms_used = j + 1;
      res.trunc_err = Real::zero(64);
      res.round_err = round_budget(w, m + 1, partial);
      res.value = partial.round_to(ctx.precision_bits);
      res.tolerance_met = true;
      return res;
    }
    std::vector<Real> nnum(static_cast<size_t>(m) + 1, Real::zero(w));
    std::vector<Real> nden(static_cast<size_t>(m) + 1, Real::zero(w));
    nden[0] = 1L / omega;
    nnum[0] = partial * nden[0];
    for (long k = 1; k <= m; ++k) {
      // c_{k,n} = (b+n)(b+n+k-1)^{k-2} / (b+n+k)^{k-1},  b = 1, n = m-k
      const long nn = m - k;
      Real c = pow_int(Real(nn + k, w), k - 2);
      c.mul_si(nn + 1);
      c /= pow_int(Real(nn + k + 1, w), k - 1);
      nnum[static_cast<size_t>(k)] = nnum[static_cast<size_t>(k) - 1];
      nnum[static_cast<size_t>(k)] -= c * num[static_cast<size_t>(k) - 1];
      nden[static_cast<size_t>(k)] = nden[static_cast<size_t>(k) - 1];
      nden[static_cast<size_t>(k)] -= c * den[static_cast<size_t>(k) - 1];
    }
    num = std::move(nnum);
    den = std::move(nden);
    res.terms_used = j + 1;
    if (den[static_cast<size_t>(m)].is_zero()) continue;
    prev2 = prev1;
    prev1 = est;
    est = num[static_cast<size_t>(m)] / den[static_cast<size_t>(m)];
    if (m < 4) continue;
    const Real err = abs(est - prev2);
    if (!have_best || err < best_err) {
      have_best = true;
      best = est;
      best_err = err;
      best_at = m;
    }
    if (err <= eps * Real(Rat(1, 2), 64)) {
      if (++stable >= 2) break;
    } else {
      stable = 0;
    }
    if (m - best_at > opts.stall_window) break;  // stagnation: stop at best
  }

  if (!have_best) {
    // never produced two comparable estimates: fall back to the partial sum
    best = partial;
    best_err = abs(est - partial) + abs(partial) + 1L;
  }
  res.trunc_err = best_err.round_to(64);
  res.round_err = round_budget(ctx.precision_bits + 32, res.terms_used, best);
  res.value = best.round_to(ctx.precision_bits);
  res.tolerance_met = res.est_err() <= eps;
  return res;
}

namespace {

// Gaussian elimination with partial pivoting; returns the first unknown.
Real solve_first_unknown(std::vector<std::vector<Real>>& A, std::vector<Real>& b) {
  const size_t u = b.size();
  for (size_t c = 0; c < u; ++c) {
    size_t piv = c;
    for (size_t r = c + 1; r < u; ++r)
      if (abs(A[r][c]) > abs(A[piv][c])) piv = r;
    if (A[piv][c].is_zero()) throw std::runtime_error("extrapolate: singular system");
    std::swap(A[c], A[piv]);
    std::swap(b[c], b[piv]);
    for (size_t r = c + 1; r < u; ++r) {
      const Real f = A[r][c] / A[c][c];
      for (size_t cc = c; cc < u; ++cc) A[r][cc] -= f * A[c][cc];
      b[r] -= f * b[c];
    }
  }
  std::vector<Real> x(u);
  for (size_t i = u; i-- > 0;) {
    Real s = b[i];
    for (size_t cc = i + 1; cc < u; ++cc) s -= A[i][cc] * x[cc];
    x[i] = s / A[i][i];
  }
  return x[0];
}

}  // namespace

SumResult extrapolate_log_power(const std::vector<long>& nodes,
                                const std::vector<Real>& sums, const Rat& theta,
                                int log_powers, const PrecisionCtx& ctx) {
  const int lp = log_powers;
  const size_t need = 2 + 3 * (static_cast<size_t>(lp) + 1);
  if (nodes.size() != need || sums.size() != need)
    throw std::invalid_argument("extrapolate_log_power: node count mismatch");
  const long w = ctx.precision_bits + 128;
  const Real th(theta, w);

  auto solve = [&](size_t lo, int levels) {
    const size_t u = 1 + static_cast<size_t>(levels) * (static_cast<size_t>(lp) + 1);
    std::vector<std::vector<Real>> A(u, std::vector<Real>(u, Real::zero(w)));
    std::vector<Real> b(u, Real::zero(w));
    for (size_t i = 0; i < u; ++i) {
      const long N = nodes[lo + i];
      const Real lg = log(Real(N, w));
      A[i][0] = Real(1L, w);
      size_t c = 1;
      for (int lev = 0; lev < levels; ++lev) {
        const Real npw = exp((th - Real(static_cast<long>(lev), w)) * lg);
        Real lpow(1L, w);
        for (int p = 0; p <= lp; ++p) {
          A[i][c++] = npw * lpow;
          lpow *= lg;
        }
      }
      b[i] = sums[lo + i].round_to(w);
    }
    return solve_first_unknown(A, b);
  };

  // two full-order solves on node windows shifted by one doubling; their
  // spread tracks the model residual at the larger window
  const Real lo_win = solve(0, 3);
  const Real hi_win = solve(1, 3);

  SumResult res;
  res.method = SumMethod::richardson;
  res.terms_used = nodes.back();
  res.value = hi_win.round_to(ctx.precision_bits);
  res.trunc_err = (abs(hi_win - lo_win) * 4L).round_to(64);
  res.round_err = abs(res.value) * Real::pow2(-ctx.precision_bits + 6, 64);
  res.tolerance_met = res.est_err() <= ctx.target_abs_err;
  return res;
}

SumResult sum_adaptive(const TermSeq& seq, const PrecisionCtx& ctx) {
  switch (seq.decay.kind) {
    case DecayClass::geometric: {
      const double rho = seq.decay.ratio_bound;
      return sum_geometric_fn(seq.term, seq.first_index, [rho](long) { return rho; }, ctx);
    }
    case DecayClass::alternating: {
      const long first = seq.first_index;
      Real t0 = seq.term(first);
      const int sign0 = t0.sign() >= 0 ? 1 : -1;
      auto abs_term = [&seq, first, sign0](long k) {
        Real t = seq.term(first + k);
        // strict sign alternation is part of the contract
        if (!t.is_zero() && t.sign() * sign0 != ((k % 2 == 0) ? 1 : -1))
          throw std::invalid_argument("sum_adaptive: alternating series does not alternate");
        return abs(t);
      };
      return sum_cvz_alternating(abs_term, sign0, ctx);
    }
    case DecayClass::algebraic:
    case DecayClass::algebraic_log:
      return sum_levin_u(seq.term, seq.first_index, ctx);
  }
  throw std::logic_error("sum_adaptive: unreachable");
}

namespace {

// incremental state for b_n = C(2n,n)/4^n and zeta_n^*({2}_j), j <= r
struct CbStarState {
  Real b;
  std::vector<Real> star;
  long n = 0;

  CbStarState(int r, long w) : b(1L, w), star(static_cast<size_t>(r) + 1, Real::zero(w)) {
    star[0] = Real(1L, w);
  }
  // advance to n+1
  void step() {
    ++n;
    b.mul_si(2 * n - 1);
    b.div_si(2 * n);
    for (size_t j = 1; j < star.size(); ++j) {
      Real t = star[j - 1];
      t.div_si(n);
      t.div_si(n);
      star[j] += t;
    }
  }
};

}  // namespace

SumResult apery_series(int r, const PrecisionCtx& ctx) {
  if (r < 0) throw std::invalid_argument("apery_series: r < 0");
  AccelOpts opts;
  const long w = accel_work_bits(ctx, opts);
  auto state = std::make_shared<CbStarState>(r, w);
  auto term = [state, r](long n) {
    while (state->n < n) state->step();
    Real t = state->b;
    t *= state->star[static_cast<size_t>(r)];
    t.div_si(n);
    return t;
  };
  SumResult res = sum_levin_u(term, 1, ctx, opts);
  res.has_loose_bound = true;
  res.loose_bound = tail_bound_cb(res.terms_used, r, ctx);
  return res;
}

SumResult apery_series_z(int r, const Real& z, const PrecisionCtx& ctx) {
  if (r < 0) throw std::invalid_argument("apery_series_z: r < 0");
  if (z.sign() < 0 || z > Real(1L, 64))
    throw std::domain_error("apery_series_z: z must lie in [0,1]");
  if (z == Real(1L, 64)) {
    SumResult res;
    res.method = SumMethod::exact;
    res.value = Real::zero(ctx.precision_bits);
    return res;
  }
  if (z.is_zero()) return apery_series(r, ctx);

  const long w = ctx.sum_bits(4096);
  auto state = std::make_shared<CbStarState>(r, w);
  Real one_minus_z = (Real(1L, w) - z.round_to(w));
  auto pw = std::make_shared<Real>(Real(1L, w));
  auto term = [state, pw, one_minus_z, r](long n) {
    while (state->n < n) state->step();
    *pw *= one_minus_z;
    Real t = state->b;
    t *= state->star[static_cast<size_t>(r)];
    t *= *pw;
    t.div_si(n);
    return t;
  };
  const double omz = one_minus_z.to_double();
  auto ratio = [omz](long n) {
    const double nn = static_cast<double>(n);
    return omz * (1.0 + 2.0 / ((nn + 1) * (nn + 1)));
  };
  return sum_geometric_fn(term, 1, ratio, ctx, w);
}

Real tail_bound_cb(long n_cut, int r, const PrecisionCtx& ctx) {
  if (n_cut < 1) throw std::invalid_argument("tail_bound_cb: N < 1");
  const long w = ctx.precision_bits;
  Real bound = zeta_star_2r(r, ctx) * 2L;
  bound /= sqrt(const_pi(w));
  bound /= sqrt(Real(n_cut, w));
  return bound;
}

}  // namespace apseries
