#include "apseries/mixed_values.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <utility>

#include "apseries/special_functions.hpp"

namespace apseries {

namespace {

std::map<std::pair<long, long>, QuadratureRule> g_rule_cache;
std::mutex g_rule_mutex;

QuadratureRule build_rule(long n, long bits) {
  const long w = bits + 32;
  QuadratureRule rule;
  rule.nodes.assign(static_cast<size_t>(n), Real::zero(w));
  rule.weights.assign(static_cast<size_t>(n), Real::zero(w));
  const Real one(1L, w);
  const Real stop = Real::pow2(-(bits + 8), 64);
  for (long i = 0; i < n / 2; ++i) {
    // Legendre root in (0,1) half of (-1,1), Chebyshev seed, Newton
    double seed = std::cos(M_PI * (static_cast<double>(i) + 0.75) /
                           (static_cast<double>(n) + 0.5));
    Real x = Real::from_double(seed, w);
    Real deriv(0L, w);
    for (int it = 0; it < 64; ++it) {
      Real pm(1L, w), pc = x;
      for (long k = 2; k <= n; ++k) {
        Real pn = (x * pc * (2 * k - 1) - pm * (k - 1)) / k;
        pm = pc;
        pc = pn;
      }
      deriv = (x * pc - pm) * n / (x * x - one);
      Real dx = pc / deriv;
      x -= dx;
      if (abs(dx) < stop) break;
    }
    // map +-x to (0,1); weight 2/((1-x^2) P'^2) halves under the map
    Real wt = one / ((one - x * x) * deriv * deriv);
    rule.nodes[static_cast<size_t>(i)] = (one - x) / 2L;
    rule.nodes[static_cast<size_t>(n - 1 - i)] = (one + x) / 2L;
    rule.weights[static_cast<size_t>(i)] = wt;
    rule.weights[static_cast<size_t>(n - 1 - i)] = wt;
  }
  return rule;
}

// strict-chain state over 1/m^2; row n holds zeta_n({2}_j)
struct StrictTwos {
  std::vector<Real> v;
  long n = 0;
  StrictTwos(int depth, long w) : v(static_cast<size_t>(depth) + 1, Real::zero(w)) {
    v[0] = Real(1L, w);
  }
  void step_to(long n_new) {
    while (n < n_new) {
      ++n;
      for (size_t j = v.size() - 1; j >= 1; --j) {
        Real t = v[j - 1];
        t.div_si(n);
        t.div_si(n);
        v[j] += t;
        if (j == 1) break;
      }
    }
  }
};

// central-binomial ratio with star chains of 1/m^2 and strict/star chains
// of the half-shifted weight 1/(m - 1/2) = 2/(2m-1)
struct CbChainState {
  long n = 0;
  Real b;
  std::vector<Real> s2, ts, tss;
  long w;
  CbChainState(int r, int k, long bits) : w(bits) {
    b = Real(1L, w);
    s2.assign(static_cast<size_t>(r) + 1, Real::zero(w));
    s2[0] = Real(1L, w);
    ts.assign(static_cast<size_t>(k) + 1, Real::zero(w));
    ts[0] = Real(1L, w);
    tss.assign(static_cast<size_t>(k) + 1, Real::zero(w));
    tss[0] = Real(1L, w);
  }
  void step_to(long n_new) {
    while (n < n_new) {
      const long m = n + 1;
      b = b * (2 * m - 1) / (2 * m);
      const Real inv_m2 = Real(1L, w) / Real(m * m, w);
      for (size_t j = 1; j < s2.size(); ++j) s2[j] += s2[j - 1] * inv_m2;
      const Real d = Real(2L, w) / Real(2 * m - 1, w);
      for (size_t i = ts.size() - 1; i >= 1; --i) {
        ts[i] += ts[i - 1] * d;
        if (i == 1) break;
      }
      for (size_t j = 1; j < tss.size(); ++j) tss[j] += tss[j - 1] * d;
      ++n;
    }
  }
};

}  // namespace

const QuadratureRule& gauss_legendre01(long n, long bits) {
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("gauss_legendre01: n must be even, >= 2");
  std::lock_guard<std::mutex> lk(g_rule_mutex);
  auto key = std::make_pair(n, bits);
  auto it = g_rule_cache.find(key);
  if (it == g_rule_cache.end())
    it = g_rule_cache.emplace(key, build_rule(n, bits)).first;
  return it->second;
}

SumResult li_integral(int r, const PrecisionCtx& ctx) {
  if (r < 0) throw std::invalid_argument("li_integral: negative depth");
  SumResult res;
  const long bits = ctx.precision_bits;
  const Real log2v = const_log2(bits + 16);
  if (r == 0) {
    res.method = SumMethod::exact;
    res.value = (log2v * 2L).round_to(bits);
    res.round_err = Real::pow2(-bits + 2, 64) * 2L;
    return res;
  }

  const Real eps = ctx.target_abs_err;
  const long w = bits + 32;
  PrecisionCtx nctx = ctx;
  nctx.precision_bits = w;
  nctx.target_abs_err = eps * Real(Rat(1, 16384), 64);
  PrecisionCtx zctx = ctx;
  zctx.target_abs_err = eps * Real(Rat(1, 8), 64);
  const Real zr = zeta_2r(r, zctx);
  const Real one(1L, w);

  // the integrand's derivatives blow up logarithmically at t = 1 only, so a
  // fixed rule on panels graded dyadically toward 1 converges spectrally on
  // every panel; the uncovered sliver [1-h, 1] is bounded by
  // |Li(t^2) - zr| <= B (1-t^2)(2 + log 1/(1-t^2)), B <= zeta(2)^(r-1)
  const QuadratureRule& rule = gauss_legendre01(32, bits);
  res.method = SumMethod::quadrature;
  Real acc = Real::zero(w);
  Real node_err = Real::zero(64);
  Real tail(1L, 64);
  long panels = 0;
  Real lo = Real::zero(w);
  for (long j = 1; j <= 2 * bits; ++j) {
    const Real hi = one - Real::pow2(-j, w);
    const Real len = hi - lo;
    Real pacc = Real::zero(w);
    for (size_t i = 0; i < rule.nodes.size(); ++i) {
      const Real t = lo + len * rule.nodes[i];
      SumResult li = mpl_2r(r, (t * t).round_to(w), nctx);
      pacc += rule.weights[i] * (li.value - zr) / (one + t);
      node_err += rule.weights[i] * li.est_err();
    }
    acc += pacc * len;
    res.terms_used += static_cast<long>(rule.nodes.size());
    ++panels;
    lo = hi;
    tail = Real::pow2(-2 * j + 4, 64) * Real(3L + j, 64) * 4L;
    if (tail * 2L <= eps * Real(Rat(1, 4), 64)) break;
  }
  res.value = (acc * 2L + zr * log2v * 2L).round_to(bits);
  // pow2(-115) covers the fixed-rule spectral residual per panel (worst
  // Bernstein ellipse over the grading is the widest panel's, ~(2+sqrt3))
  res.trunc_err = tail * 2L + node_err * 2L + zctx.target_abs_err +
                  Real::pow2(-115, 64) * (panels + 1);
  res.round_err = Real::pow2(-bits + 6, 64) * (abs(res.value) + 1L);
  res.tolerance_met = res.est_err() <= eps;
  return res;
}

SumResult integral_series_lhs(int r, const PrecisionCtx& ctx) {
  if (r < 0) throw std::invalid_argument("integral_series_lhs: negative depth");
  PrecisionCtx actx = ctx;
  actx.target_abs_err = ctx.target_abs_err / (4 * (r + 1));
  SumResult res;
  res.method = SumMethod::levin_u;
  Real acc = Real::zero(ctx.precision_bits + 32);
  Real terr = Real::zero(64), rerr = Real::zero(64), lb = Real::zero(64);
  bool have_lb = false;
  for (int j = 1; j <= r + 1; ++j) {
    const Real z = zeta_2r(r - j + 1, actx);
    SumResult a = apery_series(j - 1, actx);
    Real signed_z = (j % 2 == 1) ? z : -z;
    acc += signed_z * a.value;
    terr += z * a.trunc_err;
    rerr += z * a.round_err;
    res.terms_used += a.terms_used;
    if (!a.tolerance_met) res.tolerance_met = false;
    if (a.has_loose_bound) {
      lb += z * a.loose_bound;
      have_lb = true;
    }
  }
  res.value = acc.round_to(ctx.precision_bits);
  res.trunc_err = terr;
  res.round_err = rerr + Real::pow2(-ctx.precision_bits + 4, 64) * (abs(res.value) + 1L);
  res.has_loose_bound = have_lb;
  res.loose_bound = lb;
  return res;
}

SumResult alt_harmonic_series(int r, const PrecisionCtx& ctx) {
  if (r < 1) throw std::invalid_argument("alt_harmonic_series: need r >= 1");
  PrecisionCtx part = ctx;
  part.target_abs_err = ctx.target_abs_err * Real(Rat(1, 8), 64);

  SumResult zs = mpl_2r(r, Real(1L, 64), part);

  AccelOpts opts;
  const long w = accel_work_bits(ctx, opts);
  auto st = std::make_shared<StrictTwos>(r - 1, w);
  const Real inner_scale = Real(Rat(1, 1024), 64);
  PrecisionCtx base = ctx;
  base.precision_bits = w;
  auto term = [st, w, base, inner_scale](long n) {
    st->step_to(n - 1);
    PrecisionCtx ictx = base;
    ictx.target_abs_err = base.target_abs_err * inner_scale / (n * n);
    auto tail = [n, w](long k) { return Real(1L, w) / Real(2 * n + 1 + k, w); };
    SumResult rn = sum_cvz_alternating(tail, +1, ictx);
    Real t = rn.value * st->v.back();
    t.div_si(n);
    t.div_si(n);
    return t;
  };
  SumResult rem = sum_levin_u(term, 1, part, opts);

  SumResult res = rem;
  const Real l2 = const_log2(w);
  res.value = (rem.value - l2 * zs.value).round_to(ctx.precision_bits);
  res.trunc_err = rem.trunc_err + l2 * zs.est_err() + part.target_abs_err;
  res.round_err = rem.round_err + Real::pow2(-ctx.precision_bits + 4, 64) * (abs(res.value) + 1L);
  res.terms_used = rem.terms_used + zs.terms_used;
  res.tolerance_met = rem.tolerance_met && zs.tolerance_met;
  return res;
}

Real alt_harmonic_closed_form(int r, const PrecisionCtx& ctx) {
  if (r < 1) throw std::invalid_argument("alt_harmonic_closed_form: need r >= 1");
  const long w = ctx.precision_bits + 32;
  PrecisionCtx ictx = ctx;
  ictx.precision_bits = w;
  Real acc = Real::zero(w);
  const Real one(1L, w);
  for (int j = 1; j <= r; ++j) {
    Real term = (one - Real::pow2(-2 * j, w)) * zeta_2r(r - j, ictx) * zeta_int(2 * j + 1, ictx);
    if (j % 2 == 1) acc -= term;
    else acc += term;
  }
  return acc.round_to(ctx.precision_bits);
}

namespace {

SumResult weighted_series(int r, bool odd_weight, const PrecisionCtx& ctx) {
  if (r < 1) throw std::invalid_argument("weighted series: need r >= 1");
  // harmonic-type weights put a log factor on the 1/n^2 decay, which stalls
  // consecutive-term acceleration; the tail expands exactly as
  //   N^-1 (a0 + b0 log N) + N^-2 (...) + N^-3 (...) + O(N^-4 log N),
  // so extrapolate partial sums, starting the window deep enough that the
  // unmodelled order certifies the target
  const long w = ctx.precision_bits + 96;
  const size_t need = 2 + 3 * 2;
  const long tb = std::max<long>(8, -ctx.target_abs_err.exp2_of() + 1);
  long p = 6;
  while (4.0 * static_cast<double>(p) - std::log2(static_cast<double>(p)) <
         static_cast<double>(tb + 6))
    ++p;
  std::vector<long> nodes(need);
  long next_n = 1L << p;
  for (size_t j = 0; j < need; ++j, next_n *= 2) nodes[j] = next_n;
  StrictTwos st(r - 1, w);
  Real hsum = Real::zero(w);
  std::vector<Real> sums;
  sums.reserve(need);
  Real s = Real::zero(w);
  size_t at = 0;
  for (long n = 1; n <= nodes.back(); ++n) {
    st.step_to(n - 1);
    if (odd_weight)
      hsum += Real(2L, w) / Real(2 * n - 1, w);
    else
      hsum += Real(1L, w) / Real(n, w);
    Real t = hsum * st.v.back();
    t.div_si(n);
    t.div_si(n);
    s += t;
    if (n == nodes[at]) {
      sums.push_back(s);
      ++at;
    }
  }
  return extrapolate_log_power(nodes, sums, Rat(-1), 1, ctx);
}

}  // namespace

SumResult h_weighted_series(int r, const PrecisionCtx& ctx) {
  return weighted_series(r, false, ctx);
}

SumResult odd_weighted_series(int r, const PrecisionCtx& ctx) {
  return weighted_series(r, true, ctx);
}

SumResult t_weighted_cb_series(int r, int k, const PrecisionCtx& ctx) {
  if (r < 0 || k < 0) throw std::invalid_argument("t_weighted_cb_series: negative depth");
  const size_t rr = static_cast<size_t>(r), kk = static_cast<size_t>(k);
  if (k >= 1) {
    // terms decay like n^(-3/2) log^k n; extrapolate geometric partial sums
    const size_t need = 2 + 3 * (static_cast<size_t>(k) + 1);
    const long w = ctx.precision_bits + 96;
    CbChainState st(r, k, w);
    std::vector<long> nodes(need);
    long next_n = 64;
    for (size_t j = 0; j < need; ++j, next_n *= 2) nodes[j] = next_n;
    std::vector<Real> sums;
    sums.reserve(need);
    Real s = Real::zero(w);
    size_t at = 0;
    for (long n = 1; n <= nodes.back(); ++n) {
      st.step_to(n);
      s += st.b * st.s2[rr] * st.ts[kk] / n;
      if (n == nodes[at]) {
        sums.push_back(s);
        ++at;
      }
    }
    return extrapolate_log_power(nodes, sums, Rat(-1, 2), k, ctx);
  }
  AccelOpts opts;
  const long w = accel_work_bits(ctx, opts);
  auto st = std::make_shared<CbChainState>(r, k, w);
  auto term = [st, rr, kk](long n) {
    st->step_to(n);
    return st->b * st->s2[rr] * st->ts[kk] / n;
  };
  return sum_levin_u(term, 1, ctx, opts);
}

SumResult t_weighted_cb_rhs(int r, int k, const PrecisionCtx& ctx) {
  if (r < 0 || k < 0) throw std::invalid_argument("t_weighted_cb_rhs: negative depth");
  const long w = ctx.precision_bits + 64;
  auto st = std::make_shared<CbChainState>(0, k, w);
  const long p = 2 * r + 1;
  auto abs_term = [st, k, p, w](long j) {
    const long n = j + 1;
    st->step_to(n);
    Real g = Real::zero(w);
    for (int i = 0; i <= k; ++i)
      g += st->ts[static_cast<size_t>(i)] * st->tss[static_cast<size_t>(k - i)];
    return abs(g * 2L / pow_int(Real(n, w), p));
  };
  return sum_cvz_alternating(abs_term, +1, ctx);
}

}  // namespace apseries
