#include "apseries/hypergeometric.hpp"

#include <memory>
#include <stdexcept>

#include "apseries/special_functions.hpp"

namespace apseries {

namespace {

// q must be a (small) integer rational
long rat_to_long(const Rat& q) { return mpz_get_si(mpq_numref(q.raw())); }

bool is_nonpositive_int(const Rat& q) { return q.is_integer() && q.sign() <= 0; }

SumResult scaled(SumResult s, const Real& factor, long out_bits) {
  const Real f = abs(factor);
  s.value = (s.value * factor).round_to(out_bits);
  s.trunc_err = s.trunc_err * f;
  s.round_err = s.round_err * f + abs(s.value) * Real::pow2(-out_bits + 4, 64);
  return s;
}

SumResult exact_result(const Rat& v, long terms, const PrecisionCtx& ctx) {
  SumResult r;
  r.method = SumMethod::exact;
  r.terms_used = terms;
  r.value = Real(v, ctx.precision_bits);
  r.round_err = abs(r.value) * Real::pow2(-ctx.precision_bits + 2, 64);
  return r;
}

}  // namespace

Rat HypParams::excess() const {
  Rat s;
  for (const Rat& b : lower) s += b;
  for (const Rat& a : upper) s -= a;
  return s;
}

long HypParams::terminates_at() const {
  long best = -1;
  for (const Rat& a : upper)
    if (is_nonpositive_int(a)) {
      const long n = -rat_to_long(a);
      if (best < 0 || n < best) best = n;
    }
  return best;
}

void HypParams::validate() const {
  if (upper.size() > 3 || lower.size() > 2 || upper.size() > lower.size() + 1)
    throw std::invalid_argument("HypParams: need p <= 3, q <= 2, p <= q+1");
  for (const Rat& b : lower)
    if (is_nonpositive_int(b))
      throw std::domain_error("HypParams: nonpositive integer lower parameter");
}

SumResult hyp_eval(const HypParams& p, const Rat& z, const PrecisionCtx& ctx) {
  p.validate();
  if (z.abs() > Rat(1)) throw std::domain_error("hyp_eval: |z| > 1");

  const long N = p.terminates_at();
  if (N >= 0) {
    Rat term(1);
    Rat sum(1);
    for (long n = 0; n < N; ++n) {
      Rat num(1), den(n + 1);
      for (const Rat& a : p.upper) num = num * (a + Rat(n));
      for (const Rat& b : p.lower) den = den * (b + Rat(n));
      term = term * num * z / den;
      sum += term;
    }
    return exact_result(sum, N + 1, ctx);
  }

  if (z.is_zero()) return exact_result(Rat(1), 1, ctx);

  const Rat s = p.excess();
  const long wb = ctx.precision_bits + 64;

  // stateful term generator; indices must be requested in nondecreasing order
  struct St {
    long n = 0;
    Real t;
  };
  auto st = std::make_shared<St>();
  st->t = Real(1L, wb);
  std::vector<Real> up, lo;
  for (const Rat& a : p.upper) up.emplace_back(a, wb);
  for (const Rat& b : p.lower) lo.emplace_back(b, wb);
  auto term_at = [st, up, lo, z, wb](long n) {
    while (st->n < n) {
      const long m = st->n;
      Real num(1L, wb), den(0L, wb);
      den.add_si(m + 1);
      for (const Real& a : up) num = num * (a + m);
      for (const Real& b : lo) den = den * (b + m);
      st->t = st->t * num * Real(z, wb) / den;
      ++st->n;
    }
    return st->t;
  };

  if (z == Rat(1)) {
    if (!(s.sign() > 0))
      throw std::domain_error("hyp_eval: divergent at z = 1 (excess <= 0)");
    SumResult res = sum_levin_u(term_at, 0, ctx);
    res.method = SumMethod::levin_u;
    return res;
  }

  if (z == Rat(-1)) {
    if (!(s > Rat(-1)))
      throw std::domain_error("hyp_eval: divergent at z = -1 (excess <= -1)");
    auto abs_term = [term_at](long k) { return abs(term_at(k)); };
    SumResult res = sum_cvz_alternating(abs_term, +1, ctx);
    return res;
  }

  const double az = z.abs().to_double();
  double drift = s.to_double();
  drift = drift < 0.0 ? -drift : 0.0;  // ratio approaches |z| from above when excess < 0
  auto ratio_at = [az, drift](long n) {
    const double m = n < 1 ? 1.0 : static_cast<double>(n);
    const double r = az * (1.0 + (drift + 1.0) / m);
    return r < 0.9999 ? r : 0.9999;
  };
  return sum_geometric_fn(term_at, 0, ratio_at, ctx, wb);
}

SumResult pochhammer_ratio_series(const Rat& x, const PrecisionCtx& ctx) {
  if (!(x.abs() < Rat(1))) throw std::domain_error("pochhammer_ratio_series: need |x| < 1");
  const long wb = accel_work_bits(ctx);
  struct St {
    long n = 1;
    Real t;
  };
  auto st = std::make_shared<St>();
  const Real x2 = Real(x, wb) * Real(x, wb);
  // t_1 = (1/2) / (1 - x^2)
  st->t = (Real(1L, wb) / 2L) / (Real(1L, wb) - x2);
  auto term = [st, x2, wb](long n) {
    while (st->n < n) {
      const long m = st->n;  // step m -> m+1
      Real num(0L, wb);
      num.add_si(2 * m * m + m);       // 2 m (m + 1/2) = 2m^2 + m
      Real den = Real(static_cast<long>((m + 1) * (m + 1)), wb) - x2;
      st->t = st->t * num / (den * 2L);
      ++st->n;
    }
    return st->t;
  };
  return sum_levin_u(term, 1, ctx);
}

Real closed_3f2_x(const Rat& x, const PrecisionCtx& ctx) {
  if (!(x.abs() < Rat(1))) throw std::domain_error("closed_3f2_x: need |x| < 1");
  const long w = ctx.precision_bits + 16;
  PrecisionCtx ictx = ctx;
  ictx.precision_bits = w;
  const Real xr(x, w);
  const Real one(1L, w);
  const Real ps = digamma(one - xr / 2L, ictx) + digamma(one + xr / 2L, ictx) -
                  digamma(one - xr, ictx) - digamma(one + xr, ictx);
  const Real v = (const_log2(w) * 4L + ps * 2L) * (one - xr * xr);
  return v.round_to(ctx.precision_bits);
}

SumResult functional_3f2(const Rat& x, const Rat& t, const PrecisionCtx& ctx) {
  if (!(x.abs() < Rat(1))) throw std::domain_error("functional_3f2: need |x| < 1");
  if (!(t.sign() > 0 && t < Rat(1))) throw std::domain_error("functional_3f2: need t in (0,1)");
  const long wb = ctx.precision_bits + 32;
  const Real rt = sqrt(Real(t, wb));
  const Real one(1L, wb);
  const Real w = (rt - one) / (rt + one);  // in (-1, 0)
  const Real x2 = Real(x, wb) * Real(x, wb);

  struct St {
    long n = 1;
    Real pw;
  };
  auto st = std::make_shared<St>();
  st->pw = w;
  auto term = [st, w, x2, wb](long n) {
    while (st->n < n) {
      st->pw = st->pw * w;
      ++st->n;
    }
    Real den = x2 - Real(n * n, wb);
    Real val = st->pw * Real(2 * n, wb) / den;  // w^n (1/(x-n) - 1/(x+n))
    return val;
  };
  const double aw = abs(w).to_double();
  auto ratio_at = [aw](long n) {
    const double m = n < 1 ? 1.0 : static_cast<double>(n);
    const double r = aw * (1.0 + 1.0 / m);
    return r < 0.9999 ? r : 0.9999;
  };
  SumResult inner = sum_geometric_fn(term, 1, ratio_at, ctx, wb);
  const Real pref = (one - x2) * 2L / (one - Real(t, wb));
  return scaled(inner, pref, ctx.precision_bits);
}

SumResult partial_fraction_3f2(const Rat& a, const Rat& b, const Rat& x,
                               const PrecisionCtx& ctx) {
  if (!(a.sign() > 0 && b.sign() > 0 && a + b < Rat(3)))
    throw std::domain_error("partial_fraction_3f2: need a, b > 0 with a + b < 3");
  if (!(x.abs() < Rat(1)) || x.is_integer())
    throw std::domain_error("partial_fraction_3f2: need nonintegral |x| < 1");
  const long wb = ctx.precision_bits + 64;
  PrecisionCtx ictx = ctx;
  ictx.precision_bits = wb;

  const Real c1 = exp(log_gamma(Real(Rat(3) - a - b, wb), ictx) -
                      log_gamma(Real(Rat(3) - a, wb), ictx) -
                      log_gamma(Real(Rat(3) - b, wb), ictx));
  const Real ar(a, wb), br(b, wb);
  const Rat x2 = x * x;

  struct St {
    long k = 1;
    Real c;
  };
  auto st = std::make_shared<St>();
  st->c = c1;
  auto abs_term = [st, ar, br, x2, wb](long j) {
    const long k_target = j + 1;
    while (st->k < k_target) {
      const long k = st->k + 1;  // c_{k-1} -> c_k
      Real num = (ar + (k - 2)) * (br + (k - 2)) * k;
      Real den = ((1L - ar) + k) * ((1L - br) + k) * (k - 1);
      st->c = st->c * num / den;
      ++st->k;
    }
    const long k = k_target;
    Real g = st->c * Real(2 * k, wb) / Real(Rat(k * k) - x2, wb);
    return abs(g);
  };
  SumResult inner = sum_cvz_alternating(abs_term, +1, ctx);
  const Real pref = Real(Rat(1) - x2, ctx.precision_bits + 16);
  return scaled(inner, pref, ctx.precision_bits);
}

std::pair<SumResult, SumResult> quad_transform_pair(const Rat& a, const Rat& b,
                                                    const Rat& c, const Rat& z,
                                                    const PrecisionCtx& ctx) {
  if (!(z >= Rat(-1) && z.sign() < 0))
    throw std::domain_error("quad_transform_pair: need z in [-1, 0)");
  HypParams lhs{{a, b, c}, {a - b + Rat(1), a - c + Rat(1)}};
  HypParams rhs{{a - b - c + Rat(1), a / Rat(2), (a + Rat(1)) / Rat(2)},
                {a - b + Rat(1), a - c + Rat(1)}};
  const Rat omz = Rat(1) - z;
  const Rat zt = Rat(-4) * z / (omz * omz);

  SumResult left = hyp_eval(lhs, z, ctx);
  SumResult right = hyp_eval(rhs, zt, ctx);
  const long w = ctx.precision_bits + 16;
  const Real pref = exp(log(Real(omz, w)) * (-Real(a, w)));
  right = scaled(right, pref, ctx.precision_bits);
  return {left, right};
}

Real gauss_2f1_closed(const Rat& a, const Rat& b, const Rat& c,
                      const PrecisionCtx& ctx) {
  const Rat g1 = c, g2 = c - a - b, g3 = c - a, g4 = c - b;
  for (const Rat* g : {&g1, &g2, &g3, &g4})
    if (!(g->sign() > 0))
      throw std::domain_error("gauss_2f1_closed: gamma argument not positive");
  const long w = ctx.precision_bits + 16;
  PrecisionCtx ictx = ctx;
  ictx.precision_bits = w;
  const Real v = exp(log_gamma(Real(g1, w), ictx) + log_gamma(Real(g2, w), ictx) -
                     log_gamma(Real(g3, w), ictx) - log_gamma(Real(g4, w), ictx));
  return v.round_to(ctx.precision_bits);
}

namespace {

// shared state for the parametric series: rising-factorial ratio plus the
// star table of squares and optional strict/star shifted tables
struct ParamState {
  long n = 0;
  Real poch;             // (a)_n / n!  (lhs)  or  (a)_n / (1-a)_n  (rhs)
  std::vector<Real> s2;  // star chain sums of 1/m^2, depths 0..r
  std::vector<Real> ps;  // strict chain sums of 1/(m+a-1), depths 0..k
  std::vector<Real> qs;  // star chain sums of 1/(m-a), depths 0..k
  Real a;
  bool rhs_ratio = false;
  long wb = 0;

  ParamState(const Rat& av, long r, long k, bool rhs, long bits) : wb(bits) {
    poch = Real(1L, wb);
    a = Real(av, wb);
    rhs_ratio = rhs;
    s2.assign(static_cast<size_t>(r) + 1, Real::zero(wb));
    s2[0] = Real(1L, wb);
    if (k >= 0) {
      ps.assign(static_cast<size_t>(k) + 1, Real::zero(wb));
      ps[0] = Real(1L, wb);
      qs.assign(static_cast<size_t>(k) + 1, Real::zero(wb));
      qs[0] = Real(1L, wb);
    }
  }

  void step_to(long n_target) {
    while (n < n_target) {
      const long m = n + 1;
      poch = poch * (a + (m - 1));
      poch = rhs_ratio ? poch / (Real(m * 1L, wb) - a) : poch / m;
      const Real inv_m2 = Real(1L, wb) / Real(m * m, wb);
      for (size_t j = 1; j < s2.size(); ++j) s2[j] = s2[j] + s2[j - 1] * inv_m2;
      if (!ps.empty()) {
        const Real d = Real(1L, wb) / (a + (m - 1));  // 1/(m+a-1)
        for (size_t i = ps.size() - 1; i >= 1; --i) {
          ps[i] = ps[i] + ps[i - 1] * d;
          if (i == 1) break;
        }
        const Real e = Real(1L, wb) / (Real(m * 1L, wb) - a);  // 1/(m-a)
        for (size_t j = 1; j < qs.size(); ++j) qs[j] = qs[j] + qs[j - 1] * e;
      }
      ++n;
    }
  }
};

void require_param_domain(const Rat& a, long r) {
  if (!(a.sign() > 0 && a < Rat(1)))
    throw std::domain_error("parametric series: need a in (0,1)");
  if (r < 0) throw std::invalid_argument("parametric series: negative depth");
}

}  // namespace

SumResult param_apery_lhs(const Rat& a, long r, const PrecisionCtx& ctx) {
  return hurwitz_param_lhs(a, r, -1, ctx);
}

SumResult param_apery_rhs(const Rat& a, long r, const PrecisionCtx& ctx) {
  return hurwitz_param_rhs(a, r, -1, ctx);
}

SumResult hurwitz_param_lhs(const Rat& a, long r, long k, const PrecisionCtx& ctx) {
  require_param_domain(a, r);
  const size_t rr = static_cast<size_t>(r);
  if (k >= 1 || a != Rat(1, 2)) {
    // terms decay like n^(a-2) log^k n; consecutive-term acceleration stalls
    // off the half-integer exponent, so extrapolate partial sums at geometric
    // cutoffs against the tail model instead
    const int lp = k >= 1 ? static_cast<int>(k) : 0;
    const size_t need = 2 + 3 * (static_cast<size_t>(lp) + 1);
    const long w = ctx.precision_bits + 96;
    ParamState st(a, r, k, false, w);
    std::vector<long> nodes(need);
    // tails shrink like N^(a-1); the fitted limit is only good to the first
    // unmodelled order at the shallowest node, so k=0 windows start deep
    long next_n = k >= 1 ? (a > Rat(1, 2) ? 256 : 64)
                         : (a > Rat(1, 2) ? 4096 : 2048);
    for (size_t j = 0; j < need; ++j, next_n *= 2) nodes[j] = next_n;
    std::vector<Real> sums;
    sums.reserve(need);
    Real s = Real::zero(w);
    size_t at = 0;
    for (long n = 1; n <= nodes.back(); ++n) {
      st.step_to(n);
      Real t = st.poch * st.s2[rr] / n;
      if (k >= 1) t = t * st.ps[static_cast<size_t>(k)];
      s += t;
      if (n == nodes[at]) {
        sums.push_back(s);
        ++at;
      }
    }
    return extrapolate_log_power(nodes, sums, a - Rat(1), lp, ctx);
  }
  const long wb = accel_work_bits(ctx);
  auto st = std::make_shared<ParamState>(a, r, k, false, wb);
  auto term = [st, rr](long n) {
    st->step_to(n);
    return st->poch * st->s2[rr] / n;
  };
  return sum_levin_u(term, 1, ctx);
}

SumResult hurwitz_param_rhs(const Rat& a, long r, long k, const PrecisionCtx& ctx) {
  require_param_domain(a, r);
  const long wb = ctx.precision_bits + 64;
  auto st = std::make_shared<ParamState>(a, 0, k, true, wb);
  const long p = 2 * r + 1;
  auto abs_term = [st, k, p, wb](long j) {
    const long n = j + 1;
    st->step_to(n);
    Real g(1L, wb);
    if (k >= 0) {
      g = Real::zero(wb);
      for (long i = 0; i <= k; ++i)
        g = g + st->ps[static_cast<size_t>(i)] * st->qs[static_cast<size_t>(k - i)];
    }
    Real v = st->poch * g * 2L / pow_int(Real(n, wb), p);
    return abs(v);
  };
  return sum_cvz_alternating(abs_term, +1, ctx);
}

}  // namespace apseries
