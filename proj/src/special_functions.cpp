#include "apseries/special_functions.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "apseries/bernoulli.hpp"

namespace apseries {

namespace {

std::mutex g_zeta_mutex;
std::map<std::pair<int, long>, Real> g_zeta_cache;  // (m, bits) -> zeta(m)

Real eta_cvz(int m, long bits) {
  // internal target tied to bits so equal keys give identical bits
  PrecisionCtx ictx;
  ictx.precision_bits = bits + 24;
  ictx.target_abs_err = Real::pow2(-(bits + 16), 64);
  auto abs_term = [m, bits](long k) {
    Real t(k + 1, bits + 48);
    t = pow_int(t, -static_cast<long>(m));
    return t;
  };
  return sum_cvz_alternating(abs_term, 1, ictx).value;
}

}  // namespace

Real zeta_int(int m, const PrecisionCtx& ctx) {
  if (m < 2) throw std::domain_error("zeta_int: need m >= 2");
  const long bits = ctx.precision_bits;
  {
    std::lock_guard<std::mutex> lock(g_zeta_mutex);
    auto it = g_zeta_cache.find({m, bits});
    if (it != g_zeta_cache.end()) return it->second;
  }
  Real eta = eta_cvz(m, bits);
  // 1 - 2^{1-m} is exact in binary
  Real denom = Real(1L, bits + 24) - Real::pow2(1 - m, bits + 24);
  Real z = (eta / denom).round_to(bits);
  std::lock_guard<std::mutex> lock(g_zeta_mutex);
  auto [it, inserted] = g_zeta_cache.emplace(std::make_pair(m, bits), z);
  return it->second;
}

Real digamma(const Real& s, const PrecisionCtx& ctx) {
  if (s.sign() <= 0) throw std::domain_error("digamma: need s > 0");
  const long bits = ctx.precision_bits;
  const long w = bits + 48;
  const long threshold = std::max<long>(17, bits / 4 + 8);

  Real y = s.round_to(w);
  Real rec = Real::zero(w);  // sum of 1/(s+i) over the recurrence shifts
  while (y < Real(threshold, 64)) {
    rec += 1L / y;
    y.add_si(1);
  }

  // psi(y) = log y - 1/(2y) - sum_j B_{2j} / (2j y^{2j}); remainder below the
  // first omitted term for real y > 0
  Real acc = log(y) - 1L / (y * 2L);
  const Real y2 = y * y;
  Real p(1L, w);
  const Real stop = Real::pow2(-(bits + 16), 64);
  Real prev_mag;
  for (unsigned j = 1;; ++j) {
    p /= y2;
    Real term = Real(bernoulli(2 * j), w) * p;
    term.div_si(2 * j);
    const Real mag = abs(term);
    if (j > 1 && mag > prev_mag) break;  // asymptotic tail turned: stop
    acc -= term;
    if (mag < stop) break;
    prev_mag = mag;
  }
  return (acc - rec).round_to(bits);
}

Real log_gamma(const Real& s, const PrecisionCtx& ctx) {
  if (s.sign() <= 0) throw std::domain_error("log_gamma: need s > 0");
  Real r(0L, ctx.precision_bits + 16);
  mpfr_lngamma(r.raw(), s.raw(), MPFR_RNDN);
  return r.round_to(ctx.precision_bits);
}

Real polylog(int p, const Real& x, const PrecisionCtx& ctx) {
  if (p < 1) throw std::domain_error("polylog: need p >= 1");
  const Real one(1L, 64);
  if (abs(x) > one) throw std::domain_error("polylog: need |x| <= 1");
  if (p == 1 && x == one) throw std::domain_error("polylog: Li_1(1) diverges");
  if (x.is_zero()) return Real::zero(ctx.precision_bits);
  if (x == one) return zeta_int(p, ctx);

  const long w = ctx.sum_bits(4096);
  const Real xw = x.round_to(w);

  if (x.sign() < 0 && abs(x) >= Real(Rat(9, 10), 64)) {
    // Li_p(-y) = -sum_{k>=0} (-1)^k y^{k+1}/(k+1)^p, totally monotone terms
    const Real y = -xw;
    auto pw = std::make_shared<Real>(Real(1L, w));
    auto last_k = std::make_shared<long>(-1);
    auto abs_term = [pw, last_k, y, p](long k) {
      while (*last_k < k) {
        *pw *= y;
        ++*last_k;
      }
      return *pw / pow_int(Real(k + 1, y.prec()), p);
    };
    PrecisionCtx ictx = ctx;
    return sum_cvz_alternating(abs_term, -1, ictx).value.round_to(ctx.precision_bits);
  }

  if (p == 2 && x > Real(Rat(3, 4), 64)) {
    // Euler reflection: Li_2(x) = zeta(2) - log x log(1-x) - Li_2(1-x)
    Real om = Real(1L, w) - xw;
    PrecisionCtx ictx = ctx;
    ictx.precision_bits = w;
    Real li_om = polylog(2, om, ictx);
    Real out = zeta_int(2, ictx) - log(xw) * log(om) - li_om;
    return out.round_to(ctx.precision_bits);
  }

  // direct geometric summation; |t_{n+1}/t_n| = |x| (n/(n+1))^p <= |x|
  const double rho = abs(x).to_double();
  auto pw = std::make_shared<Real>(Real(1L, w));
  auto last_n = std::make_shared<long>(0);
  auto term = [pw, last_n, xw, p](long n) {
    while (*last_n < n) {
      *pw *= xw;
      ++*last_n;
    }
    return *pw / pow_int(Real(n, xw.prec()), p);
  };
  return sum_geometric_fn(term, 1, [rho](long) { return rho; }, ctx, w).value;
}

Real zeta_2r(int r, const PrecisionCtx& ctx) {
  if (r < 0) throw std::invalid_argument("zeta_2r: r < 0");
  if (r == 0) return Real(1L, ctx.precision_bits);
  const long w = ctx.precision_bits + 16;
  Real num = pow_int(const_pi(w), 2 * r);
  Real fact(1L, w);
  mpfr_fac_ui(fact.raw(), static_cast<unsigned long>(2 * r + 1), MPFR_RNDN);
  return (num / fact).round_to(ctx.precision_bits);
}

Real zeta_star_2r(int r, const PrecisionCtx& ctx) {
  if (r < 0) throw std::invalid_argument("zeta_star_2r: r < 0");
  if (r == 0) return Real(1L, ctx.precision_bits);
  const long w = ctx.precision_bits + 16;
  // 2 eta(2r) = 2 (1 - 2^{1-2r}) zeta(2r)
  PrecisionCtx ictx = ctx;
  ictx.precision_bits = w;
  Real z = zeta_int(2 * r, ictx);
  Real factor = (Real(1L, w) - Real::pow2(1 - 2 * r, w)) * 2L;
  return (z * factor).round_to(ctx.precision_bits);
}

namespace {

// strict-sum state: plain[j] = zeta_n({2}_j) for current n (row n)
struct PlainState {
  std::vector<Real> plain;
  long n = 0;
  PlainState(int depth, long w) : plain(static_cast<size_t>(depth) + 1, Real::zero(w)) {
    plain[0] = Real(1L, w);
  }
  // value zeta_{n-1}({2}_depth) is plain.back() BEFORE stepping to n
  void step_to(long n_new) {
    while (n < n_new) {
      ++n;
      for (size_t j = plain.size() - 1; j >= 1; --j) {
        Real t = plain[j - 1];
        t.div_si(n);
        t.div_si(n);
        plain[j] += t;
      }
    }
  }
};

// zeta over the integer ladder: positive arguments from the cvz cache, zero
// and negatives exactly via Bernoulli numbers
Real zeta_ladder(int s, long w) {
  if (s >= 2) {
    PrecisionCtx c;
    c.precision_bits = w;
    c.target_abs_err = Real::pow2(-(w - 8), 64);
    return zeta_int(s, c);
  }
  if (s == 1) throw std::logic_error("zeta_ladder: pole at 1");
  if (s == 0) return Real(Rat(-1, 2), w);
  const unsigned k = static_cast<unsigned>(-s);
  Rat v = bernoulli(k + 1) / Rat(static_cast<long>(k) + 1);
  return Real(-v, w);
}

// classical Li_m(x) just below 1 through the log-expansion
//   Li_m(x) = sum_{j>=0, j!=m-1} zeta(m-j) L^j/j!
//             + L^{m-1}/(m-1)! (H_{m-1} - log(-L)),   L = log x,
// geometric tail with ratio ~ (|L|/2pi)^2 once j passes m
Real polylog_near1(int m, const Real& x, long w) {
  const Real L = log(x.round_to(w));
  Real acc = Real::zero(w);
  Real lj(1L, w);  // L^j / j!
  const Real floor_eps = Real::pow2(-(w - 8), 64);
  int calm = 0;
  for (int j = 0; j < 4000; ++j) {
    Real term;
    if (j == m - 1) {
      Rat hm(0);
      for (int i = 1; i < m; ++i) hm += Rat(1, i);
      term = lj * (Real(hm, w) - log(-L));
    } else {
      term = lj * zeta_ladder(m - j, w);
    }
    acc += term;
    if (j > m && abs(term) < floor_eps) {
      if (++calm >= 3) break;
    } else {
      calm = 0;
    }
    lj *= L;
    lj.div_si(j + 1);
  }
  return acc;
}

std::mutex g_tail_fit_mutex;
std::map<std::pair<int, long>, std::vector<Real>> g_tail_fit_cache;

const int kTailFitOrder = 12;

// tail coefficients of the strict chain rows:
//   zeta({2}_{r-1}) - zeta_{n-1}({2}_{r-1}) = sum_{k=1}^{K} a_k n^-k
//                                             + O(n^-(K+1));
// only integer powers appear (nested Euler-Maclaurin over 1/m^2 layers), so
// the system is solved from exact rows at geometric cutoffs
std::vector<Real> tail_fit_solve(int r, long wf) {
  PrecisionCtx zc;
  zc.precision_bits = wf;
  zc.target_abs_err = Real::pow2(-(wf - 8), 64);
  const Real z = zeta_2r(r - 1, zc);
  const int K = kTailFitOrder;
  PlainState st(r - 1, wf);
  std::vector<std::vector<Real>> A(K, std::vector<Real>(K, Real::zero(wf)));
  std::vector<Real> b(K, Real::zero(wf));
  long node = 512;
  for (int i = 0; i < K; ++i, node *= 2) {
    st.step_to(node - 1);
    b[i] = z - st.plain.back();
    const Real inv = Real(1L, wf) / Real(node, wf);
    Real p = inv;
    for (int k = 0; k < K; ++k) {
      A[i][k] = p;
      p *= inv;
    }
  }
  for (int c = 0; c < K; ++c) {
    int piv = c;
    for (int i = c + 1; i < K; ++i)
      if (abs(A[i][c]) > abs(A[piv][c])) piv = i;
    if (A[piv][c].is_zero()) throw std::runtime_error("tail fit: singular system");
    std::swap(A[c], A[piv]);
    std::swap(b[c], b[piv]);
    for (int i = c + 1; i < K; ++i) {
      const Real f = A[i][c] / A[c][c];
      for (int cc = c; cc < K; ++cc) A[i][cc] -= f * A[c][cc];
      b[i] -= f * b[c];
    }
  }
  std::vector<Real> a(K, Real::zero(wf));
  for (int i = K; i-- > 0;) {
    Real s = b[i];
    for (int cc = i + 1; cc < K; ++cc) s -= A[i][cc] * a[cc];
    a[i] = s / A[i][i];
  }
  return a;
}

const std::vector<Real>& chain_tail_coeffs(int r, long bits) {
  const long wf = bits + 256;
  const auto key = std::make_pair(r, wf);
  {
    std::lock_guard<std::mutex> lock(g_tail_fit_mutex);
    auto it = g_tail_fit_cache.find(key);
    if (it != g_tail_fit_cache.end()) return it->second;
  }
  std::vector<Real> a = tail_fit_solve(r, wf);
  std::lock_guard<std::mutex> lock(g_tail_fit_mutex);
  auto [it, inserted] = g_tail_fit_cache.emplace(key, std::move(a));
  return it->second;
}

}  // namespace

SumResult mpl_2r(int r, const Real& x, const PrecisionCtx& ctx) {
  if (r < 1) throw std::invalid_argument("mpl_2r: need r >= 1");
  if (x.sign() < 0 || x > Real(1L, 64)) throw std::domain_error("mpl_2r: x must lie in [0,1]");

  SumResult res;
  if (x.is_zero()) {
    res.method = SumMethod::exact;
    res.value = Real::zero(ctx.precision_bits);
    return res;
  }

  if (r == 1) {
    res.method = SumMethod::direct_geometric;
    res.value = polylog(2, x, ctx);
    res.trunc_err = ctx.target_abs_err;
    res.terms_used = 1;
    return res;
  }

  const Real one(1L, 64);
  if (x == one) {
    // Levin-accelerated sum of zeta_{n-1}({2}_{r-1}) / n^2
    AccelOpts opts;
    const long w = accel_work_bits(ctx, opts);
    auto st = std::make_shared<PlainState>(r - 1, w);
    auto term = [st](long n) {
      st->step_to(n - 1);
      Real t = st->plain.back();
      t.div_si(n);
      t.div_si(n);
      return t;
    };
    return sum_levin_u(term, 1, ctx, opts);
  }

  const long w = ctx.sum_bits(65536);
  const Real xw = x.round_to(w);
  const Real eps = ctx.target_abs_err;

  if (x <= Real(Rat(3, 4), 64)) {
    // direct: |t_m| <= B x^m / m^2 with B = zeta({2}_{r-1})
    auto st = std::make_shared<PlainState>(r - 1, w);
    auto pw = std::make_shared<Real>(Real(1L, w));
    auto last = std::make_shared<long>(0);
    auto term = [st, pw, last, xw](long n) {
      st->step_to(n - 1);
      while (*last < n) {
        *pw *= xw;
        ++*last;
      }
      Real t = st->plain.back();
      t *= *pw;
      t.div_si(n);
      t.div_si(n);
      return t;
    };
    const double rho = x.to_double() * 1.0000001;
    return sum_geometric_fn(term, 1, [rho](long) { return rho; }, ctx, w);
  }

  // near 1: split off the coefficient limit zr = zeta({2}_{r-1});
  // sum = zr * Li_2(x) + sum_n (zeta_{n-1}({2}_{r-1}) - zr) x^n / n^2,
  // correction coefficients negative, magnitude decreasing -> rigorous stop
  PrecisionCtx ictx = ctx;
  ictx.precision_bits = w;
  ictx.target_abs_err = eps * Real(Rat(1, 4), 64);

  if (x > Real(Rat(99, 100), 64)) {
    // this close to 1 the first few hundred terms barely see x, which defeats
    // consecutive-term acceleration (it converges to the x = 1 limit); peel
    // the row asymptotics into classical polylogs instead:
    //   sum_n zeta_{n-1} x^n/n^2
    //     = Z Li_2(x) - sum_k a_k Li_{k+2}(x) + sum_n d_n x^n/n^2,
    //   d_n = zeta_{n-1} - Z + sum_k a_k n^-k = O(n^-(K+1))
    const long wl = ctx.precision_bits + 96;
    const Real xl = x.round_to(wl);
    const auto& ak = chain_tail_coeffs(r, ctx.precision_bits);
    PrecisionCtx zc;
    zc.precision_bits = wl;
    zc.target_abs_err = Real::pow2(-(wl - 8), 64);
    const Real z = zeta_2r(r - 1, zc);
    Real acc = z * polylog_near1(2, xl, wl);
    for (size_t k = 0; k < ak.size(); ++k)
      acc -= ak[k].round_to(wl) * polylog_near1(static_cast<int>(k) + 3, xl, wl);

    PlainState stc(r - 1, wl);
    Real pwc(1L, wl);
    const Real qeps = eps * Real(Rat(1, 4), 64);
    Real dmag_prev(1L, 64);
    Real est(1L, 64);
    long calm = 0;
    long n = 1;
    bool met = false;
    for (; n <= 65536; ++n) {
      stc.step_to(n - 1);
      pwc *= xl;
      const Real inv = Real(1L, wl) / Real(n, wl);
      Real model = Real::zero(wl);
      for (size_t k = ak.size(); k-- > 0;) model = (model + ak[k]) * inv;
      Real d = stc.plain.back() - z + model;
      d *= pwc;
      d.div_si(n);
      d.div_si(n);
      acc += d;
      const Real dmag = abs(d);
      // residual decay is at worst cubic past the fit window, so the
      // remaining tail sits below 2 n max(|d_n|, |d_{n-1}|)
      est = (dmag > dmag_prev ? dmag : dmag_prev) * (2 * n);
      if (n >= 64 && est <= qeps) {
        if (++calm >= 2) {
          met = true;
          break;
        }
      } else {
        calm = 0;
      }
      dmag_prev = dmag;
    }
    res.method = SumMethod::direct_geometric;
    res.terms_used = n;
    res.trunc_err = est + Real::pow2(-(wl - 24), 64) * (ak.size() + 3);
    res.round_err = Real::pow2(-(ctx.precision_bits + 8), 64) * (abs(acc) + 1L);
    res.value = acc.round_to(ctx.precision_bits);
    res.tolerance_met = met && res.est_err() <= eps;
    return res;
  }

  const Real zr = zeta_2r(r - 1, ictx);
  Real s = zr * polylog(2, xw, ictx);

  PlainState st(r - 1, w);
  Real pw(1L, w);
  const Real omx = Real(1L, w) - xw;
  long n = 1;
  const Real qeps = eps * Real(Rat(1, 4), 64);
  for (;; ++n) {
    if (n > ctx.max_terms_geometric * 4) {
      res.tolerance_met = false;
      break;
    }
    st.step_to(n - 1);
    pw *= xw;
    Real c = st.plain.back() - zr;  // <= 0
    Real t = c * pw;
    t.div_si(n);
    t.div_si(n);
    s += t;
    if (n % 16 == 0) {
      // |tail| <= |c_{n+1}| min(1/n, x^{n+1}/((1-x)(n+1)^2)); |c| decreasing
      Real cmag = abs(c);
      Real b1 = cmag / Real(n, w);
      Real b2 = cmag * pw * xw / (omx * Real((n + 1) * (n + 1), w));
      Real bound = b1 < b2 ? b1 : b2;
      if (bound <= qeps) {
        res.trunc_err = bound + ictx.target_abs_err;
        break;
      }
    }
  }
  res.method = SumMethod::direct_geometric;
  res.terms_used = n;
  res.round_err = Real::pow2(-(ctx.precision_bits + 8), 64) * (abs(s) + 1L);
  res.value = s.round_to(ctx.precision_bits);
  return res;
}

}  // namespace apseries
