#include "apseries/registry.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "apseries/finite_sums.hpp"
#include "apseries/hypergeometric.hpp"
#include "apseries/mixed_values.hpp"
#include "apseries/real.hpp"
#include "apseries/series.hpp"
#include "apseries/special_functions.hpp"
#include "apseries/truncated_series.hpp"

namespace apseries {

namespace {

using Clock = std::chrono::steady_clock;

const char* method_name(SumMethod m) {
  switch (m) {
    case SumMethod::direct_geometric: return "direct";
    case SumMethod::cvz_alternating: return "cvz";
    case SumMethod::levin_u: return "levin";
    case SumMethod::richardson: return "richardson";
    case SumMethod::quadrature: return "quadrature";
    case SumMethod::exact: return "exact";
  }
  return "?";
}

// engine target = tolerance / 16 so both sides plus the comparison fit
PrecisionCtx make_ctx(long bits, const std::string& tol) {
  PrecisionCtx ctx = PrecisionCtx::make(bits, tol);
  ctx.target_abs_err = ctx.target_abs_err / 16L;
  return ctx;
}

SumResult wrap_value(const Real& v, const PrecisionCtx& ctx) {
  SumResult r;
  r.method = SumMethod::exact;
  r.value = v;
  r.trunc_err = ctx.target_abs_err;
  r.round_err = abs(v) * Real::pow2(-ctx.precision_bits + 4, 64);
  return r;
}

SumResult scale_result(SumResult s, const Real& f, long bits) {
  const Real af = abs(f);
  s.value = (s.value * f).round_to(bits);
  s.trunc_err = s.trunc_err * af;
  s.round_err = s.round_err * af + abs(s.value) * Real::pow2(-bits + 4, 64);
  if (s.has_loose_bound) s.loose_bound = s.loose_bound * af;
  return s;
}

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

VerificationReport finish(const char* id, std::string params, const SumResult& L,
                          const SumResult& R, const std::string& tol, long bits,
                          Clock::time_point t0) {
  VerificationReport rep;
  rep.id = id;
  rep.params = std::move(params);
  rep.lhs = L.value.str(40);
  rep.rhs = R.value.str(40);
  const Real diff = abs(L.value - R.value);
  rep.abs_diff = diff.str(3);
  rep.lhs_err = L.est_err().str(3);
  rep.rhs_err = R.est_err().str(3);
  rep.tolerance = tol;
  rep.lhs_method = method_name(L.method);
  rep.rhs_method = method_name(R.method);
  rep.terms_used = L.terms_used + R.terms_used;
  rep.precision_bits = bits;
  rep.wall_time_ms = ms_since(t0);
  if (!L.value.is_finite() || !R.value.is_finite())
    rep.status = "fail";
  else if (!L.tolerance_met || !R.tolerance_met)
    rep.status = "tolerance_not_reached";
  else
    rep.status = diff <= Real(tol, 128) ? "pass" : "fail";
  return rep;
}

std::vector<long> grid_longs(const ParamMap& pm, const char* key, std::vector<long> def) {
  auto it = pm.find(key);
  if (it == pm.end()) return def;
  return {std::strtol(it->second.c_str(), nullptr, 10)};
}

std::vector<Rat> grid_rats(const ParamMap& pm, const char* key, std::vector<Rat> def) {
  auto it = pm.find(key);
  if (it == pm.end()) return def;
  return {Rat(it->second)};
}

// per-sample tolerance, overridable from the command line
std::string tol_of(const ParamMap& pm, const char* def) {
  auto it = pm.find("tol");
  return it == pm.end() ? std::string(def) : it->second;
}

std::string kv(const char* k, long v) {
  std::ostringstream os;
  os << k << '=' << v;
  return os.str();
}

std::string kv(const char* k, const Rat& v) { return std::string(k) + "=" + v.str(); }

// ---- I01: zeta(3) = (5/2) sum (-1)^{n-1} / (n^3 C(2n,n)) ----
std::vector<VerificationReport> run_i01(const ParamMap& pm, long bits) {
  auto t0 = Clock::now();
  const std::string tol = tol_of(pm, "1e-30");
  PrecisionCtx ctx = make_ctx(bits, tol);
  const long w = ctx.precision_bits + 32;
  auto binom = std::make_shared<Real>(Real(2L, w));  // C(2n,n) at n = 1
  auto last = std::make_shared<long>(1);
  auto term = [binom, last, w](long n) {
    while (*last < n) {
      const long m = *last + 1;
      *binom = *binom * (2 * (2 * m - 1)) / m;
      ++*last;
    }
    Real t = Real(1L, w) / (pow_int(Real(n, w), 3) * *binom);
    if (n % 2 == 0) t.neg();
    return t;
  };
  SumResult lhs = sum_geometric_fn(term, 1, [](long) { return 0.27; }, ctx, w);
  lhs = scale_result(lhs, Real(Rat(5, 2), w), ctx.precision_bits);
  SumResult rhs = wrap_value(zeta_int(3, ctx), ctx);
  return {finish("I01", "", lhs, rhs, tol, bits, t0)};
}

// ---- I02: sum C(2n,n)/(n 4^n) zeta_n^*({2}_r) = 2(1-4^{-r}) zeta(2r+1) ----
std::vector<VerificationReport> run_i02(const ParamMap& pm, long bits) {
  std::vector<VerificationReport> out;
  for (long r : grid_longs(pm, "r", {0, 1, 2, 3, 4})) {
    auto t0 = Clock::now();
    const std::string tol = tol_of(pm, "1e-10");
    PrecisionCtx ctx = make_ctx(bits, tol);
    const long w = ctx.precision_bits + 16;
    SumResult lhs = apery_series(static_cast<int>(r), ctx);
    Real rv = r == 0 ? const_log2(w) * 2L
                     : (Real(1L, w) - Real::pow2(-2 * r, w)) * 2L *
                           zeta_int(static_cast<int>(2 * r + 1), ctx);
    out.push_back(finish("I02", kv("r", r), lhs, wrap_value(rv, ctx), tol, bits, t0));
  }
  return out;
}

// ---- I03: generating-function coefficients, exact over Q ----
std::vector<VerificationReport> run_i03(const ParamMap& pm, long bits) {
  struct Gf {
    long n, order;
  };
  std::vector<Gf> samples;
  {
    auto ns = grid_longs(pm, "n", {5, 12, 25});
    auto os_ = grid_longs(pm, "order", {8, 20, 40});
    if (ns.size() == 1 && os_.size() == 1) {
      samples.push_back({ns[0], os_[0]});
    } else {
      for (size_t i = 0; i < ns.size(); ++i) samples.push_back({ns[i], os_[i]});
    }
  }
  std::vector<long> stars = grid_longs(pm, "star", {0, 1});
  std::vector<VerificationReport> out;
  for (const Gf& g : samples)
    for (long star : stars) {
      auto t0 = Clock::now();
      TruncSeries lhs = chain_sum_series(g.n, g.order, star != 0);
      TruncSeries rhs = chain_product_series(g.n, g.order, star != 0);
      const bool eq = lhs == rhs;
      VerificationReport rep;
      rep.id = "I03";
      rep.params = kv("n", g.n) + " " + kv("order", g.order) + " " + kv("star", star);
      rep.lhs = lhs.coeff(g.order).str();
      rep.rhs = rhs.coeff(g.order).str();
      rep.abs_diff = eq ? "0" : "coefficient mismatch";
      rep.lhs_err = "0";
      rep.rhs_err = "0";
      rep.tolerance = "exact";
      rep.lhs_method = "exact";
      rep.rhs_method = "exact";
      rep.status = eq ? "pass" : "fail";
      rep.terms_used = g.order + 1;
      rep.precision_bits = bits;
      rep.wall_time_ms = ms_since(t0);
      out.push_back(std::move(rep));
    }
  return out;
}

HypParams main_3f2(const Rat& x) {
  return HypParams{{Rat(1), Rat(1), Rat(3, 2)}, {Rat(2) - x, Rat(2) + x}};
}

const std::vector<Rat>& x_grid() {
  static const std::vector<Rat> g{Rat(1, 10), Rat(1, 4), Rat(2, 5)};
  return g;
}

// ---- I04: unit-argument 3F2 vs digamma closed form ----
std::vector<VerificationReport> run_i04(const ParamMap& pm, long bits) {
  std::vector<VerificationReport> out;
  for (const Rat& x : grid_rats(pm, "x", x_grid())) {
    auto t0 = Clock::now();
    const std::string tol = tol_of(pm, "1e-10");
    PrecisionCtx ctx = make_ctx(bits, tol);
    SumResult lhs = hyp_eval(main_3f2(x), Rat(1), ctx);
    SumResult rhs = wrap_value(closed_3f2_x(x, ctx), ctx);
    out.push_back(finish("I04", kv("x", x), lhs, rhs, tol, bits, t0));
  }
  return out;
}

// ---- I05: quadratic transformation of the 3F2 at negative argument ----
std::vector<VerificationReport> run_i05(const ParamMap& pm, long bits) {
  std::vector<VerificationReport> out;
  struct QSample {
    Rat x, z;
  };
  std::vector<QSample> samples;
  {
    auto xs = grid_rats(pm, "x", x_grid());
    auto zs = grid_rats(pm, "z", {Rat(-1)});
    for (const Rat& x : xs)
      for (const Rat& z : zs) samples.push_back({x, z});
    if (pm.find("x") == pm.end() && pm.find("z") == pm.end())
      samples.push_back({Rat(1, 4), Rat(-1, 2)});
  }
  for (const QSample& s : samples) {
    auto t0 = Clock::now();
    const std::string tol = tol_of(pm, "1e-25");
    PrecisionCtx ctx = make_ctx(bits, tol);
    auto pr = quad_transform_pair(Rat(2), Rat(1) + s.x, Rat(1) - s.x, s.z, ctx);
    out.push_back(finish("I05", kv("x", s.x) + " " + kv("z", s.z), pr.first, pr.second,
                         tol, bits, t0));
  }
  return out;
}

// ---- I06: digamma duplication and its symmetric half-argument chain ----
std::vector<VerificationReport> run_i06(const ParamMap& pm, long bits) {
  std::vector<VerificationReport> out;
  for (const Rat& x : grid_rats(pm, "x", x_grid())) {
    const std::string tol = tol_of(pm, "1e-25");
    PrecisionCtx ctx = make_ctx(bits, tol);
    PrecisionCtx dctx = ctx;
    dctx.precision_bits += 16;
    const long w = dctx.precision_bits;
    const Real xr(x, w), one(1L, w);
    {
      // psi(x) = 2 psi(2x) - psi(x + 1/2) - 2 log 2
      auto t0 = Clock::now();
      SumResult lhs = wrap_value(digamma(xr, dctx), ctx);
      const Real rv = digamma(xr * 2L, dctx) * 2L -
                      digamma(xr + Real(Rat(1, 2), w), dctx) - const_log2(w) * 2L;
      out.push_back(
          finish("I06", kv("x", x) + " form=base", lhs, wrap_value(rv, ctx), tol, bits, t0));
    }
    {
      // the same relation folded across 1 +- x and halved arguments
      auto t0 = Clock::now();
      const Real lv = digamma((one + xr) / 2L, dctx) + digamma((one - xr) / 2L, dctx);
      const Real rv = (digamma(one + xr, dctx) + digamma(one - xr, dctx)) * 2L -
                      (digamma(one + xr / 2L, dctx) + digamma(one - xr / 2L, dctx)) -
                      const_log2(w) * 4L;
      out.push_back(finish("I06", kv("x", x) + " form=chain", wrap_value(lv, ctx),
                           wrap_value(rv, ctx), tol, bits, t0));
    }
  }
  return out;
}

// ---- I07: odd-zeta coefficient expansion, three routes against it ----
std::vector<VerificationReport> run_i07(const ParamMap& pm, long bits) {
  std::vector<VerificationReport> out;
  const std::string tol = tol_of(pm, "1e-10");
  for (const Rat& x : grid_rats(pm, "x", {Rat(1, 4), Rat(1, 2)})) {
    PrecisionCtx ctx = make_ctx(bits, tol);
    const long w = ctx.precision_bits + 32;
    const double x2d = x.to_double() * x.to_double();
    const double cut = std::strtod(tol.c_str(), nullptr) / 8.0 / 2.5 * (1.0 - x2d);
    const long R = static_cast<long>(std::ceil(std::log(cut) / std::log(x2d)));

    // route D: 2 log 2 + 2 sum_{n<=R} (1 - 4^{-n}) zeta(2n+1) x^{2n}
    auto tD = Clock::now();
    const Real x2(x * x, w);
    Real acc = const_log2(w) * 2L;
    Real xp(1L, w);
    for (long n = 1; n <= R; ++n) {
      xp *= x2;
      acc += (Real(1L, w) - Real::pow2(-2 * n, w)) * 2L *
             zeta_int(static_cast<int>(2 * n + 1), ctx) * xp;
    }
    Real tail = xp * x2 * Real(Rat(13, 4), w) / (Real(1L, w) - x2);  // 2 zeta(3) < 13/4... bound
    SumResult D;
    D.method = SumMethod::direct_geometric;
    D.value = acc.round_to(ctx.precision_bits);
    D.trunc_err = tail;
    D.round_err = abs(D.value) * Real::pow2(-ctx.precision_bits + 6, 64);
    D.terms_used = R + 1;
    const double d_ms = ms_since(tD);

    // route A: sum_r (central-binomial star series at depth r) x^{2r}
    {
      auto t0 = Clock::now();
      PrecisionCtx actx = ctx;
      actx.target_abs_err = ctx.target_abs_err / (2 * (R + 2));
      SumResult A;
      A.method = SumMethod::levin_u;
      Real av = Real::zero(w), aerr = Real::zero(64), xpr(1L, w);
      for (long r = 0; r <= R; ++r) {
        SumResult ar = apery_series(static_cast<int>(r), actx);
        av += ar.value * xpr;
        aerr += ar.est_err() * xpr;
        A.terms_used += ar.terms_used;
        if (!ar.tolerance_met) A.tolerance_met = false;
        xpr *= x2;
      }
      A.value = av.round_to(ctx.precision_bits);
      A.trunc_err = aerr + tail;
      A.round_err = abs(A.value) * Real::pow2(-ctx.precision_bits + 6, 64);
      VerificationReport rep = finish("I07", kv("x", x) + " route=coeffwise", A, D, tol, bits, t0);
      rep.wall_time_ms += d_ms;
      out.push_back(std::move(rep));
    }
    // route B: term-ratio series
    {
      auto t0 = Clock::now();
      SumResult B = pochhammer_ratio_series(x, ctx);
      out.push_back(finish("I07", kv("x", x) + " route=term-ratio", B, D, tol, bits, t0));
    }
    // route C: unit-argument 3F2 scaled
    {
      auto t0 = Clock::now();
      SumResult C = hyp_eval(main_3f2(x), Rat(1), ctx);
      const Rat pref = Rat(1) / (Rat(2) * (Rat(1) - x * x));
      C = scale_result(C, Real(pref, w), ctx.precision_bits);
      out.push_back(finish("I07", kv("x", x) + " route=hyp-unit", C, D, tol, bits, t0));
    }
  }
  return out;
}

// ---- I08: 3F2 at 1-t vs geometric partial fractions ----
std::vector<VerificationReport> run_i08(const ParamMap& pm, long bits) {
  std::vector<VerificationReport> out;
  for (const Rat& x : grid_rats(pm, "x", x_grid()))
    for (const Rat& t : grid_rats(pm, "t", {Rat(1, 4), Rat(1, 2), Rat(3, 4)})) {
      auto t0 = Clock::now();
      const std::string tol = tol_of(pm, "1e-25");
      PrecisionCtx ctx = make_ctx(bits, tol);
      SumResult lhs = hyp_eval(main_3f2(x), Rat(1) - t, ctx);
      SumResult rhs = functional_3f2(x, t, ctx);
      out.push_back(
          finish("I08", kv("x", x) + " " + kv("t", t), lhs, rhs, tol, bits, t0));
    }
  return out;
}

// ---- I09: damped series = -2 Li_{2r+1}((sqrt z - 1)/(sqrt z + 1)) ----
std::vector<VerificationReport> run_i09(const ParamMap& pm, long bits) {
  std::vector<VerificationReport> out;
  const std::vector<Rat> zdef{Rat(0), Rat(1, 4), Rat(1, 2), Rat(3, 4), Rat(1)};
  for (long r : grid_longs(pm, "r", {0, 1, 2, 3, 4}))
    for (const Rat& z : grid_rats(pm, "z", zdef)) {
      auto t0 = Clock::now();
      const std::string tol = tol_of(pm, z.is_zero() ? "1e-10" : "1e-25");
      PrecisionCtx ctx = make_ctx(bits, tol);
      const long w = ctx.precision_bits + 16;
      SumResult lhs = apery_series_z(static_cast<int>(r), Real(z, w), ctx);
      const Real rz = sqrt(Real(z, w));
      const Real wz = (rz - 1L) / (rz + 1L);
      SumResult rhs = wrap_value(polylog(static_cast<int>(2 * r + 1), wz, ctx) * (-2L), ctx);
      out.push_back(
          finish("I09", kv("r", r) + " " + kv("z", z), lhs, rhs, tol, bits, t0));
    }
  return out;
}

// ---- I10: alternating-harmonic weighted chain series, closed form ----
std::vector<VerificationReport> run_i10(const ParamMap& pm, long bits) {
  std::vector<VerificationReport> out;
  for (long r : grid_longs(pm, "r", {1, 2, 3, 4})) {
    auto t0 = Clock::now();
    const std::string tol = tol_of(pm, "1e-6");
    PrecisionCtx ctx = make_ctx(bits, tol);
    SumResult lhs = alt_harmonic_series(static_cast<int>(r), ctx);
    SumResult rhs = wrap_value(alt_harmonic_closed_form(static_cast<int>(r), ctx), ctx);
    out.push_back(finish("I10", kv("r", r), lhs, rhs, tol, bits, t0));
  }
  return out;
}

// ---- I11: series route to zeta({2}_r) vs pi^{2r}/(2r+1)! ----
std::vector<VerificationReport> run_i11(const ParamMap& pm, long bits) {
  std::vector<VerificationReport> out;
  for (long r : grid_longs(pm, "r", {0, 1, 2, 3, 4})) {
    auto t0 = Clock::now();
    const std::string tol = tol_of(pm, "1e-25");
    PrecisionCtx ctx = make_ctx(bits, tol);
    SumResult lhs;
    if (r == 0) {
      lhs.method = SumMethod::exact;
      lhs.value = Real(1L, ctx.precision_bits);
    } else {
      lhs = mpl_2r(static_cast<int>(r), Real(1L, 64), ctx);
    }
    SumResult rhs = wrap_value(zeta_2r(static_cast<int>(r), ctx), ctx);
    out.push_back(finish("I11", kv("r", r), lhs, rhs, tol, bits, t0));
  }
  return out;
}

// ---- I12: central-binomial generating functions on the open interval ----
std::vector<VerificationReport> run_i12(const ParamMap& pm, long bits) {
  std::vector<VerificationReport> out;
  std::vector<Rat> ts = grid_rats(pm, "t", {Rat(1, 4), Rat(1, 2), Rat(3, 4)});
  const bool endpoint_only = pm.count("t") && ts[0] == Rat(1);
  if (endpoint_only) ts.clear();
  for (const Rat& t : ts) {
    const std::string tol = tol_of(pm, "1e-25");
    PrecisionCtx ctx = make_ctx(bits, tol);
    const long w = ctx.precision_bits + 32;
    const Real tw(t, w);
    // |term ratio| = t (2n+1)/(2n+2), always below t
    const double rho = t.to_double();
    // fresh generator per form: the closure only advances forward
    const auto make_cb = [tw, w]() {
      auto state = std::make_shared<Real>(Real(1L, w));  // C(2n,n) t^n / 4^n
      auto last = std::make_shared<long>(0);
      return [state, last, tw](long n) {
        while (*last < n) {
          const long m = *last + 1;
          *state = *state * tw * (2 * m - 1) / (2 * m);
          ++*last;
        }
        return *state;
      };
    };
    {
      auto t0 = Clock::now();
      auto cb_pow = make_cb();
      SumResult lhs = sum_geometric_fn(cb_pow, 0, [rho](long) { return rho; }, ctx, w);
      const Real rv = Real(1L, w) / sqrt(Real(1L, w) - tw);
      out.push_back(
          finish("I12", kv("t", t) + " form=sqrt", lhs, wrap_value(rv, ctx), tol, bits, t0));
    }
    {
      auto t0 = Clock::now();
      auto cb_pow = make_cb();
      auto over_n = [cb_pow](long n) { return cb_pow(n) / n; };
      SumResult lhs = sum_geometric_fn(over_n, 1, [rho](long) { return rho; }, ctx, w);
      const Real rv = log(Real(2L, w) / (Real(1L, w) + sqrt(Real(1L, w) - tw))) * 2L;
      out.push_back(
          finish("I12", kv("t", t) + " form=log", lhs, wrap_value(rv, ctx), tol, bits, t0));
    }
  }
  if (!pm.count("t") || endpoint_only) {
    // t -> 1 limit of the log form through the accelerated route
    auto t0 = Clock::now();
    const std::string tol = tol_of(pm, "1e-10");
    PrecisionCtx ctx = make_ctx(bits, tol);
    SumResult lhs = apery_series(0, ctx);
    SumResult rhs = wrap_value(const_log2(ctx.precision_bits + 16) * 2L, ctx);
    out.push_back(finish("I12", "t=1 form=log", lhs, rhs, tol, bits, t0));
  }
  return out;
}

// ---- I13: polylog integral vs the series routes, telescoped and split ----
std::vector<VerificationReport> run_i13(const ParamMap& pm, long bits) {
  std::vector<VerificationReport> out;
  for (long r : grid_longs(pm, "r", {1, 2, 3})) {
    const std::string tol = tol_of(pm, "1e-8");
    {
      auto t0 = Clock::now();
      PrecisionCtx ctx = make_ctx(bits, tol);
      SumResult lhs = integral_series_lhs(static_cast<int>(r), ctx);
      SumResult rhs = li_integral(static_cast<int>(r), ctx);
      out.push_back(finish("I13", kv("r", r) + " form=telescoped", lhs, rhs, tol, bits, t0));
    }
    {
      auto t0 = Clock::now();
      PrecisionCtx ctx = make_ctx(bits, tol);
      const long w = ctx.precision_bits + 16;
      SumResult li = li_integral(static_cast<int>(r), ctx);
      SumResult lhs = li;
      lhs.value = (li.value - zeta_2r(static_cast<int>(r), ctx) * const_log2(w) * 2L)
                      .round_to(ctx.precision_bits);
      lhs.trunc_err = li.trunc_err + ctx.target_abs_err;
      SumResult rhs = scale_result(alt_harmonic_series(static_cast<int>(r), ctx),
                                   Real(2L, 64), ctx.precision_bits);
      out.push_back(finish("I13", kv("r", r) + " form=log2split", lhs, rhs, tol, bits, t0));
    }
  }
  return out;
}

// ---- I14: odd-harmonic weighted series from the harmonic one ----
std::vector<VerificationReport> run_i14(const ParamMap& pm, long bits) {
  std::vector<VerificationReport> out;
  for (long r : grid_longs(pm, "r", {1, 2, 3, 4})) {
    auto t0 = Clock::now();
    const std::string tol = tol_of(pm, "1e-6");
    PrecisionCtx ctx = make_ctx(bits, tol);
    SumResult lhs = odd_weighted_series(static_cast<int>(r), ctx);
    SumResult h = h_weighted_series(static_cast<int>(r), ctx);
    SumResult rhs = h;
    rhs.value = (h.value - alt_harmonic_closed_form(static_cast<int>(r), ctx) * 2L)
                    .round_to(ctx.precision_bits);
    rhs.trunc_err = h.trunc_err + ctx.target_abs_err;
    out.push_back(finish("I14", kv("r", r), lhs, rhs, tol, bits, t0));
  }
  return out;
}

// ---- I16: bilateral partial fractions for 3F2(1,a,b;2-x,2+x;1) ----
std::vector<VerificationReport> run_i16(const ParamMap& pm, long bits) {
  std::vector<VerificationReport> out;
  struct AB {
    Rat a, b;
  };
  std::vector<AB> abdef{{Rat(1), Rat(1)}, {Rat(1), Rat(3, 2)}, {Rat(1, 2), Rat(1, 2)},
                        {Rat(1, 3), Rat(2, 3)}};
  std::vector<AB> abs_;
  if (pm.count("a") || pm.count("b")) {
    Rat a = grid_rats(pm, "a", {Rat(1)})[0];
    Rat b = grid_rats(pm, "b", {Rat(1)})[0];
    abs_.push_back({a, b});
  } else {
    abs_ = abdef;
  }
  for (const AB& ab : abs_)
    for (const Rat& x : grid_rats(pm, "x", x_grid())) {
      auto t0 = Clock::now();
      const bool tight = ab.a == Rat(1) && ab.b == Rat(1);
      const std::string tol = tol_of(pm, tight ? "1e-20" : "1e-10");
      PrecisionCtx ctx = make_ctx(bits, tol);
      HypParams hp{{Rat(1), ab.a, ab.b}, {Rat(2) - x, Rat(2) + x}};
      SumResult lhs = hyp_eval(hp, Rat(1), ctx);
      SumResult rhs = partial_fraction_3f2(ab.a, ab.b, x, ctx);
      out.push_back(finish("I16",
                           kv("a", ab.a) + " " + kv("b", ab.b) + " " + kv("x", x), lhs,
                           rhs, tol, bits, t0));
    }
  return out;
}

// ---- I17: single-sided partial fractions for 3F2(1,1,b;2-x,2+x;1) ----
std::vector<VerificationReport> run_i17(const ParamMap& pm, long bits) {
  std::vector<VerificationReport> out;
  for (const Rat& b : grid_rats(pm, "b", {Rat(1, 2), Rat(1), Rat(3, 2)}))
    for (const Rat& x : grid_rats(pm, "x", x_grid())) {
      auto t0 = Clock::now();
      const char* def = b == Rat(1) ? "1e-20" : (b == Rat(1, 2) ? "1e-12" : "1e-10");
      const std::string tol = tol_of(pm, def);
      PrecisionCtx ctx = make_ctx(bits, tol);
      const long w = ctx.precision_bits + 32;
      HypParams hp{{Rat(1), Rat(1), b}, {Rat(2) - x, Rat(2) + x}};
      SumResult lhs = hyp_eval(hp, Rat(1), ctx);
      // (x^2-1) sum_k (-1)^k (b)_{k-1}/(2-b)_k (1/(x+k) - 1/(x-k));
      // the rising-factorial ratio advances one factor per term
      auto cur = std::make_shared<Rat>(Rat(1) / (Rat(2) - b));
      auto last = std::make_shared<long>(1);
      const Rat x2 = x * x;
      auto abs_term = [cur, last, b, x2, w](long j) {
        const long k = j + 1;
        while (*last < k) {
          const Rat m(*last + 1);
          *cur *= (b + m - Rat(2)) / (Rat(2) - b + m - Rat(1));
          ++*last;
        }
        return Real(*cur * Rat(2 * k) / (Rat(k * k) - x2), w);
      };
      SumResult inner = sum_cvz_alternating(abs_term, +1, ctx);
      SumResult rhs = scale_result(inner, Real(Rat(1) - x2, w), ctx.precision_bits);
      out.push_back(finish("I17", kv("b", b) + " " + kv("x", x), lhs, rhs, tol, bits, t0));
    }
  return out;
}

// ---- I18: closed evaluations of the b-family: rational, pi/sin, digamma ----
std::vector<VerificationReport> run_i18(const ParamMap& pm, long bits) {
  std::vector<VerificationReport> out;
  for (const Rat& b : grid_rats(pm, "b", {Rat(1, 2), Rat(1), Rat(3, 2)}))
    for (const Rat& x : grid_rats(pm, "x", x_grid())) {
      auto t0 = Clock::now();
      const char* def = b == Rat(1) ? "1e-20" : (b == Rat(1, 2) ? "1e-12" : "1e-15");
      const std::string tol = tol_of(pm, def);
      PrecisionCtx ctx = make_ctx(bits, tol);
      const long w = ctx.precision_bits + 32;
      const Rat x2 = x * x;
      SumResult lhs, rhs;
      if (b == Rat(1, 2)) {
        // explicit rational partial fractions
        HypParams hp{{Rat(1), Rat(1), Rat(1, 2)}, {Rat(2) - x, Rat(2) + x}};
        lhs = hyp_eval(hp, Rat(1), ctx);
        auto abs_term = [x2, w](long j) {
          const long k = j + 1;
          const Rat kk(k * k);
          return Real(Rat(k) / ((kk - Rat(1, 4)) * (kk - x2)), w);
        };
        SumResult inner = sum_cvz_alternating(abs_term, +1, ctx);
        rhs = scale_result(inner, Real(Rat(1) - x2, w), ctx.precision_bits);
      } else if (b == Rat(1)) {
        HypParams hp{{Rat(1), Rat(1), Rat(1)}, {Rat(2) - x, Rat(2) + x}};
        lhs = hyp_eval(hp, Rat(1), ctx);
        const Real xr(x, w);
        const Real pi = const_pi(w);
        rhs = wrap_value((xr * xr - 1L) / xr * (1L / xr - pi / sin(pi * xr)), ctx);
      } else if (b == Rat(3, 2)) {
        lhs = partial_fraction_3f2(Rat(1), Rat(3, 2), x, ctx);
        rhs = wrap_value(closed_3f2_x(x, ctx), ctx);
      } else {
        throw std::invalid_argument("I18: b must be one of 1/2, 1, 3/2");
      }
      out.push_back(finish("I18", kv("b", b) + " " + kv("x", x), lhs, rhs, tol, bits, t0));
    }
  return out;
}

// ---- I19: Gauss summation for 2F1 at unit argument ----
std::vector<VerificationReport> run_i19(const ParamMap& pm, long bits) {
  std::vector<VerificationReport> out;
  struct G {
    Rat a, b, c;
  };
  std::vector<G> samples{{Rat(1, 2), Rat(1, 3), Rat(2)},
                         {Rat(1, 3), Rat(2, 3), Rat(2)},
                         {Rat(1), Rat(1), Rat(3)},
                         {Rat(1, 4), Rat(3, 4), Rat(5, 2)}};
  if (pm.count("a") || pm.count("b") || pm.count("c")) {
    G g{grid_rats(pm, "a", {Rat(1, 2)})[0], grid_rats(pm, "b", {Rat(1, 3)})[0],
        grid_rats(pm, "c", {Rat(2)})[0]};
    samples = {g};
  }
  for (const G& g : samples) {
    auto t0 = Clock::now();
    const std::string tol = tol_of(pm, "1e-25");
    PrecisionCtx ctx = make_ctx(bits, tol);
    HypParams hp{{g.a, g.b}, {g.c}};
    SumResult lhs = hyp_eval(hp, Rat(1), ctx);
    SumResult rhs = wrap_value(gauss_2f1_closed(g.a, g.b, g.c, ctx), ctx);
    out.push_back(finish("I19",
                         kv("a", g.a) + " " + kv("b", g.b) + " " + kv("c", g.c), lhs,
                         rhs, tol, bits, t0));
  }
  return out;
}

// ---- I20: a-family generating identity against the scaled unit 3F2 ----
std::vector<VerificationReport> run_i20(const ParamMap& pm, long bits) {
  std::vector<VerificationReport> out;
  const Rat a = grid_rats(pm, "a", {Rat(1, 2)})[0];
  for (const Rat& x : grid_rats(pm, "x", {Rat(1, 4), Rat(2, 5)})) {
    auto t0 = Clock::now();
    const std::string tol = tol_of(pm, "1e-10");
    PrecisionCtx ctx = make_ctx(bits, tol);
    const long w = ctx.precision_bits + 32;
    const Rat x2 = x * x;
    const double x2d = x2.to_double();
    // coefficients stay below 4; truncate once the geometric tail is negligible
    const double cut = std::strtod(tol.c_str(), nullptr) / 80.0 * (1.0 - x2d) / 4.0;
    const long R = static_cast<long>(std::ceil(std::log(cut) / std::log(x2d)));
    PrecisionCtx ictx = ctx;
    ictx.target_abs_err = ctx.target_abs_err / (2 * (R + 2));
    SumResult lhs;
    lhs.method = SumMethod::levin_u;
    Real acc = Real::zero(w), err = Real::zero(64), xp(1L, w);
    for (long r = 0; r <= R; ++r) {
      SumResult one = param_apery_lhs(a, r, ictx);
      acc += one.value * xp;
      err += one.est_err() * xp;
      lhs.terms_used += one.terms_used;
      if (!one.tolerance_met) lhs.tolerance_met = false;
      xp *= Real(x2, w);
    }
    lhs.value = acc.round_to(ctx.precision_bits);
    lhs.trunc_err = err + xp * Real(4L, w) / (Real(1L, w) - Real(x2, w));
    lhs.round_err = abs(lhs.value) * Real::pow2(-ctx.precision_bits + 6, 64);
    HypParams hp{{Rat(1), Rat(1), Rat(1) + a}, {Rat(2) - x, Rat(2) + x}};
    SumResult hyp = hyp_eval(hp, Rat(1), ctx);
    SumResult rhs = scale_result(hyp, Real(a / (Rat(1) - x2), w), ctx.precision_bits);
    out.push_back(finish("I20", kv("a", a) + " " + kv("x", x), lhs, rhs, tol, bits, t0));
  }
  return out;
}

// ---- I21: parametric series pair ----
std::vector<VerificationReport> run_i21(const ParamMap& pm, long bits) {
  std::vector<VerificationReport> out;
  for (const Rat& a : grid_rats(pm, "a", {Rat(1, 3), Rat(1, 2), Rat(2, 3)}))
    for (long r : grid_longs(pm, "r", {0, 1, 2, 3})) {
      auto t0 = Clock::now();
      const std::string tol = tol_of(pm, "1e-10");
      PrecisionCtx ctx = make_ctx(bits, tol);
      SumResult lhs = param_apery_lhs(a, r, ctx);
      SumResult rhs = param_apery_rhs(a, r, ctx);
      out.push_back(finish("I21", kv("a", a) + " " + kv("r", r), lhs, rhs, tol, bits, t0));
    }
  return out;
}

// ---- I22: shifted-weight parametric extension ----
std::vector<VerificationReport> run_i22(const ParamMap& pm, long bits) {
  std::vector<VerificationReport> out;
  for (const Rat& a : grid_rats(pm, "a", {Rat(1, 3), Rat(1, 2), Rat(2, 3)}))
    for (long k : grid_longs(pm, "k", {0, 1, 2}))
      for (long r : grid_longs(pm, "r", {0, 1, 2})) {
        auto t0 = Clock::now();
        const std::string tol = tol_of(pm, k == 0 ? "1e-10" : "1e-6");
        PrecisionCtx ctx = make_ctx(bits, tol);
        SumResult lhs = hurwitz_param_lhs(a, r, k, ctx);
        SumResult rhs = hurwitz_param_rhs(a, r, k, ctx);
        out.push_back(finish("I22", kv("a", a) + " " + kv("k", k) + " " + kv("r", r),
                             lhs, rhs, tol, bits, t0));
      }
  return out;
}

// ---- I23: half-shifted chain weights on the central-binomial series ----
std::vector<VerificationReport> run_i23(const ParamMap& pm, long bits) {
  std::vector<VerificationReport> out;
  for (long k : grid_longs(pm, "k", {0, 1, 2}))
    for (long r : grid_longs(pm, "r", {0, 1, 2})) {
      auto t0 = Clock::now();
      const std::string tol = tol_of(pm, k == 0 ? "1e-10" : "1e-6");
      PrecisionCtx ctx = make_ctx(bits, tol);
      SumResult lhs = t_weighted_cb_series(static_cast<int>(r), static_cast<int>(k), ctx);
      SumResult rhs = t_weighted_cb_rhs(static_cast<int>(r), static_cast<int>(k), ctx);
      out.push_back(finish("I23", kv("k", k) + " " + kv("r", r), lhs, rhs, tol, bits, t0));
    }
  return out;
}

// ---- I24: rising-factorial derivatives vs shifted chain sums ----
std::vector<VerificationReport> run_i24(const ParamMap& pm, long bits) {
  std::vector<VerificationReport> out;
  struct S {
    Rat a;
    long n;
  };
  std::vector<S> samples{{Rat(1, 3), 12}, {Rat(2, 3), 25}};
  if (pm.count("a") || pm.count("n")) {
    samples = {{grid_rats(pm, "a", {Rat(1, 3)})[0], grid_longs(pm, "n", {12})[0]}};
  }
  std::vector<long> kinds = grid_longs(pm, "reciprocal", {0, 1});
  for (const S& s : samples)
    for (long k : grid_longs(pm, "k", {1, 2}))
      for (long rec : kinds) {
        auto t0 = Clock::now();
        const std::string tol = tol_of(pm, "1e-12");
        PrecisionCtx ctx = make_ctx(bits, tol);
        auto kind = rec != 0 ? PochDerivKind::reciprocal : PochDerivKind::rising;
        auto pr = pochhammer_derivative_check(s.a, s.n, static_cast<int>(k), kind, ctx);
        SumResult lhs = wrap_value(pr.first, ctx);
        SumResult rhs = wrap_value(pr.second, ctx);
        std::string params = kv("a", s.a) + " " + kv("n", s.n) + " " + kv("k", k) +
                             " " + kv("reciprocal", rec);
        out.push_back(finish("I24", std::move(params), lhs, rhs, tol, bits, t0));
      }
  return out;
}

const std::vector<IdentityCase>& case_table() {
  static const std::vector<IdentityCase> table{
      {"I01", "zeta(3) from the alternating inverse-central-binomial series", "none",
       "1e-30", run_i01},
      {"I02", "central-binomial series over star chains of twos vs odd zeta values",
       "r in {0..4}", "1e-10", run_i02},
      {"I03", "strict/star chain generating functions, exact coefficients",
       "(n,order) in {(5,8),(12,20),(25,40)}, star in {0,1}", "exact", run_i03},
      {"I04", "digamma closed form of the unit-argument 3F2", "x in {1/10,1/4,2/5}",
       "1e-10", run_i04},
      {"I05", "quadratic transformation of the 3F2 at negative argument",
       "x in {1/10,1/4,2/5} with z=-1, plus x=1/4, z=-1/2", "1e-25", run_i05},
      {"I06", "digamma duplication and its symmetric half-argument chain",
       "x in {1/10,1/4,2/5}, forms base/chain", "1e-25", run_i06},
      {"I07", "odd-zeta power-series expansion: three routes",
       "x in {1/4,1/2}, routes coeffwise/term-ratio/hyp-unit", "1e-10", run_i07},
      {"I08", "geometric partial fractions of the 3F2 at argument 1-t",
       "x in {1/10,1/4,2/5}, t in {1/4,1/2,3/4}", "1e-25", run_i08},
      {"I09", "damped central-binomial star series vs odd polylogarithms",
       "r in {0..4}, z in {0,1/4,1/2,3/4,1}", "1e-25", run_i09},
      {"I10", "alternating-harmonic weighted chain series closed form", "r in {1..4}",
       "1e-6", run_i10},
      {"I11", "series route to the even zeta chain values vs pi powers", "r in {0..4}",
       "1e-25", run_i11},
      {"I12", "central-binomial generating functions on the open interval",
       "t in {1/4,1/2,3/4} plus the t=1 endpoint", "1e-25", run_i12},
      {"I13", "polylog integral vs the series routes, telescoped and split",
       "r in {1,2,3}, forms telescoped/log2split", "1e-8", run_i13},
      {"I14", "odd-harmonic weighted series from harmonic and closed-form routes",
       "r in {1..4}", "1e-6", run_i14},
      {"I16", "bilateral partial fractions for the two-parameter unit 3F2",
       "(a,b) in {(1,1),(1,3/2),(1/2,1/2),(1/3,2/3)}, x in {1/10,1/4,2/5}", "1e-10",
       run_i16},
      {"I17", "single-sided partial fractions across the b-family",
       "b in {1/2,1,3/2}, x in {1/10,1/4,2/5}", "1e-10", run_i17},
      {"I18", "closed evaluations of the b-family: rational, pi/sin, digamma",
       "b in {1/2,1,3/2}, x in {1/10,1/4,2/5}", "1e-12", run_i18},
      {"I19", "Gauss summation of the unit-argument 2F1",
       "(a,b,c) in four positive-excess samples", "1e-25", run_i19},
      {"I20", "a-family generating identity against the scaled unit 3F2",
       "a=1/2, x in {1/4,2/5}", "1e-10", run_i20},
      {"I21", "parametric rising-factorial series vs its alternating partner",
       "a in {1/3,1/2,2/3}, r in {0..3}", "1e-10", run_i21},
      {"I22", "shifted-weight extension of the parametric series",
       "a in {1/3,1/2,2/3}, k in {0,1,2}, r in {0,1,2}", "1e-6", run_i22},
      {"I23", "half-shifted chain weights on the central-binomial series",
       "k in {0,1,2}, r in {0,1,2}", "1e-6", run_i23},
      {"I24", "rising-factorial derivatives vs shifted chain sums",
       "(a,n) in {(1/3,12),(2/3,25)}, k in {1,2}, both directions", "1e-12", run_i24},
  };
  return table;
}

}  // namespace

const std::vector<IdentityCase>& identity_cases() { return case_table(); }

const IdentityCase* find_case(const std::string& id) {
  for (const IdentityCase& c : case_table())
    if (c.id == id) return &c;
  return nullptr;
}

std::vector<VerificationReport> run_suite(const SuiteOptions& opt) {
  std::vector<const IdentityCase*> selected;
  if (opt.ids.empty()) {
    for (const IdentityCase& c : case_table()) selected.push_back(&c);
  } else {
    for (const std::string& id : opt.ids)
      if (!find_case(id)) throw std::invalid_argument("unknown identity id: " + id);
    // emit in registry order (and deduplicated) no matter how ids were given
    for (const IdentityCase& c : case_table())
      if (std::find(opt.ids.begin(), opt.ids.end(), c.id) != opt.ids.end())
        selected.push_back(&c);
  }

  std::vector<std::vector<VerificationReport>> slots(selected.size());
  auto run_one = [&](size_t i) {
    try {
      slots[i] = selected[i]->run(ParamMap{}, opt.precision_bits);
    } catch (const std::exception& e) {
      VerificationReport rep;
      rep.id = selected[i]->id;
      rep.params = std::string("error: ") + e.what();
      rep.tolerance = selected[i]->default_tolerance;
      rep.status = "fail";
      rep.precision_bits = opt.precision_bits;
      slots[i] = {std::move(rep)};
    }
  };

  const int jobs = opt.jobs < 1 ? 1 : opt.jobs;
  if (jobs == 1 || selected.size() <= 1) {
    for (size_t i = 0; i < selected.size(); ++i) run_one(i);
  } else {
    std::atomic<size_t> next{0};
    auto worker = [&]() {
      for (;;) {
        size_t i = next.fetch_add(1);
        if (i >= selected.size()) return;
        run_one(i);
      }
    };
    std::vector<std::thread> pool;
    const size_t nthreads = std::min<size_t>(static_cast<size_t>(jobs), selected.size());
    pool.reserve(nthreads);
    for (size_t t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (std::thread& th : pool) th.join();
  }

  std::vector<VerificationReport> out;
  for (auto& s : slots)
    for (auto& rep : s) out.push_back(std::move(rep));
  return out;
}

int exit_code_for(const std::vector<VerificationReport>& reports) {
  for (const VerificationReport& r : reports)
    if (r.status != "pass") return 1;
  return 0;
}

std::string format_json(const std::vector<VerificationReport>& reports) {
  nlohmann::json arr = nlohmann::json::array();
  for (const VerificationReport& r : reports) {
    arr.push_back({{"id", r.id},
                   {"params", r.params},
                   {"lhs", r.lhs},
                   {"rhs", r.rhs},
                   {"abs_diff", r.abs_diff},
                   {"lhs_err", r.lhs_err},
                   {"rhs_err", r.rhs_err},
                   {"tol", r.tolerance},
                   {"lhs_method", r.lhs_method},
                   {"rhs_method", r.rhs_method},
                   {"status", r.status},
                   {"terms_used", r.terms_used},
                   {"precision_bits", r.precision_bits},
                   {"wall_time_ms", r.wall_time_ms}});
  }
  return arr.dump(2) + "\n";
}

std::string format_csv(const std::vector<VerificationReport>& reports) {
  std::ostringstream os;
  os << "id,params,lhs,rhs,abs_diff,lhs_err,rhs_err,tolerance,lhs_method,rhs_method,"
        "status,terms_used,precision_bits,wall_time_ms\n";
  for (const VerificationReport& r : reports) {
    os << r.id << ',' << r.params << ',' << r.lhs << ',' << r.rhs << ',' << r.abs_diff
       << ',' << r.lhs_err << ',' << r.rhs_err << ',' << r.tolerance << ','
       << r.lhs_method << ',' << r.rhs_method << ',' << r.status << ',' << r.terms_used
       << ',' << r.precision_bits << ',' << r.wall_time_ms << '\n';
  }
  return os.str();
}

std::string format_text(const std::vector<VerificationReport>& reports) {
  std::ostringstream os;
  size_t pass = 0, fail = 0, tnr = 0;
  for (const VerificationReport& r : reports) {
    os << r.id;
    if (!r.params.empty()) os << " [" << r.params << "]";
    os << ": " << r.status << "  diff=" << r.abs_diff << "  tol=" << r.tolerance
       << "  (" << r.lhs_method << "/" << r.rhs_method << ", " << r.terms_used
       << " terms, " << r.wall_time_ms << " ms)\n";
    if (r.status == "pass") ++pass;
    else if (r.status == "fail") ++fail;
    else ++tnr;
  }
  os << reports.size() << " samples: " << pass << " pass, " << fail << " fail, " << tnr
     << " tolerance_not_reached\n";
  return os.str();
}

}  // namespace apseries
