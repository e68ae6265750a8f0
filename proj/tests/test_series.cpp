#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "apseries/finite_sums.hpp"
#include "apseries/series.hpp"
#include "apseries/special_functions.hpp"
#include "oracles.hpp"

using namespace apseries;
using oracles::close;
using oracles::ref;

namespace {
PrecisionCtx ctx_of(const char* tol, long bits = 256) {
  return PrecisionCtx::make(bits, tol);
}
}  // namespace

TEST_CASE("geometric engine on known limits") {
  PrecisionCtx ctx = ctx_of("1e-40");
  auto half = [&](long n) { return Real::pow2(-n, 256); };
  SumResult one = sum_geometric_fn(half, 1, [](long) { return 0.5; }, ctx);
  CHECK(one.tolerance_met);
  CHECK(close(one.value, Real(1L, 256), "1e-39"));

  // sum x^n / n = -log(1-x) at x = 1/3
  auto t = [&](long n) {
    Real v = Real(Rat(1, 3).pow_int(n), 320);
    v.div_si(n);
    return v;
  };
  SumResult lg = sum_geometric_fn(t, 1, [](long) { return 0.3334; }, ctx, 320);
  CHECK(lg.tolerance_met);
  CHECK(close(lg.value, log(Real(Rat(3, 2), 320)), "1e-39"));
}

TEST_CASE("geometric engine ignores a leading zero block") {
  PrecisionCtx ctx = ctx_of("1e-30");
  auto t = [&](long n) { return n < 9 ? Real::zero(256) : Real::pow2(-n, 256); };
  SumResult s = sum_geometric_fn(t, 1, [](long) { return 0.5; }, ctx);
  CHECK(s.tolerance_met);
  CHECK(close(s.value, Real::pow2(-8, 256), "1e-29"));  // sum_{n>=9} 2^-n
}

TEST_CASE("alternating engine hits eta values") {
  PrecisionCtx ctx = ctx_of("1e-60", 320);
  auto inv = [](long k) { return Real(1L, 384) / (k + 1); };
  SumResult l2 = sum_cvz_alternating(inv, +1, ctx);
  CHECK(l2.tolerance_met);
  CHECK(close(l2.value, ref(oracles::kLog2), "1e-58"));

  auto inv2 = [](long k) { return Real(1L, 384) / ((k + 1) * (k + 1)); };
  SumResult e2 = sum_cvz_alternating(inv2, +1, ctx);
  Real pi = const_pi(384);
  CHECK(close(e2.value, pi * pi / 12L, "1e-58"));

  SumResult neg = sum_cvz_alternating(inv, -1, ctx);
  CHECK(close(neg.value, -l2.value, "1e-58"));
}

TEST_CASE("levin engine on an algebraic tail") {
  PrecisionCtx ctx = ctx_of("1e-20");
  auto t = [](long n) { return Real(1L, 384) / (n * n); };
  SumResult z2 = sum_levin_u(t, 1, ctx);
  Real pi = const_pi(384);
  CHECK(z2.tolerance_met);
  CHECK(close(z2.value, pi * pi / 6L, "1e-20"));
}

TEST_CASE("levin engine skips leading zeros and detects termination") {
  PrecisionCtx ctx = ctx_of("1e-20");
  auto shifted = [](long n) {
    return n < 5 ? Real::zero(256) : Real(1L, 384) / (n * n);
  };
  SumResult s = sum_levin_u(shifted, 1, ctx);
  Real pi = const_pi(384);
  Real expect = pi * pi / 6L - Real(Rat(1) + Rat(1, 4) + Rat(1, 9) + Rat(1, 16), 384);
  CHECK(s.tolerance_met);
  CHECK(close(s.value, expect, "1e-19"));

  auto finite = [](long n) {
    return n <= 7 ? Real(Rat(1, n * n), 256) : Real::zero(256);
  };
  SumResult f = sum_levin_u(finite, 1, ctx);
  Rat exact(0);
  for (long n = 1; n <= 7; ++n) exact += Rat(1, n * n);
  CHECK(f.tolerance_met);
  CHECK(close(f.value, Real(exact, 256), "1e-60"));
}

TEST_CASE("decay-class dispatch") {
  PrecisionCtx ctx = ctx_of("1e-30");
  TermSeq geo{[](long n) { return Real::pow2(-n, 256); }, DecayClass::geom(0.5), 1};
  CHECK(close(sum_adaptive(geo, ctx).value, Real(1L, 64), "1e-29"));

  TermSeq alt{[](long n) {
                Real v = Real(1L, 320) / (n * n);
                if (n % 2 == 0) v.neg();
                return v;
              },
              DecayClass::alt(), 1};
  Real pi = const_pi(320);
  CHECK(close(sum_adaptive(alt, ctx).value, pi * pi / 12L, "1e-29"));

  TermSeq alg{[](long n) { return Real(1L, 320) / (n * n); }, DecayClass::alg(2.0), 1};
  CHECK(close(sum_adaptive(alg, ctx).value, pi * pi / 6L, "1e-25"));
}

TEST_CASE("window extrapolation recovers a slow algebraic limit") {
  // partial sums of n^{-3/2} extrapolated to zeta(3/2)
  PrecisionCtx ctx = ctx_of("1e-8");
  const long w = 384;
  std::vector<long> nodes{64, 128, 256, 512, 1024};
  std::vector<Real> sums;
  Real s = Real::zero(w);
  long at = 0;
  for (long n = 1; n <= nodes.back(); ++n) {
    s += Real(1L, w) / (sqrt(Real(n, w)) * n);
    if (n == nodes[static_cast<size_t>(at)]) {
      sums.push_back(s);
      ++at;
    }
  }
  SumResult z = extrapolate_log_power(nodes, sums, Rat(-1, 2), 0, ctx);
  CHECK(z.method == SumMethod::richardson);
  CHECK(close(z.value, ref(oracles::kZeta3Half), "1e-8"));
  CHECK_THROWS(extrapolate_log_power({64, 128}, {s, s}, Rat(-1, 2), 0, ctx));
}

TEST_CASE("central-binomial series reaches the odd zeta combination") {
  PrecisionCtx ctx = ctx_of("1e-12");
  SumResult a1 = apery_series(1, ctx);
  CHECK(a1.tolerance_met);
  CHECK(close(a1.value, ref(oracles::kZeta3) * Real(Rat(3, 2), 64), "1e-12"));
  SumResult a0 = apery_series(0, ctx);
  CHECK(close(a0.value, ref(oracles::kLog2) * 2L, "1e-12"));
}

TEST_CASE("damped variant matches the undamped limit as z tends to 0") {
  PrecisionCtx ctx = ctx_of("1e-12");
  SumResult full = apery_series_z(2, Real::zero(128), ctx);
  SumResult plain = apery_series(2, ctx);
  CHECK(close(full.value, plain.value, "1e-11"));
}

TEST_CASE("raw tail bound dominates a simulated tail") {
  PrecisionCtx ctx = ctx_of("1e-10");
  const long cut = 50;
  Real bound = tail_bound_cb(cut, 1, ctx);
  // double-precision walk of the actual tail terms b_n zeta_n^*({2}) / n
  double b = 1.0;
  double zs = 0.0;
  for (long n = 1; n <= cut; ++n) {
    b *= (2.0 * n - 1) / (2.0 * n);
    zs += 1.0 / (static_cast<double>(n) * n);
  }
  double tail = 0.0;
  for (long n = cut + 1; n <= cut + 1000000; ++n) {
    b *= (2.0 * n - 1) / (2.0 * n);
    zs += 1.0 / (static_cast<double>(n) * n);
    tail += b * zs / n;
  }
  CHECK(tail < bound.to_double());
  CHECK(bound.to_double() < tail * 4.0);  // and stays in the circle of usefulness
}
