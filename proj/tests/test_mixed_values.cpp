#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "apseries/mixed_values.hpp"
#include "apseries/series.hpp"
#include "apseries/special_functions.hpp"
#include "oracles.hpp"

using namespace apseries;
using oracles::close;
using oracles::ref;

TEST_CASE("unit-interval quadrature rule basics") {
  const QuadratureRule& q = gauss_legendre01(32, 256);
  REQUIRE(q.nodes.size() == 32);
  REQUIRE(q.weights.size() == 32);
  Real wsum = Real::zero(256), xsum = Real::zero(256), x3sum = Real::zero(256);
  for (size_t i = 0; i < 32; ++i) {
    CHECK(q.nodes[i].sign() > 0);
    CHECK(q.nodes[i] < Real(1L, 64));
    if (i) CHECK(q.nodes[i - 1] < q.nodes[i]);
    CHECK(q.weights[i].sign() > 0);
    wsum += q.weights[i];
    xsum += q.weights[i] * q.nodes[i];
    x3sum += q.weights[i] * pow_int(q.nodes[i], 3);
  }
  CHECK(close(wsum, Real(1L, 64), "1e-70"));
  CHECK(close(xsum, Real(Rat(1, 2), 64), "1e-70"));
  CHECK(close(x3sum, Real(Rat(1, 4), 64), "1e-70"));
  // node/weight symmetry about 1/2
  for (size_t i = 0; i < 16; ++i) {
    CHECK(close(q.nodes[i] + q.nodes[31 - i], Real(1L, 64), "1e-70"));
    CHECK(close(q.weights[i], q.weights[31 - i], "1e-70"));
  }
  // a 10-point rule integrates x^19 exactly (degree 2n - 1)
  const QuadratureRule& q10 = gauss_legendre01(10, 256);
  Real m19 = Real::zero(256);
  for (size_t i = 0; i < 10; ++i) m19 += q10.weights[i] * pow_int(q10.nodes[i], 19);
  CHECK(close(m19, Real(Rat(1, 20), 256), "1e-65"));
}

TEST_CASE("weighted dilog integral at either end of the depth range") {
  PrecisionCtx ctx = PrecisionCtx::make(256, "1e-25");
  // r = 0: 2 int_0^1 dt/(1+t) = 2 log 2
  SumResult r0 = li_integral(0, ctx);
  CHECK(r0.tolerance_met);
  CHECK(close(r0.value, ref(oracles::kLog2) * 2L, "1e-24"));
  // r = 1: 2 int_0^1 Li_2(t^2)/(1+t) dt = 2 zeta(2) log 2 - (3/2) zeta(3)
  SumResult r1 = li_integral(1, ctx);
  Real pi = const_pi(320);
  Real expect = pi * pi / 3L * ref(oracles::kLog2) - ref(oracles::kZeta3) * Real(Rat(3, 2), 64);
  CHECK(close(r1.value, expect, "1e-20"));
}

TEST_CASE("integral equals its telescoped series form") {
  PrecisionCtx ctx = PrecisionCtx::make(256, "1e-20");
  for (int r : {1, 2}) {
    SumResult a = li_integral(r, ctx);
    SumResult b = integral_series_lhs(r, ctx);
    CHECK(a.tolerance_met);
    CHECK(b.tolerance_met);
    CHECK(close(a.value, b.value, "1e-18"));
  }
}

TEST_CASE("alternating-harmonic weighted series and its closed form") {
  PrecisionCtx ctx = PrecisionCtx::make(256, "1e-20");
  // r = 1: sum hbar_{2n}/n^2 = -(3/4) zeta(3)  [hbar has limit -log 2]
  SumResult s1 = alt_harmonic_series(1, ctx);
  CHECK(s1.tolerance_met);
  Real expect = ref(oracles::kZeta3) * Real(Rat(-3, 4), 64);
  CHECK(close(s1.value, expect, "1e-18"));
  CHECK(close(alt_harmonic_closed_form(1, ctx), expect, "1e-18"));
  for (int r : {2, 3})
    CHECK(close(alt_harmonic_series(r, ctx).value, alt_harmonic_closed_form(r, ctx), "1e-15"));
}

TEST_CASE("harmonic-weighted series hits the euler value") {
  PrecisionCtx ctx = PrecisionCtx::make(256, "1e-15");
  // sum H_n / n^2 = 2 zeta(3)
  SumResult h = h_weighted_series(1, ctx);
  CHECK(h.tolerance_met);
  CHECK(close(h.value, ref(oracles::kZeta3) * 2L, "1e-13"));
  // sum (2 H_{2n} - H_n) / n^2 = (7/2) zeta(3)
  SumResult t = odd_weighted_series(1, ctx);
  CHECK(close(t.value, ref(oracles::kZeta3) * Real(Rat(7, 2), 64), "1e-13"));
  // the weights satisfy 2 H_{2n} - H_n = H_n - 2 hbar_{2n}, so the series do too
  SumResult hb = alt_harmonic_series(1, ctx);
  CHECK(close(t.value, h.value - hb.value * 2L, "1e-13"));
}

TEST_CASE("half-shift weighted binomial series reduces at k = 0") {
  PrecisionCtx ctx = PrecisionCtx::make(256, "1e-12");
  for (int r : {1, 2}) {
    SumResult a = t_weighted_cb_series(r, 0, ctx);
    SumResult b = apery_series(r, ctx);
    CHECK(a.tolerance_met);
    CHECK(close(a.value, b.value, "1e-11"));
  }
  SumResult rhs0 = t_weighted_cb_rhs(1, 0, ctx);
  // 2 sum (-1)^{n-1}/n^3 = (3/2) zeta(3)
  CHECK(close(rhs0.value, ref(oracles::kZeta3) * Real(Rat(3, 2), 64), "1e-12"));
}
