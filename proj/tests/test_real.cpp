#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "apseries/real.hpp"
#include "oracles.hpp"

using apseries::PrecisionCtx;
using apseries::Rat;
using apseries::Real;
using oracles::close;
using oracles::ref;

TEST_CASE("construction round-trips") {
  CHECK(Real(5L, 64).to_double() == 5.0);
  CHECK(Real(Rat(1, 4), 64).to_double() == 0.25);
  CHECK(Real("0.5", 64).to_double() == 0.5);
  CHECK(Real::from_double(1.5, 64).to_double() == 1.5);
  CHECK(Real::pow2(-3, 64).to_double() == 0.125);
  CHECK(Real::zero(64).is_zero());
}

TEST_CASE("mixed arithmetic and in-place updates") {
  Real a(3L, 128), b(Rat(1, 2), 128);
  CHECK((a + b).to_double() == 3.5);
  CHECK((a - b).to_double() == 2.5);
  CHECK((a * b).to_double() == 1.5);
  CHECK((a / b).to_double() == 6.0);
  CHECK((a + 1L).to_double() == 4.0);
  CHECK((1L / b).to_double() == 2.0);

  Real c(1L, 128);
  c += b;
  c.mul_si(4);
  c.div_si(3);
  c.sub_si(1);
  CHECK(c.to_double() == 1.0);
  c.neg();
  CHECK(c.to_double() == -1.0);
}

TEST_CASE("comparisons and rounding") {
  CHECK(Real(1L, 64) < Real(2L, 64));
  CHECK(Real(2L, 64) >= Real(2L, 256));
  Real x(Rat(1, 3), 300);
  Real y = x.round_to(64);
  CHECK(abs(x - y) <= Real::pow2(-64, 64));
  CHECK(x.is_finite());
}

TEST_CASE("named constants match reference digits") {
  const long prec = 384;
  CHECK(close(apseries::const_pi(prec), ref(oracles::kPi), "1e-100"));
  CHECK(close(apseries::const_log2(prec), ref(oracles::kLog2), "1e-100"));
  CHECK(close(apseries::const_euler(prec), ref(oracles::kEulerGamma), "1e-100"));

  PrecisionCtx ctx = PrecisionCtx::make(384, "1e-100");
  CHECK(close(apseries::constant("pi", ctx), ref(oracles::kPi), "1e-100"));
  CHECK(close(apseries::constant("log2", ctx), ref(oracles::kLog2), "1e-100"));
  CHECK(close(apseries::constant("euler_gamma", ctx), ref(oracles::kEulerGamma), "1e-100"));
  CHECK_THROWS(apseries::constant("no_such_constant", ctx));
}

TEST_CASE("elementary functions") {
  const long prec = 320;
  CHECK(close(sqrt(Real(2L, prec)), ref(oracles::kSqrt2), "1e-90"));
  CHECK(close(exp(apseries::const_log2(prec)), Real(2L, prec), "1e-90"));
  CHECK(close(log(Real(2L, prec)), ref(oracles::kLog2), "1e-90"));
  // sin(pi) collapses to the rounding scale of pi itself
  CHECK(abs(sin(apseries::const_pi(prec))) <= Real::pow2(-300, 64));
  CHECK(close(pow_int(Real(Rat(2, 3), prec), 3), Real(Rat(8, 27), prec), "1e-90"));
  CHECK(pow_int(Real(5L, prec), 0).to_double() == 1.0);
}

TEST_CASE("string formatting uses scientific digits") {
  Real x(Rat(1, 4), 128);
  CHECK(x.str(10) == "2.500000000e-01");
  CHECK(Real("2.5e-1", 128).to_double() == 0.25);
}

TEST_CASE("precision context derives tolerances") {
  PrecisionCtx ctx = PrecisionCtx::make(256, "1e-30");
  CHECK(ctx.precision_bits == 256);
  CHECK(ctx.target_abs_err <= Real("1e-30", 64));
  CHECK(ctx.target_abs_err > Real::zero(64));
  PrecisionCtx tight = ctx.with_tol(Real("1e-40", 64));
  CHECK(tight.target_abs_err < ctx.target_abs_err);
}
