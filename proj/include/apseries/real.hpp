#pragma once

#include <mpfr.h>

#include <iosfwd>
#include <string>
#include <string_view>

#include "apseries/rational.hpp"

namespace apseries {

// Arbitrary-precision real backed by mpfr_t. Every value carries its own
// mantissa precision; all operations round to nearest, so results are
// deterministic bit-for-bit for equal inputs and precisions. Binary operators
// produce a result at max(precision of operands).
class Real {
 public:
  static constexpr long kMinPrec = 16;

  Real() { mpfr_init2(v_, 64); mpfr_set_zero(v_, 1); }
  explicit Real(long value, long prec = 64) {
    mpfr_init2(v_, clamp(prec));
    mpfr_set_si(v_, value, MPFR_RNDN);
  }
  Real(const Rat& q, long prec) {
    mpfr_init2(v_, clamp(prec));
    mpfr_set_q(v_, q.raw(), MPFR_RNDN);
  }
  // Parses decimal strings ("1e-30", "3.14...") at the given precision.
  Real(const std::string& text, long prec);

  Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
  Real(Real&& o) noexcept { mpfr_init2(v_, kMinPrec); mpfr_swap(v_, o.v_); }
  Real& operator=(const Real& o);
  Real& operator=(Real&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  long prec() const { return mpfr_get_prec(v_); }
  Real round_to(long prec) const {
    Real r(0L, prec);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
  }

  static Real zero(long prec) { return Real(0L, prec); }
  // 2^e at the given precision (exact).
  static Real from_double(double x, long prec) {
    Real r(0L, prec);
    mpfr_set_d(r.v_, x, MPFR_RNDN);
    return r;
  }
  static Real pow2(long e, long prec) {
    Real r(0L, prec);
    mpfr_set_ui_2exp(r.v_, 1, e, MPFR_RNDN);
    return r;
  }

  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_nan() const { return mpfr_nan_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  bool is_integer() const { return mpfr_integer_p(v_) != 0; }
  long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  // exponent e with |x| in [2^(e-1), 2^e); 0 for x = 0
  long exp2_of() const { return is_zero() ? 0 : static_cast<long>(mpfr_get_exp(v_)); }

  friend Real operator+(const Real& a, const Real& b) { return bin(mpfr_add, a, b); }
  friend Real operator-(const Real& a, const Real& b) { return bin(mpfr_sub, a, b); }
  friend Real operator*(const Real& a, const Real& b) { return bin(mpfr_mul, a, b); }
  friend Real operator/(const Real& a, const Real& b) { return bin(mpfr_div, a, b); }
  friend Real operator-(const Real& a) {
    Real r(0L, a.prec());
    mpfr_neg(r.v_, a.v_, MPFR_RNDN);
    return r;
  }

  Real& operator+=(const Real& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator-=(const Real& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator*=(const Real& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator/=(const Real& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }

  // in-place ops against machine integers (no temporaries; hot loops)
  Real& add_si(long x) { mpfr_add_si(v_, v_, x, MPFR_RNDN); return *this; }
  Real& sub_si(long x) { mpfr_sub_si(v_, v_, x, MPFR_RNDN); return *this; }
  Real& mul_si(long x) { mpfr_mul_si(v_, v_, x, MPFR_RNDN); return *this; }
  Real& div_si(long x) { mpfr_div_si(v_, v_, x, MPFR_RNDN); return *this; }
  Real& neg() { mpfr_neg(v_, v_, MPFR_RNDN); return *this; }
  Real& mul_d(double x) { mpfr_mul_d(v_, v_, x, MPFR_RNDN); return *this; }
  // this += a*b without an allocated temporary
  Real& fma(const Real& a, const Real& b) { mpfr_fma(v_, a.v_, b.v_, v_, MPFR_RNDN); return *this; }

  friend Real operator+(const Real& a, long b) { Real r(a); r.add_si(b); return r; }
  friend Real operator-(const Real& a, long b) { Real r(a); r.sub_si(b); return r; }
  friend Real operator*(const Real& a, long b) { Real r(a); r.mul_si(b); return r; }
  friend Real operator/(const Real& a, long b) { Real r(a); r.div_si(b); return r; }
  friend Real operator-(long a, const Real& b) {
    Real r(0L, b.prec());
    mpfr_si_sub(r.v_, a, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator/(long a, const Real& b) {
    Real r(0L, b.prec());
    mpfr_si_div(r.v_, a, b.v_, MPFR_RNDN);
    return r;
  }

  friend int cmp(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_); }
  friend bool operator==(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) == 0; }
  friend bool operator!=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) != 0; }
  friend bool operator<(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }

  friend Real abs(const Real& a) {
    Real r(0L, a.prec());
    mpfr_abs(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend Real sqrt(const Real& a);
  friend Real log(const Real& a);
  friend Real exp(const Real& a) { return un(mpfr_exp, a); }
  friend Real sin(const Real& a) { return un(mpfr_sin, a); }
  friend Real pow_int(const Real& a, long e);

  // Full-precision scientific decimal, deterministic.
  std::string str() const;
  std::string str(long digits) const;

  mpfr_srcptr raw() const { return v_; }
  mpfr_ptr raw() { return v_; }

 private:
  static long clamp(long p) { return p < kMinPrec ? kMinPrec : p; }
  using BinFn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
  using UnFn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);
  static Real bin(BinFn f, const Real& a, const Real& b) {
    Real r(0L, a.prec() > b.prec() ? a.prec() : b.prec());
    f(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  static Real un(UnFn f, const Real& a) {
    Real r(0L, a.prec());
    f(r.v_, a.v_, MPFR_RNDN);
    return r;
  }

  mpfr_t v_;
};

std::ostream& operator<<(std::ostream& os, const Real& r);

// Precision policy for one verification run. Invariant (checked at build):
// precision_bits >= bits(target_abs_err) + 32, so the mantissa always carries
// guard bits past the requested accuracy.
struct PrecisionCtx {
  long precision_bits = 256;
  Real target_abs_err;       // > 0
  long max_terms_geometric = 1000000;
  long max_terms_accel = 20000;

  static PrecisionCtx make(long bits = 256, const std::string& tol = "1e-30");

  // Working precision for a summation expected to touch ~n terms.
  long sum_bits(long n) const;
  PrecisionCtx with_tol(const Real& tol) const;
};

// Named-constant and elementary-function entry points (string-dispatched for
// the CLI; throw std::invalid_argument / std::domain_error on bad input).
Real constant(std::string_view name, const PrecisionCtx& ctx);
Real const_pi(long prec);
Real const_log2(long prec);
Real const_euler(long prec);
Real elem(std::string_view fn, const Real& x, const PrecisionCtx& ctx);

}  // namespace apseries
