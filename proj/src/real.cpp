#include "apseries/real.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace apseries {

Real::Real(const std::string& text, long prec) {
  mpfr_init2(v_, clamp(prec));
  char* end = nullptr;
  mpfr_strtofr(v_, text.c_str(), &end, 10, MPFR_RNDN);
  if (end == text.c_str() || *end != '\0') {
    mpfr_clear(v_);
    throw std::invalid_argument("Real: cannot parse '" + text + "'");
  }
}

Real& Real::operator=(const Real& o) {
  if (this != &o) {
    if (prec() != o.prec()) mpfr_set_prec(v_, o.prec());
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

Real sqrt(const Real& a) {
  if (a.sign() < 0) throw std::domain_error("sqrt: negative argument");
  return Real::un(mpfr_sqrt, a);
}

Real log(const Real& a) {
  if (a.sign() <= 0) throw std::domain_error("log: non-positive argument");
  return Real::un(mpfr_log, a);
}

Real pow_int(const Real& a, long e) {
  if (e < 0 && a.is_zero()) throw std::domain_error("pow_int: 0 to negative power");
  Real r(0L, a.prec());
  mpfr_pow_si(r.raw(), a.raw(), e, MPFR_RNDN);
  return r;
}

std::string Real::str() const {
  // bits * log10(2) digits carry the full mantissa
  long digits = static_cast<long>(prec() * 0.30103) + 3;
  return str(digits);
}

std::string Real::str(long digits) const {
  if (digits < 2) digits = 2;
  char* s = nullptr;
  mpfr_asprintf(&s, "%.*Re", static_cast<int>(digits - 1), v_);
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

std::ostream& operator<<(std::ostream& os, const Real& r) { return os << r.str(); }

PrecisionCtx PrecisionCtx::make(long bits, const std::string& tol) {
  PrecisionCtx ctx;
  ctx.precision_bits = bits;
  ctx.target_abs_err = Real(tol, 64);
  if (!(ctx.target_abs_err.sign() > 0))
    throw std::invalid_argument("PrecisionCtx: target_abs_err must be > 0");
  const long needed = -ctx.target_abs_err.exp2_of() + 32;
  if (bits < 64 || bits < needed)
    throw std::invalid_argument("PrecisionCtx: precision_bits too small for target_abs_err");
  return ctx;
}

long PrecisionCtx::sum_bits(long n) const {
  long lg = 0;
  while ((1L << lg) < n && lg < 62) ++lg;
  return precision_bits + 32 + lg;
}

PrecisionCtx PrecisionCtx::with_tol(const Real& tol) const {
  PrecisionCtx c(*this);
  c.target_abs_err = tol.round_to(64);
  if (!(c.target_abs_err.sign() > 0))
    throw std::invalid_argument("PrecisionCtx: target_abs_err must be > 0");
  const long needed = -c.target_abs_err.exp2_of() + 32;
  if (c.precision_bits < needed) c.precision_bits = needed;
  return c;
}

Real const_pi(long prec) {
  Real r(0L, prec);
  mpfr_const_pi(r.raw(), MPFR_RNDN);
  return r;
}

Real const_log2(long prec) {
  Real r(0L, prec);
  mpfr_const_log2(r.raw(), MPFR_RNDN);
  return r;
}

Real const_euler(long prec) {
  Real r(0L, prec);
  mpfr_const_euler(r.raw(), MPFR_RNDN);
  return r;
}

Real constant(std::string_view name, const PrecisionCtx& ctx) {
  if (name == "pi") return const_pi(ctx.precision_bits);
  if (name == "log2") return const_log2(ctx.precision_bits);
  if (name == "euler_gamma") return const_euler(ctx.precision_bits);
  throw std::invalid_argument("constant: unknown name '" + std::string(name) + "'");
}

Real elem(std::string_view fn, const Real& x, const PrecisionCtx& ctx) {
  const Real xa = x.round_to(ctx.precision_bits);
  if (fn == "sqrt") return sqrt(xa);
  if (fn == "log") return log(xa);
  if (fn == "exp") return exp(xa);
  if (fn == "sin") return sin(xa);
  throw std::invalid_argument("elem: unknown function '" + std::string(fn) + "'");
}

}  // namespace apseries
