#pragma once

#include <gmp.h>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace apseries {

// Exact rational number. Always canonical: gcd(num, den) = 1, den > 0.
class Rat {
 public:
  Rat() { mpq_init(q_); }  // 0/1
  Rat(long n) {
    mpq_init(q_);
    mpq_set_si(q_, n, 1);
  }
  Rat(long num, long den);
  // Accepts "p/q", integers, and plain decimals ("0.25" -> 1/4).
  explicit Rat(const std::string& text);

  Rat(const Rat& o) {
    mpq_init(q_);
    mpq_set(q_, o.q_);
  }
  Rat(Rat&& o) noexcept {
    mpq_init(q_);
    mpq_swap(q_, o.q_);
  }
  Rat& operator=(const Rat& o) {
    if (this != &o) mpq_set(q_, o.q_);
    return *this;
  }
  Rat& operator=(Rat&& o) noexcept {
    if (this != &o) mpq_swap(q_, o.q_);
    return *this;
  }
  ~Rat() { mpq_clear(q_); }

  friend Rat operator+(const Rat& a, const Rat& b) {
    Rat r;
    mpq_add(r.q_, a.q_, b.q_);
    return r;
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    Rat r;
    mpq_sub(r.q_, a.q_, b.q_);
    return r;
  }
  friend Rat operator*(const Rat& a, const Rat& b) {
    Rat r;
    mpq_mul(r.q_, a.q_, b.q_);
    return r;
  }
  friend Rat operator/(const Rat& a, const Rat& b);
  friend Rat operator-(const Rat& a) {
    Rat r;
    mpq_neg(r.q_, a.q_);
    return r;
  }

  Rat& operator+=(const Rat& o) {
    mpq_add(q_, q_, o.q_);
    return *this;
  }
  Rat& operator-=(const Rat& o) {
    mpq_sub(q_, q_, o.q_);
    return *this;
  }
  Rat& operator*=(const Rat& o) {
    mpq_mul(q_, q_, o.q_);
    return *this;
  }
  Rat& operator/=(const Rat& o);

  friend bool operator==(const Rat& a, const Rat& b) { return mpq_equal(a.q_, b.q_) != 0; }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) { return mpq_cmp(a.q_, b.q_) < 0; }
  friend bool operator<=(const Rat& a, const Rat& b) { return mpq_cmp(a.q_, b.q_) <= 0; }
  friend bool operator>(const Rat& a, const Rat& b) { return mpq_cmp(a.q_, b.q_) > 0; }
  friend bool operator>=(const Rat& a, const Rat& b) { return mpq_cmp(a.q_, b.q_) >= 0; }

  int sign() const { return mpq_sgn(q_); }
  bool is_zero() const { return mpq_sgn(q_) == 0; }
  bool is_integer() const { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }

  Rat inv() const;                 // 1/x, x != 0
  Rat pow_int(long e) const;       // x^e, e may be negative (x != 0 then)
  Rat abs() const {
    Rat r;
    mpq_abs(r.q_, q_);
    return r;
  }

  double to_double() const { return mpq_get_d(q_); }
  std::string str() const;         // "p/q" or "p" when q = 1

  // Raw handle for interop (Real conversion, hashing into caches).
  mpq_srcptr raw() const { return q_; }

 private:
  mpq_t q_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

}  // namespace apseries
