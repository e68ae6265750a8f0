#include "apseries/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace apseries {

Rat::Rat(long num, long den) {
  if (den == 0) throw std::domain_error("Rat: zero denominator");
  mpq_init(q_);
  mpq_set_si(q_, num, 1);
  mpq_t d;
  mpq_init(d);
  mpq_set_si(d, den, 1);
  mpq_div(q_, q_, d);
  mpq_clear(d);
}

Rat::Rat(const std::string& text) {
  mpq_init(q_);
  auto fail = [&]() {
    mpq_clear(q_);
    throw std::invalid_argument("Rat: cannot parse '" + text + "'");
  };
  std::string body = text;
  long exp10 = 0;
  if (body.find('/') == std::string::npos) {
    const auto epos = body.find_first_of("eE");
    if (epos != std::string::npos) {
      const std::string es = body.substr(epos + 1);
      size_t used = 0;
      try {
        exp10 = std::stol(es, &used);
      } catch (...) {
        used = 0;
      }
      if (used == 0 || used != es.size()) fail();
      body.erase(epos);
    }
  }
  const auto dot = body.find('.');
  if (dot != std::string::npos) {
    exp10 -= static_cast<long>(body.size() - dot - 1);
    body.erase(dot, 1);
  }
  if (body.empty() || mpq_set_str(q_, body.c_str(), 10) != 0) fail();
  if (mpz_sgn(mpq_denref(q_)) == 0) {
    mpq_clear(q_);
    throw std::domain_error("Rat: zero denominator");
  }
  if (exp10 != 0) {
    mpz_t p;
    mpz_init(p);
    mpz_ui_pow_ui(p, 10, static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
    if (exp10 > 0)
      mpz_mul(mpq_numref(q_), mpq_numref(q_), p);
    else
      mpz_mul(mpq_denref(q_), mpq_denref(q_), p);
    mpz_clear(p);
  }
  mpq_canonicalize(q_);
}

Rat operator/(const Rat& a, const Rat& b) {
  if (b.is_zero()) throw std::domain_error("Rat: division by zero");
  Rat r;
  mpq_div(r.q_, a.q_, b.q_);
  return r;
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw std::domain_error("Rat: division by zero");
  mpq_div(q_, q_, o.q_);
  return *this;
}

Rat Rat::inv() const {
  if (is_zero()) throw std::domain_error("Rat: inverse of zero");
  Rat r;
  mpq_inv(r.q_, q_);
  return r;
}

Rat Rat::pow_int(long e) const {
  if (e == 0) return Rat(1);
  const Rat base = e < 0 ? inv() : *this;
  unsigned long n = e < 0 ? -static_cast<unsigned long>(e) : static_cast<unsigned long>(e);
  Rat r;
  mpz_pow_ui(mpq_numref(r.q_), mpq_numref(base.q_), n);
  mpz_pow_ui(mpq_denref(r.q_), mpq_denref(base.q_), n);
  // canonical in, canonical out: gcd(a,b)=1 implies gcd(a^n, b^n)=1
  return r;
}

std::string Rat::str() const {
  char* s = mpq_get_str(nullptr, 10, q_);
  std::string out(s);
  void (*freefn)(void*, size_t);
  mp_get_memory_functions(nullptr, nullptr, &freefn);
  freefn(s, out.size() + 1);
  return out;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

}  // namespace apseries
