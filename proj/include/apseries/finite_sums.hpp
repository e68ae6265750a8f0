#pragma once

#include <utility>
#include <vector>

#include "apseries/rational.hpp"
#include "apseries/real.hpp"

namespace apseries {

// Exponent tuple (k1,...,kr) for a nested sum; parts are positive integers.
class Composition {
 public:
  Composition() = default;
  Composition(std::initializer_list<int> parts);
  explicit Composition(std::vector<int> parts);
  // (k, k, ..., k) with r copies
  static Composition repeat(int k, int r);

  int depth() const { return static_cast<int>(parts_.size()); }
  int weight() const;
  bool admissible() const { return parts_.empty() || parts_.front() > 1; }
  int part(int i) const { return parts_[static_cast<size_t>(i)]; }
  const std::vector<int>& parts() const { return parts_; }
  // (k2,...,kr)
  Composition tail() const;

 private:
  std::vector<int> parts_;
};

// Nested harmonic sum over n >= n1 > n2 > ... > nr > 0 of prod n_j^{-k_j}.
// Empty composition gives 1; depth > n gives 0. Exact.
Rat mhs(long n, const Composition& k);
// Star variant: n >= n1 >= n2 >= ... >= nr > 0.
Rat mhss(long n, const Composition& k);

// Hurwitz-shifted variants: denominators (n_j + alpha - 1)^{k_j}.
// alpha must avoid {0, -1, ..., 1-n} so no denominator vanishes.
Rat hurwitz_mhs(long n, const Composition& k, const Rat& alpha);
Rat hurwitz_mhss(long n, const Composition& k, const Rat& alpha);

// Sums over half-odd denominators 1/(n_j - 1/2): t_n(k) and star variant.
Rat t_sum(long n, const Composition& k, bool star = false);

// C(2n,n) / 4^n, exact; n >= 0. Monotone decreasing, <= 1/sqrt(pi n).
Rat central_binomial_ratio(long n);

// Rising factorial (a)_n = a (a+1) ... (a+n-1); n >= 0.
Rat pochhammer(const Rat& a, long n);
Real pochhammer(const Real& a, long n);

// H_n = sum 1/k (exact)
Rat harmonic(long n);
// Hbar_{2n} = sum_{j<=2n} (-1)^j / j; tends to -log 2. Argument is n.
Rat alt_harmonic(long n);
// t_n = sum_k 1/(k - 1/2)
Rat odd_harmonic(long n);

// DP tables of zeta_n({2}_r) (strict) and zeta_n^*({2}_r) (star), exact
// rationals for 0 <= n <= n_max, 0 <= r <= r_max.
//   star[n][r]  = star[n-1][r]  + star[n][r-1]  / n^2
//   plain[n][r] = plain[n-1][r] + plain[n-1][r-1] / n^2  (0 when n < r)
class SumTable2r {
 public:
  SumTable2r(long n_max, int r_max);

  const Rat& star(long n, int r) const;
  const Rat& plain(long n, int r) const;
  long n_max() const { return n_max_; }
  int r_max() const { return r_max_; }

 private:
  long n_max_;
  int r_max_;
  std::vector<std::vector<Rat>> star_, plain_;
};

// Finite-difference check of d^k/da^k (a)_n = k! (a)_n zeta_n({1}_k; a)
// (kind rising) and d^k/da^k 1/(1-a)_n = k!/(1-a)_n zeta_n^*({1}_k; 1-a)
// (kind reciprocal). Returns (numerical derivative, closed form) at the
// context precision; step h = 2^(-precision_bits/3).
enum class PochDerivKind { rising, reciprocal };
std::pair<Real, Real> pochhammer_derivative_check(const Rat& a, long n, int k,
                                                  PochDerivKind kind,
                                                  const PrecisionCtx& ctx);

}  // namespace apseries
