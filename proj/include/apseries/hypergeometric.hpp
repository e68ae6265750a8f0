#pragma once

#include "apseries/rational.hpp"
#include "apseries/real.hpp"
#include "apseries/series.hpp"

#include <utility>
#include <vector>

namespace apseries {

// Parameter lists of a generalized hypergeometric series pFq with p <= 3,
// q <= 2 and p <= q+1.  Lower parameters must not be nonpositive integers.
struct HypParams {
    std::vector<Rat> upper;
    std::vector<Rat> lower;

    // sum(lower) - sum(upper); controls convergence on the unit circle.
    Rat excess() const;
    // index of the first vanishing numerator factor, or -1 if the series
    // does not terminate
    long terminates_at() const;
    void validate() const;
};

// Evaluates the pFq series at rational z in [-1, 1].  Terminating series
// are summed exactly over Q.  |z| < 1 uses the geometric engine; z = 1
// needs excess > 0 and accelerates the algebraic tail; z = -1 needs
// excess > -1 and uses the alternating-series engine.
SumResult hyp_eval(const HypParams& p, const Rat& z, const PrecisionCtx& ctx);

// sum_{n>=1} (1/2)_n (1)_n / ((1-x)_n (1+x)_n n) for rational |x| < 1;
// the terms decay like n^{-3/2}.
SumResult pochhammer_ratio_series(const Rat& x, const PrecisionCtx& ctx);

// Digamma closed form of 3F2(1,1,3/2; 2-x,2+x; 1) for rational |x| < 1:
//   4 log(2) (1-x^2) + 2(1-x^2)(psi(1-x/2) + psi(1+x/2))
//                    - 2(1-x^2)(psi(1-x)  + psi(1+x)).
Real closed_3f2_x(const Rat& x, const PrecisionCtx& ctx);

// Geometric partial-fraction form of 3F2(1,1,3/2; 2-x,2+x; 1-t) for
// t in (0, 1):
//   (2(1-x^2)/(1-t)) sum_{n>=1} w^n (1/(x-n) - 1/(x+n)),
// with w = (sqrt(t)-1)/(sqrt(t)+1) in (-1, 0).
SumResult functional_3f2(const Rat& x, const Rat& t, const PrecisionCtx& ctx);

// Alternating partial-fraction series for 3F2(1,a,b; 2-x,2+x; 1):
//   (1-x^2) sum_{k>=1} (-1)^{k-1} 2k c_k / (k^2 - x^2),
// where c_1 = Gamma(3-a-b)/(Gamma(3-a) Gamma(3-b)) and
// c_k/c_{k-1} = (a+k-2)(b+k-2)k / ((k-1)(1+k-a)(1+k-b)).
// Requires a, b < 2, a+b < 3 and nonintegral x with |x| < 1.
SumResult partial_fraction_3f2(const Rat& a, const Rat& b, const Rat& x,
                               const PrecisionCtx& ctx);

// Independently evaluated sides of the quadratic transformation
//   3F2(a,b,c; a-b+1,a-c+1; z)
//     = (1-z)^{-a} 3F2(a-b-c+1, a/2, (a+1)/2; a-b+1,a-c+1; -4z/(1-z)^2)
// for rational z in [-1, 0).
std::pair<SumResult, SumResult> quad_transform_pair(const Rat& a, const Rat& b,
                                                    const Rat& c, const Rat& z,
                                                    const PrecisionCtx& ctx);

// Gamma(c)Gamma(c-a-b) / (Gamma(c-a)Gamma(c-b)); the closed value of the
// 2F1 at unit argument.  Requires all four gamma arguments positive.
Real gauss_2f1_closed(const Rat& a, const Rat& b, const Rat& c,
                      const PrecisionCtx& ctx);

// sum_{n>=1} (a)_n/(n! n) * (depth-r star chain sum of 1/m^2 over m <= n)
// for a in (0, 1); terms decay like n^{a-2}.
SumResult param_apery_lhs(const Rat& a, long r, const PrecisionCtx& ctx);

// 2 sum_{n>=1} (-1)^{n-1} (a)_n / ((1-a)_n n^{2r+1}) for a in (0, 1).
SumResult param_apery_rhs(const Rat& a, long r, const PrecisionCtx& ctx);

// Shifted-weight extension of param_apery_lhs: each term additionally
// carries the depth-k strict chain sum of 1/(m+a-1) over m <= n.
SumResult hurwitz_param_lhs(const Rat& a, long r, long k, const PrecisionCtx& ctx);

// Matching right side: 2 sum_{n>=1} (-1)^{n-1} (a)_n/((1-a)_n n^{2r+1})
// times the convolution over i+j = k of the strict chain sum of 1/(m+a-1)
// and the weak chain sum of 1/(m-a).
SumResult hurwitz_param_rhs(const Rat& a, long r, long k, const PrecisionCtx& ctx);

}  // namespace apseries
