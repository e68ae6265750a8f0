#pragma once

#include "apseries/rational.hpp"

#include <vector>

namespace apseries {

// Dense truncated power series with exact rational coefficients.  coeff(k)
// is the coefficient of u^k; every operation drops terms above the
// truncation order fixed at construction, so arithmetic never grows the
// series.  Binary operations require both operands to share an order.
class TruncSeries {
public:
    explicit TruncSeries(long order);
    TruncSeries(long order, const Rat& constant_term);

    long order() const { return static_cast<long>(c_.size()) - 1; }
    const Rat& coeff(long k) const;
    void set_coeff(long k, const Rat& v);

    TruncSeries operator+(const TruncSeries& o) const;
    TruncSeries operator-(const TruncSeries& o) const;
    TruncSeries operator*(const TruncSeries& o) const;

    bool operator==(const TruncSeries& o) const;
    bool operator!=(const TruncSeries& o) const { return !(*this == o); }

private:
    std::vector<Rat> c_;  // invariant: size() == order + 1
};

// Multiplicative inverse truncated at the order of `a`; requires a nonzero
// constant term.
TruncSeries series_inv(const TruncSeries& a);

// Entry r holds the depth-r nested sum over index chains in {1..n} of
// prod 1/n_i^2: strictly decreasing chains when star == false, weakly
// decreasing chains when star == true.  Entry 0 is 1; entries with r > n
// vanish in the strict case.
TruncSeries chain_sum_series(long n, long order, bool star);

// The same coefficient sequence built multiplicatively: the product of
// (1 + u/j^2) over j = 1..n for strict chains, and the reciprocal of the
// product of (1 - u/j^2) for star chains.
TruncSeries chain_product_series(long n, long order, bool star);

// Exact coefficientwise equality of the additive and multiplicative
// constructions.
bool check_gf(long n, long order, bool star);

}  // namespace apseries
