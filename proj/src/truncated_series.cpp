#include "apseries/truncated_series.hpp"

#include <stdexcept>

namespace apseries {

TruncSeries::TruncSeries(long order) {
    if (order < 0) throw std::invalid_argument("TruncSeries: negative order");
    c_.assign(static_cast<size_t>(order) + 1, Rat());
}

TruncSeries::TruncSeries(long order, const Rat& constant_term) : TruncSeries(order) {
    c_[0] = constant_term;
}

const Rat& TruncSeries::coeff(long k) const {
    if (k < 0 || k > order()) throw std::out_of_range("TruncSeries: coefficient index");
    return c_[static_cast<size_t>(k)];
}

void TruncSeries::set_coeff(long k, const Rat& v) {
    if (k < 0 || k > order()) throw std::out_of_range("TruncSeries: coefficient index");
    c_[static_cast<size_t>(k)] = v;
}

static void require_same_order(const TruncSeries& a, const TruncSeries& b) {
    if (a.order() != b.order())
        throw std::invalid_argument("TruncSeries: mismatched truncation orders");
}

TruncSeries TruncSeries::operator+(const TruncSeries& o) const {
    require_same_order(*this, o);
    TruncSeries r(order());
    for (long k = 0; k <= order(); ++k) r.c_[k] = c_[k] + o.c_[k];
    return r;
}

TruncSeries TruncSeries::operator-(const TruncSeries& o) const {
    require_same_order(*this, o);
    TruncSeries r(order());
    for (long k = 0; k <= order(); ++k) r.c_[k] = c_[k] - o.c_[k];
    return r;
}

TruncSeries TruncSeries::operator*(const TruncSeries& o) const {
    require_same_order(*this, o);
    TruncSeries r(order());
    for (long k = 0; k <= order(); ++k) {
        Rat acc;
        for (long i = 0; i <= k; ++i) acc += c_[i] * o.c_[k - i];
        r.c_[k] = acc;
    }
    return r;
}

bool TruncSeries::operator==(const TruncSeries& o) const {
    if (order() != o.order()) return false;
    for (long k = 0; k <= order(); ++k)
        if (!(c_[k] == o.c_[k])) return false;
    return true;
}

TruncSeries series_inv(const TruncSeries& a) {
    if (a.coeff(0).is_zero())
        throw std::invalid_argument("series_inv: zero constant term");
    const long R = a.order();
    TruncSeries b(R);
    const Rat inv0 = a.coeff(0).inv();
    b.set_coeff(0, inv0);
    for (long k = 1; k <= R; ++k) {
        Rat acc;
        for (long i = 1; i <= k; ++i) acc += a.coeff(i) * b.coeff(k - i);
        b.set_coeff(k, -(acc * inv0));
    }
    return b;
}

TruncSeries chain_sum_series(long n, long order, bool star) {
    if (n < 0) throw std::invalid_argument("chain_sum_series: negative n");
    TruncSeries s(order, Rat(1));
    std::vector<Rat> cur(static_cast<size_t>(order) + 1, Rat());
    cur[0] = Rat(1);
    for (long j = 1; j <= n; ++j) {
        const Rat w(1, j * j);
        if (star) {
            // weakly decreasing chains: depth r at bound j may reuse index j,
            // so the update reads the already-updated depth r-1 entry
            for (long r = 1; r <= order; ++r) cur[r] += cur[r - 1] * w;
        } else {
            for (long r = order; r >= 1; --r) cur[r] += cur[r - 1] * w;
        }
    }
    for (long r = 0; r <= order; ++r) s.set_coeff(r, cur[static_cast<size_t>(r)]);
    return s;
}

TruncSeries chain_product_series(long n, long order, bool star) {
    if (n < 0) throw std::invalid_argument("chain_product_series: negative n");
    TruncSeries p(order, Rat(1));
    for (long j = 1; j <= n; ++j) {
        TruncSeries f(order, Rat(1));
        if (order >= 1) f.set_coeff(1, star ? Rat(-1, j * j) : Rat(1, j * j));
        p = p * f;
    }
    return star ? series_inv(p) : p;
}

bool check_gf(long n, long order, bool star) {
    return chain_sum_series(n, order, star) == chain_product_series(n, order, star);
}

}  // namespace apseries
