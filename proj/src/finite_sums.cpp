#include "apseries/finite_sums.hpp"

#include <stdexcept>

namespace apseries {

Composition::Composition(std::initializer_list<int> parts) : parts_(parts) {
  for (int p : parts_)
    if (p < 1) throw std::invalid_argument("Composition: parts must be >= 1");
}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p < 1) throw std::invalid_argument("Composition: parts must be >= 1");
}

Composition Composition::repeat(int k, int r) {
  if (r < 0) throw std::invalid_argument("Composition: negative depth");
  return Composition(std::vector<int>(static_cast<size_t>(r), k));
}

int Composition::weight() const {
  int w = 0;
  for (int p : parts_) w += p;
  return w;
}

Composition Composition::tail() const {
  if (parts_.empty()) throw std::logic_error("Composition: tail of empty");
  return Composition(std::vector<int>(parts_.begin() + 1, parts_.end()));
}

namespace {

// Shared DP for (shifted) nested sums. denom(m) = m + alpha - 1; rows run
// m = 1..n, suffix depth s = 0..r. Strict recurrence uses the previous row
// for the shorter suffix, star uses the current row.
Rat nested_sum(long n, const Composition& k, const Rat& alpha, bool star) {
  const int r = k.depth();
  if (r == 0) return Rat(1);
  if (n < 0) throw std::invalid_argument("nested sum: n < 0");
  if (!star && n < r) return Rat(0);
  // alpha must not hit {0, -1, ..., 1-n}
  if (alpha.is_integer() && alpha.sign() <= 0 && (-alpha) < Rat(n))
    throw std::domain_error("nested sum: shift makes a denominator vanish");

  // cur[s] = value with outer index up to m for the suffix of depth s
  // (suffix = last s parts of k)
  std::vector<Rat> cur(static_cast<size_t>(r) + 1);
  cur[0] = Rat(1);
  for (long m = 1; m <= n; ++m) {
    const Rat d = Rat(m) + alpha - Rat(1);
    // descending s: cur[s-1] on the right is the previous row's value
    // (strict) — so update order matters only for the star case
    if (star) {
      for (int s = 1; s <= r; ++s) {
        const int kj = k.part(r - s);  // outermost part of the depth-s suffix
        cur[static_cast<size_t>(s)] += cur[static_cast<size_t>(s) - 1] * d.pow_int(-kj);
      }
    } else {
      for (int s = r; s >= 1; --s) {
        const int kj = k.part(r - s);
        cur[static_cast<size_t>(s)] += cur[static_cast<size_t>(s) - 1] * d.pow_int(-kj);
      }
    }
  }
  return cur[static_cast<size_t>(r)];
}

}  // namespace

Rat mhs(long n, const Composition& k) { return nested_sum(n, k, Rat(1), false); }
Rat mhss(long n, const Composition& k) { return nested_sum(n, k, Rat(1), true); }

Rat hurwitz_mhs(long n, const Composition& k, const Rat& alpha) {
  return nested_sum(n, k, alpha, false);
}
Rat hurwitz_mhss(long n, const Composition& k, const Rat& alpha) {
  return nested_sum(n, k, alpha, true);
}

Rat t_sum(long n, const Composition& k, bool star) {
  return nested_sum(n, k, Rat(1, 2), star);
}

Rat central_binomial_ratio(long n) {
  if (n < 0) throw std::invalid_argument("central_binomial_ratio: n < 0");
  Rat b(1);
  for (long i = 1; i <= n; ++i) b *= Rat(2 * i - 1, 2 * i);
  return b;
}

Rat pochhammer(const Rat& a, long n) {
  if (n < 0) throw std::invalid_argument("pochhammer: n < 0");
  Rat p(1);
  for (long i = 0; i < n; ++i) p *= a + Rat(i);
  return p;
}

Real pochhammer(const Real& a, long n) {
  if (n < 0) throw std::invalid_argument("pochhammer: n < 0");
  Real p(1L, a.prec());
  Real f(a);
  for (long i = 0; i < n; ++i) {
    p *= f;
    f.add_si(1);
  }
  return p;
}

Rat harmonic(long n) {
  if (n < 0) throw std::invalid_argument("harmonic: n < 0");
  Rat h(0);
  for (long i = 1; i <= n; ++i) h += Rat(1, i);
  return h;
}

Rat alt_harmonic(long n) {
  if (n < 1) throw std::invalid_argument("alt_harmonic: n < 1");
  Rat h(0);
  for (long j = 1; j <= 2 * n; ++j) h += Rat(j % 2 ? -1 : 1, j);
  return h;
}

Rat odd_harmonic(long n) {
  if (n < 0) throw std::invalid_argument("odd_harmonic: n < 0");
  Rat t(0);
  for (long i = 1; i <= n; ++i) t += Rat(2, 2 * i - 1);
  return t;
}

SumTable2r::SumTable2r(long n_max, int r_max) : n_max_(n_max), r_max_(r_max) {
  if (n_max < 0 || r_max < 0) throw std::invalid_argument("SumTable2r: negative bounds");
  star_.assign(static_cast<size_t>(n_max) + 1,
               std::vector<Rat>(static_cast<size_t>(r_max) + 1, Rat(0)));
  plain_ = star_;
  for (long n = 0; n <= n_max; ++n) {
    star_[static_cast<size_t>(n)][0] = Rat(1);
    plain_[static_cast<size_t>(n)][0] = Rat(1);
  }
  for (long n = 1; n <= n_max; ++n) {
    const Rat inv_n2 = Rat(1) / Rat(n * n);
    auto& srow = star_[static_cast<size_t>(n)];
    auto& sprev = star_[static_cast<size_t>(n) - 1];
    auto& prow = plain_[static_cast<size_t>(n)];
    auto& pprev = plain_[static_cast<size_t>(n) - 1];
    for (int r = 1; r <= r_max; ++r) {
      srow[static_cast<size_t>(r)] = sprev[static_cast<size_t>(r)] +
                                     srow[static_cast<size_t>(r) - 1] * inv_n2;
      prow[static_cast<size_t>(r)] = pprev[static_cast<size_t>(r)] +
                                     pprev[static_cast<size_t>(r) - 1] * inv_n2;
    }
  }
}

const Rat& SumTable2r::star(long n, int r) const {
  if (n < 0 || n > n_max_ || r < 0 || r > r_max_)
    throw std::out_of_range("SumTable2r::star");
  return star_[static_cast<size_t>(n)][static_cast<size_t>(r)];
}

const Rat& SumTable2r::plain(long n, int r) const {
  if (n < 0 || n > n_max_ || r < 0 || r > r_max_)
    throw std::out_of_range("SumTable2r::plain");
  return plain_[static_cast<size_t>(n)][static_cast<size_t>(r)];
}

std::pair<Real, Real> pochhammer_derivative_check(const Rat& a, long n, int k,
                                                  PochDerivKind kind,
                                                  const PrecisionCtx& ctx) {
  if (n < 1 || k < 1 || k > 2)
    throw std::invalid_argument("pochhammer_derivative_check: need n >= 1, k in {1,2}");
  const long w = ctx.precision_bits + 64;
  const Real h = Real::pow2(-(ctx.precision_bits / 3), w);
  const Real av(a, w);

  auto f = [&](const Real& x) -> Real {
    if (kind == PochDerivKind::rising) return pochhammer(x, n);
    const Real one_minus(Real(1L, w) - x);
    return Real(1L, w) / pochhammer(one_minus, n);
  };

  Real num(0L, w);
  if (k == 1) {
    num = (f(av + h) - f(av - h)) / (h * 2L);
  } else {
    num = (f(av + h) - f(av) * 2L + f(av - h)) / (h * h);
  }

  Rat closed;
  if (kind == PochDerivKind::rising) {
    closed = pochhammer(a, n) * hurwitz_mhs(n, Composition::repeat(1, k), a);
  } else {
    closed = pochhammer(Rat(1) - a, n).inv() *
             hurwitz_mhss(n, Composition::repeat(1, k), Rat(1) - a);
  }
  for (int i = 2; i <= k; ++i) closed *= Rat(i);
  return {num.round_to(ctx.precision_bits), Real(closed, ctx.precision_bits)};
}

}  // namespace apseries
