#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "apseries/finite_sums.hpp"
#include "oracles.hpp"

using apseries::Composition;
using apseries::Rat;
using namespace apseries;

TEST_CASE("strict chains against explicit recursion") {
  const std::vector<std::vector<int>> comps{{2}, {2, 2}, {2, 2, 2}, {1}, {1, 1}, {3, 1}, {2, 1, 2}};
  for (long n : {0L, 1L, 2L, 5L, 9L, 14L})
    for (const auto& k : comps) {
      CHECK(mhs(n, Composition(k)) == oracles::brute_mhs(n, k));
      CHECK(mhss(n, Composition(k)) == oracles::brute_mhss(n, k));
    }
}

TEST_CASE("depth beyond n gives zero, empty composition gives one") {
  CHECK(mhs(3, Composition({2, 2, 2, 2})) == Rat(0));
  CHECK(mhss(3, Composition({2, 2, 2, 2})) != Rat(0));  // star chains may repeat
  CHECK(mhs(7, Composition({})) == Rat(1));
  CHECK(mhss(0, Composition({})) == Rat(1));
  CHECK(mhs(0, Composition({2})) == Rat(0));
}

TEST_CASE("shifted-denominator chains against explicit recursion") {
  const std::vector<std::vector<int>> comps{{1}, {1, 1}, {2}, {2, 1}};
  const std::vector<Rat> alphas{Rat(1, 2), Rat(1, 3), Rat(2, 3), Rat(1)};
  for (long n : {1L, 4L, 8L})
    for (const auto& k : comps)
      for (const Rat& al : alphas) {
        CHECK(hurwitz_mhs(n, Composition(k), al) == oracles::brute_hurwitz(n, k, al, false));
        CHECK(hurwitz_mhss(n, Composition(k), al) == oracles::brute_hurwitz(n, k, al, true));
      }
}

TEST_CASE("half-shift chains are the alpha=1/2 specialization") {
  for (long n : {1L, 3L, 10L})
    for (int d = 1; d <= 3; ++d) {
      std::vector<int> k(d, 1);
      CHECK(t_sum(n, Composition(k), false) == hurwitz_mhs(n, Composition(k), Rat(1, 2)));
      CHECK(t_sum(n, Composition(k), true) == hurwitz_mhss(n, Composition(k), Rat(1, 2)));
    }
}

TEST_CASE("harmonic relatives") {
  for (long n = 1; n <= 50; ++n) {
    // alternating partial sum over 2n terms, negative-leading convention
    CHECK(alt_harmonic(n) == harmonic(n) - harmonic(2 * n));
    CHECK(odd_harmonic(n) == Rat(2) * harmonic(2 * n) - harmonic(n));
    CHECK(alt_harmonic(n) == (harmonic(n) - odd_harmonic(n)) / Rat(2));
  }
  CHECK(harmonic(1) == Rat(1));
  CHECK(harmonic(4) == Rat(25, 12));
  CHECK(odd_harmonic(2) == Rat(2) + Rat(2, 3));
}

TEST_CASE("central binomial ratio matches factorials") {
  Rat fact(1), fact2(1);
  for (long n = 1; n <= 30; ++n) {
    fact *= Rat(n);                                   // n!
    fact2 *= Rat(2 * n - 1) * Rat(2 * n);             // (2n)!
    const Rat binom = fact2 / (fact * fact);
    CHECK(central_binomial_ratio(n) == binom / Rat(4).pow_int(n));
    CHECK(central_binomial_ratio(n) == pochhammer(Rat(1, 2), n) / fact);
  }
  CHECK(central_binomial_ratio(0) == Rat(1));
}

TEST_CASE("rising factorial basics") {
  CHECK(pochhammer(Rat(3), 4) == Rat(3 * 4 * 5 * 6));
  CHECK(pochhammer(Rat(1, 3), 0) == Rat(1));
  CHECK(pochhammer(Rat(-2), 4) == Rat(0));  // hits zero factor
  apseries::Real pr = pochhammer(apseries::Real(Rat(1, 3), 128), 3);
  CHECK(abs(pr - apseries::Real(Rat(1, 3) * Rat(4, 3) * Rat(7, 3), 128)) <=
        apseries::Real::pow2(-120, 64));
}

TEST_CASE("chain-of-twos tables match direct sums") {
  SumTable2r tab(12, 4);
  for (long n = 0; n <= 12; ++n)
    for (int r = 0; r <= 4; ++r) {
      const Composition twos = Composition::repeat(2, r);
      CHECK(tab.star(n, r) == mhss(n, twos));
      CHECK(tab.plain(n, r) == mhs(n, twos));
    }
}

TEST_CASE("derivative check pairs agree at moderate precision") {
  apseries::PrecisionCtx ctx = apseries::PrecisionCtx::make(256, "1e-40");
  for (auto kind : {PochDerivKind::rising, PochDerivKind::reciprocal})
    for (int k = 1; k <= 2; ++k) {
      auto pr = pochhammer_derivative_check(Rat(1, 3), 10, k, kind, ctx);
      CHECK(abs(pr.first - pr.second) <= apseries::Real("1e-12", 64));
    }
}
