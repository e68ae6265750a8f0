#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "apseries/truncated_series.hpp"
#include "oracles.hpp"

using namespace apseries;

TEST_CASE("truncated arithmetic stays at fixed order") {
  TruncSeries a(3, Rat(1));      // 1
  TruncSeries b(3);               // 0
  b.set_coeff(1, Rat(1));         // u
  CHECK(a.order() == 3);
  CHECK((a + b).coeff(0) == Rat(1));
  CHECK((a + b).coeff(1) == Rat(1));
  CHECK((a - b).coeff(1) == Rat(-1));

  TruncSeries p = (a + b) * (a - b);  // 1 - u^2
  CHECK(p.coeff(0) == Rat(1));
  CHECK(p.coeff(1) == Rat(0));
  CHECK(p.coeff(2) == Rat(-1));
  CHECK(p.coeff(3) == Rat(0));

  // u^2 * u^2 truncates away entirely at order 3
  TruncSeries u2(3);
  u2.set_coeff(2, Rat(1));
  TruncSeries z = u2 * u2;
  for (long k = 0; k <= 3; ++k) CHECK(z.coeff(k) == Rat(0));

  CHECK(a == TruncSeries(3, Rat(1)));
  CHECK(a != b);
  CHECK_THROWS(a.coeff(4));
  CHECK_THROWS((void)(a + TruncSeries(2, Rat(1))));
}

TEST_CASE("series inverse multiplies back to one") {
  TruncSeries g(6, Rat(2));
  g.set_coeff(1, Rat(-1, 3));
  g.set_coeff(3, Rat(5, 7));
  g.set_coeff(6, Rat(11));
  TruncSeries prod = g * series_inv(g);
  CHECK(prod.coeff(0) == Rat(1));
  for (long k = 1; k <= 6; ++k) CHECK(prod.coeff(k) == Rat(0));

  TruncSeries no_const(4);
  no_const.set_coeff(1, Rat(1));
  CHECK_THROWS(series_inv(no_const));

  // geometric check: 1/(1-u) has all-ones coefficients
  TruncSeries one_minus_u(5, Rat(1));
  one_minus_u.set_coeff(1, Rat(-1));
  TruncSeries geo = series_inv(one_minus_u);
  for (long k = 0; k <= 5; ++k) CHECK(geo.coeff(k) == Rat(1));
}

TEST_CASE("chain sums agree with their product generating functions") {
  for (long n = 0; n <= 20; n += 4)
    for (bool star : {false, true}) {
      TruncSeries s = chain_sum_series(n, 5, star);
      TruncSeries p = chain_product_series(n, 5, star);
      CHECK(s == p);
      CHECK(check_gf(n, 5, star));
    }
}

TEST_CASE("chain coefficients are the nested sums over squares") {
  for (long n : {0L, 1L, 3L, 7L, 12L})
    for (long r = 0; r <= 5; ++r) {
      const std::vector<int> twos(static_cast<size_t>(r), 2);
      CHECK(chain_sum_series(n, 5, false).coeff(r) == oracles::brute_mhs(n, twos));
      CHECK(chain_sum_series(n, 5, true).coeff(r) == oracles::brute_mhss(n, twos));
    }
}

TEST_CASE("strict chains deeper than n vanish, weak chains do not") {
  TruncSeries strict = chain_sum_series(3, 6, false);
  CHECK(strict.coeff(4) == Rat(0));
  CHECK(strict.coeff(6) == Rat(0));
  TruncSeries weak = chain_sum_series(3, 6, true);
  CHECK(weak.coeff(4) != Rat(0));
  CHECK(chain_sum_series(0, 4, true).coeff(0) == Rat(1));
  CHECK(chain_sum_series(0, 4, true).coeff(1) == Rat(0));
}
