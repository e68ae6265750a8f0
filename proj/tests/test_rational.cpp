#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "apseries/rational.hpp"

using apseries::Rat;

TEST_CASE("construction and canonical form") {
  CHECK(Rat(6, 4) == Rat(3, 2));
  CHECK(Rat(-6, 4) == Rat(-3, 2));
  CHECK(Rat(6, -4) == Rat(-3, 2));
  CHECK(Rat(0, 7) == Rat(0));
  CHECK(Rat(5).str() == "5");
  CHECK(Rat(3, 2).str() == "3/2");
  CHECK(Rat(-3, 2).str() == "-3/2");
}

TEST_CASE("string parsing") {
  CHECK(Rat("3/4") == Rat(3, 4));
  CHECK(Rat("-3/4") == Rat(-3, 4));
  CHECK(Rat("42") == Rat(42));
  CHECK(Rat("0.25") == Rat(1, 4));
  CHECK(Rat("-1.5") == Rat(-3, 2));
  CHECK(Rat("1e-3") == Rat(1, 1000));
  CHECK(Rat("2.5e2") == Rat(250));
  CHECK_THROWS(Rat("abc"));
  CHECK_THROWS(Rat("1/0"));
}

TEST_CASE("arithmetic") {
  Rat a(1, 6), b(1, 10);
  CHECK(a + b == Rat(4, 15));
  CHECK(a - b == Rat(1, 15));
  CHECK(a * b == Rat(1, 60));
  CHECK(a / b == Rat(5, 3));
  CHECK(-a == Rat(-1, 6));

  Rat c(2, 3);
  c += Rat(1, 3);
  CHECK(c == Rat(1));
  c *= Rat(3, 7);
  c -= Rat(1, 7);
  CHECK(c == Rat(2, 7));
  c /= Rat(2);
  CHECK(c == Rat(1, 7));
}

TEST_CASE("inverse and integer powers") {
  CHECK(Rat(3, 5).inv() == Rat(5, 3));
  CHECK(Rat(-2).inv() == Rat(-1, 2));
  CHECK(Rat(2, 3).pow_int(3) == Rat(8, 27));
  CHECK(Rat(2, 3).pow_int(0) == Rat(1));
  CHECK(Rat(2, 3).pow_int(-2) == Rat(9, 4));
  CHECK_THROWS(Rat(0).inv());
}

TEST_CASE("ordering and sign") {
  CHECK(Rat(1, 3) < Rat(1, 2));
  CHECK(Rat(-1, 2) < Rat(-1, 3));
  CHECK(Rat(7, 7) == Rat(1));
  CHECK(Rat(1, 3) >= Rat(1, 3));
  CHECK(Rat(-5, 9).abs() == Rat(5, 9));
  CHECK(Rat(-5, 9).sign() == -1);
  CHECK(Rat(0).is_zero());
  CHECK(!Rat(1, 9).is_zero());
}

TEST_CASE("double conversion stays within rounding") {
  CHECK(Rat(1, 4).to_double() == 0.25);
  CHECK(Rat(1, 3).to_double() == doctest::Approx(1.0 / 3).epsilon(1e-15));
}

TEST_CASE("telescoping sum stays exact over many operations") {
  // sum 1/(m(m+1)) = 1 - 1/(n+1)
  Rat total(0);
  const long n = 300;
  for (long m = 1; m <= n; ++m) total += Rat(1, m) * Rat(1, m + 1);
  CHECK(total == Rat(1) - Rat(1, n + 1));
}
