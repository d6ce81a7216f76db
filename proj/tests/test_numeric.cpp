#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "treecount/numeric.hpp"

using namespace treecount;

TEST_CASE("binomial on nonnegative upper argument") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(7, 0) == 1);
  CHECK(binomial(4, 7) == 0);
}

TEST_CASE("binomial is zero for negative lower argument") {
  CHECK(binomial(3, -1) == 0);
  CHECK(binomial(-3, -2) == 0);
}

TEST_CASE("binomial on negative upper argument via falling factorial") {
  CHECK(binomial(-1, 2) == 1);
  CHECK(binomial(-1, 3) == -1);
  CHECK(binomial(-4, 2) == 10);
}

TEST_CASE("upper negation") {
  for (long r = -12; r <= 12; ++r)
    for (long k = 0; k <= 10; ++k) {
      BigInt sign = (k % 2 == 0) ? 1 : -1;
      CHECK(binomial(r, k) == sign * binomial(k - r - 1, k));
    }
}

TEST_CASE("symmetry for nonnegative n") {
  for (long n = 0; n <= 12; ++n)
    for (long k = -3; k <= n + 3; ++k)
      CHECK(binomial(n, k) == binomial(n, n - k));
}

TEST_CASE("pow_int_rational") {
  CHECK(pow_int_rational(2, 3) == Rat(8));
  CHECK(pow_int_rational(3, -1) == make_rat(1, 3));
  CHECK(pow_int_rational(5, 0) == Rat(1));
  CHECK(pow_int_rational(-2, -3) == make_rat(-1, 8));
  CHECK_THROWS_AS(pow_int_rational(0, -1), std::invalid_argument);
}

TEST_CASE("as_integer accepts integers and rejects proper fractions") {
  CHECK(as_integer(Rat(42)) == 42);
  CHECK(as_integer(make_rat(6, 3)) == 2);
  CHECK_THROWS_AS(as_integer(make_rat(1, 3)), std::logic_error);
}
