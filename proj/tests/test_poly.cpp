#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "treecount/poly.hpp"

using namespace treecount;

namespace {

// small deterministic LCG for property inputs
long next_val(unsigned long& s) {
  s = s * 6364136223846793005ull + 1442695040888963407ull;
  return static_cast<long>((s >> 33) % 13) - 6;
}

Polynomial1 random_poly1(unsigned long& s, int max_deg) {
  std::vector<Rat> c;
  int deg = static_cast<int>((s >> 20) % static_cast<unsigned>(max_deg + 1));
  for (int d = 0; d <= deg; ++d) c.push_back(Rat(next_val(s)));
  return Polynomial1(std::move(c));
}

}  // namespace

TEST_CASE("Polynomial1 basics") {
  auto x = Polynomial1::x();
  CHECK(Polynomial1().is_zero());
  CHECK(Polynomial1().degree() == -1);
  CHECK((x + Polynomial1(1)).pow(2).coeff(1) == Rat(2));
  CHECK((x * x - x).eval(Rat(3)) == Rat(6));
  CHECK((x - x).is_zero());
}

TEST_CASE("divide_exact examples") {
  auto x = Polynomial1::x();
  auto sq = (x + Polynomial1(1)).pow(2) - Polynomial1(1);  // x^2 + 2x
  auto q = divide_exact(sq, x);
  REQUIRE(q.has_value());
  CHECK(*q == x + Polynomial1(2));

  auto q2 = divide_exact(x * x - Polynomial1(1), x - Polynomial1(1));
  REQUIRE(q2.has_value());
  CHECK(*q2 == x + Polynomial1(1));

  CHECK_FALSE(divide_exact(x * x + Polynomial1(1), x).has_value());
  CHECK_THROWS_AS(divide_exact(x, Polynomial1()), std::invalid_argument);
}

TEST_CASE("divide_exact inverts multiplication") {
  unsigned long s = 12345;
  for (int trial = 0; trial < 200; ++trial) {
    Polynomial1 p = random_poly1(s, 6);
    Polynomial1 q = random_poly1(s, 4);
    if (q.is_zero()) continue;
    auto back = divide_exact(p * q, q);
    REQUIRE(back.has_value());
    CHECK(*back == p);
  }
}

TEST_CASE("Polynomial2 basics") {
  auto x = Polynomial2::x();
  auto y = Polynomial2::y();
  CHECK((x + y) * (x - y) == x * x - y * y);
  CHECK((x * y).eval(Rat(3), Rat(5)) == Rat(15));
  CHECK((x - x).is_zero());
  CHECK((x + y).pow(3).coeff(2, 1) == Rat(3));
}

TEST_CASE("binomial_poly examples") {
  auto x = Polynomial2::x();
  auto y = Polynomial2::y();
  CHECK(binomial_poly(x, 1) == x);
  CHECK(binomial_poly(x + y, 0) == Polynomial2(1));
  CHECK(binomial_poly(x, -2).is_zero());

  Polynomial2 expect = make_rat(1, 2) * (x * x - x);  // x(x-1)/2
  CHECK(binomial_poly(x, 2) == expect);
}

TEST_CASE("binomial_poly agrees with integer binomial at integer points") {
  auto x = Polynomial2::x();
  auto y = Polynomial2::y();
  for (long k = 0; k <= 6; ++k) {
    auto p = binomial_poly(x + y, k);
    for (long x0 = -5; x0 <= 5; ++x0)
      for (long y0 = -5; y0 <= 5; ++y0)
        CHECK(p.eval(Rat(x0), Rat(y0)) == Rat(binomial(x0 + y0, k)));
  }
}
