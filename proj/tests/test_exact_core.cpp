#include "doctest.h"
#include "gwvir/exact_core.hpp"

using namespace gwvir;

TEST_CASE("rational parse and print") {
  CHECK(parse_rational("7/240") == Rational(7, 240));
  CHECK(parse_rational("-3/4") == Rational(-3, 4));
  CHECK(parse_rational("5") == Rational(5));
  CHECK(rat_str(Rational(7, 240)) == "7/240");
  CHECK(rat_str(Rational(5)) == "5");
  CHECK(rat_str(Rational(-1, 2)) == "-1/2");
  CHECK(rat_str(parse_rational("6/4")) == "3/2");
}

TEST_CASE("factorial and binomial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(6) == 720);
  CHECK(binomial(7, 3) == 35);
  CHECK(binomial(3, 7) == 0);
}

TEST_CASE("rising product and brackets") {
  // (s+x)(s+x+1) at x=2: s^2 + 5s + 6
  auto c = rising_product_coeffs(Rational(2), 1);
  REQUIRE(c.size() == 3);
  CHECK(c[0] == 6);
  CHECK(c[1] == 5);
  CHECK(c[2] == 1);

  CHECK(bracket(Rational(3), -1, 0) == 1);
  CHECK(bracket(Rational(3), 0, 0) == 3);
  CHECK(bracket(Rational(3), 0, 1) == 1);
  // e_2(x, x+1, x+2) at x=1: 1*2 + 1*3 + 2*3 = 11
  CHECK(bracket(Rational(1), 2, 1) == 11);
  // bracket coefficients are the rising product coefficients
  for (int k = 0; k <= 4; ++k) {
    auto rc = rising_product_coeffs(Rational(5, 2), k);
    for (int i = 0; i <= k + 1; ++i)
      CHECK(bracket(Rational(5, 2), k, i) == rc[i]);
  }
}

TEST_CASE("half integer products") {
  CHECK(half_product(0, -1) == 1);
  CHECK(half_product(0, 1) == Rational(3, 4));
  CHECK(half_product(1, 1) == Rational(15, 4));
  CHECK(signed_gamma_ratio(1, 1) == Rational(-15, 4));
  CHECK(signed_gamma_ratio(2, 0) == Rational(5, 2));
}

TEST_CASE("hbar laurent polynomials") {
  HbarLaurent a(Rational(1, 2), -1);
  HbarLaurent b(Rational(3), 1);
  HbarLaurent p = a * b;
  CHECK(p.coeff(0) == Rational(3, 2));
  CHECK(p.coeff(1) == 0);
  CHECK((a + b - a) == b);
  HbarLaurent z = a - a;
  CHECK(z.is_zero());
  CHECK(a.min_power() == -1);
  CHECK((a + b).max_power() == 1);
}

TEST_CASE("rational matrices") {
  RatMatrix m(2, 2);
  m.at(0, 0) = 1; m.at(0, 1) = 2;
  m.at(1, 0) = 3; m.at(1, 1) = 4;
  RatMatrix inv = m.inverse();
  CHECK(inv * m == RatMatrix::identity(2));
  CHECK(m * inv == RatMatrix::identity(2));
  CHECK(m.trace() == 5);
  CHECK(m.pow(0) == RatMatrix::identity(2));
  CHECK(m.pow(3) == m * m * m);
  CHECK(m.transpose().at(0, 1) == 3);

  RatMatrix s(2, 2);
  s.at(0, 0) = 1; s.at(0, 1) = 2;
  s.at(1, 0) = 2; s.at(1, 1) = 4;
  CHECK_THROWS_AS((void)s.inverse(), std::domain_error);
}
