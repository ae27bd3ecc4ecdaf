#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ctred/exact.hpp"
#include "support.hpp"

using namespace ctred;

TEST_CASE("factorial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(5) == 120);
  CHECK(factorial(10) == 3628800);
  CHECK(factorial(30) == BigInt("265252859812191058636308480000000"));
  CHECK_THROWS_AS(factorial(-1), std::domain_error);
}

TEST_CASE("double factorial") {
  CHECK(double_factorial(-1) == 1);
  CHECK(double_factorial(1) == 1);
  CHECK(double_factorial(5) == 15);
  CHECK(double_factorial(7) == 105);
  CHECK_THROWS(double_factorial(4));
  CHECK_THROWS(double_factorial(-3));
  // (2k+1)!! = (2k+1)! / (2^k k!)
  for (long k = 0; k <= 12; ++k) {
    BigInt two_k = 1;
    for (long t = 0; t < k; ++t) two_k *= 2;
    CHECK(double_factorial(2 * k + 1) * two_k * factorial(k) == factorial(2 * k + 1));
  }
}

TEST_CASE("binomial") {
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(2, -1) == 0);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(3, 4) == 0);
  CHECK_THROWS(binomial(-1, 0));
}

TEST_CASE("binomial obeys Pascal's rule up to 30") {
  for (long n = 1; n <= 30; ++n)
    for (long k = 0; k <= n; ++k) CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST_CASE("rising factorial examples") {
  CHECK(rising(make_rat(7, 3), 0) == 1);
  CHECK(rising(make_rat(1, 2), 2) == make_rat(3, 4));
  CHECK(rising(make_rat(-1, 2), 1) == make_rat(-1, 2));
  CHECK_THROWS(rising(1, -1));
}

TEST_CASE("rising factorial splits and matches factorial ratios") {
  testgen::Gen g(11);
  for (int trial = 0; trial < 200; ++trial) {
    const BigRat x = g.rat(20);
    const long a = g.range(0, 10), b = g.range(0, 10);
    CHECK(rising(x, a + b) == rising(x, a) * rising(x + a, b));
  }
  for (long x = 1; x <= 12; ++x)
    for (long m = 0; m <= 12; ++m) CHECK(rising(x, m) == BigRat(factorial(x + m - 1)) / BigRat(factorial(x - 1)));
}

TEST_CASE("rationals stay canonical") {
  testgen::Gen g(12);
  for (int trial = 0; trial < 200; ++trial) {
    const BigRat q = g.nonzero_rat(50);
    const BigRat inv = 1 / q;
    CHECK(q * inv == 1);
    CHECK(make_rat(q.get_num(), q.get_den()) == q);
    CHECK(q.get_den() > 0);
    CHECK(gcd(BigInt(q.get_num()), BigInt(q.get_den())) == 1);
  }
  CHECK(make_rat(6, -4) == make_rat(-3, 2));
  CHECK(to_string(make_rat(6, -4)) == "-3/2");
  CHECK(to_string(make_rat(0, 5)) == "0");
  CHECK(to_string(make_rat(8, 4)) == "2");
  CHECK_THROWS_AS(make_rat(1, 0), std::domain_error);
  CHECK(parse_rat("-10/4") == make_rat(-5, 2));
  CHECK(parse_rat("7") == 7);
  CHECK(parse_rat(to_string(make_rat(22, 7))) == make_rat(22, 7));
}

TEST_CASE("integer powers") {
  CHECK(ctred::pow(make_rat(2, 3), 3) == make_rat(8, 27));
  CHECK(ctred::pow(make_rat(2, 3), -2) == make_rat(9, 4));
  CHECK(ctred::pow(make_rat(5), 0) == 1);
  CHECK_THROWS(ctred::pow(BigRat(0), -1));
  CHECK(sign_pow(3) == -1);
  CHECK(sign_pow(-2) == 1);
}
