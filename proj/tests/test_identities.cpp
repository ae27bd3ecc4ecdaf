#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ctred/ctcore.hpp"
#include "ctred/identities.hpp"
#include "support.hpp"

using namespace ctred;
using testgen::one;
using testgen::x;

namespace {

std::vector<std::string> route_names(const VerificationReport& r) {
  std::vector<std::string> out;
  for (const auto& route : r.routes) out.push_back(route.name);
  return out;
}

/// Independent evaluation of prod_{j<n} prod_{i<=m} (2i+j)/(i+j) as one fraction.
BigRat identity2_product(int n, int m) {
  BigInt num = 1, den = 1;
  for (int j = 0; j < n; ++j)
    for (int i = 1; i <= m; ++i) {
      num *= 2 * i + j;
      den *= i + j;
    }
  return make_rat(num, den);
}

}  // namespace

TEST_CASE("TSSCPP product") {
  CHECK(a_n(1) == 1);
  CHECK(a_n(3) == 7);
  CHECK(a_n(5) == 429);
  const long asm_counts[] = {1, 2, 7, 42, 429, 7436, 218348, 10850216};
  for (int n = 1; n <= 8; ++n) CHECK(a_n(n) == asm_counts[n - 1]);
  // Ratio recurrence A_{n+1}/A_n = (3n+1)! n! / ((2n)! (2n+1)!).
  for (int n = 1; n <= 12; ++n)
    CHECK(a_n(n + 1) / a_n(n) ==
          make_rat(factorial(3 * n + 1) * factorial(n), factorial(2 * n) * factorial(2 * n + 1)));
}

TEST_CASE("identity 1 constant term") {
  CHECK(identity1_lhs(1) == 1);
  CHECK(identity1_lhs(2) == 2);
  CHECK(identity1_lhs(3) == 7);
  for (int n = 1; n <= 5; ++n) CHECK(identity1_lhs(n) == a_n(n));
  CHECK(identity1_lhs(4, 3) == identity1_lhs(4, 1));
}

TEST_CASE("identity 2 closed form and constant term") {
  CHECK(identity2_rhs(1, 1) == 2);
  CHECK(identity2_rhs(2, 1) == 3);
  CHECK(identity2_rhs(3, 0) == 1);
  CHECK(identity2_rhs(3, 1) == 4);
  CHECK(identity2_rhs(4, 2) == 35);
  CHECK(identity2_lhs(2, 1) == 3);
  CHECK(identity2_lhs(3, 1) == 4);
  CHECK(identity2_lhs(2, 0) == 1);
  for (int n = 1; n <= 6; ++n)
    for (int m = 0; m <= 4; ++m) CHECK(identity2_rhs(n, m) == identity2_product(n, m));
}

TEST_CASE("identity 2 routes agree for n <= 5") {
  for (int n = 1; n <= 5; ++n)
    for (int m = 0; m <= 4; ++m) {
      const BigRat rhs = identity2_rhs(n, m);
      CHECK(identity2_lhs(n, m) == rhs);
      CHECK(identity2_via_reduction(n, m) == rhs);
      CHECK(identity2_via_macdonald(n, m) == rhs);
    }
  CHECK(identity2_via_macdonald(2, 1) == 3);
  CHECK(identity2_via_macdonald(3, 1) == 4);
  CHECK(identity2_via_macdonald(2, 0) == 1);
}

TEST_CASE("conjecture closed form") {
  CHECK(conjecture_rhs(2, 0) == 2);
  CHECK(conjecture_rhs(2, 1) == 7);
  CHECK(conjecture_rhs(3, 0) == 7);
  for (int n = 1; n <= 6; ++n) CHECK(conjecture_rhs(n, 0) == a_n(n));
}

TEST_CASE("Morris closed form") {
  CHECK(morris_rhs(0, 0, 1, 2) == 2);
  CHECK(morris_rhs(1, 1, 0, 1) == 2);
  CHECK(morris_rhs(make_rat(-3, 2), 1, 1, 2) == make_rat(-1, 4));
  CHECK(morris_rhs(2, 1, 1, 2) == 12);
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 4; ++b)
      for (int k = 0; k <= 3; ++k)
        for (int n = 1; n <= 4; ++n) CHECK(morris_rhs(a, b, k, n) == morris_rhs_factorial(a, b, k, n));
}

TEST_CASE("Morris constant term") {
  CHECK(morris_lhs(0, 0, 1, 2) == 2);
  CHECK(morris_lhs(1, 1, 0, 1) == 2);
  CHECK(morris_lhs(2, 1, 1, 2) == 12);
  for (int n = 1; n <= 3; ++n)
    for (int a = 0; a <= 2; ++a)
      for (int b = 0; b <= 2; ++b)
        for (int k = 0; k <= 2; ++k) CHECK(morris_lhs(a, b, k, n) == morris_rhs(a, b, k, n));
}

TEST_CASE("Dyson constant term term by multinomial") {
  // a = b = 0: CT prod_{i != j} (1 - x_i/x_j)^k = (nk)!/(k!)^n.
  for (int n = 1; n <= 3; ++n)
    for (int k = 0; k <= 2; ++k) {
      BigInt kf = factorial(k), denom = 1;
      for (int i = 0; i < n; ++i) denom *= kf;
      CHECK(morris_lhs(0, 0, k, n) == make_rat(factorial(n * k), denom));
    }
}

TEST_CASE("BC constant term") {
  CHECK(macdonald_direct(1, 0, 1, 0) == 2);
  CHECK(macdonald_direct(1, 1, 1, 0) == 2);
  CHECK(macdonald_direct(2, 0, 0, 1) == 4);
  CHECK(macdonald_closed(1, 1, 1, 0) == 2);
  CHECK(macdonald_closed(1, 0, 1, 0) == 2);
  CHECK(macdonald_closed(2, 0, 0, 1) == 4);
  for (int n = 1; n <= 2; ++n)
    for (int a = 0; a <= 2; ++a)
      for (int b = 0; b <= 2; ++b)
        for (int c = 0; c <= 2; ++c) CHECK(macdonald_direct(n, a, b, c) == macdonald_closed(n, a, b, c));
  for (int a = 0; a <= 1; ++a)
    for (int b = 0; b <= 1; ++b)
      for (int c = 0; c <= 1; ++c) CHECK(macdonald_direct(3, a, b, c) == macdonald_closed(3, a, b, c));
}

TEST_CASE("BC constant term in one variable by hand") {
  // n = 1: CT (1-x)^a (1-1/x)^a (1+x)^b (1+1/x)^b, expanded here from scratch.
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b) {
      const MultiLaurent p = (one(1) - x(1, 0)).pow(a) * (one(1) - x(1, 0, -1)).pow(a) * (one(1) + x(1, 0)).pow(b) *
                             (one(1) + x(1, 0, -1)).pow(b);
      CHECK(macdonald_direct(1, a, b, 0) == p.ct());
    }
}

TEST_CASE("type D specialization") {
  for (int n = 1; n <= 3; ++n)
    for (int c = 0; c <= (n == 3 ? 1 : 2); ++c) CHECK(macdonald_direct(n, 0, 0, c) == type_d_direct(n, c));
}

TEST_CASE("verification reports") {
  const VerificationReport r1 = verify_identity1(3);
  CHECK(r1.equal);
  CHECK(r1.routes.front().value == 7);
  CHECK(route_names(r1) == std::vector<std::string>{"ct", "doran-minors", "a_n"});

  const VerificationReport r2 = verify_identity2(4, 2);
  CHECK(r2.equal);
  CHECK(r2.routes.front().value == 35);
  for (const char* name : {"ct", "det", "macdonald", "corollary", "rhs"}) {
    const auto names = route_names(r2);
    CHECK(std::find(names.begin(), names.end(), name) != names.end());
  }

  const VerificationReport rc = verify_conjecture(2, 1);
  CHECK(rc.equal);
  CHECK(rc.routes.front().value == 7);
  CHECK(verify_morris(2, 1, 1, 2).equal);
  CHECK(verify_macdonald(2, 1, 1, 1).equal);
  CHECK(verify_reduction(4, 5).equal);

  VerificationReport bad{"x", {}, {{"a", 1}, {"b", 2}}};
  finalize(bad);
  CHECK_FALSE(bad.equal);
  VerificationReport same{"x", {}, {{"a", make_rat(1, 2)}, {"b", make_rat(2, 4)}}};
  finalize(same);
  CHECK(same.equal);
}
