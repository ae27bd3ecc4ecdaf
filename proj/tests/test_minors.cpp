#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ctred/identities.hpp"
#include "ctred/minors.hpp"
#include "support.hpp"

using namespace ctred;

namespace {

ExactMatrix random_matrix(testgen::Gen& g, std::size_t r, std::size_t c) {
  ExactMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = g.range(0, 4) == 0 ? BigRat(0) : g.rat();
  return m;
}

/// Sum over column bitmasks with popcount == rows, via cofactor expansion.
BigRat minor_sum_oracle(const ExactMatrix& m) {
  BigRat total = 0;
  const std::size_t c = m.cols();
  for (unsigned mask = 0; mask < (1u << c); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != m.rows()) continue;
    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < c; ++j)
      if (mask & (1u << j)) cols.push_back(j);
    total += det_cofactor(m.select_columns(cols));
  }
  return total;
}

std::vector<Poly> small_polys() {
  std::vector<Poly> out;
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b)
      for (int c = 0; c <= 2; ++c)
        if (a || b || c) out.push_back(Poly{a, b, c});
  return out;
}

}  // namespace

TEST_CASE("determinant examples") {
  ExactMatrix id(3, 3);
  for (std::size_t i = 0; i < 3; ++i) id(i, i) = 1;
  CHECK(det(id) == 1);
  CHECK(det(ExactMatrix{{1, 1}, {1, 2}}) == 1);
  CHECK(det(ExactMatrix{{0, 0}, {2, 1}}) == 0);
  CHECK(det(ExactMatrix{{0, 1}, {1, 0}}) == -1);
  CHECK(det(ExactMatrix(0, 0)) == 1);
  CHECK_THROWS(det(ExactMatrix(2, 3)));
}

TEST_CASE("fraction-free elimination agrees with cofactor expansion") {
  testgen::Gen g(61);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = static_cast<std::size_t>(g.range(1, 5));
    const ExactMatrix m = random_matrix(g, n, n);
    CHECK(det(m) == det_cofactor(m));
  }
}

TEST_CASE("minor sum examples") {
  CHECK(minor_sum(ExactMatrix{{1, 1}}) == 2);
  CHECK(minor_sum(ExactMatrix{{1, 0, 0}, {0, 1, 1}}) == 2);
  CHECK(minor_sum(ExactMatrix{{1, 1, 0, 0}, {0, 1, 2, 1}}) == 7);
  CHECK_THROWS(minor_sum(ExactMatrix{{1}, {2}}));
}

TEST_CASE("minor sum against subset enumeration") {
  testgen::Gen g(62);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t r = static_cast<std::size_t>(g.range(1, 4));
    const std::size_t c = r + static_cast<std::size_t>(g.range(0, 4));
    const ExactMatrix m = random_matrix(g, r, c);
    CHECK(minor_sum(m) == minor_sum_oracle(m));
  }
}

TEST_CASE("matrix constructions") {
  CHECK(zeilberger_matrix(Poly{1, 1}, Poly{1, 1}, 2) == ExactMatrix{{1, 1, 0}, {1, 2, 1}});
  CHECK(zeilberger_matrix(Poly{1}, Poly{0, 1, 1}, 2) == doran_matrix(2));
  CHECK(doran_matrix(2) == ExactMatrix{{1, 0, 0}, {0, 1, 1}});
  CHECK(conjecture_matrix(2, 1) == ExactMatrix{{1, 1, 0, 0}, {0, 1, 2, 1}});
  for (int n = 1; n <= 5; ++n)
    for (int m = 0; m <= 4; ++m) {
      const ExactMatrix z = zeilberger_matrix(one_plus_x_pow(m), Poly{0, 1, 1}, n);
      CHECK(z == conjecture_matrix(n, m));
      for (std::size_t i = 0; i < z.rows(); ++i)
        for (std::size_t j = 0; j < z.cols(); ++j)
          CHECK(z(i, j) == BigRat(binomial(m + static_cast<long>(i), static_cast<long>(j) - static_cast<long>(i))));
    }
}

TEST_CASE("constant-term side examples") {
  CHECK(ct_fg(Poly{1, 1}, Poly{1, 1}, 2) == 3);
  CHECK(ct_fg(Poly{1}, Poly{0, 1, 1}, 2) == 2);
  // One variable: g drops out and the value is CT f(1/x)/(1-x).
  CHECK(ct_fg(Poly{1, 1}, Poly{1, 1}, 1) == 2);
  CHECK(ct_fg(Poly{1}, Poly{1, 1}, 1) == 1);
  CHECK(minor_sum(zeilberger_matrix(Poly{1}, Poly{1, 1}, 1)) == 1);
}

TEST_CASE("minor sums equal the constant term for small f, g") {
  const auto polys = small_polys();
  for (int n = 1; n <= 4; ++n)
    for (const Poly& f : polys)
      for (const Poly& g : polys) {
        const ExactMatrix z = zeilberger_matrix(f, g, n);
        const BigRat lhs = z.rows() <= z.cols() ? minor_sum(z) : BigRat(0);
        CHECK(lhs == ct_fg(f, g, n));
      }
}

TEST_CASE("reduced determinants") {
  CHECK(reduced_det_thm(Poly{1, 1}, 2) == 3);
  CHECK(reduced_det_thm(Poly{1}, 2) == 1);
  CHECK(reduced_det_thm(Poly{1, 1}, 3) == 4);
  CHECK(binom_det(1, 2) == 3);
  CHECK(binom_det(0, 2) == 1);
  CHECK(binom_det(1, 3) == 4);
  for (int n = 1; n <= 6; ++n)
    for (int m = 0; m <= 4; ++m) {
      CHECK(reduced_det_thm(one_plus_x_pow(m), n) == binom_det(m, n));
      CHECK(binom_det(m, n) == identity2_rhs(n, m));
    }
  for (int n = 1; n <= 4; ++n)
    for (const Poly& f : small_polys()) CHECK(reduced_det_thm(f, n) == ct_fg(f, Poly{1, 1}, n));
}

TEST_CASE("determinants in z = x + 2 + 1/x") {
  CHECK(andrews_det(0, 2) == 2);
  CHECK(andrews_det(1, 2) == 7);
  CHECK(andrews_det(0, 3) == 7);
  for (int n = 1; n <= 5; ++n)
    for (int m = 0; m <= 3; ++m) {
      const BigRat minors = minor_sum(conjecture_matrix(n, m));
      CHECK(andrews_det(m, n) == minors);
      CHECK(ct_fg(one_plus_x_pow(m), Poly{0, 1, 1}, n) == minors);
    }
}

TEST_CASE("Doran minor sums count TSSCPPs") {
  const long expected[] = {1, 2, 7, 42, 429, 7436};
  for (int n = 1; n <= 6; ++n) {
    CHECK(minor_sum(doran_matrix(n)) == expected[n - 1]);
    CHECK(minor_sum(doran_matrix(n)) == a_n(n));
  }
}

TEST_CASE("polynomial helpers") {
  CHECK(poly_mul(Poly{1, 1}, Poly{1, -1}) == Poly{1, 0, -1});
  CHECK(poly_pow(Poly{1, 1}, 3) == Poly{1, 3, 3, 1});
  CHECK(poly_degree(Poly{0, 0}) == -1);
  CHECK(poly_degree(Poly{1, 2, 0}) == 1);
  CHECK(poly_eval(Poly{1, 2, 3}, 2) == 17);
  CHECK(one_plus_x_pow(4) == Poly{1, 4, 6, 4, 1});
}
