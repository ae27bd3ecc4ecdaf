#include "ctred/identities.hpp"

#include "ctred/ctcore.hpp"
#include "ctred/laurent.hpp"
#include "ctred/minors.hpp"
#include "ctred/reduction.hpp"

#include <chrono>
#include <stdexcept>

namespace ctred {

namespace {

MultiLaurent x(int n, int i, int e = 1) { return MultiLaurent::variable(n, i, e); }
MultiLaurent one(int n) { return MultiLaurent(n, 1); }

/// (1 - x_i/x_j)(1 - x_j/x_i)
MultiLaurent dyson_pair(int n, int i, int j) { return one_minus(x(n, i) * x(n, j, -1)) * one_minus(x(n, j) * x(n, i, -1)); }

BigRat inverse_factorial(int n) { return make_rat(BigInt(1), factorial(n)); }

class Stopwatch {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace

BigRat a_n(int n) {
  if (n < 1) throw std::invalid_argument("a_n: n must be positive");
  BigRat r = 1;
  for (int i = 0; i < n; ++i) r *= make_rat(factorial(3 * i + 1), factorial(n + i));
  return r;
}

BigRat identity1_lhs(int n, int threads) {
  if (n < 1) throw std::invalid_argument("identity1_lhs: n must be positive");
  std::vector<MultiLaurent> factors;
  for (int i = 0; i < n; ++i) factors.push_back((one(n) + x(n, i, -1)).pow(i));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) factors.push_back(one_minus(x(n, i) * x(n, j, -1)));
  return ct_standard_factored(factors, all_active(n), 1, threads);
}

BigRat identity2_rhs(int n, int m) {
  if (n < 1 || m < 0) throw std::invalid_argument("identity2_rhs: need n >= 1, m >= 0");
  BigRat r = 1;
  for (int j = 0; j < n; ++j)
    for (int i = 1; i <= m; ++i) r *= make_rat(2 * i + j, i + j);
  return r;
}

BigRat identity2_lhs(int n, int m, int threads) {
  if (n < 1 || m < 0) throw std::invalid_argument("identity2_lhs: need n >= 1, m >= 0");
  std::vector<MultiLaurent> factors;
  for (int i = 0; i < n; ++i) factors.push_back((one(n) + x(n, i, -1)).pow(m));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) factors.push_back(dyson_pair(n, i, j));
  return ct_standard_factored(factors, all_active(n), inverse_factorial(n), threads);
}

BigRat identity2_via_reduction(int n, int m) {
  return reduce_theorem(product_one_plus_x(n, m)) * inverse_factorial(n);
}

BigRat identity2_via_macdonald(int n, int m) {
  if (n < 1 || m < 0) throw std::invalid_argument("identity2_via_macdonald: need n >= 1, m >= 0");
  const int k = n / 2;
  if (n % 2 == 0) return macdonald_direct(k, 0, m + 1, 1) * ctred::pow(BigRat(2), -k) * inverse_factorial(k);
  return macdonald_direct(k, 1, m + 1, 1) * ctred::pow(BigRat(2), m - k) * inverse_factorial(k);
}

BigRat conjecture_rhs(int n, int m) {
  if (n < 1 || m < 0) throw std::invalid_argument("conjecture_rhs: need n >= 1, m >= 0");
  const int k = n / 2;
  auto fac = [](long v) { return BigRat(factorial(v)); };
  BigRat r = 1;
  if (n % 2 == 0) {
    for (int i = 1; i <= k; ++i) {
      r *= fac(2 * i - 2) * fac(2 * i + 2 * m - 1) * rising(3 * m + 4 * i - 2, 2 * i - 2) *
           rising(3 * m + 4 * i, 2 * i - 1);
      r /= fac(m + 4 * i - 4) * fac(m + 4 * i - 2);
    }
  } else {
    r = ctred::pow(BigRat(2), m);
    for (int i = 1; i <= k; ++i) {
      r *= fac(2 * i - 1) * fac(2 * m + 2 * i + 3) * rising(3 * m + 4 * i, 2 * i - 1) *
           rising(3 * m + 4 * i + 2, 2 * i);
      r /= fac(m + 4 * i - 2) * fac(m + 4 * i) * rising(2 * m + 2 * i + 1, 3);
    }
  }
  return r;
}

BigRat morris_rhs(const BigRat& a, int b, int k, int n) {
  if (b < 0 || k < 0 || n < 0) throw std::invalid_argument("morris_rhs: b, k, n must be nonnegative");
  BigRat r = 1;
  for (int l = 0; l < n; ++l) {
    r *= rising(a + k * l + 1, b) * BigRat(factorial(static_cast<long>(k) * (l + 1)));
    r /= BigRat(factorial(b + static_cast<long>(k) * l) * factorial(k));
  }
  return r;
}

BigRat morris_rhs_factorial(int a, int b, int k, int n) {
  if (a < 0 || b < 0 || k < 0 || n < 0) throw std::invalid_argument("morris_rhs_factorial: negative parameter");
  BigRat r = 1;
  for (long l = 0; l < n; ++l) {
    r *= BigRat(factorial(a + b + k * l) * factorial(k * (l + 1)));
    r /= BigRat(factorial(a + k * l) * factorial(b + k * l) * factorial(k));
  }
  return r;
}

BigRat morris_lhs(int a, int b, int k, int n) {
  if (a < 0 || b < 0 || k < 0 || n < 0) throw std::invalid_argument("morris_lhs: negative parameter");
  if (n == 0) return 1;
  std::vector<MultiLaurent> factors;
  for (int l = 0; l < n; ++l) factors.push_back(one_minus(x(n, l)).pow(a) * one_minus(x(n, l, -1)).pow(b));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) factors.push_back(dyson_pair(n, i, j).pow(k));
  return ct_product(factors);
}

BigRat macdonald_direct(int n, int a, int b, int c) {
  if (n < 0 || a < 0 || b < 0 || c < 0) throw std::invalid_argument("macdonald_direct: negative parameter");
  if (n == 0) return 1;
  std::vector<MultiLaurent> factors;
  for (int i = 0; i < n; ++i) {
    const MultiLaurent xi = x(n, i), xi_inv = x(n, i, -1);
    factors.push_back(one_minus(xi).pow(a) * one_minus(xi_inv).pow(a) * (one(n) + xi).pow(b) *
                      (one(n) + xi_inv).pow(b));
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const MultiLaurent bc = dyson_pair(n, i, j) * one_minus(x(n, i) * x(n, j)) * one_minus(x(n, i, -1) * x(n, j, -1));
      factors.push_back(bc.pow(c));
    }
  return ct_product(factors);
}

BigRat type_d_direct(int n, int c) {
  if (n < 0 || c < 0) throw std::invalid_argument("type_d_direct: negative parameter");
  if (n == 0) return 1;
  std::vector<MultiLaurent> factors;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int t = 0; t < c; ++t) {
        factors.push_back(one_minus(x(n, i) * x(n, j, -1)));
        factors.push_back(one_minus(x(n, j) * x(n, i, -1)));
        factors.push_back(one_minus(x(n, i) * x(n, j)));
        factors.push_back(one_minus(x(n, i, -1) * x(n, j, -1)));
      }
  return ct_product(factors);
}

BigRat macdonald_closed(int n, int a, int b, int c) {
  if (n < 0 || a < 0 || b < 0 || c < 0) throw std::invalid_argument("macdonald_closed: negative parameter");
  const long big_m = a + b + static_cast<long>(n - 1) * c;
  if (n == 0) return 1;
  const BigRat first = make_rat(-1, 2) - b - static_cast<long>(n - 1) * c;
  // (1-x)(1-1/x) = -(1-4y)/y per variable; t^-M (1-t)^e = (-1)^M (1-1/t)^M (1-t)^(e-M);
  // (y_i-y_j)^2/(y_i y_j) = -(1-y_i/y_j)(1-y_j/y_i) per pair.
  const long sign_exp = static_cast<long>(n) * a + n * big_m + static_cast<long>(c) * n * (n - 1) / 2;
  const BigRat four_pow = ctred::pow(BigRat(4), static_cast<long>(n) * big_m);
  return four_pow * sign_pow(sign_exp) * morris_rhs(first, static_cast<int>(big_m), c, n);
}

// ---------------------------------------------------------------------------
// Verification pairings

void finalize(VerificationReport& r) {
  r.equal = !r.routes.empty();
  for (const auto& route : r.routes)
    if (route.value != r.routes.front().value) r.equal = false;
}

VerificationReport verify_identity1(int n, int threads) {
  Stopwatch sw;
  VerificationReport r = new_report("identity1", {{"n", n}});
  r.routes.push_back({"ct", identity1_lhs(n, threads)});
  r.routes.push_back({"doran-minors", minor_sum(doran_matrix(n))});
  r.routes.push_back({"a_n", a_n(n)});
  finalize(r);
  r.elapsed_ms = sw.ms();
  return r;
}

VerificationReport verify_identity2(int n, int m, int threads) {
  Stopwatch sw;
  VerificationReport r = new_report("identity2", {{"n", n}, {"m", m}});
  const Poly f = one_plus_x_pow(m);
  r.routes.push_back({"ct", identity2_lhs(n, m, threads)});
  r.routes.push_back({"reduction", identity2_via_reduction(n, m)});
  r.routes.push_back({"corollary", corollary_determinant(f, n)});
  r.routes.push_back({"reduced-det", reduced_det_thm(f, n)});
  r.routes.push_back({"det", binom_det(m, n)});
  r.routes.push_back({"minors", minor_sum(zeilberger_matrix(f, Poly{1, 1}, n))});
  r.routes.push_back({"macdonald", identity2_via_macdonald(n, m)});
  r.routes.push_back({"rhs", identity2_rhs(n, m)});
  finalize(r);
  r.elapsed_ms = sw.ms();
  return r;
}

VerificationReport verify_conjecture(int n, int m, int threads) {
  Stopwatch sw;
  VerificationReport r = new_report("conjecture", {{"n", n}, {"m", m}});
  r.routes.push_back({"minors", minor_sum(conjecture_matrix(n, m))});
  r.routes.push_back({"rhs", conjecture_rhs(n, m)});
  r.routes.push_back({"andrews-det", andrews_det(m, n)});
  r.routes.push_back({"ct-fg", ct_fg(one_plus_x_pow(m), Poly{0, 1, 1}, n, threads)});
  if (m == 0) r.routes.push_back({"a_n", a_n(n)});
  finalize(r);
  r.elapsed_ms = sw.ms();
  return r;
}

VerificationReport verify_morris(int a, int b, int k, int n) {
  Stopwatch sw;
  VerificationReport r = new_report("morris", {{"a", a}, {"b", b}, {"k", k}, {"n", n}});
  r.routes.push_back({"ct", morris_lhs(a, b, k, n)});
  r.routes.push_back({"rhs", morris_rhs(a, b, k, n)});
  r.routes.push_back({"rhs-factorial", morris_rhs_factorial(a, b, k, n)});
  finalize(r);
  r.elapsed_ms = sw.ms();
  return r;
}

VerificationReport verify_macdonald(int n, int a, int b, int c) {
  Stopwatch sw;
  VerificationReport r = new_report("macdonald", {{"n", n}, {"a", a}, {"b", b}, {"c", c}});
  r.routes.push_back({"ct", macdonald_direct(n, a, b, c)});
  r.routes.push_back({"closed", macdonald_closed(n, a, b, c)});
  if (a == 0 && b == 0) r.routes.push_back({"type-d", type_d_direct(n, c)});
  finalize(r);
  r.elapsed_ms = sw.ms();
  return r;
}

VerificationReport verify_reduction(int n, std::uint64_t seed, int threads) {
  Stopwatch sw;
  VerificationReport r = new_report("reduction", {{"n", n}, {"seed", static_cast<long>(seed)}});
  const MultiLaurent p = random_symmetric_polynomial(n, seed);
  const Gratifying g0 = Gratifying::from_polynomial(p);
  r.routes.push_back({"ct-standard", ct_standard(to_standard(g0), threads)});
  r.routes.push_back({"ct-via-pf", ct_via_pf(g0)});
  const TheoremValue tv = reduce_theorem_both(p);
  r.routes.push_back({"theorem-primed", tv.primed});
  r.routes.push_back({"theorem-unprimed", tv.unprimed});
  finalize(r);
  r.elapsed_ms = sw.ms();
  return r;
}

}  // namespace ctred
