#pragma once

// Closed-form right-hand sides, literal constant-term left-hand sides, and
// the multi-route verification pairings built from them.

#include "ctred/exact.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace ctred {

/// prod_{i=0}^{n-1} (3i+1)!/(n+i)!: TSSCPPs and alternating sign matrices of order n.
BigRat a_n(int n);

/// CT prod_{i<j}(1 - x_i/x_j) prod_i (1 + 1/x_i)^(i-1) over the standard denominator.
BigRat identity1_lhs(int n, int threads = 1);

/// prod_{j=0}^{n-1} prod_{i=1}^{m} (2i+j)/(i+j).
BigRat identity2_rhs(int n, int m);
/// (1/n!) CT prod_{i != j}(1 - x_i/x_j) prod_i (1 + 1/x_i)^m over the standard denominator.
BigRat identity2_lhs(int n, int m, int threads = 1);
/// Via the 2k -> k reduction with P = prod (1+x_i)^m, divided by n!.
BigRat identity2_via_reduction(int n, int m);
/// Via the BC constant term M_k(x; 0, m+1, 1) (n = 2k) or M_k(x; 1, m+1, 1) (n = 2k+1).
BigRat identity2_via_macdonald(int n, int m);

/// Closed product for the sum of n x n minors of (C(m+i-1, j-i)).
BigRat conjecture_rhs(int n, int m);

/// prod_{l=0}^{n-1} (A+1+kl)_B (k(l+1))! / ((B+kl)! k!); A may be any rational.
BigRat morris_rhs(const BigRat& a, int b, int k, int n);
/// The factorial form (a+b+kl)!(k(l+1))!/((a+kl)!(b+kl)!k!) for integer a >= 0.
BigRat morris_rhs_factorial(int a, int b, int k, int n);
/// CT prod_l (1 - x_l)^a (1 - 1/x_l)^b prod_{i != j} (1 - x_i/x_j)^k by expansion.
BigRat morris_lhs(int a, int b, int k, int n);

/// CT of the BC integrand M_n(x; a, b, c) by expansion.
BigRat macdonald_direct(int n, int a, int b, int c);
/// Type-D integrand prod_{i<j}[(1-x_i/x_j)(1-x_j/x_i)(1-x_i x_j)(1-1/(x_i x_j))]^c
/// assembled from its own factors, independent of macdonald_direct.
BigRat type_d_direct(int n, int c);
/// sign * 4^(nM) * morris_rhs(-1/2 - b - (n-1)c, M, c, n) with M = a+b+(n-1)c.
BigRat macdonald_closed(int n, int a, int b, int c);

struct RouteValue {
  std::string name;
  BigRat value;
};

using ParamValue = std::variant<long, std::string>;

struct VerificationReport {
  std::string suite;
  std::vector<std::pair<std::string, ParamValue>> params;
  std::vector<RouteValue> routes;
  bool equal = false;
  bool skipped = false;
  std::string note;
  double elapsed_ms = 0;
};

inline VerificationReport new_report(std::string suite, std::vector<std::pair<std::string, ParamValue>> params) {
  VerificationReport r;
  r.suite = std::move(suite);
  r.params = std::move(params);
  return r;
}

/// equal = all route values identical.
void finalize(VerificationReport& r);

VerificationReport verify_identity1(int n, int threads = 1);
VerificationReport verify_identity2(int n, int m, int threads = 1);
VerificationReport verify_conjecture(int n, int m, int threads = 1);
VerificationReport verify_morris(int a, int b, int k, int n);
VerificationReport verify_macdonald(int n, int a, int b, int c);
/// ct_standard, ct_via_pf and both theorem forms on a seeded symmetric P.
VerificationReport verify_reduction(int n, std::uint64_t seed, int threads = 1);

}  // namespace ctred
