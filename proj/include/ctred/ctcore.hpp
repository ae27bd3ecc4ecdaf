#pragma once

// Constant-term engines.
//
// The standard denominator over an active index set S is
//
//     prod_{i in S} (1 - x_i) * prod_{i<j in S} (1 - x_i x_j),
//
// always expanded as a geometric series with nonnegative exponents. Every
// coefficient of that expansion is a count of nonnegative integer solutions,
// so CT(N / D) reduces to a weighted sum of counts over the monomials of N.

#include "ctred/laurent.hpp"

#include <map>
#include <span>
#include <vector>

namespace ctred {

struct StandardCTProblem {
  MultiLaurent numerator;
  std::vector<int> active;  // sorted, 0-based; others are spectators
  BigRat scale = 1;
};

/// Memo for count_denominator_solutions keyed on the sorted degree vector.
class DenominatorCounter {
 public:
  /// Number of {a_i >= 0, b_ij >= 0} with a_i + sum_{j != i} b_ij = v_i.
  BigInt count(std::span<const int> v);

  std::size_t cache_size() const { return memo_.size(); }

 private:
  BigInt count_sorted(std::vector<int> v);
  std::map<std::vector<int>, BigInt> memo_;
};

BigInt count_denominator_solutions(std::span<const int> v);

/// CT of numerator / standard denominator over `active`, times scale.
/// `threads` > 1 splits the monomial sum; the result does not depend on it.
BigRat ct_standard(const StandardCTProblem& prob, int threads = 1);

/// Builds the numerator from factors, discarding partial products that cannot
/// contribute (exponents must end <= 0 on active and == 0 on spectators),
/// then evaluates like ct_standard.
BigRat ct_standard_factored(std::span<const MultiLaurent> factors, const std::vector<int>& active,
                            const BigRat& scale = 1, int threads = 1);

/// CT of a product of Laurent polynomials with reachability pruning.
BigRat ct_product(std::span<const MultiLaurent> factors);

/// All indices 0..n-1.
std::vector<int> all_active(int n);

}  // namespace ctred
