#pragma once

// Gratifying rational functions and the 2k -> k constant-term reduction.
//
// A gratifying function in the active variables S is
//
//     N * prod_{i != j in S} (1 - x_i/x_j)
//     ------------------------------------------------
//     prod_{i in S} (1 - x_i) * prod_{i<j in S} (1 - x_i x_j)
//
// where N is a polynomial in the inverses of the active variables with
// coefficients that may involve spectator variables (partners already
// eliminated by a pairing step). Taking CT in the smallest active variable by
// partial fractions produces one branch per pole; each branch is gratifying
// again, so the recursion ends in plain Laurent polynomials indexed by
// matchings of the variable set.

#include "ctred/ctcore.hpp"
#include "ctred/laurent.hpp"
#include "ctred/minors.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace ctred {

/// A 1- or 2-element block of variable indices (0-based). `second` is empty
/// for singletons.
struct Block {
  int first = 0;
  std::optional<int> second;

  bool is_singleton() const { return !second.has_value(); }
  friend bool operator==(const Block&, const Block&) = default;
};

struct PartialMatching {
  std::vector<Block> blocks;

  int singletons() const;
  /// Covers every index 0..n-1 exactly once.
  bool is_full(int n) const;
  friend bool operator==(const PartialMatching&, const PartialMatching&) = default;
};

struct Gratifying {
  int nvars = 0;
  std::vector<int> active;  // sorted
  MultiLaurent numer;       // stored as P at inverses
  PartialMatching matching;

  /// Starting function for a polynomial P in nvars variables: numer = P(1/x).
  static Gratifying from_polynomial(const MultiLaurent& p);
};

struct Branch {
  Block block;
  Gratifying next;
};

/// numerator = numer * prod_{i != j in S} (1 - x_i/x_j), active = S, scale 1.
StandardCTProblem to_standard(const Gratifying& g);

/// One partial-fraction step in the smallest active variable. With
/// prune_second_singleton, branches that would carry a second singleton block
/// are dropped (their numerator vanishes identically).
std::vector<Branch> pf_step(const Gratifying& g, bool prune_second_singleton = true);
/// Just the branch for `block`; block.first must be the smallest active index.
Gratifying pf_branch(const Gratifying& g, const Block& block);

/// All full matchings of {0..n-1} with at most one singleton.
std::vector<PartialMatching> enumerate_matchings(int n);

/// Q_M: the Laurent polynomial left after following M's blocks.
MultiLaurent q_matching(const Gratifying& g0, const PartialMatching& m);

/// Sum over branches of the recursion of the CT of the leaves.
BigRat ct_via_pf(const Gratifying& g0, bool prune_second_singleton = true);

/// B-bar_k and B_k in k variables, from their product forms. For k <= 4 the
/// determinant definitions are expanded as well and must agree.
MultiLaurent bbar(int k);
MultiLaurent bfun(int k);
/// The determinant definitions, det(x_i^(j-1) + x_i^-j) and det(x_i^-j - x_i^j).
MultiLaurent bbar_det(int k);
MultiLaurent bfun_det(int k);

struct TheoremValue {
  BigRat primed;    // (2k-1)!! CT[P B-bar^2 prod x]  or  (-1)^k (2k+1)!! CT[P B^2]
  BigRat unprimed;  // (2k)!/2^k CT[P B-bar prod(x^i + x^(1-i))]  or  (2k+1)!/(-2)^k CT[P B prod(x^-i - x^i)]
};

/// CT of the gratifying function built from a symmetric polynomial P in n
/// variables, evaluated through k = floor(n/2) variables. Throws
/// std::invalid_argument when P is not symmetric.
TheoremValue reduce_theorem_both(const MultiLaurent& p);
/// The primed value after checking both forms agree (std::logic_error if not).
BigRat reduce_theorem(const MultiLaurent& p);

/// Determinant evaluation of (1/n!) CT with numerator prod (1 - x_i/x_j) over
/// i != j times prod p(1/x_i).
BigRat corollary_determinant(const Poly& p, int n);

/// Seeded symmetric polynomial in n variables: the sum over 1..3 monomial
/// orbits, exponents in [0,3], coefficients in [1,5]. Draws come from
/// std::mt19937_64(seed) as lo + draw % (hi - lo + 1): orbit count first,
/// then per orbit the n exponents followed by the coefficient.
MultiLaurent random_symmetric_polynomial(int n, std::uint64_t seed);

/// prod_i (1 + x_i)^m in n variables.
MultiLaurent product_one_plus_x(int n, int m);

}  // namespace ctred
