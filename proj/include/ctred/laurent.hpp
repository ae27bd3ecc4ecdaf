#pragma once

// Sparse multivariate Laurent polynomials over BigRat.

#include "ctred/exact.hpp"

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ctred {

inline constexpr int kMaxVars = 12;
inline constexpr int kMaxExponent = 1 << 20;

/// Exponent vector with inline storage. Unused slots stay zero so that the
/// defaulted comparisons only ever see meaningful data.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(int nvars);
  ExponentVector(std::initializer_list<int> exps);
  explicit ExponentVector(std::span<const int> exps);

  int size() const { return n_; }
  int operator[](int i) const { return e_[static_cast<std::size_t>(i)]; }
  int& operator[](int i) { return e_[static_cast<std::size_t>(i)]; }

  ExponentVector& operator+=(const ExponentVector& o);
  friend ExponentVector operator+(ExponentVector a, const ExponentVector& b) { return a += b; }
  bool is_zero() const;

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
  friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;

  std::size_t hash() const;

 private:
  std::uint8_t n_ = 0;
  std::array<std::int32_t, kMaxVars> e_{};
};

struct ExponentHash {
  std::size_t operator()(const ExponentVector& e) const { return e.hash(); }
};

struct Term {
  ExponentVector exps;
  BigRat coeff;
};

/// Image of one variable under remap(): x_i -> x_target^power, or 1 when
/// target < 0.
struct VarImage {
  int target = -1;
  int power = 1;
};

/// Substitution for a single variable inside the same ring.
struct Substitution {
  enum class Kind { One, Var, InverseVar };
  Kind kind = Kind::One;
  int var = -1;

  static Substitution one() { return {Kind::One, -1}; }
  static Substitution to(int j) { return {Kind::Var, j}; }
  static Substitution inverse_of(int j) { return {Kind::InverseVar, j}; }
};

class MultiLaurent {
 public:
  MultiLaurent() = default;
  explicit MultiLaurent(int nvars);
  MultiLaurent(int nvars, const BigRat& c);

  static MultiLaurent constant(int nvars, const BigRat& c) { return MultiLaurent(nvars, c); }
  static MultiLaurent variable(int nvars, int i, int power = 1);
  static MultiLaurent monomial(const ExponentVector& e, const BigRat& c);
  /// Takes unsorted, possibly duplicated terms and canonicalizes.
  static MultiLaurent from_terms(int nvars, std::vector<Term> terms);
  /// Univariate Laurent polynomial sum_t coeffs[t] x^(low + t) in variable i.
  static MultiLaurent univariate(int nvars, int i, std::span<const BigRat> coeffs, int low = 0);

  int nvars() const { return nvars_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  BigRat coeff(const ExponentVector& e) const;
  /// Coefficient of the all-zero exponent vector.
  BigRat ct() const;

  int min_degree(int i) const;
  int max_degree(int i) const;

  MultiLaurent& operator+=(const MultiLaurent& o);
  MultiLaurent& operator-=(const MultiLaurent& o);
  MultiLaurent& operator*=(const MultiLaurent& o);
  MultiLaurent& operator*=(const BigRat& c);
  friend MultiLaurent operator+(MultiLaurent a, const MultiLaurent& b) { return a += b; }
  friend MultiLaurent operator-(MultiLaurent a, const MultiLaurent& b) { return a -= b; }
  friend MultiLaurent operator*(const MultiLaurent& a, const MultiLaurent& b);
  friend MultiLaurent operator*(MultiLaurent a, const BigRat& c) { return a *= c; }
  friend MultiLaurent operator*(const BigRat& c, MultiLaurent a) { return a *= c; }
  MultiLaurent operator-() const;

  /// Nonnegative powers of anything; negative powers of monomials only.
  MultiLaurent pow(int e) const;

  MultiLaurent substitute(int i, Substitution target) const;
  /// pi f(x_1..x_n) = f(x_{pi_1}..x_{pi_n}); perm is 0-based.
  MultiLaurent perm_apply(std::span<const int> perm) const;
  /// Moves into a ring with new_nvars variables, mapping each old variable
  /// through images[i].
  MultiLaurent remap(int new_nvars, std::span<const VarImage> images) const;
  /// Shorthand for remap with every variable sent to x_i^{-1}.
  MultiLaurent invert_variables() const;

  BigRat eval(std::span<const BigRat> point) const;
  bool is_symmetric() const;

  friend bool operator==(const MultiLaurent& a, const MultiLaurent& b) {
    if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t t = 0; t < a.terms_.size(); ++t)
      if (a.terms_[t].exps != b.terms_[t].exps || a.terms_[t].coeff != b.terms_[t].coeff) return false;
    return true;
  }

  /// Debug text: "p/q*x1^a1*...*xn^an" terms joined by " + ", lexicographic.
  std::string to_string() const;

 private:
  void check_same_ring(const MultiLaurent& o, const char* what) const;

  int nvars_ = 0;
  std::vector<Term> terms_;  // sorted by exps, no zero coefficients
};

/// Product of factors keeping only partial monomials that can still land in
/// the box lo <= e <= hi once the remaining factors are multiplied in.
MultiLaurent product_in_box(std::span<const MultiLaurent> factors, const ExponentVector& lo,
                            const ExponentVector& hi);

/// Convenience builders for the recurring factor shapes.
MultiLaurent one_minus(const MultiLaurent& m);  // 1 - m

}  // namespace ctred
