#pragma once

// Exact matrices, determinants and sums of maximal minors, plus the matrix
// and determinant constructions attached to the minor-sum/constant-term
// correspondence.

#include "ctred/exact.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace ctred {

/// Dense univariate polynomial, coefficient of x^t at index t.
using Poly = std::vector<BigRat>;

Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_pow(const Poly& a, int e);
int poly_degree(const Poly& a);  // -1 for the zero polynomial
BigRat poly_eval(const Poly& a, const BigRat& x);
/// (1 + x)^m
Poly one_plus_x_pow(int m);

class ExactMatrix {
 public:
  ExactMatrix(std::size_t rows, std::size_t cols);
  ExactMatrix(std::initializer_list<std::initializer_list<long>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  BigRat& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const BigRat& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  /// Submatrix made of all rows and the given (increasing) columns.
  ExactMatrix select_columns(std::span<const std::size_t> cols) const;

  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;
  std::string to_string() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<BigRat> a_;
};

/// Fraction-free (Bareiss) elimination with row pivoting.
BigRat det(const ExactMatrix& m);
/// Laplace expansion along the first row; exponential, test oracle only.
BigRat det_cofactor(const ExactMatrix& m);

/// Sum of the determinants of all rows x rows column-subset submatrices.
BigRat minor_sum(const ExactMatrix& m);

/// n x (deg f + (n-1) deg g + 1) matrix with M_ij = CT f(x) g(x)^(i-1) / x^(j-1).
ExactMatrix zeilberger_matrix(const Poly& f, const Poly& g, int n);
/// n x (2n+m-1) matrix with entries C(m+i-1, j-i); m = 0 is Doran's matrix.
ExactMatrix conjecture_matrix(int n, int m);
inline ExactMatrix doran_matrix(int n) { return conjecture_matrix(n, 0); }

/// (1/n!) CT of prod f(1/x_i) prod_{i<j} (x_i - x_j)(g(1/x_i) - g(1/x_j)) over
/// the standard denominator.
BigRat ct_fg(const Poly& f, const Poly& g, int n, int threads = 1);

/// k x k determinant evaluation of the minor sum for g = 1 + x, built from
/// the autocorrelation CT x^s f(x) f(1/x).
BigRat reduced_det_thm(const Poly& f, int n);

/// The same determinants with f = (1+x)^m written with binomial entries.
BigRat binom_det(int m, int n);

/// Determinant form of the minor sum for f = (1+x)^m, g = x(1+x), written in
/// z = x^-1 (1+x)^2. The odd case carries an explicit (-1)^k.
BigRat andrews_det(int m, int n);

}  // namespace ctred
