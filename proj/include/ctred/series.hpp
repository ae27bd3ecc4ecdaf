#pragma once

// Univariate truncated Laurent series with a finite principal part.
//
// A TruncLaurent knows its coefficients for exponents low..order inclusive;
// everything above `order` is unknown (not zero). Each operation returns the
// largest order at which its result is still fully determined by its inputs.

#include "ctred/exact.hpp"

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ctred {

/// Thrown when a requested coefficient lies above the tracked order.
class TruncationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class TruncLaurent {
 public:
  /// Order value meaning "every coefficient is known" (finite Laurent polynomial).
  static constexpr int kExact = 1 << 28;

  TruncLaurent() = default;
  /// Coefficients for exponents low, low+1, ...; known exactly through `order`
  /// (entries past the vector end and up to `order` are zero).
  TruncLaurent(std::vector<BigRat> coeffs, int low, int order);

  /// x^e, exact through `order`.
  static TruncLaurent monomial(int e, const BigRat& c, int order);
  /// Polynomial sum_t coeffs[t] x^t, exact through `order`.
  static TruncLaurent polynomial(std::vector<BigRat> coeffs, int order);

  int low() const { return low_; }
  int order() const { return order_; }
  bool is_exact() const { return order_ >= kExact; }
  /// Lowest exponent with a nonzero coefficient; order()+1 when none is known.
  int valuation() const;

  /// Throws TruncationError above order().
  BigRat coeff(int e) const;
  BigRat ct() const { return coeff(0); }

  TruncLaurent operator+(const TruncLaurent& o) const;
  TruncLaurent operator-(const TruncLaurent& o) const;
  TruncLaurent operator-() const;
  TruncLaurent operator*(const TruncLaurent& o) const;
  TruncLaurent operator*(const BigRat& c) const;

  TruncLaurent derivative() const;
  /// Multiplicative inverse; the leading coefficient must be known and nonzero.
  TruncLaurent reciprocal() const;
  TruncLaurent pow(int e) const;
  /// Square root of a series 1 + O(x).
  TruncLaurent sqrt() const;
  /// this(inner(x)); inner must have positive valuation.
  TruncLaurent compose(const TruncLaurent& inner) const;
  /// Same series, forgetting coefficients above new_order.
  TruncLaurent truncate(int new_order) const;

  /// Exact agreement on every exponent both sides know.
  bool agrees_with(const TruncLaurent& o) const;

  std::string to_string() const;

 private:
  int top() const { return low_ + static_cast<int>(c_.size()) - 1; }

  std::vector<BigRat> c_;  // c_[t] is the coefficient of x^(low_ + t); zero past the end
  int low_ = 0;
  int order_ = -1;
};

}  // namespace ctred
