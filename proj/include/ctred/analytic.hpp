#pragma once

// Residue calculus for the substitution y = x/(1+x)^2 and the exact algebraic
// identities that feed the determinant and BC constant-term derivations.

#include "ctred/laurent.hpp"
#include "ctred/series.hpp"

#include <string>
#include <utility>

namespace ctred {

struct ChangeOfVariable {
  TruncLaurent forward;   // y as a series in x
  TruncLaurent inverse;   // x as a series in y
  TruncLaurent jacobian;  // (x/f) df/dx
  int valuation = 1;      // b: f(x)/x^b is a unit power series
};

/// y = x(1+x)^-2, x = (1 - 2y - sqrt(1-4y)) / (2y), jacobian from exact
/// differentiation of the forward series. All series known through `order`
/// or slightly less where division by x costs terms.
ChangeOfVariable catalan_change_of_variable(int order);

enum class CheckStatus { Pass, Fail, Undecidable };

struct CheckResult {
  CheckStatus status = CheckStatus::Undecidable;
  BigRat lhs;
  BigRat rhs;
  std::string note;

  bool passed() const { return status == CheckStatus::Pass; }
};

/// CT_x G(f(x)) (x/f) f' against b CT_y G(y). The change of variable is
/// truncated to `order` first; a side that needs coefficients past the
/// tracked order makes the outcome Undecidable.
CheckResult jacobi_check(const TruncLaurent& g, const ChangeOfVariable& cov, int order);

/// CT_x G(x/(1+x)^2) against CT_y G(y)/sqrt(1-4y).
CheckResult crucial_jacobi_check(const TruncLaurent& g, int order);

/// (y_i - y_j)^2 / (y_i y_j)^2 = (1-x_i/x_j)(1-x_j/x_i)(1-x_i x_j)(1-1/(x_i x_j))
/// for y = x/(1+x)^2, as a cross-multiplied Laurent identity.
bool observation_check();
/// Both sides of the same identity evaluated at a rational point.
std::pair<BigRat, BigRat> observation_at(const BigRat& xi, const BigRat& xj);

/// The factorizations of U_ij in z = x + 2 + 1/x, for every pair among kmax
/// variables, plus U's invariance under x_i -> 1/x_i.
bool uij_check(int kmax);

/// (x + x^2 - 2)(1/x + 1/x^2 - 2) = -(2z+1)(z-4).
bool extra_factor_check();

}  // namespace ctred
