#include "ctred/analytic.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ctred {

ChangeOfVariable catalan_change_of_variable(int order) {
  if (order < 2) throw std::invalid_argument("catalan_change_of_variable: order must be >= 2");
  ChangeOfVariable cov;
  const TruncLaurent x = TruncLaurent::monomial(1, 1, TruncLaurent::kExact);
  const TruncLaurent one_plus_x_sq = TruncLaurent::polynomial({1, 2, 1}, order);
  cov.forward = (x * one_plus_x_sq.reciprocal()).truncate(order);

  // 1 - 2y - sqrt(1-4y) starts at y^2; dividing by 2y keeps order terms if we go one further.
  const TruncLaurent root = TruncLaurent::polynomial({1, -4}, order + 1).sqrt();
  const TruncLaurent numer = TruncLaurent::polynomial({1, -2}, order + 1) - root;
  cov.inverse = numer * TruncLaurent::monomial(-1, make_rat(1, 2), TruncLaurent::kExact);

  cov.jacobian = x * cov.forward.derivative() * cov.forward.reciprocal();
  cov.valuation = cov.forward.valuation();
  return cov;
}

namespace {

TruncLaurent truncate_to(const TruncLaurent& s, int order) { return s.truncate(std::min(order, s.order())); }

}  // namespace

CheckResult jacobi_check(const TruncLaurent& g, const ChangeOfVariable& cov, int order) {
  CheckResult r;
  try {
    const TruncLaurent f = truncate_to(cov.forward, order);
    const TruncLaurent jac = truncate_to(cov.jacobian, order);
    r.lhs = (g.compose(f) * jac).ct();
    r.rhs = cov.valuation * g.ct();
  } catch (const TruncationError& e) {
    r.status = CheckStatus::Undecidable;
    r.note = e.what();
    return r;
  }
  r.status = r.lhs == r.rhs ? CheckStatus::Pass : CheckStatus::Fail;
  return r;
}

CheckResult crucial_jacobi_check(const TruncLaurent& g, int order) {
  CheckResult r;
  try {
    const ChangeOfVariable cov = catalan_change_of_variable(order);
    r.lhs = g.compose(cov.forward).ct();
    const TruncLaurent inv_root = TruncLaurent::polynomial({1, -4}, order).sqrt().reciprocal();
    r.rhs = (g * inv_root).ct();
  } catch (const TruncationError& e) {
    r.status = CheckStatus::Undecidable;
    r.note = e.what();
    return r;
  }
  r.status = r.lhs == r.rhs ? CheckStatus::Pass : CheckStatus::Fail;
  return r;
}

namespace {

MultiLaurent var2(int i, int e = 1) { return MultiLaurent::variable(2, i, e); }

/// (1-x_i/x_j)(1-x_j/x_i)(1-x_i x_j)(1-1/(x_i x_j)) in the two-variable ring.
MultiLaurent bc_pair() {
  return one_minus(var2(0) * var2(1, -1)) * one_minus(var2(1) * var2(0, -1)) * one_minus(var2(0) * var2(1)) *
         one_minus(var2(0, -1) * var2(1, -1));
}

}  // namespace

bool observation_check() {
  const MultiLaurent one(2, 1);
  const MultiLaurent di = (one + var2(0)).pow(2);
  const MultiLaurent dj = (one + var2(1)).pow(2);
  // y_i = x_i / d_i, so (y_i - y_j)^2/(y_i y_j)^2 = (x_i d_j - x_j d_i)^2 / (x_i x_j)^2.
  const MultiLaurent lhs = (var2(0) * dj - var2(1) * di).pow(2);
  const MultiLaurent rhs = (var2(0) * var2(1)).pow(2) * bc_pair();
  if (lhs != rhs) return false;

  // 1/y = z = x + 2 + 1/x gives the uncleared form (z_i - z_j)^2.
  const MultiLaurent zi = var2(0) + MultiLaurent(2, 2) + var2(0, -1);
  const MultiLaurent zj = var2(1) + MultiLaurent(2, 2) + var2(1, -1);
  if ((zi - zj).pow(2) != bc_pair()) return false;

  const std::vector<int> swap{1, 0};
  return bc_pair().perm_apply(swap) == bc_pair() && lhs.perm_apply(swap) == lhs;
}

std::pair<BigRat, BigRat> observation_at(const BigRat& xi, const BigRat& xj) {
  const BigRat yi = xi / ((1 + xi) * (1 + xi));
  const BigRat yj = xj / ((1 + xj) * (1 + xj));
  const BigRat lhs = (yi - yj) * (yi - yj) / (yi * yi * yj * yj);
  const std::vector<BigRat> point{xi, xj};
  return {lhs, bc_pair().eval(point)};
}

bool uij_check(int kmax) {
  if (kmax < 2 || kmax > kMaxVars) throw std::invalid_argument("uij_check: kmax out of range");
  const int n = kmax;
  const MultiLaurent one(n, 1);
  auto g = [&](const MultiLaurent& v) { return v + v * v; };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const MultiLaurent xi = MultiLaurent::variable(n, i), xj = MultiLaurent::variable(n, j);
      const MultiLaurent xi_inv = MultiLaurent::variable(n, i, -1), xj_inv = MultiLaurent::variable(n, j, -1);
      const MultiLaurent u = (g(xi_inv) - g(xj_inv)) * (g(xi) - g(xj)) * (g(xi_inv) - g(xj)) * (g(xi) - g(xj_inv));

      const MultiLaurent zi = xi + one * BigRat(2) + xi_inv;
      const MultiLaurent zj = xj + one * BigRat(2) + xj_inv;
      const MultiLaurent form1 = (one - zi * zj * BigRat(3) + zi * zj * zj + zi * zi * zj) * (zi - zj).pow(2);
      if (u != form1) return false;
      // z_i z_j (z_i^-1 (z_i-1)^3 - z_j^-1 (z_j-1)^3) with the z's cleared.
      const MultiLaurent form2 = (zj * (zi - one).pow(3) - zi * (zj - one).pow(3)) * (zi - zj);
      if (u != form2) return false;

      std::vector<VarImage> flip;
      for (int t = 0; t < n; ++t) flip.push_back({t, t == i ? -1 : 1});
      if (u.remap(n, flip) != u) return false;
    }
  return true;
}

bool extra_factor_check() {
  const MultiLaurent one(1, 1);
  auto x = [](int e) { return MultiLaurent::variable(1, 0, e); };
  const MultiLaurent z = x(1) + one * BigRat(2) + x(-1);
  const MultiLaurent lhs = (x(1) + x(2) - one * BigRat(2)) * (x(-1) + x(-2) - one * BigRat(2));
  const MultiLaurent rhs = -((z * BigRat(2) + one) * (z - one * BigRat(4)));
  return lhs == rhs;
}

}  // namespace ctred
