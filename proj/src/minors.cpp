#include "ctred/minors.hpp"

#include "ctred/ctcore.hpp"
#include "ctred/laurent.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ctred {

// ---------------------------------------------------------------------------
// Univariate helpers

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

Poly poly_pow(const Poly& a, int e) {
  if (e < 0) throw std::domain_error("poly_pow: negative exponent");
  Poly r{1};
  for (int i = 0; i < e; ++i) r = poly_mul(r, a);
  return r;
}

int poly_degree(const Poly& a) {
  for (std::size_t t = a.size(); t-- > 0;)
    if (a[t] != 0) return static_cast<int>(t);
  return -1;
}

BigRat poly_eval(const Poly& a, const BigRat& x) {
  BigRat r = 0;
  for (std::size_t t = a.size(); t-- > 0;) r = r * x + a[t];
  return r;
}

Poly one_plus_x_pow(int m) {
  Poly r;
  for (int t = 0; t <= m; ++t) r.push_back(BigRat(binomial(m, t)));
  return r;
}

// ---------------------------------------------------------------------------
// ExactMatrix

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

ExactMatrix::ExactMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ExactMatrix: ragged rows");
    for (long v : r) a_.emplace_back(v);
  }
}

ExactMatrix ExactMatrix::select_columns(std::span<const std::size_t> cols) const {
  ExactMatrix s(rows_, cols.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) s(r, c) = (*this)(r, cols[c]);
  return s;
}

std::string ExactMatrix::to_string() const {
  std::string s = "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    s += r ? ", [" : "[";
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) s += ", ";
      s += ctred::to_string((*this)(r, c));
    }
    s += "]";
  }
  return s + "]";
}

BigRat det(const ExactMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  ExactMatrix a = m;
  BigRat prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(p, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) / prev;
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

BigRat det_cofactor(const ExactMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det_cofactor: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  BigRat sum = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c) == 0) continue;
    ExactMatrix sub(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t cc = 0, t = 0; cc < n; ++cc)
        if (cc != c) sub(r - 1, t++) = m(r, cc);
    const BigRat term = m(0, c) * det_cofactor(sub);
    sum += (c % 2 == 0) ? term : BigRat(-term);
  }
  return sum;
}

BigRat minor_sum(const ExactMatrix& m) {
  const std::size_t r = m.rows();
  const std::size_t c = m.cols();
  if (r > c) throw std::invalid_argument("minor_sum: more rows than columns");
  std::vector<std::size_t> pick(r);
  std::iota(pick.begin(), pick.end(), std::size_t{0});
  BigRat sum = 0;
  while (true) {
    sum += det(m.select_columns(pick));
    // Next r-combination of {0..c-1} in lexicographic order.
    std::size_t i = r;
    while (i > 0 && pick[i - 1] == c - r + (i - 1)) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < r; ++j) pick[j] = pick[j - 1] + 1;
  }
  return sum;
}

// ---------------------------------------------------------------------------
// Constructions

ExactMatrix zeilberger_matrix(const Poly& f, const Poly& g, int n) {
  const int df = poly_degree(f);
  const int dg = poly_degree(g);
  if (df < 0 || dg < 0) throw std::invalid_argument("zeilberger_matrix: zero polynomial");
  if (n < 1) throw std::invalid_argument("zeilberger_matrix: n must be positive");
  const std::size_t cols = static_cast<std::size_t>(df + (n - 1) * dg + 1);
  ExactMatrix m(static_cast<std::size_t>(n), cols);
  Poly row = f;
  for (int i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < cols && j < row.size(); ++j) m(static_cast<std::size_t>(i), j) = row[j];
    row = poly_mul(row, g);
  }
  return m;
}

ExactMatrix conjecture_matrix(int n, int m) {
  if (n < 1 || m < 0) throw std::invalid_argument("conjecture_matrix: need n >= 1, m >= 0");
  const int cols = 2 * n + m - 1;
  ExactMatrix a(static_cast<std::size_t>(n), static_cast<std::size_t>(cols));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= cols; ++j)
      a(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = BigRat(binomial(m + i - 1, j - i));
  return a;
}

BigRat ct_fg(const Poly& f, const Poly& g, int n, int threads) {
  if (n < 1) throw std::invalid_argument("ct_fg: n must be positive");
  std::vector<MultiLaurent> factors;
  auto at_inverse = [&](const Poly& p, int i) {
    return MultiLaurent::univariate(n, i, std::vector<BigRat>(p.rbegin(), p.rend()), -static_cast<int>(p.size()) + 1);
  };
  for (int i = 0; i < n; ++i) factors.push_back(at_inverse(f, i));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      factors.push_back(MultiLaurent::variable(n, i) - MultiLaurent::variable(n, j));
      factors.push_back(at_inverse(g, i) - at_inverse(g, j));
    }
  return ct_standard_factored(factors, all_active(n), make_rat(BigInt(1), factorial(n)), threads);
}

namespace {

/// CT x^s f(x) f(1/x) = sum_t f_t f_{t+s}.
BigRat autocorrelation(const Poly& f, int s) {
  BigRat sum = 0;
  const int len = static_cast<int>(f.size());
  for (int t = 0; t < len; ++t)
    if (t + s >= 0 && t + s < len) sum += f[static_cast<std::size_t>(t)] * f[static_cast<std::size_t>(t + s)];
  return sum;
}

}  // namespace

BigRat reduced_det_thm(const Poly& f, int n) {
  if (n < 1) throw std::invalid_argument("reduced_det_thm: n must be positive");
  const int k = n / 2;
  ExactMatrix a(static_cast<std::size_t>(k), static_cast<std::size_t>(k));
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= k; ++j) {
      BigRat& e = a(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1));
      if (n % 2 == 0) e = autocorrelation(f, i + j - 1) + autocorrelation(f, i - j);
      else e = autocorrelation(f, i - j) - autocorrelation(f, i + j);
    }
  const BigRat d = det(a);
  return n % 2 == 0 ? d : poly_eval(f, 1) * d;
}

BigRat binom_det(int m, int n) {
  if (m < 0 || n < 1) throw std::invalid_argument("binom_det: need m >= 0, n >= 1");
  const int k = n / 2;
  ExactMatrix a(static_cast<std::size_t>(k), static_cast<std::size_t>(k));
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= k; ++j) {
      BigInt v;
      if (n % 2 == 0) v = binomial(2 * m, m + 1 - i - j) + binomial(2 * m, m - i + j);
      else v = binomial(2 * m, m - i + j) - binomial(2 * m, m - i - j);
      a(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = BigRat(v);
    }
  const BigRat d = det(a);
  if (n % 2 == 0) return d;
  return ctred::pow(BigRat(2), m) * d;
}

BigRat andrews_det(int m, int n) {
  if (m < 0 || n < 1) throw std::invalid_argument("andrews_det: need m >= 0, n >= 1");
  const int k = n / 2;
  const BigRat one = 1, two = 2;
  const std::vector<BigRat> zc{one, two, one};
  const MultiLaurent z = MultiLaurent::univariate(1, 0, zc, -1);  // x^-1 + 2 + x
  const MultiLaurent z_minus_1 = z - MultiLaurent(1, 1);
  MultiLaurent extra(1, 1);
  if (n % 2 == 1) extra = (z * BigRat(2) + MultiLaurent(1, 1)) * (z - MultiLaurent(1, 4));

  ExactMatrix a(static_cast<std::size_t>(k), static_cast<std::size_t>(k));
  for (int i = 1; i <= k; ++i) {
    const MultiLaurent row = z_minus_1.pow(3 * i - 2) * extra;
    for (int j = 1; j <= k; ++j)
      a(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = (z.pow(m + k + j - i) * row).ct();
  }
  BigRat scale = ctred::pow(two, -k);
  if (n % 2 == 1) scale *= ctred::pow(two, m) * sign_pow(k);
  return scale * det(a);
}

}  // namespace ctred
