#include "ctred/series.hpp"

#include <algorithm>

namespace ctred {

namespace {

int clamp_order(long order) {
  if (order >= TruncLaurent::kExact / 2) return TruncLaurent::kExact;
  return static_cast<int>(order);
}

}  // namespace

TruncLaurent::TruncLaurent(std::vector<BigRat> coeffs, int low, int order)
    : c_(std::move(coeffs)), low_(low), order_(clamp_order(order)) {
  const long known = static_cast<long>(order_) - low_ + 1;
  if (static_cast<long>(c_.size()) > known) c_.resize(static_cast<std::size_t>(std::max(0L, known)));
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

TruncLaurent TruncLaurent::monomial(int e, const BigRat& c, int order) {
  if (e > order) return TruncLaurent({}, 0, order);
  return TruncLaurent({c}, e, order);
}

TruncLaurent TruncLaurent::polynomial(std::vector<BigRat> coeffs, int order) {
  return TruncLaurent(std::move(coeffs), 0, order);
}

int TruncLaurent::valuation() const {
  for (std::size_t t = 0; t < c_.size(); ++t)
    if (c_[t] != 0) return low_ + static_cast<int>(t);
  return order_ + 1;
}

BigRat TruncLaurent::coeff(int e) const {
  if (e > order_)
    throw TruncationError("coefficient of x^" + std::to_string(e) + " requested beyond order " +
                          std::to_string(order_));
  if (e < low_ || e > top()) return 0;
  return c_[static_cast<std::size_t>(e - low_)];
}

TruncLaurent TruncLaurent::operator+(const TruncLaurent& o) const {
  const int order = std::min(order_, o.order_);
  const int low = std::min(low_, o.low_);
  const int hi = std::min(order, std::max(top(), o.top()));
  std::vector<BigRat> c;
  for (int e = low; e <= hi; ++e) c.push_back(coeff(e) + o.coeff(e));
  return TruncLaurent(std::move(c), low, order);
}

TruncLaurent TruncLaurent::operator-() const {
  TruncLaurent r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

TruncLaurent TruncLaurent::operator-(const TruncLaurent& o) const { return *this + (-o); }

TruncLaurent TruncLaurent::operator*(const BigRat& c) const {
  TruncLaurent r = *this;
  for (auto& v : r.c_) v *= c;
  while (!r.c_.empty() && r.c_.back() == 0) r.c_.pop_back();
  return r;
}

TruncLaurent TruncLaurent::operator*(const TruncLaurent& o) const {
  const int v1 = valuation();
  const int v2 = o.valuation();
  const int order = clamp_order(std::min(static_cast<long>(order_) + v2, static_cast<long>(o.order_) + v1));
  if (v1 > order_ || v2 > o.order_) return TruncLaurent({}, 0, order);
  const int low = v1 + v2;
  const int hi = std::min(order, top() + o.top());
  std::vector<BigRat> c;
  for (int e = low; e <= hi; ++e) {
    BigRat sum = 0;
    for (int a = std::max(v1, e - o.top()); a <= std::min(top(), e - v2); ++a) sum += coeff(a) * o.coeff(e - a);
    c.push_back(std::move(sum));
  }
  return TruncLaurent(std::move(c), low, order);
}

TruncLaurent TruncLaurent::derivative() const {
  std::vector<BigRat> c;
  for (int e = low_; e <= top(); ++e) c.push_back(coeff(e) * e);
  return TruncLaurent(std::move(c), low_ - 1, is_exact() ? kExact : order_ - 1);
}

TruncLaurent TruncLaurent::reciprocal() const {
  const int v = valuation();
  if (v > order_) throw TruncationError("reciprocal: leading coefficient unknown or series is zero");
  if (is_exact() && top() == v) {
    // Monomial: exact inverse.
    return TruncLaurent({1 / coeff(v)}, -v, kExact);
  }
  if (is_exact()) throw TruncationError("reciprocal: truncate an exact polynomial to a finite order first");
  // this = x^v * u with u = u0 + u1 x + ... known through order_ - v.
  const int uorder = order_ - v;
  const BigRat u0 = coeff(v);
  std::vector<BigRat> w(static_cast<std::size_t>(uorder + 1));
  w[0] = 1 / u0;
  for (int k = 1; k <= uorder; ++k) {
    BigRat s = 0;
    for (int j = 1; j <= k; ++j) s += coeff(v + j) * w[static_cast<std::size_t>(k - j)];
    w[static_cast<std::size_t>(k)] = -s / u0;
  }
  return TruncLaurent(std::move(w), -v, uorder - v);
}

TruncLaurent TruncLaurent::pow(int e) const {
  if (e < 0) return reciprocal().pow(-e);
  TruncLaurent result = monomial(0, 1, kExact);
  TruncLaurent base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

TruncLaurent TruncLaurent::sqrt() const {
  if (valuation() < 0 || order_ < 0 || coeff(0) != 1) throw std::domain_error("sqrt: series must be 1 + O(x)");
  if (is_exact()) throw TruncationError("sqrt: truncate an exact polynomial to a finite order first");
  std::vector<BigRat> r(static_cast<std::size_t>(order_ + 1));
  r[0] = 1;
  for (int n = 1; n <= order_; ++n) {
    BigRat s = coeff(n);
    for (int i = 1; i < n; ++i) s -= r[static_cast<std::size_t>(i)] * r[static_cast<std::size_t>(n - i)];
    r[static_cast<std::size_t>(n)] = s / 2;
  }
  return TruncLaurent(std::move(r), 0, order_);
}

TruncLaurent TruncLaurent::compose(const TruncLaurent& inner) const {
  const int vf = inner.valuation();
  if (vf > inner.order_) throw TruncationError("compose: inner series has no known leading term");
  if (vf < 1) throw std::domain_error("compose: inner series must have positive valuation");

  // Outer terms past order_ are unknown; the first of them lands at x^(vf*(order_+1)).
  long order = is_exact() ? TruncLaurent::kExact : static_cast<long>(vf) * (order_ + 1) - 1;
  const int first = valuation();
  if (first > order_) return TruncLaurent({}, 0, clamp_order(order));

  TruncLaurent sum = monomial(0, 0, kExact);
  TruncLaurent p = inner.pow(first);
  const int last = std::min(order_, top());
  for (int s = first; s <= last; ++s) {
    const BigRat g = coeff(s);
    if (g != 0) {
      order = std::min<long>(order, p.order_);
      sum = sum + p * g;
    }
    if (s < last) p = p * inner;
  }
  return sum.truncate(clamp_order(std::min<long>(order, sum.order_)));
}

TruncLaurent TruncLaurent::truncate(int new_order) const {
  if (new_order > order_) throw TruncationError("truncate: cannot extend known order");
  std::vector<BigRat> c;
  for (int e = low_; e <= std::min(new_order, top()); ++e) c.push_back(coeff(e));
  return TruncLaurent(std::move(c), low_, new_order);
}

bool TruncLaurent::agrees_with(const TruncLaurent& o) const {
  const int order = std::min(order_, o.order_);
  const int hi = std::min(order, std::max(top(), o.top()));
  for (int e = std::min(low_, o.low_); e <= hi; ++e)
    if (coeff(e) != o.coeff(e)) return false;
  return true;
}

std::string TruncLaurent::to_string() const {
  std::string s;
  for (int e = low_; e <= top(); ++e) {
    const BigRat c = coeff(e);
    if (c == 0) continue;
    if (!s.empty()) s += " + ";
    s += ctred::to_string(c) + "*x^" + std::to_string(e);
  }
  if (s.empty()) s = "0";
  if (is_exact()) return s;
  return s + " + O(x^" + std::to_string(order_ + 1) + ")";
}

}  // namespace ctred
