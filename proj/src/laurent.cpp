#include "ctred/laurent.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace ctred {

namespace {

void check_nvars(int n) {
  if (n < 0 || n > kMaxVars) throw std::invalid_argument("variable count out of range");
}

void check_exponent(long e) {
  if (e <= -kMaxExponent || e >= kMaxExponent) throw std::overflow_error("exponent out of range");
}

using Accumulator = std::unordered_map<ExponentVector, BigRat, ExponentHash>;

std::vector<Term> drain(Accumulator& acc) {
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [e, c] : acc)
    if (c != 0) out.push_back({e, std::move(c)});
  std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) { return a.exps < b.exps; });
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// ExponentVector

ExponentVector::ExponentVector(int nvars) {
  check_nvars(nvars);
  n_ = static_cast<std::uint8_t>(nvars);
}

ExponentVector::ExponentVector(std::initializer_list<int> exps)
    : ExponentVector(std::span<const int>(exps.begin(), exps.size())) {}

ExponentVector::ExponentVector(std::span<const int> exps) {
  check_nvars(static_cast<int>(exps.size()));
  n_ = static_cast<std::uint8_t>(exps.size());
  for (std::size_t i = 0; i < exps.size(); ++i) {
    check_exponent(exps[i]);
    e_[i] = exps[i];
  }
}

ExponentVector& ExponentVector::operator+=(const ExponentVector& o) {
  if (n_ != o.n_) throw std::invalid_argument("exponent vectors of different length");
  for (int i = 0; i < n_; ++i) {
    e_[i] += o.e_[i];
    check_exponent(e_[i]);
  }
  return *this;
}

bool ExponentVector::is_zero() const {
  return std::all_of(e_.begin(), e_.begin() + n_, [](int v) { return v == 0; });
}

std::size_t ExponentVector::hash() const {
  std::uint64_t h = 0xcbf29ce484222325ull ^ n_;
  for (int i = 0; i < n_; ++i) {
    h ^= static_cast<std::uint32_t>(e_[i]);
    h *= 0x100000001b3ull;
    h ^= h >> 29;
  }
  return static_cast<std::size_t>(h);
}

// ---------------------------------------------------------------------------
// MultiLaurent

MultiLaurent::MultiLaurent(int nvars) : nvars_(nvars) { check_nvars(nvars); }

MultiLaurent::MultiLaurent(int nvars, const BigRat& c) : MultiLaurent(nvars) {
  if (c != 0) terms_.push_back({ExponentVector(nvars), c});
}

MultiLaurent MultiLaurent::variable(int nvars, int i, int power) {
  if (i < 0 || i >= nvars) throw std::out_of_range("variable index out of range");
  ExponentVector e(nvars);
  check_exponent(power);
  e[i] = power;
  return monomial(e, 1);
}

MultiLaurent MultiLaurent::monomial(const ExponentVector& e, const BigRat& c) {
  MultiLaurent p(e.size());
  if (c != 0) p.terms_.push_back({e, c});
  return p;
}

MultiLaurent MultiLaurent::from_terms(int nvars, std::vector<Term> terms) {
  MultiLaurent p(nvars);
  Accumulator acc;
  acc.reserve(terms.size());
  for (auto& t : terms) {
    if (t.exps.size() != nvars) throw std::invalid_argument("term has wrong variable count");
    acc[t.exps] += t.coeff;
  }
  p.terms_ = drain(acc);
  return p;
}

MultiLaurent MultiLaurent::univariate(int nvars, int i, std::span<const BigRat> coeffs, int low) {
  if (i < 0 || i >= nvars) throw std::out_of_range("variable index out of range");
  MultiLaurent p(nvars);
  for (std::size_t t = 0; t < coeffs.size(); ++t) {
    if (coeffs[t] == 0) continue;
    ExponentVector e(nvars);
    e[i] = low + static_cast<int>(t);
    p.terms_.push_back({e, coeffs[t]});
  }
  std::sort(p.terms_.begin(), p.terms_.end(), [](const Term& a, const Term& b) { return a.exps < b.exps; });
  return p;
}

BigRat MultiLaurent::coeff(const ExponentVector& e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Term& t, const ExponentVector& key) { return t.exps < key; });
  if (it != terms_.end() && it->exps == e) return it->coeff;
  return 0;
}

BigRat MultiLaurent::ct() const { return coeff(ExponentVector(nvars_)); }

int MultiLaurent::min_degree(int i) const {
  if (terms_.empty()) return 0;
  int d = std::numeric_limits<int>::max();
  for (const auto& t : terms_) d = std::min(d, t.exps[i]);
  return d;
}

int MultiLaurent::max_degree(int i) const {
  if (terms_.empty()) return 0;
  int d = std::numeric_limits<int>::min();
  for (const auto& t : terms_) d = std::max(d, t.exps[i]);
  return d;
}

void MultiLaurent::check_same_ring(const MultiLaurent& o, const char* what) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument(std::string(what) + ": mismatched variable counts");
}

MultiLaurent& MultiLaurent::operator+=(const MultiLaurent& o) {
  check_same_ring(o, "add");
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->exps < b->exps)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->exps < a->exps) {
      out.push_back(*b++);
    } else {
      BigRat c = a->coeff + b->coeff;
      if (c != 0) out.push_back({a->exps, std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

MultiLaurent& MultiLaurent::operator-=(const MultiLaurent& o) { return *this += -o; }

MultiLaurent MultiLaurent::operator-() const {
  MultiLaurent r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

MultiLaurent& MultiLaurent::operator*=(const BigRat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

MultiLaurent operator*(const MultiLaurent& a, const MultiLaurent& b) {
  a.check_same_ring(b, "multiply");
  MultiLaurent r(a.nvars_);
  if (a.is_zero() || b.is_zero()) return r;
  if (b.size() == 1 && b.terms_[0].exps.is_zero()) return a * b.terms_[0].coeff;
  Accumulator acc;
  acc.reserve(std::min<std::size_t>(a.size() * b.size(), std::size_t{1} << 20));
  BigRat prod;
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) {
      prod = s.coeff * t.coeff;
      acc[s.exps + t.exps] += prod;
    }
  r.terms_ = drain(acc);
  return r;
}

MultiLaurent& MultiLaurent::operator*=(const MultiLaurent& o) { return *this = *this * o; }

MultiLaurent MultiLaurent::pow(int e) const {
  if (e < 0) {
    if (terms_.size() != 1) throw std::domain_error("pow: negative power of a non-monomial");
    ExponentVector inv(nvars_);
    for (int i = 0; i < nvars_; ++i) inv[i] = -terms_[0].exps[i];
    return monomial(inv, 1 / terms_[0].coeff).pow(-e);
  }
  MultiLaurent result(nvars_, 1);
  MultiLaurent base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

MultiLaurent MultiLaurent::substitute(int i, Substitution target) const {
  if (i < 0 || i >= nvars_) throw std::out_of_range("substitute: variable index out of range");
  if (target.kind != Substitution::Kind::One) {
    if (target.var < 0 || target.var >= nvars_) throw std::out_of_range("substitute: target out of range");
    if (target.var == i) throw std::invalid_argument("substitute: target variable equals source");
  }
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    ExponentVector e = t.exps;
    const int ei = e[i];
    e[i] = 0;
    if (target.kind == Substitution::Kind::Var) e[target.var] += ei;
    if (target.kind == Substitution::Kind::InverseVar) e[target.var] -= ei;
    out.push_back({e, t.coeff});
  }
  return from_terms(nvars_, std::move(out));
}

MultiLaurent MultiLaurent::perm_apply(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != nvars_) throw std::invalid_argument("perm_apply: wrong length");
  std::vector<bool> seen(perm.size(), false);
  for (int p : perm) {
    if (p < 0 || p >= nvars_ || seen[static_cast<std::size_t>(p)])
      throw std::invalid_argument("perm_apply: not a permutation");
    seen[static_cast<std::size_t>(p)] = true;
  }
  std::vector<VarImage> images;
  for (int p : perm) images.push_back({p, 1});
  return remap(nvars_, images);
}

MultiLaurent MultiLaurent::remap(int new_nvars, std::span<const VarImage> images) const {
  if (static_cast<int>(images.size()) != nvars_) throw std::invalid_argument("remap: wrong image count");
  for (const auto& im : images)
    if (im.target >= new_nvars) throw std::out_of_range("remap: target out of range");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    ExponentVector e(new_nvars);
    for (int i = 0; i < nvars_; ++i) {
      const auto& im = images[static_cast<std::size_t>(i)];
      if (im.target < 0) continue;
      long v = e[im.target] + static_cast<long>(im.power) * t.exps[i];
      check_exponent(v);
      e[im.target] = static_cast<int>(v);
    }
    out.push_back({e, t.coeff});
  }
  return from_terms(new_nvars, std::move(out));
}

MultiLaurent MultiLaurent::invert_variables() const {
  std::vector<VarImage> images;
  for (int i = 0; i < nvars_; ++i) images.push_back({i, -1});
  return remap(nvars_, images);
}

BigRat MultiLaurent::eval(std::span<const BigRat> point) const {
  if (static_cast<int>(point.size()) != nvars_) throw std::invalid_argument("eval: wrong point dimension");
  BigRat sum = 0;
  for (const auto& t : terms_) {
    BigRat v = t.coeff;
    for (int i = 0; i < nvars_; ++i)
      if (t.exps[i] != 0) v *= ctred::pow(point[static_cast<std::size_t>(i)], t.exps[i]);
    sum += v;
  }
  return sum;
}

bool MultiLaurent::is_symmetric() const {
  if (nvars_ < 2) return true;
  // A transposition and an n-cycle generate the symmetric group.
  std::vector<int> swap(static_cast<std::size_t>(nvars_));
  std::iota(swap.begin(), swap.end(), 0);
  std::swap(swap[0], swap[1]);
  std::vector<int> cycle(static_cast<std::size_t>(nvars_));
  for (int i = 0; i < nvars_; ++i) cycle[static_cast<std::size_t>(i)] = (i + 1) % nvars_;
  return perm_apply(swap) == *this && perm_apply(cycle) == *this;
}

std::string MultiLaurent::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (std::size_t t = 0; t < terms_.size(); ++t) {
    if (t > 0) s += " + ";
    s += ctred::to_string(terms_[t].coeff);
    for (int i = 0; i < nvars_; ++i) {
      s += "*";
      s += "x" + std::to_string(i + 1) + "^" + std::to_string(terms_[t].exps[i]);
    }
  }
  return s;
}

// ---------------------------------------------------------------------------

MultiLaurent product_in_box(std::span<const MultiLaurent> factors, const ExponentVector& lo,
                            const ExponentVector& hi) {
  const int n = lo.size();
  if (hi.size() != n) throw std::invalid_argument("product_in_box: box dimension mismatch");
  for (const auto& f : factors)
    if (f.nvars() != n) throw std::invalid_argument("product_in_box: factor has wrong variable count");

  // rest_min[k][i] / rest_max[k][i]: degree range in x_i of factors k..end.
  const std::size_t m = factors.size();
  std::vector<ExponentVector> rest_min(m + 1, ExponentVector(n)), rest_max(m + 1, ExponentVector(n));
  for (std::size_t k = m; k-- > 0;) {
    for (int i = 0; i < n; ++i) {
      rest_min[k][i] = rest_min[k + 1][i] + factors[k].min_degree(i);
      rest_max[k][i] = rest_max[k + 1][i] + factors[k].max_degree(i);
    }
  }
  auto reachable = [&](const ExponentVector& e, std::size_t k) {
    for (int i = 0; i < n; ++i) {
      if (e[i] + rest_min[k][i] > hi[i]) return false;
      if (e[i] + rest_max[k][i] < lo[i]) return false;
    }
    return true;
  };

  std::vector<Term> current;
  if (reachable(ExponentVector(n), 0)) current.push_back({ExponentVector(n), 1});
  Accumulator acc;
  BigRat prod;
  for (std::size_t k = 0; k < m && !current.empty(); ++k) {
    acc.clear();
    acc.reserve(current.size() * 2);
    for (const auto& s : current)
      for (const auto& t : factors[k].terms()) {
        ExponentVector e = s.exps + t.exps;
        if (!reachable(e, k + 1)) continue;
        prod = s.coeff * t.coeff;
        acc[e] += prod;
      }
    current = drain(acc);
  }
  return MultiLaurent::from_terms(n, std::move(current));
}

MultiLaurent one_minus(const MultiLaurent& m) { return MultiLaurent(m.nvars(), 1) - m; }

}  // namespace ctred
