#include "ctred/ctcore.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace ctred {

BigInt DenominatorCounter::count(std::span<const int> v) {
  std::vector<int> w;
  w.reserve(v.size());
  for (int x : v) {
    if (x < 0) throw std::domain_error("count_denominator_solutions: negative component");
    if (x > 0) w.push_back(x);
  }
  std::sort(w.begin(), w.end());
  return count_sorted(std::move(w));
}

// Strip the vertex with the smallest budget: choose its edge multiplicities
// b_0j (sum <= v_0, the slack going to a_0), then recurse on the rest.
BigInt DenominatorCounter::count_sorted(std::vector<int> v) {
  if (v.size() <= 1) return 1;
  if (auto it = memo_.find(v); it != memo_.end()) return it->second;

  const int budget = v[0];
  const std::size_t m = v.size() - 1;
  std::vector<int> rest(v.begin() + 1, v.end());
  std::vector<int> b(m, 0);
  BigInt total = 0;

  // Odometer over b with b_j <= rest_j and sum(b) <= budget.
  int used = 0;
  while (true) {
    std::vector<int> next;
    next.reserve(m);
    for (std::size_t j = 0; j < m; ++j)
      if (rest[j] - b[j] > 0) next.push_back(rest[j] - b[j]);
    std::sort(next.begin(), next.end());
    total += count_sorted(std::move(next));

    std::size_t j = 0;
    for (; j < m; ++j) {
      if (b[j] < rest[j] && used < budget) {
        ++b[j];
        ++used;
        break;
      }
      used -= b[j];
      b[j] = 0;
    }
    if (j == m) break;
  }
  memo_.emplace(std::move(v), total);
  return total;
}

BigInt count_denominator_solutions(std::span<const int> v) {
  DenominatorCounter counter;
  return counter.count(v);
}

std::vector<int> all_active(int n) {
  std::vector<int> s(static_cast<std::size_t>(n));
  std::iota(s.begin(), s.end(), 0);
  return s;
}

namespace {

std::vector<bool> active_mask(int nvars, const std::vector<int>& active) {
  std::vector<bool> mask(static_cast<std::size_t>(nvars), false);
  for (int i : active) {
    if (i < 0 || i >= nvars) throw std::out_of_range("active index out of range");
    mask[static_cast<std::size_t>(i)] = true;
  }
  return mask;
}

BigRat sum_range(std::span<const Term> terms, const std::vector<bool>& mask, const std::vector<int>& active) {
  DenominatorCounter counter;
  BigRat sum = 0;
  std::vector<int> v(active.size());
  for (const auto& t : terms) {
    bool ok = true;
    for (int i = 0; i < t.exps.size() && ok; ++i) {
      const int e = t.exps[i];
      ok = mask[static_cast<std::size_t>(i)] ? e <= 0 : e == 0;
    }
    if (!ok) continue;
    for (std::size_t a = 0; a < active.size(); ++a) v[a] = -t.exps[active[a]];
    sum += t.coeff * counter.count(v);
  }
  return sum;
}

}  // namespace

BigRat ct_standard(const StandardCTProblem& prob, int threads) {
  const auto mask = active_mask(prob.numerator.nvars(), prob.active);
  const auto terms = prob.numerator.terms();
  threads = std::max(1, threads);
  if (threads == 1 || terms.size() < 1024) return prob.scale * sum_range(terms, mask, prob.active);

  std::vector<BigRat> partial(static_cast<std::size_t>(threads));
  std::vector<std::thread> pool;
  const std::size_t chunk = (terms.size() + threads - 1) / threads;
  for (int w = 0; w < threads; ++w) {
    const std::size_t lo = std::min(terms.size(), chunk * w);
    const std::size_t hi = std::min(terms.size(), lo + chunk);
    pool.emplace_back([&, w, lo, hi] {
      partial[static_cast<std::size_t>(w)] = sum_range(terms.subspan(lo, hi - lo), mask, prob.active);
    });
  }
  for (auto& t : pool) t.join();
  BigRat sum = 0;
  for (const auto& p : partial) sum += p;
  return prob.scale * sum;
}

BigRat ct_standard_factored(std::span<const MultiLaurent> factors, const std::vector<int>& active,
                            const BigRat& scale, int threads) {
  if (factors.empty()) throw std::invalid_argument("ct_standard_factored: no factors");
  const int n = factors.front().nvars();
  const auto mask = active_mask(n, active);
  ExponentVector lo(n), hi(n);
  for (int i = 0; i < n; ++i)
    if (mask[static_cast<std::size_t>(i)]) lo[i] = -kMaxExponent + 1;
  StandardCTProblem prob{product_in_box(factors, lo, hi), active, scale};
  return ct_standard(prob, threads);
}

BigRat ct_product(std::span<const MultiLaurent> factors) {
  if (factors.empty()) return 1;
  const int n = factors.front().nvars();
  const ExponentVector zero(n);
  return product_in_box(factors, zero, zero).ct();
}

}  // namespace ctred
