#include "ctred/reduction.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace ctred {

int PartialMatching::singletons() const {
  return static_cast<int>(std::count_if(blocks.begin(), blocks.end(), [](const Block& b) { return b.is_singleton(); }));
}

bool PartialMatching::is_full(int n) const {
  std::vector<int> hits(static_cast<std::size_t>(n), 0);
  auto mark = [&](int i) {
    if (i < 0 || i >= n) return false;
    return ++hits[static_cast<std::size_t>(i)] == 1;
  };
  for (const auto& b : blocks) {
    if (!mark(b.first)) return false;
    if (b.second && !mark(*b.second)) return false;
  }
  return std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
}

Gratifying Gratifying::from_polynomial(const MultiLaurent& p) {
  return {p.nvars(), all_active(p.nvars()), p.invert_variables(), {}};
}

StandardCTProblem to_standard(const Gratifying& g) {
  MultiLaurent num = g.numer;
  for (int i : g.active)
    for (int j : g.active)
      if (i != j) num *= one_minus(MultiLaurent::variable(g.nvars, i) * MultiLaurent::variable(g.nvars, j, -1));
  return {std::move(num), g.active, 1};
}

Gratifying pf_branch(const Gratifying& g, const Block& block) {
  if (g.active.empty() || block.first != g.active.front())
    throw std::invalid_argument("pf_branch: block must start at the smallest active index");
  const int n = g.nvars;
  const int i = block.first;
  Gratifying out;
  out.nvars = n;
  out.matching = g.matching;
  out.matching.blocks.push_back(block);

  if (block.is_singleton()) {
    // A_0 = Q (1 - x_i) at x_i = 1.
    out.numer = g.numer.substitute(i, Substitution::one());
    for (int j : g.active) {
      if (j == i) continue;
      out.active.push_back(j);
      out.numer *= one_minus(MultiLaurent::variable(n, j, -1));
    }
    return out;
  }

  const int r = *block.second;
  if (r == i || !std::binary_search(g.active.begin(), g.active.end(), r))
    throw std::invalid_argument("pf_branch: partner is not active");
  // A_r = Q (1 - x_i x_r) at x_i = 1/x_r; x_r becomes a spectator.
  const MultiLaurent xr = MultiLaurent::variable(n, r);
  const MultiLaurent xr_inv = MultiLaurent::variable(n, r, -1);
  MultiLaurent one_plus_xr = MultiLaurent(n, 1) + xr;
  out.numer = g.numer.substitute(i, Substitution::inverse_of(r)) * (one_plus_xr * one_plus_xr * xr_inv);
  for (int j : g.active) {
    if (j == i || j == r) continue;
    out.active.push_back(j);
    const MultiLaurent xj_inv = MultiLaurent::variable(n, j, -1);
    out.numer *= one_minus(xr_inv * xj_inv) * one_minus(xr * xj_inv);
  }
  return out;
}

std::vector<Branch> pf_step(const Gratifying& g, bool prune_second_singleton) {
  if (g.active.empty()) throw std::invalid_argument("pf_step: no active variable");
  const int i = g.active.front();
  std::vector<Branch> out;
  if (!(prune_second_singleton && g.matching.singletons() >= 1)) {
    Block b{i, std::nullopt};
    out.push_back({b, pf_branch(g, b)});
  }
  for (std::size_t t = 1; t < g.active.size(); ++t) {
    Block b{i, g.active[t]};
    out.push_back({b, pf_branch(g, b)});
  }
  return out;
}

namespace {

void matchings_rec(int n, std::vector<bool>& used, PartialMatching& cur, bool singleton_used,
                   std::vector<PartialMatching>& out) {
  int i = 0;
  while (i < n && used[static_cast<std::size_t>(i)]) ++i;
  if (i == n) {
    out.push_back(cur);
    return;
  }
  used[static_cast<std::size_t>(i)] = true;
  if (!singleton_used) {
    cur.blocks.push_back({i, std::nullopt});
    matchings_rec(n, used, cur, true, out);
    cur.blocks.pop_back();
  }
  for (int r = i + 1; r < n; ++r) {
    if (used[static_cast<std::size_t>(r)]) continue;
    used[static_cast<std::size_t>(r)] = true;
    cur.blocks.push_back({i, r});
    matchings_rec(n, used, cur, singleton_used, out);
    cur.blocks.pop_back();
    used[static_cast<std::size_t>(r)] = false;
  }
  used[static_cast<std::size_t>(i)] = false;
}

BigRat ct_via_pf_rec(const Gratifying& g, bool prune) {
  if (g.active.empty()) return g.numer.ct();
  BigRat sum = 0;
  for (const auto& br : pf_step(g, prune)) sum += ct_via_pf_rec(br.next, prune);
  return sum;
}

}  // namespace

std::vector<PartialMatching> enumerate_matchings(int n) {
  if (n < 1) throw std::invalid_argument("enumerate_matchings: n must be positive");
  std::vector<PartialMatching> out;
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  PartialMatching cur;
  matchings_rec(n, used, cur, false, out);
  return out;
}

MultiLaurent q_matching(const Gratifying& g0, const PartialMatching& m) {
  if (!m.is_full(g0.nvars)) throw std::invalid_argument("q_matching: matching is not full");
  if (m.singletons() > 1) throw std::invalid_argument("q_matching: more than one singleton block");
  std::vector<Block> blocks = m.blocks;
  for (auto& b : blocks)
    if (b.second && *b.second < b.first) std::swap(b.first, *b.second);
  std::sort(blocks.begin(), blocks.end(), [](const Block& a, const Block& b) { return a.first < b.first; });
  Gratifying g = g0;
  for (const auto& b : blocks) g = pf_branch(g, b);
  return g.numer;
}

BigRat ct_via_pf(const Gratifying& g0, bool prune_second_singleton) {
  return ct_via_pf_rec(g0, prune_second_singleton);
}

// ---------------------------------------------------------------------------
// B_k and B-bar_k

namespace {

MultiLaurent vandermonde_part(int k) {
  MultiLaurent r(k, 1);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      const MultiLaurent xi = MultiLaurent::variable(k, i), xj = MultiLaurent::variable(k, j);
      r *= (xi - xj) * one_minus(xi * xj);
    }
  return r;
}

template <typename Entry>
MultiLaurent det_by_permutations(int k, Entry entry) {
  std::vector<int> perm(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) perm[static_cast<std::size_t>(i)] = i;
  MultiLaurent sum(k);
  do {
    int inversions = 0;
    for (int a = 0; a < k; ++a)
      for (int b = a + 1; b < k; ++b)
        if (perm[static_cast<std::size_t>(a)] > perm[static_cast<std::size_t>(b)]) ++inversions;
    MultiLaurent term(k, sign_pow(inversions));
    for (int i = 0; i < k; ++i) term *= entry(i, perm[static_cast<std::size_t>(i)] + 1);
    sum += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum;
}

}  // namespace

MultiLaurent bbar_det(int k) {
  return det_by_permutations(k, [k](int i, int j) {
    return MultiLaurent::variable(k, i, j - 1) + MultiLaurent::variable(k, i, -j);
  });
}

MultiLaurent bfun_det(int k) {
  return det_by_permutations(k, [k](int i, int j) {
    return MultiLaurent::variable(k, i, -j) - MultiLaurent::variable(k, i, j);
  });
}

MultiLaurent bbar(int k) {
  if (k < 0) throw std::invalid_argument("bbar: negative k");
  MultiLaurent r = vandermonde_part(k);
  for (int i = 0; i < k; ++i)
    r *= (MultiLaurent(k, 1) + MultiLaurent::variable(k, i)) * MultiLaurent::variable(k, i, -k);
  if (k <= 4 && r != bbar_det(k)) throw std::logic_error("bbar: product and determinant forms disagree");
  return r;
}

MultiLaurent bfun(int k) {
  if (k < 0) throw std::invalid_argument("bfun: negative k");
  MultiLaurent r = vandermonde_part(k);
  for (int i = 0; i < k; ++i)
    r *= one_minus(MultiLaurent::variable(k, i, 2)) * MultiLaurent::variable(k, i, -k);
  if (k <= 4 && r != bfun_det(k)) throw std::logic_error("bfun: product and determinant forms disagree");
  return r;
}

// ---------------------------------------------------------------------------
// Reduction theorem

TheoremValue reduce_theorem_both(const MultiLaurent& p) {
  const int n = p.nvars();
  if (n < 1) throw std::invalid_argument("reduce_theorem: need at least one variable");
  if (!p.is_symmetric()) throw std::invalid_argument("reduce_theorem: P is not symmetric");
  const int k = n / 2;

  // x_i -> x_i, x_{k+i} -> 1/x_i, and x_{2k+1} -> 1 when n is odd.
  std::vector<VarImage> images(static_cast<std::size_t>(n));
  for (int i = 0; i < k; ++i) {
    images[static_cast<std::size_t>(i)] = {i, 1};
    images[static_cast<std::size_t>(k + i)] = {i, -1};
  }
  if (n % 2 == 1) images[static_cast<std::size_t>(2 * k)] = {-1, 1};
  const MultiLaurent reduced = p.remap(k, images);

  TheoremValue v;
  if (n % 2 == 0) {
    const MultiLaurent bb = bbar(k);
    MultiLaurent xprod(k, 1), shifted(k, 1);
    for (int i = 0; i < k; ++i) {
      xprod *= MultiLaurent::variable(k, i);
      shifted *= MultiLaurent::variable(k, i, i + 1) + MultiLaurent::variable(k, i, -i);
    }
    const std::vector<MultiLaurent> primed{reduced, bb, bb, xprod};
    const std::vector<MultiLaurent> unprimed{reduced, bb, shifted};
    v.primed = BigRat(double_factorial(2 * k - 1)) * ct_product(primed);
    v.unprimed = make_rat(factorial(2 * k), BigInt(1) << k) * ct_product(unprimed);
  } else {
    const MultiLaurent b = bfun(k);
    MultiLaurent shifted(k, 1);
    for (int i = 0; i < k; ++i)
      shifted *= MultiLaurent::variable(k, i, -(i + 1)) - MultiLaurent::variable(k, i, i + 1);
    const std::vector<MultiLaurent> primed{reduced, b, b};
    const std::vector<MultiLaurent> unprimed{reduced, b, shifted};
    v.primed = BigRat(sign_pow(k) * double_factorial(2 * k + 1)) * ct_product(primed);
    v.unprimed = make_rat(factorial(2 * k + 1), BigInt(1) << k) * sign_pow(k) * ct_product(unprimed);
  }
  return v;
}

BigRat reduce_theorem(const MultiLaurent& p) {
  TheoremValue v = reduce_theorem_both(p);
  if (v.primed != v.unprimed) throw std::logic_error("reduce_theorem: primed and unprimed forms disagree");
  return v.primed;
}

BigRat corollary_determinant(const Poly& p, int n) {
  if (n < 1) throw std::invalid_argument("corollary_determinant: n must be positive");
  const int k = n / 2;
  const MultiLaurent px = MultiLaurent::univariate(1, 0, p);
  const MultiLaurent pp = px * px.invert_variables();
  auto x = [](int e) { return MultiLaurent::variable(1, 0, e); };
  ExactMatrix a(static_cast<std::size_t>(k), static_cast<std::size_t>(k));
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= k; ++j) {
      const MultiLaurent shift = (n % 2 == 0) ? x(i + j - 1) + x(i - j) : x(i - j) - x(i + j);
      a(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = (shift * pp).ct();
    }
  const BigRat d = det(a);
  return n % 2 == 0 ? d : poly_eval(p, 1) * d;
}

MultiLaurent random_symmetric_polynomial(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto draw = [&rng](int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); };
  MultiLaurent p(n);
  const int orbits = draw(1, 3);
  for (int o = 0; o < orbits; ++o) {
    std::vector<int> e(static_cast<std::size_t>(n));
    for (auto& v : e) v = draw(0, 3);
    const int c = draw(1, 5);
    std::sort(e.begin(), e.end());
    do {
      p += MultiLaurent::monomial(ExponentVector(e), c);
    } while (std::next_permutation(e.begin(), e.end()));
  }
  return p;
}

MultiLaurent product_one_plus_x(int n, int m) {
  MultiLaurent r(n, 1);
  for (int i = 0; i < n; ++i) r *= (MultiLaurent(n, 1) + MultiLaurent::variable(n, i)).pow(m);
  return r;
}

}  // namespace ctred
