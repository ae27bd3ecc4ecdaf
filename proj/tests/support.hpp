#pragma once

// Hand-rolled generators shared by the property tests.

#include "ctred/laurent.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace testgen {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long range(long lo, long hi) {
    return lo + static_cast<long>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  ctred::BigRat rat(long span = 9) {
    long den = range(1, span);
    return ctred::make_rat(range(-span, span), den);
  }

  ctred::BigRat nonzero_rat(long span = 9) {
    for (;;) {
      ctred::BigRat q = rat(span);
      if (q != 0) return q;
    }
  }

  ctred::MultiLaurent laurent(int nvars, int max_terms, int lo, int hi) {
    std::vector<ctred::Term> terms;
    const long count = range(0, max_terms);
    for (long t = 0; t < count; ++t) {
      ctred::ExponentVector e(nvars);
      for (int i = 0; i < nvars; ++i) e[i] = static_cast<int>(range(lo, hi));
      terms.push_back({e, rat()});
    }
    return ctred::MultiLaurent::from_terms(nvars, std::move(terms));
  }

  std::vector<int> permutation(int n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
    for (int i = n - 1; i > 0; --i) std::swap(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(range(0, i))]);
    return p;
  }

 private:
  std::mt19937_64 rng_;
};

/// Every permutation of 0..n-1 in lexicographic order.
inline std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline ctred::MultiLaurent x(int nvars, int i, int power = 1) { return ctred::MultiLaurent::variable(nvars, i, power); }
inline ctred::MultiLaurent one(int nvars) { return ctred::MultiLaurent(nvars, 1); }

}  // namespace testgen
