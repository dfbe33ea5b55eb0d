#pragma once

// Test-only brute-force references. Nothing here calls into the code paths
// under test: partitions come from labelings [n] -> [k], determinants from
// cofactor expansion, permutations from std::next_permutation.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using Blocks = std::vector<std::vector<int>>;

/// Every ordered set partition of [n] with all block sizes divisible by d,
/// produced by running over all maps [n] -> [k] and keeping the surjective
/// ones with admissible fibre sizes.
inline std::vector<Blocks> d_divisible_partitions(int n, int d) {
  std::vector<Blocks> out;
  if (n == 0) {
    out.push_back({});
    return out;
  }
  for (int k = 1; k * d <= n; ++k) {
    std::vector<int> label(n, 0);
    while (true) {
      std::vector<int> sizes(k, 0);
      for (int x : label) ++sizes[x];
      if (std::all_of(sizes.begin(), sizes.end(), [d](int s) { return s > 0 && s % d == 0; })) {
        Blocks blocks(k);
        for (int e = 0; e < n; ++e) blocks[label[e]].push_back(e + 1);
        out.push_back(std::move(blocks));
      }
      int pos = 0;
      while (pos < n && ++label[pos] == k) label[pos++] = 0;
      if (pos == n) break;
    }
  }
  return out;
}

inline long signed_sum(int n, int d) {
  long s = 0;
  for (const auto& b : d_divisible_partitions(n, d)) s += b.size() % 2 == 0 ? 1 : -1;
  return s;
}

inline long count_d_alternating(int n, int d) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  long count = 0;
  do {
    bool ok = true;
    for (int i = 1; i < n && ok; ++i) ok = (w[i - 1] > w[i]) == (i % d == 0);
    count += ok;
  } while (std::next_permutation(w.begin(), w.end()));
  return count;
}

/// Cofactor expansion along the first row.
inline mpq_class laplace_det(const std::vector<std::vector<mpq_class>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  mpq_class total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<mpq_class>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<mpq_class> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(a[i][k]);
      minor.push_back(std::move(row));
    }
    const mpq_class term = a[0][j] * laplace_det(minor);
    if (j % 2 == 0)
      total += term;
    else
      total -= term;
  }
  return total;
}

inline mpz_class fact(unsigned n) {
  mpz_class r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace oracle
