#pragma once

// Test-only reference computations, written independently of the library
// paths they check (plain recursion and factorial formulas).

#include <functional>
#include <vector>

#include "bichrom/kernel.hpp"

namespace bichrom::testing {

/// Calls fn(labels, blocks) for every set partition of {0..n-1}.
inline void each_partition(int n, const std::function<void(const std::vector<int>&, int)>& fn) {
  std::vector<int> labels;
  std::function<void(int)> rec = [&](int blocks) {
    if (static_cast<int>(labels.size()) == n) {
      fn(labels, blocks);
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      labels.push_back(b);
      rec(b == blocks ? blocks + 1 : blocks);
      labels.pop_back();
    }
  };
  rec(0);
}

inline long brute_stirling2(int n, int k) {
  if (n == 0) return k == 0 ? 1 : 0;
  long c = 0;
  each_partition(n, [&](const std::vector<int>&, int blocks) { c += blocks == k; });
  return c;
}

inline Count factorial_binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Count num = 1, den = 1;
  for (long i = 1; i <= k; ++i) {
    num *= n - k + i;
    den *= i;
  }
  return num / den;
}

inline Count naive_fib_poly(int l, long x) {
  if (l == 0) return 0;
  if (l == 1) return 1;
  return naive_fib_poly(l - 1, x) + x * naive_fib_poly(l - 2, x);
}

}  // namespace bichrom::testing
