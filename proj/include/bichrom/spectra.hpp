#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "bichrom/feature_vector.hpp"
#include "bichrom/graphs.hpp"
#include "bichrom/kernel.hpp"

namespace bichrom {

// Closed forms for theta graphs (book graphs) and fan graphs under the
// bichromatic triangle constraint. Fan values are canonically computed by the
// a_{m,t} x Stirling expansion; the r_2..r_5 corollaries are independent
// routes kept for cross-checking.

/// r_1 = 0, r_2 = 2^{n-2} + 1, r_k = S(n-2, k-1) for 3 <= k <= n-1, r_n = 0.
inline FeatureVector theta_spectrum(int n, KernelTables& tables) {
  require_two_tree_size(n, "theta_spectrum");
  const int spokes = n - 2;
  FeatureVector v(n);
  v.at(1) = 0;
  v.at(2) = pow2(spokes) + 1;
  for (int k = 3; k <= n - 1; ++k) v.at(k) = tables.stirling2(spokes, k - 1);
  v.at(n) = 0;
  return v;
}

/// 2^{n-2} + B_{n-2}.
inline Count theta_total(int n, KernelTables& tables) {
  require_two_tree_size(n, "theta_total");
  return pow2(n - 2) + tables.bell(n - 2);
}

/// F_{n+1}.
inline Count fan_r2(int n, KernelTables& tables) {
  require_two_tree_size(n, "fan_r2");
  return tables.fibonacci(n + 1);
}

/// sum_{t=k-1}^{m} a_{m,t} S(t, k-1) with m = n-1.
inline Count fan_rk(int n, int k, KernelTables& tables) {
  require_two_tree_size(n, "fan_rk");
  if (k < 1) throw std::invalid_argument("fan_rk: k must be >= 1 (got " + std::to_string(k) + ")");
  if (k == 1 || k >= n) return 0;
  const int m = n - 1;
  Count sum = 0;
  for (int t = k - 1; t <= m; ++t) sum += a_coeff(m, t, tables) * tables.stirling2(t, k - 1);
  return sum;
}

inline FeatureVector fan_spectrum(int n, KernelTables& tables) {
  require_two_tree_size(n, "fan_spectrum");
  FeatureVector v(n);
  for (int k = 1; k <= n; ++k) v.at(k) = fan_rk(n, k, tables);
  return v;
}

/// 3 * 2^{n-3} - F_{n+1}.
inline Count fan_r3_closed(int n, KernelTables& tables) {
  require_two_tree_size(n, "fan_r3_closed");
  return checked_count(BigInt(3 * pow2(n - 3)) - tables.fibonacci(n + 1), "fan_r3_closed");
}

namespace detail {

inline Count exact_quotient(const BigInt& numerator, const BigInt& divisor, const char* what) {
  if (numerator % divisor != 0)
    throw std::logic_error(std::string(what) + ": " + numerator.str() + " is not divisible by " + divisor.str());
  return checked_count(numerator / divisor, what);
}

}  // namespace detail

/// (A_3 - 2 A_2 + A_1) / 2 with m = n-1.
inline Count fan_r4_closed(int n, KernelTables& tables) {
  if (n < 4) throw std::invalid_argument("fan_r4_closed: n must be >= 4 (got " + std::to_string(n) + ")");
  const int m = n - 1;
  BigInt s = BigInt(big_a(m, 3, tables)) - 2 * big_a(m, 2, tables) + big_a(m, 1, tables);
  return detail::exact_quotient(s, 2, "fan_r4_closed");
}

/// (A_4 - 3 A_3 + 3 A_2 - A_1) / 6 with m = n-1.
inline Count fan_r5_closed(int n, KernelTables& tables) {
  if (n < 5) throw std::invalid_argument("fan_r5_closed: n must be >= 5 (got " + std::to_string(n) + ")");
  const int m = n - 1;
  BigInt s = BigInt(big_a(m, 4, tables)) - 3 * big_a(m, 3, tables) + 3 * big_a(m, 2, tables) - big_a(m, 1, tables);
  return detail::exact_quotient(s, 6, "fan_r5_closed");
}

/// sum_t a_{m,t} B_t with m = n-1.
inline Count fan_total(int n, KernelTables& tables) {
  require_two_tree_size(n, "fan_total");
  const int m = n - 1;
  Count sum = 0;
  for (int t = 1; t <= m; ++t) sum += a_coeff(m, t, tables) * tables.bell(t);
  return sum;
}

/// Coefficients of x(x-1)(x-2)^{n-2} in the falling-factorial basis, i.e.
/// partition counts into independent sets shared by every 2-tree on n
/// vertices. Obtained from forward differences at x = 0..n:
/// r_j = (1/j!) sum_i (-1)^{j-i} C(j,i) P(i).
inline FeatureVector classical_spectrum(int n) {
  require_two_tree_size(n, "classical_spectrum");
  auto poly = [n](long x) {
    BigInt v = BigInt(x) * (x - 1);
    for (int i = 0; i < n - 2; ++i) v *= (x - 2);
    return v;
  };
  std::vector<BigInt> values(n + 1);
  for (int x = 0; x <= n; ++x) values[x] = poly(x);
  FeatureVector out(n);
  BigInt factorial = 1;
  for (int j = 1; j <= n; ++j) {
    factorial *= j;
    BigInt diff = 0;
    BigInt c = 1;  // C(j, i)
    for (int i = 0; i <= j; ++i) {
      diff += ((j - i) % 2 ? -c : c) * values[i];
      c = c * (j - i) / (i + 1);
    }
    out.at(j) = detail::exact_quotient(diff, factorial, "classical_spectrum");
  }
  return out;
}

/// sum_j r_j k^{(j)}: number of labeled k-colorings that realise the vector.
inline Count eval_coloring_polynomial(const FeatureVector& v, int k) {
  if (k < 0) throw std::invalid_argument("eval_coloring_polynomial: k must be >= 0");
  Count sum = 0;
  for (std::size_t j = 1; j <= v.n(); ++j) sum += v.r(j) * falling_factorial(k, static_cast<long>(j));
  return sum;
}

}  // namespace bichrom
