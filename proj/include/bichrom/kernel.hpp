#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace bichrom {

/// Arbitrary-precision integer. Every public count is nonnegative; the signed
/// representation is only exploited inside alternating sums.
using Count = boost::multiprecision::cpp_int;
using BigInt = boost::multiprecision::cpp_int;

/// Converts the result of signed arithmetic into a Count, rejecting negatives.
inline Count checked_count(const BigInt& value, const char* what) {
  if (value < 0) {
    throw std::logic_error(std::string(what) + ": negative count " + value.str());
  }
  return value;
}

inline Count pow2(unsigned e) {
  Count v = 1;
  v <<= e;
  return v;
}

/// Lazily grown memo tables for the combinatorial kernels.
///
/// Rows are appended, never rewritten, so a value read at capacity N stays the
/// same after growth. Growth takes an exclusive lock; lookups take a shared
/// lock and return copies, so one instance may be shared between threads.
class KernelTables {
 public:
  KernelTables() = default;
  KernelTables(const KernelTables&) = delete;
  KernelTables& operator=(const KernelTables&) = delete;

  /// C(n, k); zero whenever k < 0, n < 0 or n < k.
  Count binomial(long n, long k) {
    if (k < 0 || n < 0 || n < k) return 0;
    ensure(static_cast<std::size_t>(n));
    std::shared_lock lock(mu_);
    return binomial_[n][k];
  }

  Count stirling2(long n, long k) {
    require_nonneg(n, "stirling2: n");
    require_nonneg(k, "stirling2: k");
    if (k > n) return n == 0 && k == 0 ? 1 : 0;
    ensure(static_cast<std::size_t>(n));
    std::shared_lock lock(mu_);
    return stirling2_[n][k];
  }

  Count bell(long n) {
    require_nonneg(n, "bell: n");
    ensure(static_cast<std::size_t>(n));
    std::shared_lock lock(mu_);
    return bell_[n];
  }

  /// F_0 = 0, F_1 = 1.
  Count fibonacci(long m) {
    require_nonneg(m, "fibonacci: m");
    ensure(static_cast<std::size_t>(m));
    std::shared_lock lock(mu_);
    return fibonacci_[m];
  }

  /// F_l(x) with F_0(x) = 0, F_1(x) = 1, F_{l+1}(x) = F_l(x) + x F_{l-1}(x).
  Count fibonacci_poly(long l, long x) {
    require_nonneg(l, "fibonacci_poly: l");
    if (x < 1) throw std::invalid_argument("fibonacci_poly: x must be >= 1 (got " + std::to_string(x) + ")");
    {
      std::shared_lock lock(mu_);
      auto it = fib_poly_.find(x);
      if (it != fib_poly_.end() && static_cast<std::size_t>(l) < it->second.size()) return it->second[l];
    }
    std::unique_lock lock(mu_);
    auto& col = fib_poly_[x];
    if (col.empty()) col = {Count(0), Count(1)};
    if (static_cast<std::size_t>(l) < col.size()) return col[l];
    std::size_t want = std::max<std::size_t>(static_cast<std::size_t>(l) + 1, 2 * col.size());
    while (col.size() < want) {
      const std::size_t i = col.size();
      col.push_back(col[i - 1] + x * col[i - 2]);
    }
    return col[l];
  }

  /// Rows 0..n of every linear/triangular table are filled after this call.
  void ensure(std::size_t n) {
    {
      std::shared_lock lock(mu_);
      if (n < rows_) return;
    }
    std::unique_lock lock(mu_);
    if (n < rows_) return;
    grow_to(std::max<std::size_t>(n + 1, 2 * rows_));
  }

  std::size_t capacity() const {
    std::shared_lock lock(mu_);
    return rows_;
  }

  /// Overwrites one Stirling cell without touching its dependents. Exists so
  /// that verification code can be exercised against a corrupted table.
  void corrupt_stirling2_for_testing(std::size_t n, std::size_t k, const Count& value) {
    ensure(n);
    std::unique_lock lock(mu_);
    if (k > n) throw std::out_of_range("corrupt_stirling2_for_testing: k > n");
    stirling2_[n][k] = value;
  }

 private:
  static void require_nonneg(long v, const char* what) {
    if (v < 0) throw std::invalid_argument(std::string(what) + " must be >= 0 (got " + std::to_string(v) + ")");
  }

  void grow_to(std::size_t rows) {
    for (std::size_t n = rows_; n < rows; ++n) {
      std::vector<Count> b(n + 1), s(n + 1);
      b[0] = b[n] = 1;
      for (std::size_t k = 1; k < n; ++k) b[k] = binomial_[n - 1][k - 1] + binomial_[n - 1][k];
      if (n == 0) {
        s[0] = 1;
      } else {
        s[0] = 0;
        for (std::size_t k = 1; k <= n; ++k) {
          Count v = stirling2_[n - 1].size() > k ? Count(k * stirling2_[n - 1][k]) : Count(0);
          s[k] = v + stirling2_[n - 1][k - 1];
        }
      }
      Count row_sum = 0;
      for (const auto& c : s) row_sum += c;
      binomial_.push_back(std::move(b));
      stirling2_.push_back(std::move(s));
      bell_.push_back(std::move(row_sum));
      if (n < 2) {
        fibonacci_.push_back(Count(n));
      } else {
        fibonacci_.push_back(fibonacci_[n - 1] + fibonacci_[n - 2]);
      }
    }
    rows_ = rows;
  }

  mutable std::shared_mutex mu_;
  std::size_t rows_ = 0;
  std::vector<std::vector<Count>> binomial_;
  std::vector<std::vector<Count>> stirling2_;
  std::vector<Count> bell_;
  std::vector<Count> fibonacci_;
  std::map<long, std::vector<Count>> fib_poly_;
};

/// k (k-1) ... (k-j+1); 1 for j = 0, 0 for j > k.
inline Count falling_factorial(long k, long j) {
  if (k < 0 || j < 0) throw std::invalid_argument("falling_factorial: arguments must be >= 0");
  if (j > k) return 0;
  Count v = 1;
  for (long i = 0; i < j; ++i) v *= (k - i);
  return v;
}

/// Number of independent sets of the path P_m whose complement has exactly t
/// maximal runs: C(m-t, t-1) + 2 C(m-t-1, t-1) + C(m-t-2, t-1).
inline Count a_coeff(long m, long t, KernelTables& tables) {
  if (m < 1) throw std::invalid_argument("a_coeff: m must be >= 1 (got " + std::to_string(m) + ")");
  return tables.binomial(m - t, t - 1) + 2 * tables.binomial(m - t - 1, t - 1) +
         tables.binomial(m - t - 2, t - 1);
}

/// A_r = F_m(r) + 2 F_{m-1}(r) + F_{m-2}(r).
inline Count big_a(long m, long r, KernelTables& tables) {
  if (m < 2) throw std::invalid_argument("big_a: m must be >= 2 (got " + std::to_string(m) + ")");
  if (r < 1) throw std::invalid_argument("big_a: r must be >= 1 (got " + std::to_string(r) + ")");
  return tables.fibonacci_poly(m, r) + 2 * tables.fibonacci_poly(m - 1, r) + tables.fibonacci_poly(m - 2, r);
}

/// Floating-point A_r through the roots of t^2 - t - r. Validation only.
///
/// Returns nullopt once any intermediate leaves the double range; for r <= 4
/// that happens past m ~ 750, while the 1e-9 relative agreement with big_a is
/// only claimed for m <= 40.
inline std::optional<double> big_a_binet(long m, long r) {
  if (m < 2) throw std::invalid_argument("big_a_binet: m must be >= 2");
  if (r < 1) throw std::invalid_argument("big_a_binet: r must be >= 1");
  const double root = std::sqrt(1.0 + 4.0 * static_cast<double>(r));
  const double alpha = (1.0 + root) / 2.0;
  const double beta = (1.0 - root) / 2.0;
  const double e = static_cast<double>(m - 2);
  const double value = (std::pow(alpha, e) * (alpha + 1) * (alpha + 1) -
                        std::pow(beta, e) * (beta + 1) * (beta + 1)) /
                       (alpha - beta);
  if (!std::isfinite(value)) return std::nullopt;
  return value;
}

}  // namespace bichrom
