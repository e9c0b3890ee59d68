#pragma once

// Exhaustive reference computations. Everything here is exponential and
// capped; nothing in the closed-form path depends on it.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "bichrom/feature_vector.hpp"
#include "bichrom/graphs.hpp"
#include "bichrom/kernel.hpp"

namespace bichrom {

enum class Constraint { bichromatic, classical };

inline const char* to_string(Constraint c) { return c == Constraint::bichromatic ? "bichromatic" : "classical"; }

inline constexpr int kMaxPartitionVertices = 13;
inline constexpr std::uint64_t kMaxColorings = 100'000'000;

/// Restricted growth string: code[0] = 0, code[i] <= 1 + max(code[0..i-1]).
/// Block count is 1 + the largest entry.
struct PartitionCode {
  std::vector<int> rgs;
  int blocks = 0;
};

inline bool is_restricted_growth(std::span<const int> rgs) {
  int mx = -1;
  for (int v : rgs) {
    if (v < 0 || v > mx + 1) return false;
    mx = std::max(mx, v);
  }
  return true;
}

/// Streams every set partition of {0..n-1} once, in lexicographic RGS order.
class SetPartitions {
 public:
  struct Sentinel {};

  class Iterator {
   public:
    using value_type = PartitionCode;
    using difference_type = std::ptrdiff_t;

    Iterator() = default;
    explicit Iterator(int n) : done_(false) {
      code_.rgs.assign(n, 0);
      prefix_max_.assign(n, 0);
      code_.blocks = 1;
    }

    const PartitionCode& operator*() const { return code_; }
    const PartitionCode* operator->() const { return &code_; }

    Iterator& operator++() {
      auto& a = code_.rgs;
      const int n = static_cast<int>(a.size());
      int i = n - 1;
      while (i > 0 && a[i] > prefix_max_[i - 1]) --i;
      if (i <= 0) {
        done_ = true;
        return *this;
      }
      ++a[i];
      prefix_max_[i] = std::max(prefix_max_[i - 1], a[i]);
      for (int j = i + 1; j < n; ++j) {
        a[j] = 0;
        prefix_max_[j] = prefix_max_[i];
      }
      code_.blocks = prefix_max_[n - 1] + 1;
      return *this;
    }
    void operator++(int) { ++*this; }

    friend bool operator==(const Iterator& it, Sentinel) { return it.done_; }

   private:
    PartitionCode code_;
    std::vector<int> prefix_max_;
    bool done_ = true;
  };

  explicit SetPartitions(int n) : n_(n) {
    if (n < 1 || n > kMaxPartitionVertices)
      throw std::out_of_range("partitions: n must be in 1.." + std::to_string(kMaxPartitionVertices) + " (got " +
                              std::to_string(n) + ")");
  }

  Iterator begin() const { return Iterator(n_); }
  Sentinel end() const { return {}; }

 private:
  int n_;
};

inline SetPartitions partitions_iter(int n) { return SetPartitions(n); }

/// Every triangle sees exactly two block labels.
inline bool is_bichromatic_valid(std::span<const int> labels, const TriangleGraph& g) {
  if (labels.size() != static_cast<std::size_t>(g.n()))
    throw std::invalid_argument("is_bichromatic_valid: labeling has " + std::to_string(labels.size()) +
                                " entries for a graph on " + std::to_string(g.n()) + " vertices");
  for (const auto& t : g.triangles()) {
    const int a = labels[t[0]], b = labels[t[1]], c = labels[t[2]];
    const int distinct = 1 + (b != a) + (c != a && c != b);
    if (distinct != 2) return false;
  }
  return true;
}

/// No edge inside a block.
inline bool is_classical_valid(std::span<const int> labels, const TriangleGraph& g) {
  if (labels.size() != static_cast<std::size_t>(g.n()))
    throw std::invalid_argument("is_classical_valid: labeling size mismatch");
  return std::none_of(g.edges().begin(), g.edges().end(),
                      [&](const Edge& e) { return labels[e.first] == labels[e.second]; });
}

inline bool is_valid(std::span<const int> labels, const TriangleGraph& g, Constraint c) {
  return c == Constraint::bichromatic ? is_bichromatic_valid(labels, g) : is_classical_valid(labels, g);
}

/// Calls fn(code) for each partition of V(g) that satisfies the constraint.
template <typename Fn>
void for_each_valid_partition(const TriangleGraph& g, Constraint c, Fn&& fn) {
  for (const auto& code : partitions_iter(g.n()))
    if (is_valid(code.rgs, g, c)) fn(code);
}

inline FeatureVector oracle_spectrum(const TriangleGraph& g, Constraint c = Constraint::bichromatic) {
  std::vector<std::uint64_t> tally(g.n(), 0);
  for_each_valid_partition(g, c, [&](const PartitionCode& code) { ++tally[code.blocks - 1]; });
  FeatureVector v(g.n());
  for (int k = 1; k <= g.n(); ++k) v.at(k) = tally[k - 1];
  return v;
}

/// Labeled colorings from a palette of k colors that satisfy the constraint.
inline Count count_colorings(const TriangleGraph& g, int k, Constraint c) {
  if (k < 0) throw std::invalid_argument("count_colorings: k must be >= 0");
  const int n = g.n();
  if (k == 0) return n == 0 ? 1 : 0;
  std::uint64_t space = 1;
  for (int i = 0; i < n; ++i) {
    space *= static_cast<std::uint64_t>(k);
    if (space > kMaxColorings)
      throw std::out_of_range("count_colorings: k^n exceeds " + std::to_string(kMaxColorings) + " (k=" +
                              std::to_string(k) + ", n=" + std::to_string(n) + ")");
  }
  std::vector<int> col(n, 0);
  std::uint64_t count = 0;
  while (true) {
    if (is_valid(col, g, c)) ++count;
    int i = n - 1;
    while (i >= 0 && col[i] == k - 1) col[i--] = 0;
    if (i < 0) break;
    ++col[i];
  }
  return count;
}

inline constexpr int kMaxPathLength = 24;

/// Independent sets of P_m grouped by the number of maximal runs in their
/// complement. Entry t (1..m) counts sets with t runs; entry 0 counts sets
/// whose complement is empty.
inline std::vector<Count> independent_set_blocks(int m) {
  if (m < 1 || m > kMaxPathLength)
    throw std::out_of_range("independent_set_blocks: m must be in 1.." + std::to_string(kMaxPathLength));
  std::vector<std::uint64_t> tally(m + 1, 0);
  for (std::uint32_t s = 0; s < (1u << m); ++s) {
    if (s & (s >> 1)) continue;
    int runs = 0;
    bool prev_out = false;
    for (int i = 0; i < m; ++i) {
      const bool out = !((s >> i) & 1u);
      if (out && !prev_out) ++runs;
      prev_out = out;
    }
    ++tally[runs];
  }
  return {tally.begin(), tally.end()};
}

}  // namespace bichrom
