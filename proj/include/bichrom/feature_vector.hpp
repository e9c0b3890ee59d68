#pragma once

#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "bichrom/kernel.hpp"

namespace bichrom {

/// [r_1, ..., r_n]: r_k counts valid partitions into exactly k blocks.
class FeatureVector {
 public:
  FeatureVector() = default;
  explicit FeatureVector(std::size_t n) : r_(n, Count(0)) {}
  explicit FeatureVector(std::vector<Count> r) : r_(std::move(r)) {}

  std::size_t n() const { return r_.size(); }

  /// 1-based access; r(k) for k > n is zero by definition.
  Count r(std::size_t k) const {
    if (k == 0) throw std::out_of_range("FeatureVector: k is 1-based");
    return k <= r_.size() ? r_[k - 1] : Count(0);
  }
  Count& at(std::size_t k) {
    if (k == 0 || k > r_.size()) throw std::out_of_range("FeatureVector: k out of range");
    return r_[k - 1];
  }

  const std::vector<Count>& values() const { return r_; }

  Count total() const {
    Count t = 0;
    for (const auto& c : r_) t += c;
    return t;
  }

  std::vector<std::string> decimal() const {
    std::vector<std::string> out;
    out.reserve(r_.size());
    for (const auto& c : r_) out.push_back(c.str());
    return out;
  }

  friend bool operator==(const FeatureVector&, const FeatureVector&) = default;

  friend std::ostream& operator<<(std::ostream& os, const FeatureVector& v) {
    os << '[';
    for (std::size_t i = 0; i < v.r_.size(); ++i) os << (i ? ", " : "") << v.r_[i];
    return os << ']';
  }

 private:
  std::vector<Count> r_;
};

}  // namespace bichrom
