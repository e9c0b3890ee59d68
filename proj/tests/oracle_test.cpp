#include <gtest/gtest.h>

#include <set>

#include "bichrom/kernel.hpp"
#include "bichrom/oracle.hpp"
#include "brute_force.hpp"

namespace bichrom {
namespace {

FeatureVector fv(std::vector<long> v) {
  std::vector<Count> c(v.begin(), v.end());
  return FeatureVector(c);
}

TEST(Partitions, CountsAndOrder) {
  KernelTables t;
  std::size_t n3 = 0;
  std::vector<std::vector<int>> seen;
  for (const auto& p : partitions_iter(3)) {
    ++n3;
    seen.push_back(p.rgs);
  }
  EXPECT_EQ(n3, 5u);
  EXPECT_EQ(seen, (std::vector<std::vector<int>>{{0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {0, 1, 1}, {0, 1, 2}}));
  std::size_t n1 = 0;
  for (const auto& p : partitions_iter(1)) {
    EXPECT_EQ(p.blocks, 1);
    ++n1;
  }
  EXPECT_EQ(n1, 1u);
  EXPECT_THROW(partitions_iter(14), std::out_of_range);
  EXPECT_THROW(partitions_iter(0), std::out_of_range);
}

TEST(Partitions, ExhaustiveValidityUpToTen) {
  KernelTables t;
  for (int n = 1; n <= 10; ++n) {
    std::set<std::vector<int>> distinct;
    std::vector<long> per_k(n + 1, 0);
    for (const auto& p : partitions_iter(n)) {
      ASSERT_TRUE(is_restricted_growth(p.rgs));
      ASSERT_EQ(p.blocks, *std::max_element(p.rgs.begin(), p.rgs.end()) + 1);
      distinct.insert(p.rgs);
      ++per_k[p.blocks];
    }
    EXPECT_EQ(Count(distinct.size()), t.bell(n)) << n;
    for (int k = 1; k <= n; ++k) EXPECT_EQ(per_k[k], testing::brute_stirling2(n, k));
  }
  std::size_t b10 = 0;
  for (const auto& p : partitions_iter(10)) b10 += p.blocks > 0;
  EXPECT_EQ(b10, 115975u);
}

TEST(BichromaticValidity, Triangle) {
  const auto k3 = build_theta(3);
  EXPECT_TRUE(is_bichromatic_valid(std::vector<int>{0, 1, 1}, k3));
  EXPECT_FALSE(is_bichromatic_valid(std::vector<int>{0, 1, 2}, k3));
  EXPECT_FALSE(is_bichromatic_valid(std::vector<int>{0, 0, 0}, k3));
  EXPECT_THROW(is_bichromatic_valid(std::vector<int>{0, 1}, k3), std::invalid_argument);
}

TEST(OracleSpectrum, PublishedVectors) {
  EXPECT_EQ(oracle_spectrum(build_theta(5)), fv({0, 9, 3, 1, 0}));
  EXPECT_EQ(oracle_spectrum(build_fan(5)), fv({0, 8, 4, 0, 0}));
  EXPECT_EQ(oracle_spectrum(build_fan(6)), fv({0, 13, 11, 1, 0, 0}));
  EXPECT_EQ(oracle_spectrum(build_fan(7)), fv({0, 21, 27, 5, 0, 0, 0}));
}

TEST(OracleSpectrum, DiamondBothModes) {
  const auto diamond = build_two_tree(parse_two_tree_seq("4;0-1"));
  // only {0,1}{2}{3} survives at k = 3
  EXPECT_EQ(oracle_spectrum(diamond), fv({0, 5, 1, 0}));
  EXPECT_EQ(oracle_spectrum(build_fan(4), Constraint::classical), fv({0, 0, 1, 1}));
}

TEST(OracleSpectrum, CapIsEnforced) { EXPECT_THROW(oracle_spectrum(build_fan(14)), std::out_of_range); }

TEST(CountColorings, Examples) {
  EXPECT_EQ(count_colorings(build_theta(3), 2, Constraint::bichromatic), 6);
  EXPECT_EQ(count_colorings(build_theta(3), 3, Constraint::classical), 6);
  EXPECT_EQ(count_colorings(build_theta(5), 2, Constraint::bichromatic), 18);
  EXPECT_EQ(count_colorings(build_fan(5), 3, Constraint::bichromatic), 72);
  EXPECT_EQ(count_colorings(build_fan(5), 0, Constraint::bichromatic), 0);
  EXPECT_THROW(count_colorings(build_fan(12), 5, Constraint::bichromatic), std::out_of_range);
}

TEST(IndependentSetBlocks, Examples) {
  auto m4 = independent_set_blocks(4);
  EXPECT_EQ(m4, (std::vector<Count>{0, 4, 4, 0, 0}));
  EXPECT_EQ(independent_set_blocks(2), (std::vector<Count>{0, 3, 0}));
  EXPECT_EQ(independent_set_blocks(1), (std::vector<Count>{1, 1}));
  EXPECT_THROW(independent_set_blocks(25), std::out_of_range);
}

TEST(IndependentSetBlocks, TotalIsFibonacci) {
  KernelTables t;
  for (int m = 1; m <= 20; ++m) {
    Count s = 0;
    for (const auto& c : independent_set_blocks(m)) s += c;
    EXPECT_EQ(s, t.fibonacci(m + 2));
  }
}

}  // namespace
}  // namespace bichrom
