#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"

#include "propkit/combinatorics.hpp"
#include "propkit/errors.hpp"

#include <set>

using namespace propkit;

TEST_CASE("permutation basics") {
  Permutation s({2, 3, 1});
  CHECK(s(1) == 2);
  CHECK(s.compose(s.inverse()) == Permutation::identity(3));
  // (s o t)(i) = s(t(i))
  Permutation t({1, 3, 2});
  CHECK(s.compose(t).word() == std::vector<int>{2, 1, 3});
  CHECK_THROWS_AS(Permutation({1, 1, 2}), ArgumentError);
  CHECK_THROWS_AS(Permutation({0, 1}), ArgumentError);
}

TEST_CASE("block permutation") {
  CHECK(block_permutation(Permutation::identity(3), {2, 1, 4}) == Permutation::identity(7));
  CHECK(block_permutation(Permutation({2, 1}), {1, 2}).word() == std::vector<int>{2, 3, 1});
  CHECK(block_permutation(Permutation({2, 1}), {2, 1}).word() == std::vector<int>{3, 1, 2});
  CHECK_THROWS_AS(block_permutation(Permutation({2, 1}), {1, 1, 1}), ArgumentError);

  // against the hand-written reading, every tau in S_3 and a few sizes
  for (const BlockTuple& sizes : std::vector<BlockTuple>{{1, 1, 1}, {2, 1, 3}, {3, 2, 1}, {1, 4, 2}}) {
    std::vector<int> tau{1, 2, 3};
    do {
      CHECK(block_permutation(Permutation(tau), sizes).word() == oracle::block_word(tau, sizes));
    } while (std::next_permutation(tau.begin(), tau.end()));
  }
}

TEST_CASE("is_connected on the worked examples") {
  Permutation s({1, 3, 2, 4});
  CHECK(is_connected(s, {2, 2}, {2, 2}));
  CHECK_FALSE(is_connected(s, {1, 1, 2}, {2, 1, 1}));
  CHECK(is_connected(Permutation({3, 1, 2}), {3}, {1, 1, 1}));
  CHECK_THROWS_AS(is_connected(s, {2, 1}, {2, 2}), ArgumentError);
}

TEST_CASE("connected_count against brute force") {
  CHECK(connected_count({3}, {1, 1, 1}) == 6);
  CHECK(connected_count({1, 1}, {1, 1}) == 0);
  CHECK(connected_count({1, 1}, {2}) == 2);
  CHECK_THROWS_AS(connected_count({1, 2}, {2}), ArgumentError);
  for (int N = 1; N <= 5; ++N)
    for (const auto& k : compositions(N))
      for (const auto& j : compositions(N))
        CHECK(static_cast<long>(connected_count(k, j)) == oracle::connected_brute(k, j));
}

TEST_CASE("connected_count is invariant under reordering parts") {
  CHECK(connected_count({1, 2, 3}, {2, 4}) == connected_count({3, 1, 2}, {4, 2}));
  CHECK(connected_count({2, 2, 1}, {1, 4}) == connected_count({1, 2, 2}, {4, 1}));
}

TEST_CASE("connected count beyond the capability bound") {
  CHECK_THROWS_AS(connected_count({9}, {9}), CapabilityError);
}

TEST_CASE("block closure of connectivity") {
  // relabelling both sides by block permutations keeps connectivity; the
  // block word sends new positions to old ones, hence the inverse on top
  BlockTuple k{1, 2}, j{2, 1};
  std::vector<int> w{1, 2, 3};
  do {
    Permutation sigma(w);
    Permutation tk = block_permutation(Permutation({2, 1}), k);
    Permutation nj = block_permutation(Permutation({2, 1}), j);
    BlockTuple k2{2, 1}, j2{1, 2};
    CHECK(is_connected(sigma, k, j) == is_connected(tk.inverse().compose(sigma).compose(nj), k2, j2));
  } while (std::next_permutation(w.begin(), w.end()));
}

TEST_CASE("connected permutations listing") {
  auto v = connected_permutations({2, 2}, {2, 2});
  CHECK(v.size() == connected_count({2, 2}, {2, 2}));
  CHECK(std::is_sorted(v.begin(), v.end()));
  for (const auto& s : v) CHECK(is_connected(s, {2, 2}, {2, 2}));
}

TEST_CASE("compositions and partitions") {
  CHECK(compositions(4).size() == 8);
  CHECK(compositions(3) == std::vector<BlockTuple>{{1, 1, 1}, {1, 2}, {2, 1}, {3}});
  CHECK(partitions(4) == std::vector<BlockTuple>{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}});
  CHECK(partitions(7).size() == 15);
}

TEST_CASE("partition pairs") {
  auto one = partition_pairs(2, 2, {2}, {2});
  REQUIRE(one.size() == 1);
  CHECK(one[0].out_parts == std::vector<std::vector<int>>{{1, 2}});
  auto two = partition_pairs(2, 1, {1, 1}, {1});
  REQUIRE(two.size() == 1);
  CHECK(two[0].out_parts == std::vector<std::vector<int>>{{1}, {2}});
  CHECK(increasing_partitions(3, {1, 2}).size() == 3);
  CHECK_THROWS_AS(partition_pairs(3, 2, {1, 1}, {2}), ArgumentError);

  // counted by brute force over set partitions
  for (int n = 1; n <= 6; ++n) {
    std::map<std::multiset<int>, long> by_shape;
    oracle::set_partitions(n, [&](const std::vector<std::vector<int>>& blocks) {
      std::multiset<int> shape;
      for (const auto& b : blocks) shape.insert(static_cast<int>(b.size()));
      ++by_shape[shape];
    });
    for (const auto& lam : partitions(n)) {
      std::multiset<int> shape(lam.begin(), lam.end());
      auto parts = increasing_partitions(n, lam);
      CHECK(static_cast<long>(parts.size()) == by_shape[shape]);
      for (const auto& p : parts)
        for (std::size_t i = 1; i < p.size(); ++i) CHECK(p[i - 1].front() < p[i].front());
    }
  }
}
