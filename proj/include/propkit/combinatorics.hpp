#pragma once

#include <cstdint>
#include <vector>

namespace propkit {

// One-line form: word[i-1] = sigma(i), values 1..N.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> word);  // validates
  static Permutation identity(int n);

  int size() const { return static_cast<int>(w_.size()); }
  int operator()(int i) const { return w_[i - 1]; }
  const std::vector<int>& word() const { return w_; }

  // (this o other)(i) = this(other(i))
  Permutation compose(const Permutation& other) const;
  Permutation inverse() const;

  bool operator==(const Permutation& o) const { return w_ == o.w_; }
  bool operator<(const Permutation& o) const { return w_ < o.w_; }

 private:
  std::vector<int> w_;
};

// A composition k = (k_1, ..., k_b) of N, all parts >= 1.
using BlockTuple = std::vector<int>;

void validate_blocks(const BlockTuple& parts, const char* what);
int block_sum(const BlockTuple& parts);

struct PartitionPair {
  std::vector<std::vector<int>> out_parts;
  std::vector<std::vector<int>> in_parts;
  bool operator==(const PartitionPair& o) const = default;
};

// tau_{i}: blocks of sizes i moved as wholes. The result lists the
// positions of block tau^{-1}(1), then block tau^{-1}(2), and so on.
Permutation block_permutation(const Permutation& tau, const BlockTuple& i_bar);

// Outputs grouped by k_bar, inputs by j_bar; input position i is wired to
// output position sigma(i).
bool is_connected(const Permutation& sigma, const BlockTuple& k_bar, const BlockTuple& j_bar);

// #S^c_{k,j}. Exhaustive over S_N for N <= 8, memoized up to reordering of
// the parts on each side. Larger N throws CapabilityError.
std::uint64_t connected_count(const BlockTuple& k_bar, const BlockTuple& j_bar);
constexpr int kMaxConnectedN = 8;

// All connected permutations, in lexicographic order of their words.
std::vector<Permutation> connected_permutations(const BlockTuple& k_bar, const BlockTuple& j_bar);

// Set partitions of {1..n} whose multiset of block sizes equals `sizes`,
// blocks listed by increasing minimum. Lexicographic in the block list.
std::vector<std::vector<std::vector<int>>> increasing_partitions(int n, const BlockTuple& sizes);

std::vector<PartitionPair> partition_pairs(int m, int n, const BlockTuple& out_sizes,
                                           const BlockTuple& in_sizes);

// Every composition of n (ordered, parts >= 1), lexicographic.
std::vector<BlockTuple> compositions(int n);
// Every partition of n as a nonincreasing tuple, lexicographic descending.
std::vector<BlockTuple> partitions(int n);

}  // namespace propkit
