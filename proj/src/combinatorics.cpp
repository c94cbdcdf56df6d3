#include "propkit/combinatorics.hpp"

#include "propkit/errors.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <string>

namespace propkit {

Permutation::Permutation(std::vector<int> word) : w_(std::move(word)) {
  std::vector<bool> seen(w_.size() + 1, false);
  for (int x : w_) {
    if (x < 1 || x > static_cast<int>(w_.size()) || seen[x])
      throw ArgumentError("not a permutation word");
    seen[x] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::compose(const Permutation& other) const {
  if (size() != other.size()) throw ArgumentError("compose: size mismatch");
  std::vector<int> w(size());
  for (int i = 1; i <= size(); ++i) w[i - 1] = (*this)(other(i));
  return Permutation(std::move(w));
}

Permutation Permutation::inverse() const {
  std::vector<int> w(size());
  for (int i = 1; i <= size(); ++i) w[(*this)(i) - 1] = i;
  return Permutation(std::move(w));
}

void validate_blocks(const BlockTuple& parts, const char* what) {
  if (parts.empty()) throw ArgumentError(std::string(what) + ": empty tuple");
  for (int p : parts)
    if (p < 1) throw ArgumentError(std::string(what) + ": parts must be >= 1");
}

int block_sum(const BlockTuple& parts) { return std::accumulate(parts.begin(), parts.end(), 0); }

Permutation block_permutation(const Permutation& tau, const BlockTuple& i_bar) {
  validate_blocks(i_bar, "block_permutation");
  if (tau.size() != static_cast<int>(i_bar.size()))
    throw ArgumentError("block_permutation: tau has " + std::to_string(tau.size()) +
                        " letters but i has " + std::to_string(i_bar.size()) + " parts");
  std::vector<int> start(i_bar.size() + 1, 1);
  for (std::size_t b = 0; b < i_bar.size(); ++b) start[b + 1] = start[b] + i_bar[b];
  Permutation inv = tau.inverse();
  std::vector<int> w;
  for (int r = 1; r <= tau.size(); ++r) {
    int blk = inv(r) - 1;
    for (int p = 0; p < i_bar[blk]; ++p) w.push_back(start[blk] + p);
  }
  return Permutation(std::move(w));
}

namespace {

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) {
    while (p[x] != x) {
      p[x] = p[p[x]];
      x = p[x];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    p[a] = b;
    return true;
  }
};

std::vector<int> block_of(const BlockTuple& parts) {
  std::vector<int> r;
  for (std::size_t b = 0; b < parts.size(); ++b) r.insert(r.end(), parts[b], static_cast<int>(b));
  return r;
}

void check_sizes(const BlockTuple& k_bar, const BlockTuple& j_bar) {
  validate_blocks(k_bar, "k");
  validate_blocks(j_bar, "j");
  if (block_sum(k_bar) != block_sum(j_bar))
    throw ArgumentError("|k| = " + std::to_string(block_sum(k_bar)) +
                        " differs from |j| = " + std::to_string(block_sum(j_bar)));
}

bool connected_raw(const std::vector<int>& w, const std::vector<int>& kb, const std::vector<int>& jb,
                   int nk, int nj) {
  UnionFind uf(nk + nj);
  int comps = nk + nj;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (uf.unite(nk + jb[i], kb[w[i] - 1])) --comps;
  return comps == 1;
}

std::mutex cc_mutex;
std::map<std::pair<BlockTuple, BlockTuple>, std::uint64_t> cc_memo;

}  // namespace

bool is_connected(const Permutation& sigma, const BlockTuple& k_bar, const BlockTuple& j_bar) {
  check_sizes(k_bar, j_bar);
  if (sigma.size() != block_sum(k_bar))
    throw ArgumentError("sigma has " + std::to_string(sigma.size()) + " letters, blocks sum to " +
                        std::to_string(block_sum(k_bar)));
  return connected_raw(sigma.word(), block_of(k_bar), block_of(j_bar),
                       static_cast<int>(k_bar.size()), static_cast<int>(j_bar.size()));
}

std::uint64_t connected_count(const BlockTuple& k_bar, const BlockTuple& j_bar) {
  check_sizes(k_bar, j_bar);
  int N = block_sum(k_bar);
  if (N > kMaxConnectedN)
    throw CapabilityError("connected_count: N = " + std::to_string(N) + " exceeds " +
                          std::to_string(kMaxConnectedN));
  BlockTuple k = k_bar, j = j_bar;
  std::sort(k.begin(), k.end());
  std::sort(j.begin(), j.end());
  auto key = std::make_pair(k, j);
  {
    std::lock_guard<std::mutex> g(cc_mutex);
    auto it = cc_memo.find(key);
    if (it != cc_memo.end()) return it->second;
  }
  std::uint64_t count = 0;
  if (k.size() == 1 || j.size() == 1) {
    // a single block on either side touches every edge
    count = 1;
    for (int i = 2; i <= N; ++i) count *= i;
  } else if (k.size() + j.size() > static_cast<std::size_t>(N) + 1) {
    count = 0;  // a connected graph needs at least (#vertices - 1) edges
  } else {
    std::vector<int> kb = block_of(k), jb = block_of(j);
    std::vector<int> w(N);
    std::iota(w.begin(), w.end(), 1);
    do {
      if (connected_raw(w, kb, jb, static_cast<int>(k.size()), static_cast<int>(j.size()))) ++count;
    } while (std::next_permutation(w.begin(), w.end()));
  }
  std::lock_guard<std::mutex> g(cc_mutex);
  cc_memo.emplace(key, count);
  return count;
}

std::vector<Permutation> connected_permutations(const BlockTuple& k_bar, const BlockTuple& j_bar) {
  check_sizes(k_bar, j_bar);
  int N = block_sum(k_bar);
  if (N > kMaxConnectedN) throw CapabilityError("connected_permutations: N too large");
  std::vector<int> kb = block_of(k_bar), jb = block_of(j_bar);
  std::vector<int> w(N);
  std::iota(w.begin(), w.end(), 1);
  std::vector<Permutation> out;
  do {
    if (connected_raw(w, kb, jb, static_cast<int>(k_bar.size()), static_cast<int>(j_bar.size())))
      out.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

namespace {

void partitions_rec(const std::vector<int>& remaining, std::vector<int> sizes,
                    std::vector<std::vector<int>>& current,
                    std::vector<std::vector<std::vector<int>>>& out) {
  if (remaining.empty()) {
    if (sizes.empty()) out.push_back(current);
    return;
  }
  // the next block must contain the smallest unused element
  int first = remaining.front();
  std::vector<int> rest(remaining.begin() + 1, remaining.end());
  std::vector<int> distinct = sizes;
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  for (int s : distinct) {
    int k = s - 1;
    if (k > static_cast<int>(rest.size())) continue;
    std::vector<int> left = sizes;
    left.erase(std::find(left.begin(), left.end(), s));
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      std::vector<int> block{first};
      std::vector<bool> used(rest.size(), false);
      for (int i : idx) {
        block.push_back(rest[i]);
        used[i] = true;
      }
      std::vector<int> rem2;
      for (std::size_t i = 0; i < rest.size(); ++i)
        if (!used[i]) rem2.push_back(rest[i]);
      current.push_back(block);
      partitions_rec(rem2, left, current, out);
      current.pop_back();
      int i = k - 1;
      while (i >= 0 && idx[i] == static_cast<int>(rest.size()) - k + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int t = i + 1; t < k; ++t) idx[t] = idx[t - 1] + 1;
    }
  }
}

void compositions_rec(int n, BlockTuple& cur, std::vector<BlockTuple>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = 1; p <= n; ++p) {
    cur.push_back(p);
    compositions_rec(n - p, cur, out);
    cur.pop_back();
  }
}

void partitions_int_rec(int n, int maxpart, BlockTuple& cur, std::vector<BlockTuple>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(n, maxpart); p >= 1; --p) {
    cur.push_back(p);
    partitions_int_rec(n - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::vector<std::vector<int>>> increasing_partitions(int n, const BlockTuple& sizes) {
  validate_blocks(sizes, "sizes");
  if (block_sum(sizes) != n)
    throw ArgumentError("block sizes sum to " + std::to_string(block_sum(sizes)) + ", expected " +
                        std::to_string(n));
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 1);
  std::vector<int> sorted = sizes;
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::vector<int>> cur;
  std::vector<std::vector<std::vector<int>>> out;
  partitions_rec(all, sorted, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PartitionPair> partition_pairs(int m, int n, const BlockTuple& out_sizes,
                                           const BlockTuple& in_sizes) {
  auto outs = increasing_partitions(m, out_sizes);
  auto ins = increasing_partitions(n, in_sizes);
  std::vector<PartitionPair> r;
  for (const auto& o : outs)
    for (const auto& i : ins) r.push_back(PartitionPair{o, i});
  return r;
}

std::vector<BlockTuple> compositions(int n) {
  std::vector<BlockTuple> out;
  if (n < 1) return out;
  BlockTuple cur;
  compositions_rec(n, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<BlockTuple> partitions(int n) {
  std::vector<BlockTuple> out;
  if (n < 1) return out;
  BlockTuple cur;
  partitions_int_rec(n, n, cur, out);
  return out;
}

}  // namespace propkit
