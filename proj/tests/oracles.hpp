#pragma once
// Brute-force reference computations for the tests. Nothing here calls
// the library code it is used to check.

#include "propkit/rational.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <string>
#include <tuple>
#include <vector>

namespace oracle {

using propkit::Integer;
using propkit::Rational;

inline Integer fact(int n) {
  Integer r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

inline Integer choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  Integer r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline Integer catalan(int n) { return choose(2 * n, n) / (n + 1); }

// Block index of each position for parts (p_1, p_2, ...).
inline std::vector<int> owners(const std::vector<int>& parts) {
  std::vector<int> o;
  for (std::size_t b = 0; b < parts.size(); ++b) o.insert(o.end(), parts[b], static_cast<int>(b));
  return o;
}

// Counts sigma in S_N whose bipartite graph (k-blocks vs j-blocks, input i
// joined to output sigma(i)) is connected. BFS on adjacency lists.
inline long connected_brute(const std::vector<int>& k, const std::vector<int>& j) {
  int N = std::accumulate(k.begin(), k.end(), 0);
  auto ko = owners(k), jo = owners(j);
  int nk = static_cast<int>(k.size()), nv = nk + static_cast<int>(j.size());
  std::vector<int> s(N);
  std::iota(s.begin(), s.end(), 0);
  long count = 0;
  do {
    std::vector<std::vector<int>> adj(nv);
    for (int i = 0; i < N; ++i) {
      int a = nk + jo[i], b = ko[s[i]];
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
    std::vector<char> seen(nv, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : adj[v])
        if (!seen[w]) {
          seen[w] = 1;
          ++reached;
          q.push(w);
        }
    }
    if (reached == nv) ++count;
  } while (std::next_permutation(s.begin(), s.end()));
  return count;
}

// Planar trees with n leaves and d vertices, vertex arities in `arities`,
// by the root decomposition.
class TreeCount {
 public:
  explicit TreeCount(std::vector<int> arities) : ar_(std::move(arities)) {}

  Integer operator()(int n, int d) {
    if (n < 1 || d < 0) return 0;
    if (d == 0) return n == 1 ? 1 : 0;
    auto key = std::make_pair(n, d);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Integer total = 0;
    for (int a : ar_) total += forests(a, n, d - 1);
    memo_[key] = total;
    return total;
  }

 private:
  // ordered forests of `a` trees with n leaves and d vertices in total
  Integer forests(int a, int n, int d) {
    if (a == 0) return n == 0 && d == 0 ? 1 : 0;
    auto key = std::make_tuple(a, n, d);
    if (auto it = fmemo_.find(key); it != fmemo_.end()) return it->second;
    Integer total = 0;
    for (int n1 = 1; n1 <= n; ++n1)
      for (int d1 = 0; d1 <= d; ++d1) {
        Integer first = (*this)(n1, d1);
        if (first != 0) total += first * forests(a - 1, n - n1, d - d1);
      }
    fmemo_[key] = total;
    return total;
  }

  std::vector<int> ar_;
  std::map<std::pair<int, int>, Integer> memo_;
  std::map<std::tuple<int, int, int>, Integer> fmemo_;
};

// Kirkman's count of planar trees with n >= 2 leaves and d >= 1 vertices
// (arbitrary arities >= 2).
inline Integer kirkman(int n, int d) {
  if (n < 2 || d < 1) return 0;
  return choose(n - 2, d - 1) * choose(n + d - 1, d - 1) / d;
}

// All set partitions of {0..n-1}, blocks in order of their minima.
inline void set_partitions(int n, const std::function<void(const std::vector<std::vector<int>>&)>& f) {
  std::vector<std::vector<int>> blocks;
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      f(blocks);
      return;
    }
    // by index: the recursion appends to `blocks`
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      blocks[b].push_back(i);
      rec(i + 1);
      blocks[b].pop_back();
    }
    blocks.push_back({i});
    rec(i + 1);
    blocks.pop_back();
  };
  rec(0);
}

// dim (Q o P)(n) in weight rho for operads given as dim(arity, weight):
// sum over set partitions of the inputs, one P-vertex per block.
inline Rational plethysm(const std::function<Rational(int, int)>& Q,
                         const std::function<Rational(int, int)>& P, int n, int rho) {
  Rational total = 0;
  set_partitions(n, [&](const std::vector<std::vector<int>>& blocks) {
    int k = static_cast<int>(blocks.size());
    // distribute rho over the root and the k blocks
    std::function<Rational(std::size_t, int)> rec = [&](std::size_t i, int left) -> Rational {
      if (i == blocks.size()) return Q(k, left);
      Rational s = 0;
      for (int w = 0; w <= left; ++w) {
        Rational p = P(static_cast<int>(blocks[i].size()), w);
        if (p != 0) s += p * rec(i + 1, left - w);
      }
      return s;
    };
    total += rec(0, rho);
  });
  return total;
}

// dim S(M)(m, n, rho): unordered collections of pieces (A_i, B_i) with the
// A_i partitioning the outputs and the B_i the inputs.
inline Rational free_concatenation(const std::function<Rational(int, int, int)>& M, int m, int n,
                                   int rho) {
  Rational total = 0;
  set_partitions(m, [&](const std::vector<std::vector<int>>& outs) {
    set_partitions(n, [&](const std::vector<std::vector<int>>& ins) {
      if (outs.size() != ins.size()) return;
      std::vector<int> perm(ins.size());
      std::iota(perm.begin(), perm.end(), 0);
      do {
        std::function<Rational(std::size_t, int)> rec = [&](std::size_t i, int left) -> Rational {
          if (i == outs.size()) return left == 0 ? Rational(1) : Rational(0);
          Rational s = 0;
          for (int w = 0; w <= left; ++w) {
            Rational v = M(static_cast<int>(outs[i].size()), static_cast<int>(ins[perm[i]].size()), w);
            if (v != 0) s += v * rec(i + 1, left - w);
          }
          return s;
        };
        total += rec(0, rho);
      } while (std::next_permutation(perm.begin(), perm.end()));
    });
  });
  return total;
}

// tau_i by hand: block tau^{-1}(1) first, then tau^{-1}(2), ...
inline std::vector<int> block_word(const std::vector<int>& tau, const std::vector<int>& sizes) {
  std::vector<int> start(sizes.size(), 1);
  for (std::size_t b = 1; b < sizes.size(); ++b) start[b] = start[b - 1] + sizes[b - 1];
  std::vector<int> inv(tau.size());
  for (std::size_t i = 0; i < tau.size(); ++i) inv[tau[i] - 1] = static_cast<int>(i);
  std::vector<int> w;
  for (std::size_t p = 0; p < tau.size(); ++p) {
    int b = inv[p];
    for (int i = 0; i < sizes[b]; ++i) w.push_back(start[b] + i);
  }
  return w;
}

}  // namespace oracle
