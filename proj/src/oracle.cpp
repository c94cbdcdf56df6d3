// Ground truth for small connected products: enumerate every labeled
// two-level structure and count orbits under the slot symmetries.
#include "propkit/combinatorics.hpp"
#include "propkit/dims.hpp"
#include "propkit/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace propkit {

namespace {

// Permutations of s letters in lexicographic order, with the effect of each
// adjacent transposition on positions (right) and on values (left).
struct PermTable {
  std::vector<std::vector<int>> right, left;  // [rank][pos]
  explicit PermTable(int s) {
    std::vector<std::vector<int>> perms;
    std::map<std::vector<int>, int> rank;
    std::vector<int> p(s);
    std::iota(p.begin(), p.end(), 0);
    do {
      rank[p] = static_cast<int>(perms.size());
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    for (const auto& q : perms) {
      std::vector<int> r, l;
      for (int pos = 0; pos + 1 < s; ++pos) {
        std::vector<int> a = q, b = q;
        std::swap(a[pos], a[pos + 1]);
        for (int& x : b) {
          if (x == pos) x = pos + 1;
          else if (x == pos + 1) x = pos;
        }
        r.push_back(rank.at(a));
        l.push_back(rank.at(b));
      }
      right.push_back(std::move(r));
      left.push_back(std::move(l));
    }
  }
};

const PermTable& perm_table(int s) {
  static std::map<int, PermTable> cache;
  auto it = cache.find(s);
  if (it == cache.end()) it = cache.emplace(s, PermTable(s)).first;
  return it->second;
}

int swap_rank(int s, int rank, int pos) { return perm_table(s).right[rank][pos]; }

// Left multiplication by the transposition (pos pos+1) on values.
int left_swap_rank(int s, int rank, int pos) { return perm_table(s).left[rank][pos]; }

struct Vertex {
  int free_legs;   // outputs for a top vertex, inputs for a bottom one
  int glued_legs;  // legs on the internal edges
  int dim;
  Action action;
};

struct DSU {
  std::vector<int> p;
  explicit DSU(std::size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

long long fact_ll(int n) {
  long long r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

// Basis index e of a vertex whose group is S_free x S_glued. For a free
// action e = r * |G| + g_free * glued! + g_glued.
int act_basis(const Vertex& v, int e, bool on_free_side, int pos) {
  if (v.action == Action::Trivial) return e;
  long long gf = fact_ll(v.free_legs), gg = fact_ll(v.glued_legs);
  long long G = gf * gg;
  long long r = e / G, g = e % G;
  int a = static_cast<int>(g / gg), b = static_cast<int>(g % gg);
  if (on_free_side) a = left_swap_rank(v.free_legs, a, pos);
  else b = left_swap_rank(v.glued_legs, b, pos);
  return static_cast<int>(r * G + static_cast<long long>(a) * gg + b);
}

bool graph_connected(const std::vector<int>& sigma, const std::vector<int>& top_of_slot,
                     const std::vector<int>& bot_of_slot, int b, int a) {
  std::vector<std::vector<int>> adj(a + b);
  for (std::size_t t = 0; t < sigma.size(); ++t) {
    int u = top_of_slot[t], v = b + bot_of_slot[sigma[t]];
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<bool> seen(a + b, false);
  std::vector<int> stack{0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v : adj[u])
      if (!seen[v]) {
        seen[v] = true;
        ++count;
        stack.push_back(v);
      }
  }
  return count == a + b;
}

// Orbits of the structures over one skeleton (vertex list with types).
void count_skeleton(const std::vector<Vertex>& tops, const std::vector<Vertex>& bots,
                    OracleResult& res, long long& budget) {
  int b = static_cast<int>(tops.size()), a = static_cast<int>(bots.size());
  std::vector<int> top_of_slot, bot_of_slot, top_off, bot_off;
  for (int i = 0; i < b; ++i) {
    top_off.push_back(static_cast<int>(top_of_slot.size()));
    top_of_slot.insert(top_of_slot.end(), tops[i].glued_legs, i);
  }
  for (int i = 0; i < a; ++i) {
    bot_off.push_back(static_cast<int>(bot_of_slot.size()));
    bot_of_slot.insert(bot_of_slot.end(), bots[i].glued_legs, i);
  }
  int N = static_cast<int>(top_of_slot.size());
  if (N > kMaxConnectedN) throw CapabilityError("oracle: too many internal edges");

  std::vector<std::vector<int>> sigmas;
  std::map<std::vector<int>, int> sigma_rank;
  std::vector<int> s(N);
  std::iota(s.begin(), s.end(), 0);
  do {
    if (graph_connected(s, top_of_slot, bot_of_slot, b, a)) {
      sigma_rank[s] = static_cast<int>(sigmas.size());
      sigmas.push_back(s);
    }
  } while (std::next_permutation(s.begin(), s.end()));
  if (sigmas.empty()) return;

  // mixed radix digits: vertex bases and leg labelings, then the wiring
  std::vector<Vertex> all = tops;
  all.insert(all.end(), bots.begin(), bots.end());
  std::vector<long long> radix;
  for (const Vertex& v : all) radix.push_back(v.dim);
  for (const Vertex& v : all) radix.push_back(fact_ll(v.free_legs));
  radix.push_back(static_cast<long long>(sigmas.size()));
  long long total = 1;
  for (long long r : radix) {
    total *= r;
    if (total > budget) throw CapabilityError("oracle: instance too large");
  }
  budget -= total;

  int V = a + b;
  // wiring moves: swapping adjacent glued legs of a vertex
  std::vector<std::vector<int>> top_move(sigmas.size(), std::vector<int>(N, -1)),
      bot_move(sigmas.size(), std::vector<int>(N, -1));
  for (std::size_t k = 0; k < sigmas.size(); ++k)
    for (int t = 0; t + 1 < N; ++t) {
      std::vector<int> sg = sigmas[k];
      std::swap(sg[t], sg[t + 1]);
      if (auto it = sigma_rank.find(sg); it != sigma_rank.end()) top_move[k][t] = it->second;
      sg = sigmas[k];
      for (int& y : sg) {
        if (y == t) y = t + 1;
        else if (y == t + 1) y = t;
      }
      if (auto it = sigma_rank.find(sg); it != sigma_rank.end()) bot_move[k][t] = it->second;
    }
  std::vector<long long> stride(radix.size(), 1);
  for (std::size_t i = radix.size() - 1; i-- > 0;) stride[i] = stride[i + 1] * radix[i + 1];

  DSU dsu(static_cast<std::size_t>(total));
  std::vector<int> d(radix.size(), 0);
  for (long long id = 0; id < total; ++id) {
    for (int v = 0; v < V; ++v) {
      const Vertex& x = all[v];
      bool is_top = v < b;
      // free legs: relabel the leg assignment together with the basis
      for (int p = 0; p + 1 < x.free_legs; ++p) {
        long long e = id + (act_basis(x, d[v], true, p) - d[v]) * stride[v] +
                      (swap_rank(x.free_legs, d[V + v], p) - d[V + v]) * stride[V + v];
        dsu.unite(static_cast<int>(id), static_cast<int>(e));
      }
      // glued legs: permute the internal wiring
      for (int p = 0; p + 1 < x.glued_legs; ++p) {
        int k = d[2 * V];
        int moved = is_top ? top_move[k][top_off[v] + p] : bot_move[k][bot_off[v - b] + p];
        long long e = id + (act_basis(x, d[v], false, p) - d[v]) * stride[v] +
                      (moved - k) * stride[2 * V];
        dsu.unite(static_cast<int>(id), static_cast<int>(e));
      }
    }
    // advance the mixed radix counter
    for (std::size_t i = radix.size(); i-- > 0;) {
      if (++d[i] < radix[i]) break;
      d[i] = 0;
    }
  }
  long long orbits = 0;
  for (long long id = 0; id < total; ++id)
    if (dsu.find(static_cast<int>(id)) == id) ++orbits;
  long long G = 1;
  for (const Vertex& v : all) G *= fact_ll(v.free_legs) * fact_ll(v.glued_legs);
  res.classes += orbits;
  res.structures += total;
  res.weighted += Rational(total, G);
}

int oracle_edge_bound(const DimTable& Q, const DimTable& P, int m, int n, int rho) {
  int best = -1;
  auto take = [&](int x) { best = best < 0 ? x : std::min(best, x); };
  if (Q.slope()) take(*Q.slope() * rho + m);
  if (P.slope()) take(*P.slope() * rho + n);
  if (Q.max_in()) take(m * *Q.max_in());
  if (P.max_out()) take(n * *P.max_out());
  if (best < 0) throw CapabilityError("oracle: cannot bound the internal edges");
  return best;
}

struct Option {
  int glued, weight, dim;
};

}  // namespace

OracleResult boxc_dims_oracle(const DimTable& Q, Action qa, const DimTable& P, Action pa, int m,
                              int n, int rho) {
  if (qa == Action::Other || pa == Action::Other)
    throw CapabilityError("oracle: only trivial or free actions are supported");
  if (m < 1 || n < 1 || m > 4 || n > 4) throw CapabilityError("oracle: m and n must lie in 1..4");
  int K = oracle_edge_bound(Q, P, m, n, rho);

  auto options = [&](const DimTable& T, Action act, int free_legs, bool top) {
    std::vector<Option> out;
    for (int g = 1; g <= K; ++g)
      for (int w = 0; w <= rho; ++w) {
        Rational d = top ? T.at(free_legs, g, w) : T.at(g, free_legs, w);
        if (d == 0) continue;
        if (boost::multiprecision::denominator(d) != 1)
          throw CapabilityError("oracle: component dimensions must be integers");
        Integer di = boost::multiprecision::numerator(d);
        if (di > 100000) throw CapabilityError("oracle: component dimension too large");
        int dv = static_cast<int>(di);
        if (act == Action::Free && dv % (fact_ll(free_legs) * fact_ll(g)) != 0)
          throw CapabilityError("oracle: dimension not divisible by the group order");
        out.push_back({g, w, dv});
      }
    return out;
  };

  OracleResult res;
  long long budget = kOracleMaxStructures;
  std::vector<std::vector<std::vector<int>>> out_parts, in_parts;
  for (const BlockTuple& lam : partitions(m))
    for (auto& p : increasing_partitions(m, lam)) out_parts.push_back(p);
  for (const BlockTuple& lam : partitions(n))
    for (auto& p : increasing_partitions(n, lam)) in_parts.push_back(p);

  for (const auto& op : out_parts) {
    std::vector<std::vector<Option>> topt;
    for (const auto& blk : op) topt.push_back(options(Q, qa, static_cast<int>(blk.size()), true));
    for (const auto& ip : in_parts) {
      std::vector<std::vector<Option>> bopt;
      for (const auto& blk : ip) bopt.push_back(options(P, pa, static_cast<int>(blk.size()), false));
      // cartesian product over the options of every vertex
      std::size_t b = op.size(), a = ip.size();
      std::vector<std::size_t> pick(a + b, 0);
      bool empty = false;
      for (std::size_t i = 0; i < b; ++i) empty |= topt[i].empty();
      for (std::size_t i = 0; i < a; ++i) empty |= bopt[i].empty();
      if (empty) continue;
      while (true) {
        int wsum = 0, ksum = 0, jsum = 0;
        std::vector<Vertex> tops, bots;
        for (std::size_t i = 0; i < b; ++i) {
          const Option& o = topt[i][pick[i]];
          wsum += o.weight;
          ksum += o.glued;
          tops.push_back({static_cast<int>(op[i].size()), o.glued, o.dim, qa});
        }
        for (std::size_t i = 0; i < a; ++i) {
          const Option& o = bopt[i][pick[b + i]];
          wsum += o.weight;
          jsum += o.glued;
          bots.push_back({static_cast<int>(ip[i].size()), o.glued, o.dim, pa});
        }
        if (wsum == rho && ksum == jsum) count_skeleton(tops, bots, res, budget);
        std::size_t i = 0;
        for (; i < a + b; ++i) {
          std::size_t lim = i < b ? topt[i].size() : bopt[i - b].size();
          if (++pick[i] < lim) break;
          pick[i] = 0;
        }
        if (i == a + b) break;
      }
    }
  }
  return res;
}

}  // namespace propkit
