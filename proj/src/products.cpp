#include "propkit/combinatorics.hpp"
#include "propkit/dims.hpp"
#include "propkit/errors.hpp"

#include <algorithm>
#include <map>

namespace propkit {

namespace {

struct VertexType {
  int outs, ins, weight;
  Rational scaled;  // dim / (outs! ins!)
};

// A multiset of vertex types, stored as a nondecreasing list of indices.
struct Level {
  BlockTuple glued;  // the legs facing the other level, in list order
  int weight = 0;
  Rational coeff;    // prod scaled / prod multiplicity!
};

// Collects multisets of types whose `free` legs sum to `target` and whose
// weight is at most rho. `free_of` picks the leg facing outward.
template <class Free, class Glued>
void levels_rec(const std::vector<VertexType>& types, std::size_t start, int remaining, int edges_left,
                int weight_left, std::vector<int>& chosen, Free free_of, Glued glued_of,
                std::vector<Level>& out) {
  if (remaining == 0) {
    Level L;
    L.coeff = 1;
    int run = 1;
    for (std::size_t i = 0; i < chosen.size(); ++i) {
      const VertexType& t = types[chosen[i]];
      L.glued.push_back(glued_of(t));
      L.weight += t.weight;
      L.coeff *= t.scaled;
      if (i > 0 && chosen[i] == chosen[i - 1]) {
        ++run;
        L.coeff /= run;
      } else {
        run = 1;
      }
    }
    out.push_back(std::move(L));
    return;
  }
  for (std::size_t t = start; t < types.size(); ++t) {
    const VertexType& v = types[t];
    if (free_of(v) > remaining || glued_of(v) > edges_left || v.weight > weight_left) continue;
    chosen.push_back(static_cast<int>(t));
    levels_rec(types, t, remaining - free_of(v), edges_left - glued_of(v), weight_left - v.weight,
               chosen, free_of, glued_of, out);
    chosen.pop_back();
  }
}

Rational inv_fact(int a, int b) {
  return Rational(1) / Rational(factorial(a) * factorial(b));
}

}  // namespace

int edge_bound(const DimTable& Q, const DimTable& P, int m, int n, int rho) {
  std::vector<int> b;
  if (Q.slope()) b.push_back(*Q.slope() * rho + m);
  if (P.slope()) b.push_back(*P.slope() * rho + n);
  if (Q.slope() && P.slope()) b.push_back((std::max(*Q.slope(), *P.slope()) * rho + m + n) / 2);
  if (Q.max_in()) b.push_back(m * *Q.max_in());
  if (P.max_out()) b.push_back(n * *P.max_out());
  if (b.empty())
    throw CapabilityError("cannot bound the number of internal edges: neither factor declares "
                          "a support bound");
  return *std::min_element(b.begin(), b.end());
}


Rational boxc_entry(const DimTable& Q, const DimTable& P, int m, int n, int rho,
                    std::optional<int> top_weight) {
  if (m < 1 || n < 1 || rho < 0) return 0;
  int Nmax = edge_bound(Q, P, m, n, rho);
  std::vector<VertexType> tops, bots;
  for (int l = 1; l <= m; ++l)
    for (int k = 1; k <= Nmax; ++k)
      for (int w = 0; w <= rho; ++w) {
        Rational d = Q.at(l, k, w);
        if (d != 0) tops.push_back({l, k, w, d * inv_fact(l, k)});
      }
  for (int j = 1; j <= Nmax; ++j)
    for (int i = 1; i <= n; ++i)
      for (int w = 0; w <= rho; ++w) {
        Rational d = P.at(j, i, w);
        if (d != 0) bots.push_back({j, i, w, d * inv_fact(j, i)});
      }
  std::vector<Level> top_levels, bot_levels;
  std::vector<int> chosen;
  levels_rec(
      tops, 0, m, Nmax, rho, chosen, [](const VertexType& v) { return v.outs; },
      [](const VertexType& v) { return v.ins; }, top_levels);
  levels_rec(
      bots, 0, n, Nmax, rho, chosen, [](const VertexType& v) { return v.ins; },
      [](const VertexType& v) { return v.outs; }, bot_levels);

  std::map<std::pair<int, int>, std::vector<const Level*>> bot_by;
  for (const Level& b : bot_levels) bot_by[{block_sum(b.glued), b.weight}].push_back(&b);

  Rational total = 0;
  for (const Level& t : top_levels) {
    if (top_weight && t.weight != *top_weight) continue;
    auto it = bot_by.find({block_sum(t.glued), rho - t.weight});
    if (it == bot_by.end()) continue;
    for (const Level* b : it->second) {
      std::uint64_t c = connected_count(t.glued, b->glued);
      if (c == 0) continue;
      total += Rational(Integer(c)) * t.coeff * b->coeff;
    }
  }
  return total * Rational(factorial(m) * factorial(n));
}

DimTable boxc_dims(const DimTable& Q, const DimTable& P, Window w) {
  DimTable out(w);
  if (Q.slope() && P.slope()) out.declare_slope(std::max(*Q.slope(), *P.slope()));
  if (P.max_out() && *P.max_out() == 1 && Q.max_out()) out.declare_max_out(*Q.max_out());
  if (Q.max_in() && *Q.max_in() == 1 && P.max_in()) out.declare_max_in(*P.max_in());
  for (int m = 1; m <= w.m; ++m)
    for (int n = 1; n <= w.n; ++n)
      for (int r = 0; r <= w.rho; ++r) {
        if (out.proven_zero(m, n, r)) continue;
        Rational v = boxc_entry(Q, P, m, n, r);
        if (v != 0) out.set(m, n, r, v);
      }
  return out;
}

namespace {

void pieces_rec(const std::vector<std::tuple<int, int, int, Rational>>& pieces, std::size_t start,
                int m, int n, int rho, int run, Rational acc, Rational& total) {
  if (m == 0 && n == 0 && rho == 0) {
    total += acc;
    return;
  }
  if (m == 0 || n == 0) return;
  for (std::size_t p = start; p < pieces.size(); ++p) {
    const auto& [pm, pn, pr, d] = pieces[p];
    if (pm > m || pn > n || pr > rho) continue;
    int r = (p == start) ? run + 1 : 1;
    Rational next = acc * d * inv_fact(pm, pn) / r;
    pieces_rec(pieces, p, m - pm, n - pn, rho - pr, r, next, total);
  }
}

}  // namespace

DimTable sym_exp_dims(const DimTable& M, Window w) {
  std::vector<std::tuple<int, int, int, Rational>> pieces;
  for (int m = 1; m <= w.m; ++m)
    for (int n = 1; n <= w.n; ++n)
      for (int r = 0; r <= w.rho; ++r) {
        Rational d = M.at(m, n, r);
        if (d != 0) pieces.emplace_back(m, n, r, d);
      }
  DimTable out(w);
  for (int m = 1; m <= w.m; ++m)
    for (int n = 1; n <= w.n; ++n)
      for (int r = 0; r <= w.rho; ++r) {
        Rational total = 0;
        // `run` counts repeats of pieces[start]; the first pick starts a run
        for (std::size_t p = 0; p < pieces.size(); ++p) {
          const auto& [pm, pn, pr, d] = pieces[p];
          if (pm > m || pn > n || pr > r) continue;
          pieces_rec(pieces, p, m - pm, n - pn, r - pr, 1, d * inv_fact(pm, pn), total);
        }
        total *= Rational(factorial(m) * factorial(n));
        if (total != 0) out.set(m, n, r, total);
      }
  return out;
}

DimTable box_dims(const DimTable& Q, const DimTable& P, Window w) {
  return sym_exp_dims(boxc_dims(Q, P, w), w);
}

Rational euler_koszul(const DimTable& P, const DimTable& Pdual, int m, int n, int d) {
  if (d < 0) throw ArgumentError("negative weight");
  Rational e = 0;
  for (int k = 0; k <= d; ++k) {
    Rational term = boxc_entry(Pdual, P, m, n, d, k);
    if (k % 2) e -= term;
    else e += term;
  }
  return e;
}

}  // namespace propkit
