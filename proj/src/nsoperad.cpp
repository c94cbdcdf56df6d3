#include "propkit/nsoperad.hpp"

#include "propkit/combinatorics.hpp"
#include "propkit/errors.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace propkit {

namespace {

using Lock = std::lock_guard<std::recursive_mutex>;

int sign_of(int e) { return e % 2 ? -1 : 1; }

// Every (vertex index, child slot) whose child is a vertex.
std::vector<std::pair<std::size_t, int>> internal_edges(const std::vector<int>& code,
                                                        const ArityTable& ar) {
  std::vector<std::pair<std::size_t, int>> out;
  for (std::size_t i = 0; i < code.size(); ++i) {
    if (code[i] == kLeaf) continue;
    auto kids = child_starts(code, i, ar);
    for (std::size_t c = 0; c < kids.size(); ++c)
      if (code[kids[c]] != kLeaf) out.emplace_back(i, static_cast<int>(c));
  }
  return out;
}

std::string join_ints(const std::vector<int>& v) {
  std::ostringstream s;
  for (std::size_t i = 0; i < v.size(); ++i) s << (i ? "," : "") << v[i];
  return s.str();
}

}  // namespace

// Basis of B_s(P)_(d)(n): planar trees with s vertices, each decorated by a
// normal-form basis element of some P_(w)(a), w >= 1, weights summing to d.
struct BarBasis {
  std::vector<int> label_arity, label_weight, label_nf;
  std::map<std::tuple<int, int, int>, int> label_of;  // (arity, weight, nf) -> label
  std::vector<PlanarTree> elems;
  std::map<std::vector<int>, int> index;
};

NsOperad::NsOperad(NsQuadPresentation p) : p_(std::move(p)), ar_(p_.arity_table()) {}
NsOperad::~NsOperad() = default;

const std::vector<PlanarTree>& NsOperad::trees(int n, int d) const {
  Lock g(mu_);
  auto key = std::make_pair(n, d);
  auto it = trees_.find(key);
  if (it != trees_.end()) return it->second;
  auto ts = enumerate_labelled_trees(ar_, n, d);
  auto& pos = tree_pos_[key];
  for (std::size_t i = 0; i < ts.size(); ++i) pos[ts[i].code] = static_cast<int>(i);
  return trees_.emplace(key, std::move(ts)).first->second;
}

int NsOperad::tree_index(int n, int d, const std::vector<int>& code) const {
  Lock g(mu_);
  trees(n, d);
  const auto& pos = tree_pos_.at({n, d});
  auto it = pos.find(code);
  return it == pos.end() ? -1 : it->second;
}

std::vector<std::vector<int>> NsOperad::contexts(int n, int d) const {
  std::set<std::vector<int>> cs;
  for (const auto& t : trees(n, d))
    for (auto [u, c] : internal_edges(t.code, ar_)) cs.insert(collapse_edge(t.code, u, c, ar_).context);
  return {cs.begin(), cs.end()};
}

const RowSpace& NsOperad::ideal(int n, int d) const {
  Lock g(mu_);
  auto key = std::make_pair(n, d);
  auto it = ideal_.find(key);
  if (it != ideal_.end()) return *it->second;
  auto rs = std::make_unique<RowSpace>(static_cast<int>(trees(n, d).size()));
  if (d >= 2) {
    for (const auto& C : contexts(n, d)) {
      auto ph = std::find_if(C.begin(), C.end(), is_placeholder);
      int a = ar_(*ph);
      auto rel = p_.relations.find(a);
      if (rel == p_.relations.end()) continue;
      const auto& local = trees(a, 2);
      for (const SparseVec& r : rel->second) {
        std::map<int, Rational> row;
        for (const auto& [col, c] : r.entries()) {
          int idx = tree_index(n, d, insert_local(C, local[col].code, ar_));
          if (idx < 0) throw InvariantError("ideal: inserted tree not in basis");
          row[idx] += c;
        }
        rs->insert(SparseVec::from_map(row));
      }
    }
  }
  return *ideal_.emplace(key, std::move(rs)).first->second;
}

const std::vector<int>& NsOperad::normal_forms(int n, int d) const {
  Lock g(mu_);
  auto key = std::make_pair(n, d);
  auto it = nf_.find(key);
  if (it != nf_.end()) return it->second;
  std::vector<int> f = ideal(n, d).free_columns();
  auto& pos = nf_pos_[key];
  for (std::size_t i = 0; i < f.size(); ++i) pos[f[i]] = static_cast<int>(i);
  return nf_.emplace(key, std::move(f)).first->second;
}

SparseVec NsOperad::to_quotient(int n, int d, const SparseVec& v) const {
  Lock g(mu_);
  normal_forms(n, d);
  SparseVec r = ideal(n, d).reduce(v);
  const auto& pos = nf_pos_.at({n, d});
  std::map<int, Rational> out;
  for (const auto& [c, x] : r.entries()) out[pos.at(c)] = x;
  return SparseVec::from_map(out);
}

SparseVec NsOperad::tree_class(int n, int d, const std::vector<int>& code) const {
  int idx = tree_index(n, d, code);
  if (idx < 0) throw InvariantError("tree_class: tree not in the expected basis");
  std::map<int, Rational> m{{idx, Rational(1)}};
  return to_quotient(n, d, SparseVec::from_map(m));
}

std::map<std::vector<int>, std::vector<SparseVec>> NsOperad::contraction_rows(int n, int d) const {
  // context -> quotient coordinate -> (tree -> coefficient)
  std::map<std::vector<int>, std::map<int, std::map<int, Rational>>> acc;
  std::map<std::vector<int>, int> dims;
  const auto& ts = trees(n, d);
  for (std::size_t t = 0; t < ts.size(); ++t)
    for (auto [u, c] : internal_edges(ts[t].code, ar_)) {
      Collapse col = collapse_edge(ts[t].code, u, c, ar_);
      int a = leaf_count(col.local);
      dims[col.context] = quotient_dim(a, 2);
      SparseVec cls = tree_class(a, 2, col.local);
      for (const auto& [q, x] : cls.entries())
        acc[col.context][q][static_cast<int>(t)] += sign_of(col.between) * x;
    }
  std::map<std::vector<int>, std::vector<SparseVec>> out;
  for (const auto& [ctx, dim] : dims) {
    std::vector<SparseVec> rows(dim);
    for (const auto& [q, m] : acc[ctx]) rows[q] = SparseVec::from_map(m);
    out[ctx] = std::move(rows);
  }
  return out;
}

std::vector<ContractionMap> NsOperad::edge_contraction_maps(int n, int d) const {
  int cols = static_cast<int>(trees(n, d).size());
  std::vector<ContractionMap> maps;
  for (const auto& [ctx, rows] : contraction_rows(n, d)) {
    ContractionMap m;
    m.context = PlanarTree{ctx};
    m.local_arity = ar_(*std::find_if(ctx.begin(), ctx.end(), is_placeholder));
    m.matrix = Matrix(static_cast<int>(rows.size()), cols);
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (const auto& [c, x] : rows[r].entries()) m.matrix.at(static_cast<int>(r), c) = x;
    maps.push_back(std::move(m));
  }
  return maps;
}

const DualPiece& NsOperad::dual(int n, int d) const {
  Lock g(mu_);
  auto key = std::make_pair(n, d);
  auto it = dual_.find(key);
  if (it != dual_.end()) return it->second;
  RowSpace cons(static_cast<int>(trees(n, d).size()));
  if (d >= 2)
    for (const auto& [ctx, rows] : contraction_rows(n, d))
      for (const auto& r : rows) cons.insert(r);
  DualPiece piece;
  piece.basis = cons.kernel();
  piece.free_columns = cons.free_columns();
  piece.dim = static_cast<int>(piece.basis.size());
  return dual_.emplace(key, std::move(piece)).first->second;
}

SparseVec NsOperad::dual_coordinates(int n, int d, const SparseVec& y) const {
  const DualPiece& D = dual(n, d);
  SparseVec recon;
  std::map<int, Rational> coords;
  for (std::size_t i = 0; i < D.free_columns.size(); ++i) {
    Rational x = y.get(D.free_columns[i]);
    if (x == 0) continue;
    coords[static_cast<int>(i)] = x;
    recon.axpy(x, D.basis[i]);
  }
  if (!(recon == y))
    throw InvariantError("element is not in the span of the dual basis in arity " +
                         std::to_string(n) + ", weight " + std::to_string(d));
  return SparseVec::from_map(coords);
}

const BarBasis& NsOperad::bar_basis(int n, int d, int s) const {
  Lock g(mu_);
  auto key = std::make_tuple(n, d, s);
  auto it = bar_.find(key);
  if (it != bar_.end()) return *it->second;
  auto B = std::make_unique<BarBasis>();
  for (int a = 2; a <= n; ++a)
    for (int w = 1; w <= d; ++w) {
      int q = quotient_dim(a, w);
      for (int j = 0; j < q; ++j) {
        B->label_of[{a, w, j}] = static_cast<int>(B->label_arity.size());
        B->label_arity.push_back(a);
        B->label_weight.push_back(w);
        B->label_nf.push_back(j);
      }
    }
  if (s >= 1 && !B->label_arity.empty()) {
    ArityTable lab(B->label_arity);
    for (auto& t : enumerate_labelled_trees(lab, n, s)) {
      int w = 0;
      for (int x : t.code)
        if (x >= 0) w += B->label_weight[x];
      if (w != d) continue;
      B->index[t.code] = static_cast<int>(B->elems.size());
      B->elems.push_back(std::move(t));
    }
  }
  return *bar_.emplace(key, std::move(B)).first->second;
}

std::vector<std::string> NsOperad::bar_basis_labels(int n, int d, int s) const {
  const BarBasis& B = bar_basis(n, d, s);
  std::vector<std::string> out;
  for (const auto& t : B.elems) {
    std::vector<int> parts;
    for (int x : t.code) {
      if (x == kLeaf) {
        parts.push_back(-1);
        continue;
      }
      parts.push_back(B.label_arity[x]);
      parts.push_back(B.label_weight[x]);
      parts.push_back(B.label_nf[x]);
    }
    out.push_back("[" + join_ints(parts) + "]");
  }
  return out;
}

Matrix NsOperad::bar_codifferential(int n, int d, int s) const {
  if (s < 2) throw ArgumentError("bar_codifferential needs s >= 2");
  const BarBasis& src = bar_basis(n, d, s);
  const BarBasis& dst = bar_basis(n, d, s - 1);
  ArityTable lab(src.label_arity);
  Matrix M(static_cast<int>(dst.elems.size()), static_cast<int>(src.elems.size()));
  auto nf_code = [&](int label) {
    int a = src.label_arity[label], w = src.label_weight[label];
    return trees(a, w)[normal_forms(a, w)[src.label_nf[label]]].code;
  };
  for (std::size_t col = 0; col < src.elems.size(); ++col) {
    const auto& code = src.elems[col].code;
    for (auto [u, c] : internal_edges(code, lab)) {
      Collapse cl = collapse_edge(code, u, c, lab);
      std::size_t v = child_starts(code, u, lab)[c];
      int lu = code[u], lv = code[v];
      auto composed = graft(nf_code(lu), c, nf_code(lv));
      int a = src.label_arity[lu] + src.label_arity[lv] - 1;
      int w = src.label_weight[lu] + src.label_weight[lv];
      SparseVec cls = tree_class(a, w, composed);
      // theta acts after passing the vertices before u, then v is moved
      // next to u across the vertices in between
      int sgn = sign_of(vertices_before(code, u) + cl.between);
      auto ph = std::find_if(cl.context.begin(), cl.context.end(), is_placeholder);
      for (const auto& [j, x] : cls.entries()) {
        std::vector<int> out = cl.context;
        out[static_cast<std::size_t>(ph - cl.context.begin())] = dst.label_of.at({a, w, j});
        auto f = dst.index.find(out);
        if (f == dst.index.end()) throw InvariantError("bar differential leaves the basis");
        M.at(f->second, static_cast<int>(col)) += sgn * x;
      }
    }
  }
  return M;
}

namespace {

struct LeafDecor {
  int arity, weight, nf;  // weight 0 means the identity (arity 1)
  auto operator<=>(const LeafDecor&) const = default;
};

struct KBasisElem {
  int a, e;
  std::vector<LeafDecor> leaves;
  std::vector<int> key() const {
    std::vector<int> k{a, e};
    for (const auto& l : leaves) {
      k.push_back(l.arity);
      k.push_back(l.weight);
      k.push_back(l.nf);
    }
    return k;
  }
};

}  // namespace

ChainComplex NsOperad::koszul_complex(int n, int d) const {
  if (n < 1 || d < 1) throw ArgumentError("koszul_complex needs n >= 1 and d >= 1");
  std::vector<std::vector<KBasisElem>> basis(d + 1);
  std::vector<std::map<std::vector<int>, int>> index(d + 1);

  // decorations of the leaves: one entry per way to fill a leaf
  auto decor_options = [&](int arity, int weight) {
    std::vector<LeafDecor> out;
    if (weight == 0) {
      if (arity == 1) out.push_back({1, 0, 0});
      return out;
    }
    for (int j = 0; j < quotient_dim(arity, weight); ++j) out.push_back({arity, weight, j});
    return out;
  };

  for (int k = 0; k <= d; ++k) {
    for (int a = 1; a <= n; ++a) {
      const DualPiece& D = dual(a, k);
      if (D.dim == 0) continue;
      // distribute n leaves and weight d-k over the a inputs
      std::vector<std::vector<LeafDecor>> partial{{}};
      std::vector<std::pair<int, int>> used{{0, 0}};
      for (int slot = 0; slot < a; ++slot) {
        std::vector<std::vector<LeafDecor>> np;
        std::vector<std::pair<int, int>> nu;
        for (std::size_t i = 0; i < partial.size(); ++i) {
          auto [nn, ww] = used[i];
          int left = a - slot - 1;
          for (int ar = 1; nn + ar + left <= n; ++ar)
            for (int w = 0; ww + w <= d - k; ++w)
              for (const LeafDecor& L : decor_options(ar, w)) {
                np.push_back(partial[i]);
                np.back().push_back(L);
                nu.emplace_back(nn + ar, ww + w);
              }
        }
        partial = std::move(np);
        used = std::move(nu);
      }
      for (std::size_t i = 0; i < partial.size(); ++i) {
        if (used[i].first != n || used[i].second != d - k) continue;
        for (int e = 0; e < D.dim; ++e) {
          KBasisElem x{a, e, partial[i]};
          index[k][x.key()] = static_cast<int>(basis[k].size());
          basis[k].push_back(std::move(x));
        }
      }
    }
    // deterministic order: by key
    std::sort(basis[k].begin(), basis[k].end(),
              [](const KBasisElem& x, const KBasisElem& y) { return x.key() < y.key(); });
    index[k].clear();
    for (std::size_t i = 0; i < basis[k].size(); ++i) index[k][basis[k][i].key()] = static_cast<int>(i);
  }

  ChainComplex C;
  C.dims.resize(d + 1);
  C.maps.assign(d + 1, Matrix());
  C.labels.resize(d + 1);
  for (int k = 0; k <= d; ++k) {
    C.dims[k] = static_cast<int>(basis[k].size());
    for (const auto& x : basis[k]) C.labels[k].push_back("[" + join_ints(x.key()) + "]");
  }

  auto decor_code = [&](const LeafDecor& L) {
    if (L.weight == 0) return std::vector<int>{kLeaf};
    return trees(L.arity, L.weight)[normal_forms(L.arity, L.weight)[L.nf]].code;
  };

  for (int k = 1; k <= d; ++k) {
    Matrix M(C.dims[k - 1], C.dims[k]);
    for (std::size_t col = 0; col < basis[k].size(); ++col) {
      const KBasisElem& X = basis[k][col];
      const SparseVec& ev = dual(X.a, k).basis[X.e];
      const auto& ts = trees(X.a, k);
      // (leaf offset, generator) -> remainder combination
      std::map<std::pair<int, int>, std::map<int, Rational>> split;
      for (const auto& [t, coef] : ev.entries()) {
        const auto& code = ts[t].code;
        int nverts = vertex_count(code);
        for (std::size_t p = 0; p < code.size(); ++p) {
          if (code[p] < 0) continue;
          int r = ar_(code[p]);
          bool bottom = true;
          for (int c = 1; c <= r; ++c) bottom = bottom && code[p + c] == kLeaf;
          if (!bottom) continue;
          int after = nverts - vertices_before(code, p) - 1;
          std::vector<int> rest(code.begin(), code.begin() + static_cast<long>(p));
          rest.push_back(kLeaf);
          rest.insert(rest.end(), code.begin() + static_cast<long>(p) + r + 1, code.end());
          int idx = tree_index(X.a - r + 1, k - 1, rest);
          if (idx < 0) throw InvariantError("koszul complex: remainder tree not found");
          split[{leaves_before(code, p), code[p]}][idx] += sign_of(after) * coef;
        }
      }
      for (const auto& [og, ymap] : split) {
        auto [off, gen] = og;
        int r = ar_(gen);
        SparseVec y = SparseVec::from_map(ymap);
        if (y.empty()) continue;
        int a2 = X.a - r + 1;
        SparseVec lam = dual_coordinates(a2, k - 1, y);
        std::vector<std::vector<int>> subs;
        int an = 0, aw = 1;
        for (int i = 0; i < r; ++i) {
          const LeafDecor& L = X.leaves[off + i];
          subs.push_back(decor_code(L));
          an += L.arity;
          aw += L.weight;
        }
        auto composed = graft_all(corolla(gen, r).code, subs);
        SparseVec mu = tree_class(an, aw, composed);
        for (const auto& [e2, lx] : lam.entries())
          for (const auto& [j, mx] : mu.entries()) {
            KBasisElem Y{a2, e2, {}};
            Y.leaves.assign(X.leaves.begin(), X.leaves.begin() + off);
            Y.leaves.push_back({an, aw, j});
            Y.leaves.insert(Y.leaves.end(), X.leaves.begin() + off + r, X.leaves.end());
            auto f = index[k - 1].find(Y.key());
            if (f == index[k - 1].end()) throw InvariantError("koszul differential leaves the basis");
            M.at(f->second, static_cast<int>(col)) += lx * mx;
          }
      }
    }
    C.maps[k] = std::move(M);
  }
  C.check_d_squared();
  return C;
}

DualPiece koszul_dual_dims(const NsQuadPresentation& p, int n, int d) {
  NsOperad op(p);
  return op.dual(n, d);
}

std::vector<PlanarTree> enumerate_trees(const NsQuadPresentation& p, int n, int d) {
  return enumerate_labelled_trees(p.arity_table(), n, d);
}

long free_dims(const NsQuadPresentation& p, int n, int d) {
  return static_cast<long>(enumerate_trees(p, n, d).size());
}

int pairing_sign(const PlanarTree& t, const ArityTable& ar) {
  if (vertex_count(t.code) != 2) throw ArgumentError("pairing_sign: need a weight-2 tree");
  auto kids = child_starts(t.code, 0, ar);
  for (std::size_t i = 0; i < kids.size(); ++i)
    if (t.code[kids[i]] != kLeaf) {
      int q = ar(t.code[kids[i]]);
      return sign_of(static_cast<int>(i) * (q - 1));
    }
  throw ArgumentError("pairing_sign: malformed tree");
}

NsQuadPresentation quadratic_dual_presentation(const NsQuadPresentation& p) {
  NsQuadPresentation q;
  q.name = p.name.size() > 5 && p.name.compare(p.name.size() - 5, 5, "-dual") == 0
               ? p.name.substr(0, p.name.size() - 5)
               : p.name + "-dual";
  for (const auto& g : p.generators) {
    std::string nm = !g.name.empty() && g.name.back() == '*' ? g.name.substr(0, g.name.size() - 1)
                                                             : g.name + "*";
    q.generators.push_back({nm, g.arity});
  }
  ArityTable ar = p.arity_table();
  for (int a : p.weight_two_arities()) {
    auto ts = enumerate_labelled_trees(ar, a, 2);
    RowSpace R(static_cast<int>(ts.size()));
    auto it = p.relations.find(a);
    if (it != p.relations.end())
      for (const auto& r : it->second) {
        std::map<int, Rational> m;
        for (const auto& [c, x] : r.entries()) m[c] = x * pairing_sign(ts[c], ar);
        R.insert(SparseVec::from_map(m));
      }
    RowSpace perp(static_cast<int>(ts.size()));
    for (const auto& v : R.kernel()) perp.insert(v);
    if (perp.rank() > 0) q.relations[a] = perp.rref();
  }
  return q;
}

KoszulReport is_koszul_upto(const NsQuadPresentation& p, int N) {
  if (N > kMaxKoszulArity)
    throw CapabilityError("is_koszul_upto: arity bound " + std::to_string(N) + " exceeds " +
                          std::to_string(kMaxKoszulArity));
  KoszulReport rep;
  rep.presentation = p.name;
  rep.upto = N;
  NsOperad op(p);
  for (int n = 2; n <= N; ++n)
    for (int d = 1; d <= n - 1; ++d) {
      ChainComplex C = op.koszul_complex(n, d);
      KoszulCase kc;
      kc.n = n;
      kc.d = d;
      kc.dims = C.dims;
      kc.betti = homology_ranks(C);
      kc.acyclic = std::all_of(kc.betti.begin(), kc.betti.end(), [](int b) { return b == 0; });
      if (!kc.acyclic && rep.acyclic) {
        rep.acyclic = false;
        rep.first_failure = kc;
      }
      rep.cases.push_back(std::move(kc));
    }
  return rep;
}

namespace {
DimTable ns_table(const NsOperad& op, int max_n, int max_d, bool dual) {
  DimTable t(Window{1, max_n, max_d});
  int max_arity = 2;
  for (const auto& g : op.presentation().generators) max_arity = std::max(max_arity, g.arity);
  t.declare_slope(max_arity - 1);
  t.declare_max_out(1);
  for (int n = 1; n <= max_n; ++n)
    for (int d = 0; d <= max_d; ++d) {
      if (t.proven_zero(1, n, d)) continue;
      int c = dual ? op.dual(n, d).dim : op.quotient_dim(n, d);
      if (c) t.set(1, n, d, Rational(factorial(n) * c));
    }
  return t;
}
}  // namespace

DimTable ns_quotient_table(const NsOperad& op, int max_n, int max_d) {
  return ns_table(op, max_n, max_d, false);
}

DimTable ns_dual_table(const NsOperad& op, int max_n, int max_d) {
  return ns_table(op, max_n, max_d, true);
}

}  // namespace propkit
