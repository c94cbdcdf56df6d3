#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"

#include "propkit/chain_complex.hpp"
#include "propkit/errors.hpp"
#include "propkit/nsoperad.hpp"
#include "propkit/poincare.hpp"

#include <set>

#ifndef PROPKIT_DATA_DIR
#define PROPKIT_DATA_DIR "data"
#endif

using namespace propkit;

namespace {

NsQuadPresentation load(const std::string& name) {
  return load_presentation(std::string(PROPKIT_DATA_DIR) + "/presentations/" + name + ".json");
}

int kernel_dim(const Matrix& m) { return m.cols - rank_bareiss(m); }

}  // namespace

TEST_CASE("planar tree codes") {
  ArityTable ar({2, 3});
  PlanarTree c = corolla(0, 2);
  CHECK(c.code == std::vector<int>{0, kLeaf, kLeaf});
  auto g = graft(c.code, 1, corolla(1, 3).code);
  CHECK(well_formed(g, ar));
  CHECK(leaf_count(g) == 4);
  CHECK(vertex_count(g) == 2);
  CHECK(graft_all(c.code, {leaf_tree().code, corolla(1, 3).code}) == g);
  CHECK_FALSE(well_formed({0, kLeaf}, ar));
}

TEST_CASE("enumeration: binary trees are Catalan") {
  NsQuadPresentation as = load("as");
  CHECK(enumerate_trees(as, 3, 2).size() == 2);
  CHECK(free_dims(as, 1, 0) == 1);
  CHECK(enumerate_trees(as, 2, 0).empty());
  for (int n = 1; n <= 8; ++n) {
    CHECK(free_dims(as, n, n - 1) == oracle::catalan(n - 1));
    CHECK(free_dims(as, n, n - 2) == 0);
  }
}

TEST_CASE("enumeration: no duplicates, sorted, round trip") {
  NsQuadPresentation p = load("dend");
  for (int n = 1; n <= 5; ++n) {
    auto ts = enumerate_trees(p, n, n - 1);
    std::set<PlanarTree> uniq(ts.begin(), ts.end());
    CHECK(uniq.size() == ts.size());
    CHECK(std::is_sorted(ts.begin(), ts.end()));
    for (const auto& t : ts) CHECK(tree_from_json(tree_to_json(t, p), p) == t);
  }
}

TEST_CASE("enumeration: all arities satisfies the root recursion") {
  NsQuadPresentation p = all_arity_free_presentation(8);
  oracle::TreeCount count({2, 3, 4, 5, 6, 7, 8});
  long total4 = 0, total5 = 0;
  for (int d = 0; d <= 4; ++d) total4 += free_dims(p, 4, d);
  for (int d = 0; d <= 5; ++d) total5 += free_dims(p, 5, d);
  CHECK(total4 == 11);
  CHECK(total5 == 45);
  for (int n = 1; n <= 8; ++n)
    for (int d = 0; d < n; ++d) {
      CHECK(free_dims(p, n, d) == count(n, d));
      if (n >= 2 && d >= 1) CHECK(free_dims(p, n, d) == oracle::kirkman(n, d));
    }
}

TEST_CASE("presentation JSON round trip") {
  for (const char* name : {"as", "dend", "dias", "free", "degenerate", "totass3"}) {
    NsQuadPresentation p = load(name);
    NsQuadPresentation q = parse_presentation(presentation_to_json(p));
    CHECK(q.name == p.name);
    CHECK(q.generators.size() == p.generators.size());
    CHECK(q.relations == p.relations);
  }
  CHECK_THROWS_AS(parse_presentation(R"({"name": "x", "generators": [{"name": "m", "arity": 1}]})"),
                  ArgumentError);
  CHECK_THROWS_AS(parse_presentation("{"), ArgumentError);
}

TEST_CASE("relation ranks") {
  CHECK(load("as").relation_rank(3) == 1);
  CHECK(load("dend").relation_rank(3) == 3);
  CHECK(load("dias").relation_rank(3) == 5);
  CHECK(load("free").relation_rank(3) == 0);
  CHECK(load("degenerate").relation_rank(3) == 2);
}

TEST_CASE("edge contraction maps") {
  NsOperad as(load("as"));
  auto maps = as.edge_contraction_maps(3, 2);
  REQUIRE(maps.size() == 1);
  CHECK(rank_bareiss(maps[0].matrix) == 1);

  NsOperad deg(load("degenerate"));
  for (const auto& m : deg.edge_contraction_maps(3, 2)) CHECK(m.matrix.is_zero());

  NsOperad fr(load("free"));
  auto fm = fr.edge_contraction_maps(3, 2);
  REQUIRE(fm.size() == 1);
  CHECK(rank_bareiss(fm[0].matrix) == 2);
  CHECK(fm[0].matrix.rows == 2);
}

TEST_CASE("quotient dims") {
  NsOperad as(load("as")), dend(load("dend")), dias(load("dias"));
  for (int n = 2; n <= 6; ++n) {
    CHECK(as.quotient_dim(n, n - 1) == 1);
    CHECK(dend.quotient_dim(n, n - 1) == oracle::catalan(n));
    CHECK(dias.quotient_dim(n, n - 1) == n);
  }
}

TEST_CASE("Koszul dual dims") {
  NsQuadPresentation as = load("as");
  for (int n = 2; n <= 6; ++n)
    for (int d = 0; d <= 5; ++d) CHECK(koszul_dual_dims(as, n, d).dim == (d == n - 1 ? 1 : 0));
  NsOperad dend(load("dend")), dias(load("dias"));
  for (int n = 2; n <= 6; ++n) {
    CHECK(dend.dual(n, n - 1).dim == n);
    CHECK(dias.dual(n, n - 1).dim == oracle::catalan(n));
  }
  NsOperad fr(load("free"));
  CHECK(fr.dual(2, 1).dim == 1);
  CHECK(fr.dual(4, 1).dim == 1);
  for (int n = 3; n <= 5; ++n) CHECK(fr.dual(n, 2).dim == 0);
  // the dual basis lies in the kernel of every contraction
  for (const auto& m : dend.edge_contraction_maps(4, 3))
    for (const auto& v : dend.dual(4, 3).basis)
      for (int i = 0; i < m.matrix.rows; ++i) {
        Rational s = 0;
        for (const auto& [c, x] : v.entries()) s += m.matrix.at(i, c) * x;
        CHECK(s == 0);
      }
}

TEST_CASE("degenerate presentation") {
  NsOperad deg(load("degenerate"));
  CHECK(deg.quotient_dim(3, 2) == 0);
  for (int n = 2; n <= 6; ++n) CHECK(deg.dual(n, n - 1).dim == oracle::catalan(n - 1));
  KoszulReport r = is_koszul_upto(load("degenerate"), 4);
  CHECK(r.upto == 4);
  CHECK(r.cases.size() == 6);
}

TEST_CASE("quadratic dual presentation") {
  for (const char* name : {"as", "dend", "dias", "free", "degenerate", "totass3"}) {
    NsQuadPresentation p = load(name);
    NsQuadPresentation d = quadratic_dual_presentation(p);
    NsQuadPresentation dd = quadratic_dual_presentation(d);
    for (int a : p.weight_two_arities()) {
      long f2 = static_cast<long>(enumerate_trees(p, a, 2).size());
      CHECK(p.relation_rank(a) + d.relation_rank(a) == f2);
      RowSpace r(static_cast<int>(f2)), rr(static_cast<int>(f2));
      for (auto v : p.relations[a]) r.insert(v);
      for (auto v : dd.relations[a]) rr.insert(v);
      CHECK_MESSAGE(r.same_span(rr), name);
    }
  }
  CHECK(quadratic_dual_presentation(load("dend")).relation_rank(3) == 5);
  CHECK(quadratic_dual_presentation(load("free")).relation_rank(3) == 2);
}

TEST_CASE("dual presentation quotient matches the kernel dual (binary)") {
  for (const char* name : {"as", "dend", "dias"}) {
    NsOperad op(load(name));
    NsOperad shriek(quadratic_dual_presentation(load(name)));
    for (int n = 2; n <= 5; ++n) CHECK(shriek.quotient_dim(n, n - 1) == op.dual(n, n - 1).dim);
  }
}

TEST_CASE("bar codifferential squares to zero") {
  for (const char* name : {"as", "dend"}) {
    NsOperad op(load(name));
    for (int n = 3; n <= 5; ++n)
      for (int s = 3; s <= std::min(4, n - 1); ++s) {
        Matrix a = op.bar_codifferential(n, n - 1, s - 1), b = op.bar_codifferential(n, n - 1, s);
        CHECK_MESSAGE((a * b).is_zero(), name << " n=" << n << " s=" << s);
      }
  }
}

TEST_CASE("bar kernel on the diagonal is the Koszul dual") {
  for (const char* name : {"as", "dend", "dias"}) {
    NsOperad op(load(name));
    for (int n = 3; n <= 5; ++n)
      for (int d = 2; d <= n - 1; ++d)
        CHECK_MESSAGE(kernel_dim(op.bar_codifferential(n, d, d)) == op.dual(n, d).dim,
                      name << " n=" << n << " d=" << d);
  }
}

TEST_CASE("chain complexes") {
  ChainComplex z = zero_complex(3);
  CHECK(homology_ranks(z) == std::vector<int>{0, 0, 0, 0});
  ChainComplex id;
  id.dims = {1, 1};
  id.maps = {Matrix(), Matrix::identity(1)};
  CHECK(homology_ranks(id) == std::vector<int>{0, 0});
  ChainComplex bad;
  bad.dims = {1, 1, 1};
  bad.maps = {Matrix(), Matrix::identity(1), Matrix::identity(1)};
  CHECK_THROWS_AS(bad.check_d_squared(), InvariantError);
}

TEST_CASE("Koszul complexes") {
  NsOperad as(load("as"));
  ChainComplex k = as.koszul_complex(3, 2);
  std::vector<int> dims;
  for (int x : k.dims)
    if (x) dims.push_back(x);
  CHECK(dims == std::vector<int>{1, 2, 1});
  CHECK(homology_ranks(k) == std::vector<int>(k.dims.size(), 0));
  for (const char* name : {"as", "dend", "free", "degenerate"}) {
    NsOperad op(load(name));
    for (int n = 2; n <= 4; ++n) {
      ChainComplex c = op.koszul_complex(n, 1);
      CHECK(euler_characteristic(c) == 0);
    }
  }
  CHECK(is_koszul_upto(load("as"), 6).acyclic);
  CHECK(is_koszul_upto(load("free"), 5).acyclic);
  KoszulReport dend = is_koszul_upto(load("dend"), 4);
  CHECK(dend.acyclic);
  CHECK_THROWS_AS(is_koszul_upto(load("as"), 9), CapabilityError);
}

TEST_CASE("Euler characteristic matches the dims module") {
  for (const char* name : {"as", "dend", "dias", "degenerate", "totass3"}) {
    NsOperad op(load(name));
    DimTable P = ns_quotient_table(op, 6, 5), D = ns_dual_table(op, 6, 5);
    for (int n = 2; n <= 5; ++n)
      for (int d = 1; d <= n - 1; ++d) {
        long chi = euler_characteristic(op.koszul_complex(n, d));
        Rational e = euler_koszul(P, D, 1, n, d) / oracle::fact(n);
        CHECK_MESSAGE(abs(e) == std::labs(chi), name << " n=" << n << " d=" << d);
      }
  }
}
