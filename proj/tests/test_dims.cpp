#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"

#include "propkit/dims.hpp"
#include "propkit/errors.hpp"

#include <cstdlib>
#include <fstream>

using namespace propkit;

namespace {

// I plus one weight-1 generator of biarity (m, n) with dimension dim.
DimTable unit_plus(int m, int n, int dim, Window w) {
  DimTable t(w);
  t.set(1, 1, 0, 1);
  t.set(m, n, 1, dim);
  t.declare_slope(m + n - 2);
  return t;
}

}  // namespace

TEST_CASE("unit table") {
  DimTable u = unit_table(Window{3, 3, 2});
  CHECK(u.at(1, 1, 0) == 1);
  CHECK(u.at(2, 1, 0) == 0);
  CHECK(u.at(1, 1, 1) == 0);
  // proven zero far outside the window
  CHECK(u.at(9, 9, 9) == 0);
  CHECK(u.is_connected_normalized());
}

TEST_CASE("out-of-window queries are errors unless proven zero") {
  DimTable t(Window{2, 2, 2});
  t.set(1, 2, 1, 5);
  CHECK_THROWS_AS((void)t.at(3, 1, 0), CapabilityError);
  t.declare_max_out(2);
  CHECK(t.at(3, 1, 0) == 0);
  CHECK_THROWS_AS(t.set(1, 1, -1, 1), ArgumentError);
  CHECK_THROWS_AS(t.set(0, 1, 0, 1), ArgumentError);
  CHECK_THROWS_AS(t.declare_max_in(1), ArgumentError);  // contradicts (1,2,1)
}

TEST_CASE("opposite") {
  DimTable lie = catalog("lie").table(Window{4, 4, 3});
  CHECK(lie.at(1, 3, 2) == 2);
  DimTable op = opposite(lie);
  CHECK(op.at(3, 1, 2) == 2);
  CHECK(opposite(op).same_entries(lie));
  DimTable u = unit_table(Window{3, 3, 3});
  CHECK(opposite(u).same_entries(u));
}

TEST_CASE("catalog dimension rules") {
  Window w{1, 7, 6};
  for (int n = 2; n <= 7; ++n) {
    Integer f = oracle::fact(n);
    CHECK(catalog("com").table(w).at(1, n, n - 1) == 1);
    CHECK(catalog("lie").table(w).at(1, n, n - 1) == oracle::fact(n - 1));
    CHECK(catalog("as").table(w).at(1, n, n - 1) == f);
    CHECK(catalog("leib").table(w).at(1, n, n - 1) == f);
    CHECK(catalog("zinb").table(w).at(1, n, n - 1) == f);
    CHECK(catalog("dias").table(w).at(1, n, n - 1) == n * f);
    CHECK(catalog("dend").table(w).at(1, n, n - 1) == oracle::catalan(n) * f);
    CHECK(catalog("com").table(w).at(1, n, n - 2) == 0);
  }
  DimTable bd = catalog("bilie-dual").table(Window{4, 4, 6});
  DimTable ed = catalog("epsbi-dual").table(Window{4, 4, 6});
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= 4; ++n)
      for (int r = 0; r <= 6; ++r) {
        bool on = r == m + n - 2;
        CHECK(bd.at(m, n, r) == (on ? 1 : 0));
        CHECK(ed.at(m, n, r) == (on ? Rational(oracle::fact(m) * oracle::fact(n)) : Rational(0)));
      }
  for (int v = 1; v <= 3; ++v)
    for (int d = 0; d <= 6; ++d) {
      CHECK(catalog("sym" + std::to_string(v)).table(w).at(1, 1, d) == oracle::choose(v + d - 1, d));
      CHECK(catalog("ext" + std::to_string(v)).table(w).at(1, 1, d) == oracle::choose(v, d));
    }
  CHECK_THROWS_AS(catalog("nosuch"), ArgumentError);
}

TEST_CASE("catalog duals are involutive") {
  for (const auto& name : catalog_names()) {
    CatalogEntry e = catalog(name);
    if (e.dual_name.empty()) continue;
    CHECK_MESSAGE(catalog(e.dual_name).dual_name == name, name);
  }
}

TEST_CASE("unit law") {
  Window w{4, 4, 3};
  for (const char* name : {"com", "as", "dias", "bilie-dual", "epsbi-dual", "sym2"}) {
    DimTable M = catalog(name).table(Window{8, 8, 4});
    DimTable u = unit_table(Window{8, 8, 4});
    CHECK_MESSAGE(boxc_dims(M, u, w).same_entries(M.resized(w)), name);
    CHECK_MESSAGE(boxc_dims(u, M, w).same_entries(M.resized(w)), name);
  }
}

TEST_CASE("small products from the worked examples") {
  Window big{4, 4, 3};
  DimTable g = unit_plus(1, 2, 1, big);
  CHECK(boxc_dims(g, g, Window{1, 3, 2}).at(1, 3, 2) == 3);
  CHECK(boxc_dims_oracle(g, Action::Trivial, g, Action::Trivial, 1, 3, 2).classes == 3);
  DimTable u = unit_table(big);
  CHECK(boxc_dims_oracle(u, Action::Trivial, u, Action::Trivial, 1, 1, 0).classes == 1);

  // cogenerator over generator at (2,2,2): one configuration, 4 labelled structures
  DimTable top = unit_plus(2, 1, 1, big), bottom = unit_plus(1, 2, 1, big);
  auto trivial = boxc_dims_oracle(top, Action::Trivial, bottom, Action::Trivial, 2, 2, 2);
  CHECK(trivial.classes == 1);
  CHECK(trivial.weighted == 1);
  DimTable top2 = unit_plus(2, 1, 2, big), bottom2 = unit_plus(1, 2, 2, big);
  auto free = boxc_dims_oracle(top2, Action::Free, bottom2, Action::Free, 2, 2, 2);
  CHECK(free.weighted == 4);
  CHECK(boxc_dims(top2, bottom2, Window{2, 2, 2}).at(2, 2, 2) == 4);
}

TEST_CASE("parallel edges carry 1/|Aut|") {
  Window big{4, 4, 3};
  DimTable com = catalog("com").table(big), comop = catalog("com-op").table(big);
  auto o = boxc_dims_oracle(com, Action::Trivial, comop, Action::Trivial, 1, 1, 2);
  CHECK(o.classes == 1);
  CHECK(o.weighted == Rational(1, 2));
  CHECK(boxc_dims(com, comop, Window{1, 1, 2}).at(1, 1, 2) == Rational(1, 2));
}

TEST_CASE("operadic collapse matches plethysm") {
  Window big{1, 7, 6};
  for (auto [qn, pn] : std::vector<std::pair<const char*, const char*>>{
           {"com", "com"}, {"com", "as"}, {"as", "dias"}, {"lie", "com"}}) {
    DimTable Q = catalog(qn).table(big), P = catalog(pn).table(big);
    DimTable c = boxc_dims(Q, P, Window{1, 6, 5});
    auto q = [&](int n, int r) { return Q.at(1, n, r); };
    auto p = [&](int n, int r) { return P.at(1, n, r); };
    for (int n = 1; n <= 6; ++n)
      for (int r = 0; r <= 5; ++r)
        CHECK_MESSAGE(c.at(1, n, r) == oracle::plethysm(q, p, n, r),
                      qn << " o " << pn << " at n=" << n << " r=" << r);
  }
}

TEST_CASE("com o com counts set partitions") {
  DimTable C = catalog("com").table(Window{1, 7, 6});
  DimTable c = boxc_dims(C, C, Window{1, 6, 5});
  // sum over weights: partitions of n into blocks, counted once per weight split
  for (int n = 1; n <= 6; ++n) {
    Rational total = 0;
    for (int r = 0; r <= 5; ++r) total += c.at(1, n, r);
    long brute = 0;
    oracle::set_partitions(n, [&](const std::vector<std::vector<int>>&) { ++brute; });
    // the top vertex of arity k has weight k-1 and each block of size s weight s-1:
    // every partition appears exactly once
    CHECK(total == brute);
  }
}

TEST_CASE("boxc agrees with the structural oracle") {
  Window big{6, 6, 3};
  std::vector<std::string> names{"unit", "com", "com-op", "as", "as-op", "halfbi", "bilie-dual"};
  for (const auto& qn : names)
    for (const auto& pn : names) {
      CatalogEntry q = catalog(qn), p = catalog(pn);
      DimTable Q = q.table(big), P = p.table(big);
      int rho = std::min({2, Q.window().rho, P.window().rho});
      DimTable c = boxc_dims(Q, P, Window{3, 3, rho});
      for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 3; ++n)
          for (int r = 0; r <= rho; ++r)
            CHECK_MESSAGE(boxc_dims_oracle(Q, q.action, P, p.action, m, n, r).weighted == c.at(m, n, r),
                          qn << " boxc " << pn << " at " << m << "," << n << "," << r);
    }
}

TEST_CASE("oracle refuses what it cannot model") {
  DimTable lie = catalog("lie").table(Window{3, 3, 2});
  CHECK_THROWS_AS(boxc_dims_oracle(lie, Action::Other, lie, Action::Other, 1, 2, 1), CapabilityError);
  CHECK_THROWS_AS(boxc_dims_oracle(lie, Action::Free, lie, Action::Free, 5, 1, 1), CapabilityError);
}

TEST_CASE("unbounded products are refused") {
  DimTable f = catalog("free").table(Window{4, 4, 3});
  DimTable fo = catalog("free-op").table(Window{4, 4, 3});
  CHECK_THROWS_AS(boxc_dims(f, fo, Window{2, 2, 2}), CapabilityError);
}

TEST_CASE("sym_exp against the free concatenation oracle") {
  CHECK(sym_exp_dims(unit_table(Window{3, 3, 0}), Window{3, 3, 0}).at(2, 2, 0) == 2);
  CHECK(sym_exp_dims(unit_table(Window{3, 3, 0}), Window{3, 3, 0}).at(1, 1, 0) == 1);
  CHECK(sym_exp_dims(unit_table(Window{3, 3, 0}), Window{3, 3, 0}).at(2, 1, 0) == 0);
  for (const char* name : {"unit", "bilie-dual", "epsbi-dual", "halfbi", "bilie"}) {
    DimTable M = catalog(name).table(Window{4, 4, 2});
    int rho = M.window().rho;
    DimTable S = sym_exp_dims(M, Window{3, 3, rho});
    auto mf = [&](int m, int n, int r) { return M.at(m, n, r); };
    for (int m = 1; m <= 3; ++m)
      for (int n = 1; n <= 3; ++n)
        for (int r = 0; r <= rho; ++r)
          CHECK_MESSAGE(S.at(m, n, r) == oracle::free_concatenation(mf, m, n, r),
                        name << " at " << m << "," << n << "," << r);
  }
}

TEST_CASE("box products") {
  Window w{4, 4, 2};
  DimTable u = unit_table(Window{6, 6, 3});
  DimTable uu = box_dims(u, u, w);
  for (int n = 1; n <= 4; ++n) CHECK(uu.at(n, n, 0) == oracle::fact(n));
  DimTable M = catalog("halfbi").table(Window{6, 6, 1});
  CHECK(box_dims(M, u, Window{3, 3, 1}).same_entries(sym_exp_dims(M, Window{3, 3, 1})));
  DimTable a = catalog("as").table(Window{6, 6, 3}), ao = catalog("as-op").table(Window{6, 6, 3});
  DimTable c = boxc_dims(a, ao, Window{3, 3, 2}), b = box_dims(a, ao, Window{3, 3, 2});
  for (int r = 0; r <= 2; ++r) CHECK(c.at(1, 1, r) == b.at(1, 1, r));
}

TEST_CASE("euler_koszul") {
  Window big{8, 8, 5};
  DimTable com = catalog("com").table(big), lie = catalog("lie").table(big);
  CHECK(euler_koszul(com, lie, 1, 1, 0) == 1);
  CHECK(euler_koszul(com, lie, 1, 2, 0) == 0);
  for (int n = 2; n <= 6; ++n)
    for (int d = 1; d <= 4; ++d) CHECK(euler_koszul(com, lie, 1, n, d) == 0);
  // a wrong dual is detected
  DimTable as = catalog("as").table(big);
  bool some_nonzero = false;
  for (int n = 2; n <= 4; ++n)
    for (int d = 1; d <= 3; ++d) some_nonzero |= euler_koszul(com, as, 1, n, d) != 0;
  CHECK(some_nonzero);
}

TEST_CASE("restrict and add") {
  DimTable c = catalog("com").table(Window{1, 5, 4});
  DimTable c2 = restrict_weight(c, 2);
  CHECK(c2.at(1, 3, 2) == 1);
  CHECK(c2.at(1, 2, 1) == 0);
  DimTable s = add_tables(c, c);
  CHECK(s.at(1, 4, 3) == 2);
}

TEST_CASE("catalog override file") {
  std::string path = "propkit_test_catalog.json";
  {
    std::ofstream out(path);
    out << R"([{"name": "toy", "entries": [[1,1,0,1],[1,2,1,2]], "action": "free",
               "slope": 1, "dual_name": null}])";
  }
  setenv("PROPKIT_CATALOG", path.c_str(), 1);
  reload_catalog();
  CatalogEntry e = catalog("toy");
  CHECK(e.action == Action::Free);
  CHECK(e.table(Window{1, 2, 1}).at(1, 2, 1) == 2);
  auto names = catalog_names();
  CHECK(std::find(names.begin(), names.end(), "toy") != names.end());
  unsetenv("PROPKIT_CATALOG");
  reload_catalog();
  CHECK_THROWS_AS(catalog("toy"), ArgumentError);
  std::remove(path.c_str());

  CHECK_THROWS_AS(parse_catalog_json(R"({"name": "x", "entries": [], "bogus": 1})"), ArgumentError);
  CHECK_THROWS_AS(parse_catalog_json("[1, 2"), ArgumentError);
}
