#include "propkit/poincare.hpp"

#include "propkit/combinatorics.hpp"
#include "propkit/errors.hpp"

#include <algorithm>
#include <map>

namespace propkit {

namespace {

Rational inv_factorials(int a, int b) {
  return Rational(1) / Rational(factorial(a) * factorial(b));
}

// prod over runs of equal parts of (run length)!
Integer multiplicity_factorials(const BlockTuple& parts) {
  Integer r = 1;
  std::size_t i = 0;
  while (i < parts.size()) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    r *= factorial(static_cast<int>(j - i));
    i = j;
  }
  return r;
}

void require_vars(const Truncation& t, std::size_t k, const char* what) {
  if (t.vars.size() != k)
    throw ArgumentError(std::string(what) + ": expected " + std::to_string(k) + " variables");
}

}  // namespace

TruncSeries series_of(const DimTable& M, const Truncation& t) {
  require_vars(t, 3, "series_of");
  TruncSeries s(t);
  for (int m = 1; m <= t.orders[0]; ++m)
    for (int n = 1; n <= t.orders[1]; ++n)
      for (int d = 0; d <= t.orders[2]; ++d) {
        if (!t.keeps({m, n, d})) continue;
        Rational v = M.at(m, n, d);
        if (v != 0) s.add_term({m, n, d}, v * inv_factorials(m, n));
      }
  return s;
}

TruncSeries operad_series(const DimTable& P, const Truncation& t) {
  require_vars(t, 2, "operad_series");
  if (P.max_out() != 1) throw ArgumentError("operad_series: table is not concentrated in m = 1");
  TruncSeries s(t);
  for (int n = 1; n <= t.orders[0]; ++n)
    for (int d = 0; d <= t.orders[1]; ++d) {
      if (!t.keeps({n, d})) continue;
      Rational v = P.at(1, n, d);
      if (v != 0) s.add_term({n, d}, v * inv_factorials(1, n));
    }
  return s;
}

TruncSeries binary_series(const DimTable& P, int order) {
  Truncation t = per_variable({"x"}, {order});
  TruncSeries s(t);
  for (int n = 1; n <= order; ++n) {
    Rational v = P.at(1, n, n - 1) * inv_factorials(1, n);
    s.add_term({n}, n % 2 ? Rational(-v) : v);
  }
  return s;
}

bool has_binary_closed_form(const std::string& name) {
  static const char* names[] = {"com", "lie", "as", "leib", "zinb", "dias", "dend"};
  return std::find(std::begin(names), std::end(names), name) != std::end(names);
}

TruncSeries binary_closed_form(const std::string& name, int order) {
  Truncation t = per_variable({"x"}, {order});
  TruncSeries x = TruncSeries::variable(t, "x");
  TruncSeries one = TruncSeries::constant(t, 1);
  if (name == "com") return (-x).exp() - one;
  if (name == "lie") return -(one + x).log();
  if (name == "as" || name == "leib" || name == "zinb") return -(x * (one + x).inverse());
  if (name == "dias") return -(x * (one + x).pow(2).inverse());
  if (name == "dend") {
    // (-1 - 2x + sqrt(1 + 4x)) / (2x), numerator taken one order further
    Truncation t1 = per_variable({"x"}, {order + 1});
    TruncSeries x1 = TruncSeries::variable(t1, "x");
    TruncSeries one1 = TruncSeries::constant(t1, 1);
    TruncSeries num = (one1 + x1.scaled(4)).sqrt() - one1 - x1.scaled(2);
    return num.divide_by_monomial({1}).scaled(Rational(1, 2)).retruncated(t);
  }
  throw ArgumentError("no closed form for '" + name + "'");
}

TruncSeries psi(const TruncSeries& g, const TruncSeries& f, const Truncation& target) {
  require_vars(g.truncation(), 3, "psi");
  require_vars(f.truncation(), 3, "psi");
  require_vars(target, 3, "psi");
  // g_k(y, z) and f_j(x, z), placed in the target
  std::map<int, TruncSeries> G, F;
  for (const auto& [e, c] : g.terms()) {
    if (e[1] == 0) throw ArgumentError("psi: first argument has terms without X");
    G.try_emplace(e[1], target).first->second.add_term({e[0], 0, e[2]}, c);
  }
  for (const auto& [e, c] : f.terms()) {
    if (e[0] == 0) throw ArgumentError("psi: second argument has terms without Y");
    F.try_emplace(e[0], target).first->second.add_term({0, e[1], e[2]}, c);
  }
  int Nmax = std::min(g.truncation().orders[1], f.truncation().orders[0]);
  auto product = [&](const std::map<int, TruncSeries>& S, const BlockTuple& parts) {
    TruncSeries p = TruncSeries::constant(target, 1);
    for (int k : parts) {
      auto it = S.find(k);
      if (it == S.end()) return TruncSeries(target);
      p = p * it->second;
      if (p.is_zero()) break;
    }
    return p;
  };
  TruncSeries out(target);
  for (int N = 1; N <= Nmax; ++N) {
    std::vector<std::pair<BlockTuple, TruncSeries>> tops, bots;
    for (const auto& k : partitions(N)) {
      TruncSeries p = product(G, k);
      if (!p.is_zero()) tops.emplace_back(k, std::move(p));
    }
    if (tops.empty()) continue;
    for (const auto& j : partitions(N)) {
      TruncSeries p = product(F, j);
      if (!p.is_zero()) bots.emplace_back(j, std::move(p));
    }
    for (const auto& [k, gp] : tops)
      for (const auto& [j, fp] : bots) {
        TruncSeries term = gp * fp;
        if (term.is_zero()) continue;
        auto cc = connected_count(k, j);
        if (cc == 0) continue;
        Rational coef = Rational(Integer(cc)) /
                        Rational(multiplicity_factorials(k) * multiplicity_factorials(j));
        out = out + term.scaled(coef);
      }
  }
  return out;
}

int psi_edge_bound(const DimTable& P, const DimTable& Pdual, const Truncation& target) {
  require_vars(target, 3, "psi_edge_bound");
  int best = 1;
  for (int m = 1; m <= target.orders[0]; ++m)
    for (int n = 1; n <= target.orders[1]; ++n)
      for (int d = 0; d <= target.orders[2]; ++d)
        if (target.keeps({m, n, d})) best = std::max(best, edge_bound(Pdual, P, m, n, d));
  return best;
}

std::pair<DimTable, DimTable> pair_tables(const CatalogEntry& p, const CatalogEntry& dual,
                                          const Truncation& target) {
  require_vars(target, 3, "pair_tables");
  Window w{target.orders[0], target.orders[1], target.orders[2]};
  DimTable P = p.table(w), D = dual.table(w);
  int N = psi_edge_bound(P, D, target);
  if (N > w.m || N > w.n) {
    Window big{std::max(w.m, N), std::max(w.n, N), w.rho};
    P = p.table(big);
    D = dual.table(big);
  }
  return {P, D};
}

Report check_properad_identity(const DimTable& P, const DimTable& Pdual, const Truncation& target) {
  require_vars(target, 3, "check_properad_identity");
  int N = psi_edge_bound(P, Pdual, target);
  Truncation tg = per_variable({"y", "X", "z"}, {target.orders[0], N, target.orders[2]});
  Truncation tf = per_variable({"Y", "x", "z"}, {N, target.orders[1], target.orders[2]});
  TruncSeries g = series_of(Pdual, tg).flip_sign("z");
  TruncSeries f = series_of(P, tf);
  TruncSeries xy = TruncSeries::monomial(target, {1, 1, 0}, 1);
  Report r = make_report("properad", target);
  r.add_residuals("psi", psi(g, f, target) - xy);
  r.notes.push_back("edge bound " + std::to_string(N));
  r.sort_residuals();
  return r;
}

Report check_euler(const DimTable& P, const DimTable& Pdual, const Truncation& target) {
  require_vars(target, 3, "check_euler");
  Report r = make_report("euler", target);
  for (int m = 1; m <= target.orders[0]; ++m)
    for (int n = 1; n <= target.orders[1]; ++n)
      for (int d = 1; d <= target.orders[2]; ++d) {
        if (!target.keeps({m, n, d})) continue;
        Rational e = euler_koszul(P, Pdual, m, n, d);
        if (e != 0) r.residuals.push_back({"euler", {m, n, d}, e});
      }
  r.sort_residuals();
  return r;
}

Report binary_check(const std::string& p, const std::string& dual, int order) {
  Truncation t = per_variable({"x"}, {order});
  Window w{1, order, order};
  TruncSeries fp = binary_series(catalog(p).table(w), order);
  TruncSeries fd = binary_series(catalog(dual).table(w), order);
  TruncSeries x = TruncSeries::variable(t, "x");
  Report r = make_report("binary", t);
  r.add_residuals("catalog", substitute(fd, {{"x", fp}}, t) - x);
  if (has_binary_closed_form(p) && has_binary_closed_form(dual)) {
    TruncSeries cp = binary_closed_form(p, order), cd = binary_closed_form(dual, order);
    r.add_residuals("closed-form", substitute(cd, {{"x", cp}}, t) - x);
    r.add_residuals("series:" + p, fp - cp);
    r.add_residuals("series:" + dual, fd - cd);
  } else {
    r.notes.push_back("no closed form for this pair; catalog series only");
  }
  r.sort_residuals();
  return r;
}

Report algebra_check(const std::string& a, const std::string& dual, int order) {
  Window w{1, 1, order};
  DimTable A = catalog(a).table(w), D = catalog(dual).table(w);
  Truncation t = per_variable({"x"}, {order});
  TruncSeries fa(t), fd(t);
  for (int d = 0; d <= order; ++d) {
    fa.add_term({d}, A.at(1, 1, d));
    fd.add_term({d}, D.at(1, 1, d));
  }
  Report r = make_report("algebra", t);
  r.add_residuals("product", fa * fd.flip_sign("x") - TruncSeries::constant(t, 1));

  Truncation target = per_variable({"y", "x", "z"}, {1, 1, order});
  TruncSeries g = series_of(D, per_variable({"y", "X", "z"}, {1, 1, order})).flip_sign("z");
  TruncSeries f = series_of(A, per_variable({"Y", "x", "z"}, {1, 1, order}));
  TruncSeries psi_res = psi(g, f, target) - TruncSeries::monomial(target, {1, 1, 0}, 1);
  // report psi residuals by weight only, in the same single variable
  for (const auto& [e, c] : psi_res.terms()) r.residuals.push_back({"psi", {e[2]}, c});
  r.sort_residuals();
  return r;
}

NsQuadPresentation all_arity_free_presentation(int max_arity) {
  std::vector<Generator> gens;
  for (int a = 2; a <= std::max(2, max_arity); ++a) gens.push_back({"m" + std::to_string(a), a});
  return make_presentation("free", gens, {});
}

TruncSeries free_operad_series(const Truncation& t) {
  require_vars(t, 2, "free_operad_series");
  NsQuadPresentation p = all_arity_free_presentation(t.orders[0]);
  TruncSeries s(t);
  for (int n = 1; n <= t.orders[0]; ++n)
    for (int d = 0; d <= t.orders[1]; ++d)
      if (t.keeps({n, d})) s.add_term({n, d}, Rational(free_dims(p, n, d)));
  return s;
}

TruncSeries free_dual_closed_form(const Truncation& t) {
  TruncSeries x = TruncSeries::variable(t, t.vars[0]);
  TruncSeries y = TruncSeries::variable(t, t.vars[1]);
  return x + y * x * x * (TruncSeries::constant(t, 1) - x).inverse();
}

Report free_operad_check(int order) {
  Truncation t = total_degree({"x", "y"}, order);
  TruncSeries fp = free_operad_series(t);
  TruncSeries fd = free_dual_closed_form(t);
  TruncSeries x = TruncSeries::variable(t, "x"), y = TruncSeries::variable(t, "y");
  TruncSeries one = TruncSeries::constant(t, 1);
  Report r = make_report("operad", t);
  r.add_residuals("composition", substitute(fd, {{"x", fp}, {"y", -y}}, t) - x);
  r.add_residuals("quadratic", (one + y) * fp * fp - (one + x) * fp + x);
  DimTable cat = catalog("free-dual").table(Window{1, order, order});
  r.add_residuals("dual-series", operad_series(cat, t) - fd);
  r.sort_residuals();
  return r;
}

TruncSeries stasheff_series(const Truncation& t) {
  require_vars(t, 2, "stasheff_series");
  // The numerator is divisible by x^2; compute it two x-orders further.
  Truncation tn = t;
  tn.orders[0] += 2;
  if (!tn.weights.empty()) tn.total += 2 * tn.weights[0];
  TruncSeries x = TruncSeries::variable(tn, t.vars[0]);
  TruncSeries y = TruncSeries::variable(tn, t.vars[1]);
  TruncSeries one = TruncSeries::constant(tn, 1);
  TruncSeries two_y = one.scaled(2) + y;
  TruncSeries disc = one - (two_y * x).scaled(2) + y * y * x * x;
  // power-series root of (1+y) x^2 f^2 + (-1 + (2+y) x) f + 1 = 0
  TruncSeries num = one - two_y * x - disc.sqrt();
  TruncSeries q = num.divide_by_monomial({2, 0}).retruncated(t);
  TruncSeries den = (TruncSeries::constant(t, 1) + TruncSeries::variable(t, t.vars[1])).scaled(2);
  return q * den.inverse();
}

TruncSeries stasheff_census(int upto, const Truncation& t) {
  require_vars(t, 2, "stasheff_census");
  NsQuadPresentation p = all_arity_free_presentation(upto + 2);
  TruncSeries s(t);
  for (int n = 0; n <= upto; ++n)
    for (int k = 0; k <= n; ++k)
      s.add_term({n, k}, Rational(free_dims(p, n + 2, n + 1 - k)));
  return s;
}

Report stasheff_check(int upto, int order) {
  Truncation tc = per_variable({"x", "y"}, {upto, upto});
  Truncation t = total_degree({"x", "y"}, order);
  Report r = make_report("stasheff", t);
  r.add_residuals("census", stasheff_series(tc) - stasheff_census(upto, tc));
  TruncSeries fk = stasheff_series(t);
  TruncSeries x = TruncSeries::variable(t, "x"), y = TruncSeries::variable(t, "y");
  TruncSeries one = TruncSeries::constant(t, 1);
  r.add_residuals("closed-form-equation", (one + y) * x * x * fk * fk +
                                              (-one + (one.scaled(2) + y) * x) * fk + one);
  TruncSeries fp = free_operad_series(t);
  r.add_residuals("quadratic", (one + y) * fp * fp - (one + x) * fp + x);
  r.notes.push_back("census for n <= " + std::to_string(upto));
  r.sort_residuals();
  return r;
}

}  // namespace propkit
