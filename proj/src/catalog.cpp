#include "propkit/dims.hpp"
#include "propkit/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <sstream>

namespace propkit {

namespace {

using Rule = std::function<Integer(int m, int n, int rho)>;

struct Support {
  std::optional<int> slope, max_out, max_in;
};

DimTable from_rule(Window w, const Rule& f, Support s) {
  DimTable t(w);
  for (int m = 1; m <= w.m; ++m)
    for (int n = 1; n <= w.n; ++n)
      for (int r = 0; r <= w.rho; ++r) {
        Integer v = f(m, n, r);
        if (v != 0) t.set(m, n, r, Rational(v));
      }
  if (s.slope) t.declare_slope(*s.slope);
  if (s.max_out) t.declare_max_out(*s.max_out);
  if (s.max_in) t.declare_max_in(*s.max_in);
  return t;
}

Integer catalan(int n) { return binomial(2 * n, n) / (n + 1); }

// Planar trees with n leaves and d internal vertices, every vertex of
// arity >= 2.
Integer planar_trees(int n, int d) {
  if (n == 1) return d == 0 ? 1 : 0;
  if (d < 1 || d > n - 1) return 0;
  return binomial(n - 2, d - 1) * binomial(n + d - 1, d - 1) / d;
}

// Binary quadratic operad with dim P(n) = c(n) in weight n-1.
CatalogEntry binary_operad(std::string name, std::string descr, Action act, bool ns,
                           std::string dual, std::function<Integer(int)> c) {
  CatalogEntry e;
  e.name = std::move(name);
  e.description = std::move(descr);
  e.action = act;
  e.ns_flag = ns;
  e.dual_name = std::move(dual);
  e.table = [c](Window w) {
    return from_rule(
        w, [c](int m, int n, int r) { return (m == 1 && r == n - 1) ? c(n) : Integer(0); },
        {1, 1, std::nullopt});
  };
  return e;
}

CatalogEntry algebra(std::string name, std::string descr, std::string dual,
                     std::function<Integer(int)> c) {
  CatalogEntry e;
  e.name = std::move(name);
  e.description = std::move(descr);
  e.action = Action::Trivial;
  e.ns_flag = true;
  e.dual_name = std::move(dual);
  e.table = [c](Window w) {
    return from_rule(
        w, [c](int m, int n, int r) { return (m == 1 && n == 1) ? c(r) : Integer(0); }, {0, 1, 1});
  };
  return e;
}

CatalogEntry genus_zero_dual(std::string name, std::string descr, Action act, std::string dual,
                             std::function<Integer(int, int)> c) {
  CatalogEntry e;
  e.name = std::move(name);
  e.description = std::move(descr);
  e.action = act;
  e.dual_name = std::move(dual);
  e.table = [c](Window w) {
    return from_rule(
        w, [c](int m, int n, int r) { return r == m + n - 2 ? c(m, n) : Integer(0); },
        {1, std::nullopt, std::nullopt});
  };
  return e;
}

// Lie bialgebra style: operations on top of cooperations.
CatalogEntry mixed(std::string name, std::string descr, std::string top, std::string dual) {
  CatalogEntry e;
  e.name = std::move(name);
  e.description = std::move(descr);
  e.action = Action::Other;
  e.dual_name = std::move(dual);
  e.table = [top](Window w) {
    Window inner{w.m + w.n + w.rho + 1, w.m + w.n + w.rho + 1, w.rho};
    DimTable Q = catalog(top).table(inner);
    return boxc_dims(Q, opposite(Q), w);
  };
  return e;
}

std::vector<CatalogEntry> builtin() {
  std::vector<CatalogEntry> v;
  {
    CatalogEntry e;
    e.name = "unit";
    e.description = "the unit I, one operation in biarity (1,1)";
    e.action = Action::Trivial;
    e.ns_flag = true;
    e.dual_name = "unit";
    e.table = [](Window w) { return unit_table(w); };
    v.push_back(e);
  }
  v.push_back(binary_operad("com", "commutative algebras", Action::Trivial, false, "lie",
                            [](int) { return Integer(1); }));
  v.push_back(binary_operad("lie", "Lie algebras", Action::Other, false, "com",
                            [](int n) { return factorial(n - 1); }));
  v.push_back(binary_operad("as", "associative algebras", Action::Free, true, "as",
                            [](int n) { return factorial(n); }));
  v.push_back(binary_operad("leib", "Leibniz algebras", Action::Free, false, "zinb",
                            [](int n) { return factorial(n); }));
  v.push_back(binary_operad("zinb", "Zinbiel algebras", Action::Free, false, "leib",
                            [](int n) { return factorial(n); }));
  v.push_back(binary_operad("dias", "associative dialgebras", Action::Free, true, "dend",
                            [](int n) { return Integer(n) * factorial(n); }));
  v.push_back(binary_operad("dend", "dendriform algebras", Action::Free, true, "dias",
                            [](int n) { return catalan(n) * factorial(n); }));
  {
    CatalogEntry e;
    e.name = "free";
    e.description = "free operad on one generator in each arity >= 2, weight = vertex count";
    e.action = Action::Free;
    e.ns_flag = true;
    e.dual_name = "free-dual";
    e.table = [](Window w) {
      return from_rule(
          w,
          [](int m, int n, int r) { return m == 1 ? planar_trees(n, r) * factorial(n) : Integer(0); },
          {std::nullopt, 1, std::nullopt});
    };
    v.push_back(e);
  }
  {
    CatalogEntry e;
    e.name = "free-dual";
    e.description = "dual of the free operad: the generators, nothing above weight 1";
    e.action = Action::Free;
    e.ns_flag = true;
    e.dual_name = "free";
    e.table = [](Window w) {
      return from_rule(
          w,
          [](int m, int n, int r) {
            if (m != 1) return Integer(0);
            if (n == 1 && r == 0) return Integer(1);
            return (n >= 2 && r == 1) ? factorial(n) : Integer(0);
          },
          {std::nullopt, 1, std::nullopt});
    };
    v.push_back(e);
  }
  v.push_back(mixed("bilie", "Lie bialgebras, computed as Lie boxc Lie^op", "lie", "bilie-dual"));
  v.push_back(genus_zero_dual("bilie-dual", "dual of Lie bialgebras: k in weight m+n-2",
                              Action::Trivial, "bilie", [](int, int) { return Integer(1); }));
  v.push_back(mixed("epsbi", "infinitesimal bialgebras, computed as As boxc As^op", "as",
                    "epsbi-dual"));
  v.push_back(genus_zero_dual("epsbi-dual", "dual of infinitesimal bialgebras: k[S_m] x k[S_n]",
                              Action::Free, "epsbi",
                              [](int m, int n) { return factorial(m) * factorial(n); }));
  for (int dv = 1; dv <= 3; ++dv) {
    std::string s = std::to_string(dv);
    v.push_back(algebra("sym" + s, "symmetric algebra S(V), dim V = " + s, "ext" + s,
                        [dv](int d) { return binomial(dv + d - 1, d); }));
    v.push_back(algebra("ext" + s, "exterior algebra, dim V = " + s, "sym" + s,
                        [dv](int d) { return binomial(dv, d); }));
  }
  {
    CatalogEntry e;
    e.name = "halfbi";
    e.description = "generators of the half-bialgebra properad (one operation, one cooperation)";
    e.action = Action::Free;
    e.table = [](Window w) {
      Window c{w.m, w.n, std::min(w.rho, 1)};
      return from_rule(
          c,
          [](int m, int n, int r) {
            if (r == 0) return Integer(m == 1 && n == 1 ? 1 : 0);
            return Integer((m == 1 && n == 2) || (m == 2 && n == 1) ? 2 : 0);
          },
          {1, std::nullopt, std::nullopt});
    };
    v.push_back(e);
  }
  return v;
}

std::mutex catalog_mutex;
bool overrides_loaded = false;
std::vector<CatalogEntry> overrides;

const std::vector<CatalogEntry>& builtins() {
  static const std::vector<CatalogEntry> b = builtin();
  return b;
}

std::vector<CatalogEntry> load_overrides() {
  std::lock_guard<std::mutex> g(catalog_mutex);
  if (!overrides_loaded) {
    overrides.clear();
    if (const char* path = std::getenv("PROPKIT_CATALOG"); path && *path) {
      std::ifstream in(path);
      if (!in) throw ArgumentError(std::string("cannot read catalog file ") + path);
      std::stringstream ss;
      ss << in.rdbuf();
      overrides = parse_catalog_json(ss.str());
    }
    overrides_loaded = true;
  }
  return overrides;
}

Rational json_rational(const nlohmann::json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw ArgumentError("catalog: dimension must be an integer or a \"p/q\" string");
}

CatalogEntry entry_from_json(const nlohmann::json& j) {
  static const std::vector<std::string> known = {"name",  "entries", "ns_flag", "dual_name",
                                                 "window", "slope",  "max_out", "max_in",
                                                 "action", "description"};
  if (!j.is_object()) throw ArgumentError("catalog: entry must be an object");
  for (auto it = j.begin(); it != j.end(); ++it)
    if (std::find(known.begin(), known.end(), it.key()) == known.end())
      throw ArgumentError("catalog: unknown key '" + it.key() + "'");
  if (!j.contains("name") || !j.contains("entries"))
    throw ArgumentError("catalog: entry needs name and entries");
  CatalogEntry e;
  e.name = j.at("name").get<std::string>();
  e.description = j.value("description", std::string("loaded from file"));
  e.ns_flag = j.value("ns_flag", false);
  e.dual_name = j.contains("dual_name") && !j.at("dual_name").is_null()
                    ? j.at("dual_name").get<std::string>()
                    : std::string();
  e.action = parse_action(j.value("action", std::string("other")));
  Window w{0, 0, 0};
  std::vector<std::tuple<int, int, int, Rational>> rows;
  for (const auto& r : j.at("entries")) {
    if (!r.is_array() || r.size() != 4) throw ArgumentError("catalog: entries are [m,n,rho,dim]");
    int m = r[0].get<int>(), n = r[1].get<int>(), rho = r[2].get<int>();
    rows.emplace_back(m, n, rho, json_rational(r[3]));
    w = hull(w, Window{m, n, rho});
  }
  if (j.contains("window")) {
    auto a = j.at("window");
    if (!a.is_array() || a.size() != 3) throw ArgumentError("catalog: window is [m,n,rho]");
    Window given{a[0].get<int>(), a[1].get<int>(), a[2].get<int>()};
    if (!given.contains(w.m, w.n, w.rho)) throw ArgumentError("catalog: entries outside window");
    w = given;
  }
  DimTable t(w);
  for (const auto& [m, n, r, d] : rows) t.set(m, n, r, d);
  if (j.contains("slope")) t.declare_slope(j.at("slope").get<int>());
  if (j.contains("max_out")) t.declare_max_out(j.at("max_out").get<int>());
  if (j.contains("max_in")) t.declare_max_in(j.at("max_in").get<int>());
  e.table = [t](Window) { return t; };
  return e;
}

}  // namespace

std::vector<CatalogEntry> parse_catalog_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& ex) {
    throw ArgumentError(std::string("catalog: invalid JSON: ") + ex.what());
  }
  std::vector<CatalogEntry> out;
  try {
    if (j.is_array())
      for (const auto& x : j) out.push_back(entry_from_json(x));
    else
      out.push_back(entry_from_json(j));
  } catch (const nlohmann::json::exception& ex) {
    throw ArgumentError(std::string("catalog: malformed entry: ") + ex.what());
  }
  return out;
}

void reload_catalog() {
  std::lock_guard<std::mutex> g(catalog_mutex);
  overrides_loaded = false;
  overrides.clear();
}

CatalogEntry catalog(const std::string& name) {
  for (const auto& e : load_overrides())
    if (e.name == name) return e;
  for (const auto& e : builtins())
    if (e.name == name) return e;
  const std::string suffix = "-op";
  if (name.size() > suffix.size() && name.compare(name.size() - 3, 3, suffix) == 0) {
    CatalogEntry base = catalog(name.substr(0, name.size() - 3));
    CatalogEntry e = base;
    e.name = name;
    e.description = "opposite of " + base.description;
    e.dual_name = base.dual_name.empty() ? "" : base.dual_name + "-op";
    e.ns_flag = false;
    auto f = base.table;
    e.table = [f](Window w) { return opposite(f(Window{w.n, w.m, w.rho})); };
    return e;
  }
  throw ArgumentError("unknown catalog entry '" + name + "'");
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> names;
  for (const auto& e : builtins()) names.push_back(e.name);
  for (const auto& e : load_overrides())
    if (std::find(names.begin(), names.end(), e.name) == names.end()) names.push_back(e.name);
  return names;
}

}  // namespace propkit
