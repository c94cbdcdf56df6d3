// propkit: command-line front end. Exit codes: 0 pass, 1 identity failure,
// 2 usage, 3 capability limit, 4 internal invariant.
#include "propkit/combinatorics.hpp"
#include "propkit/dims.hpp"
#include "propkit/errors.hpp"
#include "propkit/nsoperad.hpp"
#include "propkit/poincare.hpp"
#include "propkit/report.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#ifndef PROPKIT_DATA_DIR
#define PROPKIT_DATA_DIR "data"
#endif

using namespace propkit;

namespace {

enum Exit { kPass = 0, kFail = 1, kUsage = 2, kCapability = 3, kInvariant = 4 };

std::vector<int> parse_ints(const std::string& s, const char* what) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size())
      throw ArgumentError(std::string(what) + ": '" + s + "' is not a comma-separated integer list");
    out.push_back(v);
  }
  if (out.empty()) throw ArgumentError(std::string(what) + ": empty list");
  return out;
}

std::vector<std::string> split_names(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

struct Output {
  std::string path;
  std::string format;

  void emit(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ArgumentError("cannot write " + path);
    out << text;
  }
};

std::string report_text(const Report& r) {
  std::ostringstream s;
  s << r.identity << ": " << (r.pass() ? "pass" : "fail") << "\n";
  Report sorted = r;
  sorted.sort_residuals();
  for (const auto& x : sorted.residuals) {
    s << "  " << (x.check.empty() ? "" : x.check + " ");
    for (std::size_t i = 0; i < x.exponents.size(); ++i)
      s << (i ? "," : "") << (i < r.vars.size() ? r.vars[i] : "?") << "^" << x.exponents[i];
    s << " = " << to_string(x.value) << "\n";
  }
  for (const auto& n : r.notes) s << "  note: " << n << "\n";
  return s.str();
}

int finish(const Report& r, const Output& out) {
  out.emit(out.format == "text" ? report_text(r) : report_to_json(r));
  return r.pass() ? kPass : kFail;
}

Truncation window_truncation(const std::vector<int>& w, std::optional<int> total) {
  if (w.size() != 3) throw ArgumentError("expected three orders m,n,d");
  Truncation t = per_variable({"y", "x", "z"}, w);
  if (total) {
    t.weights = {1, 1, 0};
    t.total = *total;
  }
  return t;
}

std::pair<CatalogEntry, CatalogEntry> resolve_pair(const std::string& arg) {
  auto names = split_names(arg);
  if (names.size() == 1) {
    CatalogEntry p = catalog(names[0]);
    if (p.dual_name.empty()) throw ArgumentError("catalog entry '" + names[0] + "' has no known dual");
    return {p, catalog(p.dual_name)};
  }
  if (names.size() != 2) throw ArgumentError("--pair takes 'name' or 'name,dual'");
  return {catalog(names[0]), catalog(names[1])};
}

std::string find_presentation(const std::string& arg) {
  namespace fs = std::filesystem;
  if (fs::exists(arg)) return arg;
  fs::path p = fs::path(PROPKIT_DATA_DIR) / "presentations" / arg;
  if (fs::exists(p)) return p.string();
  fs::path q = p;
  q += ".json";
  if (fs::exists(q)) return q.string();
  throw ArgumentError("presentation file not found: " + arg);
}

Report koszul_report(const NsQuadPresentation& pres, int upto, int bar_upto) {
  Report r;
  r.identity = "koszul";
  r.vars = {"n", "d", "k"};
  r.orders = {upto, upto - 1, upto - 1};
  KoszulReport k = is_koszul_upto(pres, upto);
  for (const auto& c : k.cases) {
    std::ostringstream s;
    s << "n=" << c.n << " d=" << c.d << " dims";
    for (int x : c.dims) s << " " << x;
    r.notes.push_back(s.str());
    for (std::size_t i = 0; i < c.betti.size(); ++i)
      if (c.betti[i]) r.residuals.push_back({"homology", {c.n, c.d, static_cast<int>(i)}, c.betti[i]});
  }
  // bar side: d_theta^2 = 0 in every weight, for s <= 4
  NsOperad op(pres);
  for (int n = 2; n <= std::min(upto, bar_upto); ++n)
    for (int d = 3; d <= n - 1; ++d)
      for (int s = 3; s <= std::min(d, 4); ++s) {
        Matrix dd = op.bar_codifferential(n, d, s - 1) * op.bar_codifferential(n, d, s);
        if (!dd.is_zero())
          throw InvariantError("bar codifferential squares to nonzero at n=" + std::to_string(n) +
                               " d=" + std::to_string(d) + " s=" + std::to_string(s));
      }
  r.notes.push_back("presentation " + pres.name + (k.acyclic ? ": acyclic" : ": not acyclic") +
                    " up to arity " + std::to_string(upto));
  r.sort_residuals();
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"propkit: dimension counts, Koszul complexes and Poincare series checks"};
  app.require_subcommand(1);
  Output out;
  auto add_output = [&out](CLI::App* c, const std::string& def) {
    c->add_option("--out", out.path, "write the result to this file instead of stdout");
    c->add_option("--format", out.format, "output format (default " + def + ")")
        ->check(CLI::IsMember({"json", "text", "csv"}));
  };

  // connperm
  auto* cp = app.add_subcommand("connperm", "count connected permutations for block tuples");
  std::string k_arg, j_arg;
  bool list = false;
  cp->add_option("--k", k_arg, "output blocks, e.g. 2,2")->required();
  cp->add_option("--j", j_arg, "input blocks, e.g. 1,3")->required();
  cp->add_flag("--list", list, "also print the connected words");
  std::string cp_format = "text", cp_out;
  cp->add_option("--format", cp_format)->check(CLI::IsMember({"json", "text"}));
  cp->add_option("--out", cp_out);

  // check
  auto* check = app.add_subcommand("check", "run an identity check");
  check->require_subcommand(1);
  std::string pair;
  int order = 10;
  auto* series = check->add_subcommand("series", "binary operads: f_dual(f_P(x)) = x");
  series->add_option("--pair", pair, "P,dual")->required();
  series->add_option("--order", order);

  std::string orders_arg = "6,6,4";
  std::optional<int> total;
  auto* properad = check->add_subcommand("properad", "Psi(f_dual(y,X,-z), f_P(Y,x,z)) = xy");
  properad->add_option("--pair", pair, "P or P,dual")->required();
  properad->add_option("--orders", orders_arg, "m,n,d");
  properad->add_option("--total", total, "cap on m+n");

  std::string window_arg = "6,6,4";
  auto* euler = check->add_subcommand("euler", "Euler characteristics of Koszul complexes vanish");
  euler->add_option("--pair", pair, "P or P,dual")->required();
  euler->add_option("--window", window_arg, "m,n,d");
  euler->add_option("--total", total, "cap on m+n");

  std::string pres_arg;
  int upto = 6, bar_upto = 5;
  auto* koszul = check->add_subcommand("koszul", "homology of ns Koszul complexes");
  koszul->add_option("--presentation", pres_arg, "presentation JSON file")->required();
  koszul->add_option("--upto", upto);
  koszul->add_option("--bar-upto", bar_upto, "largest arity for the bar d^2 check");

  int st_upto = 7, st_order = 8;
  auto* stasheff = check->add_subcommand("stasheff", "Stasheff generating function");
  stasheff->add_option("--upto", st_upto);
  stasheff->add_option("--order", st_order);

  auto* algebra = check->add_subcommand("algebra", "f_A(x) f_dual(-x) = 1");
  algebra->add_option("--pair", pair, "A,dual")->required();
  algebra->add_option("--order", order);

  int op_order = 8;
  auto* operad = check->add_subcommand("operad", "free ns operad: f_dual(f_P(x,y),-y) = x");
  operad->add_option("--order", op_order);

  for (auto* c : {series, properad, euler, koszul, stasheff, algebra, operad}) add_output(c, "json");

  // dims
  auto* dims = app.add_subcommand("dims", "dump a dimension table as CSV rows m,n,rho,dim");
  std::string entry, dims_window = "4,4,4";
  dims->add_option("--entry", entry)->required();
  dims->add_option("--window", dims_window, "m,n,rho");
  add_output(dims, "csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  try {
    if (*cp) {
      BlockTuple k = parse_ints(k_arg, "--k"), j = parse_ints(j_arg, "--j");
      validate_blocks(k, "--k");
      validate_blocks(j, "--j");
      if (block_sum(k) != block_sum(j)) throw ArgumentError("--k and --j must have the same sum");
      auto count = connected_count(k, j);
      std::vector<Permutation> words;
      if (list) words = connected_permutations(k, j);
      std::ostringstream s;
      if (cp_format == "json") {
        nlohmann::ordered_json o;
        o["k"] = k;
        o["j"] = j;
        o["count"] = count;
        if (list) {
          o["words"] = nlohmann::ordered_json::array();
          for (const auto& w : words) o["words"].push_back(w.word());
        }
        s << o.dump(2) << "\n";
      } else {
        s << count << "\n";
        for (const auto& w : words) {
          for (std::size_t i = 0; i < w.word().size(); ++i) s << (i ? " " : "") << w.word()[i];
          s << "\n";
        }
      }
      Output{cp_out, cp_format}.emit(s.str());
      return kPass;
    }
    if (*dims) {
      auto w = parse_ints(dims_window, "--window");
      if (w.size() != 3) throw ArgumentError("--window takes m,n,rho");
      DimTable t = catalog(entry).table(Window{w[0], w[1], w[2]});
      std::ostringstream s;
      if (out.format == "json") {
        nlohmann::ordered_json o;
        o["entry"] = entry;
        o["window"] = w;
        o["rows"] = nlohmann::ordered_json::array();
        for (const auto& [m, n, r, v] : t.nonzero())
          o["rows"].push_back({{"m", m}, {"n", n}, {"rho", r}, {"dim", to_string(v)}});
        s << o.dump(2) << "\n";
      } else {
        for (const auto& [m, n, r, v] : t.nonzero())
          s << m << "," << n << "," << r << "," << to_string(v) << "\n";
      }
      out.emit(s.str());
      return kPass;
    }
    if (*series) {
      auto names = split_names(pair);
      if (names.size() != 2) throw ArgumentError("--pair takes P,dual");
      return finish(binary_check(names[0], names[1], order), out);
    }
    if (*algebra) {
      auto names = split_names(pair);
      if (names.size() != 2) throw ArgumentError("--pair takes A,dual");
      return finish(algebra_check(names[0], names[1], order), out);
    }
    if (*properad || *euler) {
      Truncation t = window_truncation(parse_ints(*properad ? orders_arg : window_arg, "orders"), total);
      auto [p, d] = resolve_pair(pair);
      auto [P, D] = pair_tables(p, d, t);
      Report r = *properad ? check_properad_identity(P, D, t) : check_euler(P, D, t);
      r.notes.insert(r.notes.begin(), "pair " + p.name + "," + d.name);
      return finish(r, out);
    }
    if (*koszul) {
      if (upto < 2) throw ArgumentError("--upto must be at least 2");
      NsQuadPresentation pres = load_presentation(find_presentation(pres_arg));
      return finish(koszul_report(pres, upto, bar_upto), out);
    }
    if (*stasheff) return finish(stasheff_check(st_upto, st_order), out);
    if (*operad) return finish(free_operad_check(op_order), out);
  } catch (const ArgumentError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const CapabilityError& e) {
    std::cerr << "capability limit: " << e.what() << "\n";
    return kCapability;
  } catch (const InvariantError& e) {
    std::cerr << "internal invariant violated: " << e.what() << "\n";
    return kInvariant;
  }
  return kUsage;
}
