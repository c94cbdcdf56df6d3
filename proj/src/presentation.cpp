#include "propkit/errors.hpp"
#include "propkit/nsoperad.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>

namespace propkit {

using nlohmann::json;

ArityTable NsQuadPresentation::arity_table() const {
  std::vector<int> a;
  for (const auto& g : generators) a.push_back(g.arity);
  return ArityTable(a);
}

int NsQuadPresentation::generator_index(const std::string& nm) const {
  for (std::size_t i = 0; i < generators.size(); ++i)
    if (generators[i].name == nm) return static_cast<int>(i);
  return -1;
}

std::vector<int> NsQuadPresentation::weight_two_arities() const {
  std::set<int> s;
  for (const auto& g : generators)
    for (const auto& h : generators) s.insert(g.arity + h.arity - 1);
  return {s.begin(), s.end()};
}

int NsQuadPresentation::relation_rank(int a) const {
  auto it = relations.find(a);
  return it == relations.end() ? 0 : static_cast<int>(it->second.size());
}

namespace {

json tree_json(const std::vector<int>& code, std::size_t& i, const NsQuadPresentation& p) {
  int x = code.at(i++);
  if (x == kLeaf) return nullptr;
  json arr = json::array();
  arr.push_back(p.generators.at(x).name);
  for (int c = 0; c < p.generators[x].arity; ++c) arr.push_back(tree_json(code, i, p));
  return arr;
}

void tree_code(const json& j, const NsQuadPresentation& p, std::vector<int>& out) {
  if (j.is_null()) {
    out.push_back(kLeaf);
    return;
  }
  if (!j.is_array() || j.empty() || !j[0].is_string())
    throw ArgumentError("tree: a vertex is [\"name\", children...], a leaf is null");
  int g = p.generator_index(j[0].get<std::string>());
  if (g < 0) throw ArgumentError("tree: unknown generator '" + j[0].get<std::string>() + "'");
  if (static_cast<int>(j.size()) - 1 != p.generators[g].arity)
    throw ArgumentError("tree: generator '" + p.generators[g].name + "' has arity " +
                        std::to_string(p.generators[g].arity));
  out.push_back(g);
  for (std::size_t c = 1; c < j.size(); ++c) tree_code(j[c], p, out);
}

PlanarTree tree_from(const json& j, const NsQuadPresentation& p) {
  PlanarTree t;
  tree_code(j, p, t.code);
  return t;
}

void validate_generators(const std::vector<Generator>& gens) {
  std::set<std::string> names;
  if (gens.empty()) throw ArgumentError("presentation: no generators");
  for (const auto& g : gens) {
    if (g.name.empty()) throw ArgumentError("presentation: empty generator name");
    if (g.arity < 2) throw ArgumentError("presentation: generator arity must be >= 2");
    if (!names.insert(g.name).second) throw ArgumentError("presentation: duplicate generator " + g.name);
  }
}

}  // namespace

std::string tree_to_json(const PlanarTree& t, const NsQuadPresentation& p) {
  std::size_t i = 0;
  return tree_json(t.code, i, p).dump();
}

PlanarTree tree_from_json(const std::string& text, const NsQuadPresentation& p) {
  try {
    return tree_from(json::parse(text), p);
  } catch (const json::exception& e) {
    throw ArgumentError(std::string("tree: invalid JSON: ") + e.what());
  }
}

NsQuadPresentation make_presentation(
    std::string name, std::vector<Generator> gens,
    const std::vector<std::vector<std::pair<PlanarTree, Rational>>>& relations) {
  validate_generators(gens);
  NsQuadPresentation p;
  p.name = std::move(name);
  p.generators = std::move(gens);
  ArityTable ar = p.arity_table();
  std::map<int, RowSpace> spaces;
  std::map<int, std::map<std::vector<int>, int>> index;
  for (const auto& rel : relations) {
    if (rel.empty()) continue;
    int a = leaf_count(rel.front().first.code);
    if (!index.count(a)) {
      auto ts = enumerate_labelled_trees(ar, a, 2);
      for (std::size_t i = 0; i < ts.size(); ++i) index[a][ts[i].code] = static_cast<int>(i);
      spaces.emplace(a, RowSpace(static_cast<int>(ts.size())));
    }
    std::map<int, Rational> row;
    for (const auto& [t, c] : rel) {
      if (!well_formed(t.code, ar)) throw ArgumentError("relation: malformed tree");
      if (vertex_count(t.code) != 2) throw ArgumentError("relation: not quadratic (need 2 vertices)");
      if (leaf_count(t.code) != a) throw ArgumentError("relation: mixed arities");
      row[index[a].at(t.code)] += c;
    }
    spaces.at(a).insert(SparseVec::from_map(row));
  }
  for (auto& [a, rs] : spaces)
    if (rs.rank() > 0) p.relations[a] = rs.rref();
  return p;
}

NsQuadPresentation parse_presentation(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ArgumentError(std::string("presentation: invalid JSON: ") + e.what());
  }
  try {
    for (auto it = j.begin(); it != j.end(); ++it)
      if (it.key() != "name" && it.key() != "generators" && it.key() != "relations")
        throw ArgumentError("presentation: unknown key '" + it.key() + "'");
    std::vector<Generator> gens;
    for (const auto& g : j.at("generators"))
      gens.push_back(Generator{g.at("name").get<std::string>(), g.at("arity").get<int>()});
    NsQuadPresentation shell;
    shell.generators = gens;
    validate_generators(gens);
    std::vector<std::vector<std::pair<PlanarTree, Rational>>> rels;
    if (j.contains("relations"))
      for (const auto& r : j.at("relations")) {
        std::vector<std::pair<PlanarTree, Rational>> terms;
        for (const auto& term : r) {
          const json& c = term.at("coeff");
          Rational q = c.is_string() ? parse_rational(c.get<std::string>())
                                     : Rational(c.get<long long>());
          terms.emplace_back(tree_from(term.at("tree"), shell), q);
        }
        rels.push_back(std::move(terms));
      }
    return make_presentation(j.value("name", std::string("unnamed")), gens, rels);
  } catch (const json::exception& e) {
    throw ArgumentError(std::string("presentation: malformed: ") + e.what());
  }
}

NsQuadPresentation load_presentation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot read presentation file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_presentation(ss.str());
}

std::string presentation_to_json(const NsQuadPresentation& p) {
  json j;
  j["name"] = p.name;
  j["generators"] = json::array();
  for (const auto& g : p.generators) j["generators"].push_back({{"name", g.name}, {"arity", g.arity}});
  j["relations"] = json::array();
  ArityTable ar = p.arity_table();
  for (const auto& [a, rows] : p.relations) {
    auto ts = enumerate_labelled_trees(ar, a, 2);
    for (const auto& r : rows) {
      json rel = json::array();
      for (const auto& [col, c] : r.entries()) {
        std::size_t i = 0;
        rel.push_back({{"tree", tree_json(ts[col].code, i, p)}, {"coeff", to_string(c)}});
      }
      j["relations"].push_back(rel);
    }
  }
  return j.dump(2);
}

}  // namespace propkit
