#include "propkit/planar_tree.hpp"

#include "propkit/errors.hpp"

#include <algorithm>
#include <map>

namespace propkit {

int ArityTable::operator()(int label) const {
  if (label == kLeaf) return 0;
  if (is_placeholder(label)) return kPlaceholderBase - label;
  if (label < 0 || label >= static_cast<int>(a_.size())) throw ArgumentError("unknown tree label");
  return a_[label];
}

PlanarTree leaf_tree() { return PlanarTree{{kLeaf}}; }

PlanarTree corolla(int label, int arity) {
  PlanarTree t{{label}};
  t.code.insert(t.code.end(), arity, kLeaf);
  return t;
}

bool well_formed(const std::vector<int>& code, const ArityTable& ar) {
  long need = 1;
  for (std::size_t i = 0; i < code.size(); ++i) {
    if (need == 0) return false;
    int a;
    try {
      a = ar(code[i]);
    } catch (const ArgumentError&) {
      return false;
    }
    need += a - 1;
  }
  return need == 0;
}

int leaf_count(const std::vector<int>& code) {
  return static_cast<int>(std::count(code.begin(), code.end(), kLeaf));
}

int vertex_count(const std::vector<int>& code) {
  return static_cast<int>(code.size()) - leaf_count(code);
}

std::size_t subtree_end(const std::vector<int>& code, std::size_t i, const ArityTable& ar) {
  long need = 1;
  while (need > 0) {
    if (i >= code.size()) throw ArgumentError("truncated tree code");
    need += ar(code[i]) - 1;
    ++i;
  }
  return i;
}

std::vector<std::size_t> child_starts(const std::vector<int>& code, std::size_t i,
                                      const ArityTable& ar) {
  std::vector<std::size_t> s;
  int a = ar(code[i]);
  std::size_t p = i + 1;
  for (int c = 0; c < a; ++c) {
    s.push_back(p);
    p = subtree_end(code, p, ar);
  }
  return s;
}

int vertices_before(const std::vector<int>& code, std::size_t i) {
  int c = 0;
  for (std::size_t k = 0; k < i; ++k)
    if (code[k] != kLeaf) ++c;
  return c;
}

int leaves_before(const std::vector<int>& code, std::size_t i) {
  int c = 0;
  for (std::size_t k = 0; k < i; ++k)
    if (code[k] == kLeaf) ++c;
  return c;
}

std::vector<int> graft(const std::vector<int>& a, int leaf, const std::vector<int>& b) {
  std::vector<int> out;
  int seen = 0;
  bool done = false;
  for (int x : a) {
    if (x == kLeaf && seen++ == leaf) {
      out.insert(out.end(), b.begin(), b.end());
      done = true;
    } else {
      out.push_back(x);
    }
  }
  if (!done) throw ArgumentError("graft: leaf out of range");
  return out;
}

std::vector<int> graft_all(const std::vector<int>& a, const std::vector<std::vector<int>>& subs) {
  std::vector<int> out;
  std::size_t k = 0;
  for (int x : a) {
    if (x == kLeaf) {
      if (k >= subs.size()) throw ArgumentError("graft_all: too few subtrees");
      out.insert(out.end(), subs[k].begin(), subs[k].end());
      ++k;
    } else {
      out.push_back(x);
    }
  }
  if (k != subs.size()) throw ArgumentError("graft_all: too many subtrees");
  return out;
}

Collapse collapse_edge(const std::vector<int>& code, std::size_t u, int slot, const ArityTable& ar) {
  auto kids = child_starts(code, u, ar);
  if (slot < 0 || slot >= static_cast<int>(kids.size())) throw ArgumentError("collapse: bad slot");
  std::size_t v = kids[slot];
  if (code[v] == kLeaf) throw ArgumentError("collapse: child is a leaf");
  auto vkids = child_starts(code, v, ar);
  int au = ar(code[u]), av = ar(code[v]);
  Collapse c;
  c.local.push_back(code[u]);
  for (int j = 0; j < au; ++j) {
    if (j == slot) {
      c.local.push_back(code[v]);
      c.local.insert(c.local.end(), av, kLeaf);
    } else {
      c.local.push_back(kLeaf);
    }
  }
  c.between = vertices_before(code, v) - vertices_before(code, u) - 1;
  std::size_t uend = subtree_end(code, u, ar);
  c.context.assign(code.begin(), code.begin() + static_cast<long>(u));
  c.context.push_back(placeholder_label(au + av - 1));
  auto copy_range = [&](std::size_t b, std::size_t e) {
    c.context.insert(c.context.end(), code.begin() + static_cast<long>(b),
                     code.begin() + static_cast<long>(e));
  };
  for (int j = 0; j < au; ++j) {
    if (j == slot) {
      for (std::size_t w : vkids) copy_range(w, subtree_end(code, w, ar));
    } else {
      copy_range(kids[j], subtree_end(code, kids[j], ar));
    }
  }
  copy_range(uend, code.size());
  return c;
}

std::vector<int> insert_local(const std::vector<int>& context, const std::vector<int>& local,
                              const ArityTable& ar) {
  auto it = std::find_if(context.begin(), context.end(), is_placeholder);
  if (it == context.end()) throw ArgumentError("insert_local: no placeholder");
  std::size_t p = static_cast<std::size_t>(it - context.begin());
  int a = ar(context[p]);
  if (leaf_count(local) != a) throw ArgumentError("insert_local: arity mismatch");
  std::vector<std::vector<int>> subs;
  for (std::size_t s : child_starts(context, p, ar))
    subs.emplace_back(context.begin() + static_cast<long>(s),
                      context.begin() + static_cast<long>(subtree_end(context, s, ar)));
  std::vector<int> out(context.begin(), context.begin() + static_cast<long>(p));
  auto mid = graft_all(local, subs);
  out.insert(out.end(), mid.begin(), mid.end());
  std::size_t e = subtree_end(context, p, ar);
  out.insert(out.end(), context.begin() + static_cast<long>(e), context.end());
  return out;
}

namespace {

// forests[(n, d, k)] = ordered k-tuples of trees with n leaves, d vertices
using Key = std::tuple<int, int>;

const std::vector<std::vector<int>>& trees_cached(const ArityTable& ar, int n, int d,
                                                  std::map<Key, std::vector<std::vector<int>>>& memo);

void forests(const ArityTable& ar, int k, int n, int d, std::vector<int>& prefix,
             std::vector<std::vector<int>>& out, std::map<Key, std::vector<std::vector<int>>>& memo) {
  if (k == 0) {
    if (n == 0 && d == 0) out.push_back(prefix);
    return;
  }
  // each remaining tree needs at least one leaf
  for (int n1 = 1; n1 <= n - (k - 1); ++n1)
    for (int d1 = 0; d1 <= d; ++d1) {
      const auto& ts = trees_cached(ar, n1, d1, memo);
      for (const auto& t : ts) {
        std::size_t len = prefix.size();
        prefix.insert(prefix.end(), t.begin(), t.end());
        forests(ar, k - 1, n - n1, d - d1, prefix, out, memo);
        prefix.resize(len);
      }
    }
}

const std::vector<std::vector<int>>& trees_cached(const ArityTable& ar, int n, int d,
                                                  std::map<Key, std::vector<std::vector<int>>>& memo) {
  Key key{n, d};
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  std::vector<std::vector<int>> out;
  if (d == 0) {
    if (n == 1) out.push_back({kLeaf});
  } else if (n >= 1) {
    for (int g = 0; g < ar.size(); ++g) {
      int a = ar(g);
      if (a > n) continue;
      std::vector<int> prefix{g};
      forests(ar, a, n, d - 1, prefix, out, memo);
    }
  }
  std::sort(out.begin(), out.end());
  return memo.emplace(key, std::move(out)).first->second;
}

}  // namespace

std::vector<PlanarTree> enumerate_labelled_trees(const ArityTable& ar, int n, int d) {
  if (n < 1 || d < 0) return {};
  for (int g = 0; g < ar.size(); ++g)
    if (ar(g) < 1) throw ArgumentError("labels must have arity >= 1");
  std::map<Key, std::vector<std::vector<int>>> memo;
  std::vector<PlanarTree> out;
  for (const auto& c : trees_cached(ar, n, d, memo)) out.push_back(PlanarTree{c});
  return out;
}

}  // namespace propkit
