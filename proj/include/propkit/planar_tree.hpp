#pragma once

#include <compare>
#include <string>
#include <vector>

namespace propkit {

// Preorder code of a rooted planar tree. A label >= 0 is an internal
// vertex whose arity comes from a lookup table; -1 is a leaf.
// Placeholders use labels <= kPlaceholderBase, with arity
// kPlaceholderBase - label. Leaves are numbered left to right in the order
// they appear in the code.
struct PlanarTree {
  std::vector<int> code;
  auto operator<=>(const PlanarTree&) const = default;
};

constexpr int kLeaf = -1;
constexpr int kPlaceholderBase = -100;
inline int placeholder_label(int arity) { return kPlaceholderBase - arity; }
inline bool is_placeholder(int label) { return label <= kPlaceholderBase; }

// Arity lookup for labels >= 0.
class ArityTable {
 public:
  ArityTable() = default;
  explicit ArityTable(std::vector<int> a) : a_(std::move(a)) {}
  int operator()(int label) const;
  int size() const { return static_cast<int>(a_.size()); }

 private:
  std::vector<int> a_;
};

PlanarTree leaf_tree();
PlanarTree corolla(int label, int arity);

bool well_formed(const std::vector<int>& code, const ArityTable& ar);
int leaf_count(const std::vector<int>& code);
int vertex_count(const std::vector<int>& code);  // internal and placeholder vertices
// One past the end of the subtree rooted at code[i].
std::size_t subtree_end(const std::vector<int>& code, std::size_t i, const ArityTable& ar);
// Code indices where the children of the vertex at i start.
std::vector<std::size_t> child_starts(const std::vector<int>& code, std::size_t i,
                                      const ArityTable& ar);
// Number of vertices (not leaves) at code indices < i.
int vertices_before(const std::vector<int>& code, std::size_t i);
// Number of leaves at code indices < i.
int leaves_before(const std::vector<int>& code, std::size_t i);

// Replaces leaf number `leaf` (0-based) of a by the tree b.
std::vector<int> graft(const std::vector<int>& a, int leaf, const std::vector<int>& b);
// Replaces every leaf of a, in order, by the given subtrees.
std::vector<int> graft_all(const std::vector<int>& a, const std::vector<std::vector<int>>& subs);

// Collapsing the edge from the vertex at code index u to its child number
// `slot` (which must be a vertex). Yields the context with a placeholder
// and the local two-vertex tree.
struct Collapse {
  std::vector<int> context;
  std::vector<int> local;
  int between = 0;  // vertices strictly between the two in preorder
};
Collapse collapse_edge(const std::vector<int>& code, std::size_t u, int slot, const ArityTable& ar);

// Substitutes the placeholder of `context` by the tree `local`, whose
// leaves receive the placeholder's subtrees in order.
std::vector<int> insert_local(const std::vector<int>& context, const std::vector<int>& local,
                              const ArityTable& ar);

// All trees with n leaves and d vertices labelled by 0..ar.size()-1,
// sorted by code.
std::vector<PlanarTree> enumerate_labelled_trees(const ArityTable& ar, int n, int d);

}  // namespace propkit
