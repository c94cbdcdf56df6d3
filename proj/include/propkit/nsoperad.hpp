#pragma once

#include "propkit/chain_complex.hpp"
#include "propkit/dims.hpp"
#include "propkit/linalg.hpp"
#include "propkit/planar_tree.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace propkit {

struct Generator {
  std::string name;
  int arity = 2;
};

// Quadratic ns presentation F(V)/(R). Relations are kept per arity as
// reduced rows over the weight-2 trees enumerate_trees(p, a, 2).
struct NsQuadPresentation {
  std::string name;
  std::vector<Generator> generators;
  std::map<int, std::vector<SparseVec>> relations;

  ArityTable arity_table() const;
  int generator_index(const std::string& name) const;  // -1 if absent
  // Arities a where F_(2)(V)(a) is nonzero.
  std::vector<int> weight_two_arities() const;
  int relation_rank(int a) const;
};

// Nested-list tree encoding: a vertex is ["name", child, ...], a leaf is null.
std::string tree_to_json(const PlanarTree& t, const NsQuadPresentation& p);
PlanarTree tree_from_json(const std::string& text, const NsQuadPresentation& p);

// {name, generators: [{name, arity}], relations: [[{tree, coeff}, ...], ...]}
NsQuadPresentation parse_presentation(const std::string& json_text);
NsQuadPresentation load_presentation(const std::string& path);
std::string presentation_to_json(const NsQuadPresentation& p);

// Builds a presentation from relations given as (tree, coefficient) lists.
NsQuadPresentation make_presentation(
    std::string name, std::vector<Generator> gens,
    const std::vector<std::vector<std::pair<PlanarTree, Rational>>>& relations);

std::vector<PlanarTree> enumerate_trees(const NsQuadPresentation& p, int n, int d);
long free_dims(const NsQuadPresentation& p, int n, int d);

// The edge contraction attached to one context (a tree with a placeholder
// of arity a). Row q is quotient coordinate q of F_(2)(a)/R(a); column t is
// tree t of F_(d)(n). The entry carries the Koszul sign (-1)^c, c being the
// number of vertices passed over to bring the two vertices together.
struct ContractionMap {
  PlanarTree context;
  int local_arity = 0;
  Matrix matrix;
};

struct DualPiece {
  int dim = 0;
  std::vector<SparseVec> basis;  // vectors over enumerate_trees(p, n, d)
  std::vector<int> free_columns; // basis[i] is 1 at free_columns[i]
};

struct BarBasis;  // defined in the source

class NsOperad {
 public:
  explicit NsOperad(NsQuadPresentation p);
  ~NsOperad();
  NsOperad(const NsOperad&) = delete;
  NsOperad& operator=(const NsOperad&) = delete;

  const NsQuadPresentation& presentation() const { return p_; }
  const ArityTable& arities() const { return ar_; }

  const std::vector<PlanarTree>& trees(int n, int d) const;
  int tree_index(int n, int d, const std::vector<int>& code) const;  // -1 if absent

  // The weight-d part of the ideal generated by R, in arity n.
  const RowSpace& ideal(int n, int d) const;
  // Normal-form trees spanning P_(d)(n): the non-pivot columns of ideal().
  const std::vector<int>& normal_forms(int n, int d) const;
  int quotient_dim(int n, int d) const { return static_cast<int>(normal_forms(n, d).size()); }
  // Coordinates in the normal-form basis of the class of a tree combination.
  SparseVec to_quotient(int n, int d, const SparseVec& v) const;
  SparseVec tree_class(int n, int d, const std::vector<int>& code) const;

  std::vector<ContractionMap> edge_contraction_maps(int n, int d) const;
  const DualPiece& dual(int n, int d) const;
  // Coordinates of a tree combination in the dual basis; InvariantError if
  // it is not in the span.
  SparseVec dual_coordinates(int n, int d, const SparseVec& y) const;

  // d_theta : B_s -> B_{s-1} on the bar construction of P in total weight d,
  // with rows and columns indexed by bar_basis_labels.
  Matrix bar_codifferential(int n, int d, int s) const;
  std::vector<std::string> bar_basis_labels(int n, int d, int s) const;

  // The right Koszul complex (dual on top, P below) in weight d, arity n.
  ChainComplex koszul_complex(int n, int d) const;

 private:
  const BarBasis& bar_basis(int n, int d, int s) const;
  // Sparse contraction rows grouped by context.
  std::map<std::vector<int>, std::vector<SparseVec>> contraction_rows(int n, int d) const;
  std::vector<std::vector<int>> contexts(int n, int d) const;

  NsQuadPresentation p_;
  ArityTable ar_;
  mutable std::recursive_mutex mu_;
  mutable std::map<std::pair<int, int>, std::vector<PlanarTree>> trees_;
  mutable std::map<std::pair<int, int>, std::map<std::vector<int>, int>> tree_pos_;
  mutable std::map<std::pair<int, int>, std::unique_ptr<RowSpace>> ideal_;
  mutable std::map<std::pair<int, int>, std::vector<int>> nf_;
  mutable std::map<std::pair<int, int>, std::map<int, int>> nf_pos_;
  mutable std::map<std::pair<int, int>, DualPiece> dual_;
  mutable std::map<std::tuple<int, int, int>, std::unique_ptr<BarBasis>> bar_;
};

DualPiece koszul_dual_dims(const NsQuadPresentation& p, int n, int d);
NsQuadPresentation quadratic_dual_presentation(const NsQuadPresentation& p);
// Sign of the pairing on weight-2 trees r o_i s (s of arity q grafted at
// input i of r): (-1)^((i-1)(q-1)).
int pairing_sign(const PlanarTree& weight_two, const ArityTable& ar);

struct KoszulCase {
  int n = 0, d = 0;
  std::vector<int> dims;
  std::vector<int> betti;
  bool acyclic = true;
};

struct KoszulReport {
  std::string presentation;
  int upto = 0;
  std::vector<KoszulCase> cases;
  bool acyclic = true;
  std::optional<KoszulCase> first_failure;
};

KoszulReport is_koszul_upto(const NsQuadPresentation& p, int N);
constexpr int kMaxKoszulArity = 8;

// Symmetric dimension tables (ns count times n!) of P and of its dual.
DimTable ns_quotient_table(const NsOperad& op, int max_n, int max_d);
DimTable ns_dual_table(const NsOperad& op, int max_n, int max_d);

}  // namespace propkit
