#pragma once

#include "propkit/rational.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace propkit {

struct Window {
  int m = 0;    // max outputs
  int n = 0;    // max inputs
  int rho = 0;  // max weight
  bool contains(int mm, int nn, int r) const { return mm <= m && nn <= n && r <= rho; }
  bool operator==(const Window&) const = default;
};

Window hull(const Window& a, const Window& b);

// How the symmetric groups act on a basis, as far as the oracle cares.
enum class Action { Trivial, Free, Other };
const char* to_string(Action a);
Action parse_action(const std::string& s);

// Dense table of dim M_(rho)(m, n) for 1 <= m, 1 <= n inside a window.
// Entries are exact rationals: the connected product weighs graphs with
// symmetries by 1/|Aut|, so computed tables can hold fractions.
//
// Support declarations let queries outside the window return a proven
// zero. Anything else outside the window is a CapabilityError.
//   slope s:    entry is zero when m + n > s*rho + 2
//   max_out k:  entry is zero when m > k
//   max_in k:   entry is zero when n > k
class DimTable {
 public:
  DimTable() = default;
  explicit DimTable(Window w);

  const Window& window() const { return w_; }
  std::optional<int> slope() const { return slope_; }
  std::optional<int> max_out() const { return max_out_; }
  std::optional<int> max_in() const { return max_in_; }

  void declare_slope(int s);
  void declare_max_out(int k);
  void declare_max_in(int k);
  void clear_support();

  bool proven_zero(int m, int n, int rho) const;
  Rational at(int m, int n, int rho) const;
  void set(int m, int n, int rho, const Rational& v);

  // Nonzero entries sorted by (m, n, rho).
  std::vector<std::tuple<int, int, int, Rational>> nonzero() const;
  // Same entries on a smaller window; must be covered by this one or proven.
  DimTable resized(Window w) const;

  bool is_connected_normalized() const;
  bool all_integral() const;

  // Compares entries on the common window.
  bool same_entries(const DimTable& o) const;

 private:
  std::size_t index(int m, int n, int rho) const;
  void check_support_consistent() const;

  Window w_{};
  std::vector<Rational> d_;
  std::optional<int> slope_, max_out_, max_in_;
};

DimTable unit_table(Window w);
DimTable opposite(const DimTable& M);
// Keeps only weight k.
DimTable restrict_weight(const DimTable& M, int k);
DimTable add_tables(const DimTable& a, const DimTable& b);

// One entry of Q (top, outputs) boxc P (bottom, inputs). When top_weight is
// set only configurations whose Q-vertices carry that total weight count.
Rational boxc_entry(const DimTable& Q, const DimTable& P, int m, int n, int rho,
                    std::optional<int> top_weight = std::nullopt);
// Largest number of internal edges a nonzero configuration of the
// (m, n, rho) entry of Q boxc P can have, from the support declarations.
// CapabilityError if no declaration bounds it.
int edge_bound(const DimTable& Q, const DimTable& P, int m, int n, int rho);
DimTable boxc_dims(const DimTable& Q, const DimTable& P, Window w);

DimTable sym_exp_dims(const DimTable& M, Window w);
DimTable box_dims(const DimTable& Q, const DimTable& P, Window w);

// sum_k (-1)^k (Pdual_(k) boxc P_(d-k))(m, n)
Rational euler_koszul(const DimTable& P, const DimTable& Pdual, int m, int n, int d);

struct OracleResult {
  Integer classes = 0;   // orbits of labeled structures
  Rational weighted = 0; // sum over orbits of 1/|stabilizer|
  Integer structures = 0;
};
// Brute-force enumeration of two-level connected structures with labeled
// legs, modulo the slot symmetries. Needs m, n <= 4 and integral dims;
// gives up past kOracleMaxStructures labeled structures.
OracleResult boxc_dims_oracle(const DimTable& Q, Action qa, const DimTable& P, Action pa, int m,
                              int n, int rho);
constexpr long kOracleMaxStructures = 4000000;

struct CatalogEntry {
  std::string name;
  std::string description;
  Action action = Action::Other;
  bool ns_flag = false;
  std::string dual_name;  // empty when unknown
  std::function<DimTable(Window)> table;
};

// Builtin entries, possibly overridden by the JSON file named in the
// PROPKIT_CATALOG environment variable. A name ending in "-op" gives the
// opposite of the base entry.
CatalogEntry catalog(const std::string& name);
std::vector<std::string> catalog_names();
// Parses one entry or an array of entries from JSON text.
std::vector<CatalogEntry> parse_catalog_json(const std::string& text);
// Forget cached overrides (tests change the environment).
void reload_catalog();

}  // namespace propkit
