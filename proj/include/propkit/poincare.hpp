#pragma once

#include "propkit/dims.hpp"
#include "propkit/nsoperad.hpp"
#include "propkit/report.hpp"
#include "propkit/series.hpp"

#include <string>

namespace propkit {

// sum dim M_(d)(m, n) / (m! n!) y^m x^n z^d over the exponents kept by t.
// t has three variables, read as (outputs, inputs, weight).
TruncSeries series_of(const DimTable& M, const Truncation& t);

// sum dim P_(d)(1, n) / n! x^n y^d. t has two variables (arity, weight).
// ArgumentError unless P declares max_out 1.
TruncSeries operad_series(const DimTable& P, const Truncation& t);

// One-variable series sum_n (-1)^n dim P(n) / n! x^n of a binary operad,
// P(n) sitting in weight n - 1.
TruncSeries binary_series(const DimTable& P, int order);
// Closed forms for com, lie, as, leib, zinb, dias, dend.
TruncSeries binary_closed_form(const std::string& name, int order);
bool has_binary_closed_form(const std::string& name);

// Psi(g, f): g in (y, X, z), f in (Y, x, z), result in target (y, x, z).
// Sums over pairs of block multisets, each weighted by the connected
// count and 1 / (product of multiplicity factorials).
TruncSeries psi(const TruncSeries& g, const TruncSeries& f, const Truncation& target);

// Largest number of internal edges needed for the target window.
int psi_edge_bound(const DimTable& P, const DimTable& Pdual, const Truncation& target);

// Tables of a catalog pair on a window large enough for target, including
// the internal edges psi and euler_koszul can reach.
std::pair<DimTable, DimTable> pair_tables(const CatalogEntry& p, const CatalogEntry& dual,
                                          const Truncation& target);

// Psi(f_dual(y, X, -z), f_P(Y, x, z)) - xy.
Report check_properad_identity(const DimTable& P, const DimTable& Pdual, const Truncation& target);

// euler_koszul on every (m, n, d) kept by target with d >= 1.
Report check_euler(const DimTable& P, const DimTable& Pdual, const Truncation& target);

// f_dual(f_P(x)) - x for two catalog entries, from catalog dims and, when
// available, from closed forms.
Report binary_check(const std::string& p, const std::string& dual, int order);

// f_A(x) f_dual(-x) - 1 for an algebra pair (tables concentrated in
// (1, 1, d)); also through psi.
Report algebra_check(const std::string& a, const std::string& dual, int order);

// Ns free operad on one generator in each arity >= 2.
NsQuadPresentation all_arity_free_presentation(int max_arity);
// sum over trees of x^leaves y^vertices, from planar tree enumeration.
TruncSeries free_operad_series(const Truncation& t);
// x + y x^2 / (1 - x)
TruncSeries free_dual_closed_form(const Truncation& t);
// f_dual(f_P(x, y), -y) - x and (y+1) f^2 - (1+x) f + x.
Report free_operad_check(int order);

// Closed-form Stasheff generating function in (x, y).
TruncSeries stasheff_series(const Truncation& t);
// Cell counts of K^n for n <= upto, from the tree census, as a series.
TruncSeries stasheff_census(int upto, const Truncation& t);
Report stasheff_check(int upto, int order);

}  // namespace propkit
