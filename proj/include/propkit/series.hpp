#pragma once

#include "propkit/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace propkit {

using Exponents = std::vector<int>;

// Truncation shape shared by every series in one computation: per-variable
// orders, plus an optional cap on sum(weights[i] * e[i]).
struct Truncation {
  std::vector<std::string> vars;
  std::vector<int> orders;
  std::vector<int> weights;  // empty: no total cap
  int total = 0;

  bool keeps(const Exponents& e) const;
  int index_of(const std::string& v) const;  // ArgumentError if absent
  // Any product of this many series without constant term vanishes.
  int nilpotency_bound() const;
  bool operator==(const Truncation&) const = default;
};

Truncation per_variable(std::vector<std::string> vars, std::vector<int> orders);
// Every variable capped at `order` and total degree at most `order`.
Truncation total_degree(std::vector<std::string> vars, int order);

// Multivariate power series over Q, truncated. Stored terms always satisfy
// the truncation; arithmetic re-truncates.
class TruncSeries {
 public:
  explicit TruncSeries(Truncation t) : t_(std::move(t)) {}

  static TruncSeries constant(const Truncation& t, const Rational& c);
  static TruncSeries variable(const Truncation& t, const std::string& v);
  static TruncSeries monomial(const Truncation& t, const Exponents& e, const Rational& c);

  const Truncation& truncation() const { return t_; }
  const std::map<Exponents, Rational>& terms() const { return c_; }
  Rational coeff(const Exponents& e) const;
  Rational constant_term() const;
  // Adds c to the coefficient of e; dropped if e is truncated away.
  void add_term(const Exponents& e, const Rational& c);
  bool is_zero() const { return c_.empty(); }

  TruncSeries operator+(const TruncSeries& o) const;
  TruncSeries operator-(const TruncSeries& o) const;
  TruncSeries operator-() const;
  TruncSeries operator*(const TruncSeries& o) const;
  TruncSeries scaled(const Rational& a) const;
  TruncSeries pow(int k) const;

  // Need a nonzero constant term.
  TruncSeries inverse() const;
  // Needs constant term 1.
  TruncSeries sqrt() const;
  TruncSeries log() const;
  // Needs constant term 0.
  TruncSeries exp() const;

  // v -> -v
  TruncSeries flip_sign(const std::string& v) const;
  // Divides by x^e; every term must be divisible. The result keeps the
  // same truncation (orders are not shifted).
  TruncSeries divide_by_monomial(const Exponents& e) const;
  // Same coefficients, viewed under another truncation with the same
  // variables (terms outside it are dropped).
  TruncSeries retruncated(const Truncation& t) const;

  // Equal within the common truncation.
  bool operator==(const TruncSeries& o) const;

 private:
  void check_same(const TruncSeries& o) const;
  Truncation t_;
  std::map<Exponents, Rational> c_;
};

// Simultaneous substitution. The result lives in `target`; every variable
// of `outer` is either replaced (by a series in `target` with zero
// constant term) or kept, in which case `target` must have it too.
TruncSeries substitute(const TruncSeries& outer, const std::map<std::string, TruncSeries>& repl,
                       const Truncation& target);

// Renames variables: terms keep their coefficient, exponent i moves to
// the position of names[i] in `target`.
TruncSeries rename(const TruncSeries& s, const std::vector<std::string>& names,
                   const Truncation& target);

}  // namespace propkit
