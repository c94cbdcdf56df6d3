#include "propkit/series.hpp"

#include "propkit/errors.hpp"

#include <algorithm>
#include <numeric>

namespace propkit {

bool Truncation::keeps(const Exponents& e) const {
  long tot = 0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] < 0 || e[i] > orders[i]) return false;
    if (!weights.empty()) tot += static_cast<long>(weights[i]) * e[i];
  }
  return weights.empty() || tot <= total;
}

int Truncation::index_of(const std::string& v) const {
  auto it = std::find(vars.begin(), vars.end(), v);
  if (it == vars.end()) throw ArgumentError("unknown series variable '" + v + "'");
  return static_cast<int>(it - vars.begin());
}

int Truncation::nilpotency_bound() const {
  int b = std::accumulate(orders.begin(), orders.end(), 0);
  if (!weights.empty()) {
    int w = *std::min_element(weights.begin(), weights.end());
    if (w > 0) b = std::min(b, total / w);
  }
  return b;
}

Truncation per_variable(std::vector<std::string> vars, std::vector<int> orders) {
  if (vars.size() != orders.size()) throw ArgumentError("one order per variable expected");
  for (int o : orders)
    if (o < 0) throw ArgumentError("series orders must be nonnegative");
  return Truncation{std::move(vars), std::move(orders), {}, 0};
}

Truncation total_degree(std::vector<std::string> vars, int order) {
  if (order < 0) throw ArgumentError("series order must be nonnegative");
  std::size_t k = vars.size();
  return Truncation{std::move(vars), std::vector<int>(k, order), std::vector<int>(k, 1), order};
}

TruncSeries TruncSeries::constant(const Truncation& t, const Rational& c) {
  return monomial(t, Exponents(t.vars.size(), 0), c);
}

TruncSeries TruncSeries::variable(const Truncation& t, const std::string& v) {
  Exponents e(t.vars.size(), 0);
  e[t.index_of(v)] = 1;
  return monomial(t, e, 1);
}

TruncSeries TruncSeries::monomial(const Truncation& t, const Exponents& e, const Rational& c) {
  TruncSeries s(t);
  s.add_term(e, c);
  return s;
}

Rational TruncSeries::coeff(const Exponents& e) const {
  auto it = c_.find(e);
  return it == c_.end() ? Rational(0) : it->second;
}

Rational TruncSeries::constant_term() const { return coeff(Exponents(t_.vars.size(), 0)); }

void TruncSeries::add_term(const Exponents& e, const Rational& c) {
  if (e.size() != t_.vars.size()) throw ArgumentError("exponent length does not match variables");
  if (c == 0 || !t_.keeps(e)) return;
  auto [it, fresh] = c_.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) c_.erase(it);
  }
}

void TruncSeries::check_same(const TruncSeries& o) const {
  if (!(t_ == o.t_)) throw ArgumentError("series with different truncations combined");
}

TruncSeries TruncSeries::operator+(const TruncSeries& o) const {
  check_same(o);
  TruncSeries r = *this;
  for (const auto& [e, c] : o.c_) r.add_term(e, c);
  return r;
}

TruncSeries TruncSeries::operator-(const TruncSeries& o) const { return *this + (-o); }

TruncSeries TruncSeries::operator-() const { return scaled(-1); }

TruncSeries TruncSeries::operator*(const TruncSeries& o) const {
  check_same(o);
  TruncSeries r(t_);
  Exponents e(t_.vars.size());
  for (const auto& [a, x] : c_)
    for (const auto& [b, y] : o.c_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = a[i] + b[i];
      r.add_term(e, x * y);
    }
  return r;
}

TruncSeries TruncSeries::scaled(const Rational& a) const {
  TruncSeries r(t_);
  if (a == 0) return r;
  for (const auto& [e, c] : c_) r.c_.emplace(e, c * a);
  return r;
}

TruncSeries TruncSeries::pow(int k) const {
  if (k < 0) throw ArgumentError("negative series power");
  TruncSeries r = constant(t_, 1);
  for (int i = 0; i < k; ++i) r = r * *this;
  return r;
}

namespace {
// sum_k a_k u^k with u nilpotent of the given bound.
TruncSeries apply_coefficients(const TruncSeries& u, const std::vector<Rational>& a) {
  TruncSeries r(u.truncation());
  TruncSeries p = TruncSeries::constant(u.truncation(), 1);
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (k > 0) p = p * u;
    if (p.is_zero()) break;
    r = r + p.scaled(a[k]);
  }
  return r;
}
}  // namespace

TruncSeries TruncSeries::inverse() const {
  Rational c = constant_term();
  if (c == 0) throw ArgumentError("inverse needs a nonzero constant term");
  TruncSeries u = scaled(1 / c) - constant(t_, 1);
  std::vector<Rational> a;
  for (int k = 0; k <= t_.nilpotency_bound(); ++k) a.push_back(k % 2 ? Rational(-1) : Rational(1));
  return apply_coefficients(u, a).scaled(1 / c);
}

TruncSeries TruncSeries::sqrt() const {
  if (constant_term() != 1) throw ArgumentError("sqrt needs constant term 1");
  TruncSeries u = *this - constant(t_, 1);
  // binom(1/2, k)
  std::vector<Rational> a{Rational(1)};
  Rational b = 1;
  for (int k = 1; k <= t_.nilpotency_bound(); ++k) {
    b *= (Rational(1, 2) - (k - 1)) / k;
    a.push_back(b);
  }
  return apply_coefficients(u, a);
}

TruncSeries TruncSeries::log() const {
  if (constant_term() != 1) throw ArgumentError("log needs constant term 1");
  TruncSeries u = *this - constant(t_, 1);
  std::vector<Rational> a{Rational(0)};
  for (int k = 1; k <= t_.nilpotency_bound(); ++k) a.push_back(Rational(k % 2 ? 1 : -1, k));
  return apply_coefficients(u, a);
}

TruncSeries TruncSeries::exp() const {
  if (constant_term() != 0) throw ArgumentError("exp needs constant term 0");
  std::vector<Rational> a{Rational(1)};
  for (int k = 1; k <= t_.nilpotency_bound(); ++k) a.push_back(a.back() / k);
  return apply_coefficients(*this, a);
}

TruncSeries TruncSeries::flip_sign(const std::string& v) const {
  int i = t_.index_of(v);
  TruncSeries r(t_);
  for (const auto& [e, c] : c_) r.c_.emplace(e, e[i] % 2 ? Rational(-c) : c);
  return r;
}

TruncSeries TruncSeries::divide_by_monomial(const Exponents& d) const {
  if (d.size() != t_.vars.size()) throw ArgumentError("exponent length does not match variables");
  TruncSeries r(t_);
  for (const auto& [e, c] : c_) {
    Exponents f = e;
    for (std::size_t i = 0; i < f.size(); ++i) {
      f[i] -= d[i];
      if (f[i] < 0) throw ArgumentError("series is not divisible by the monomial");
    }
    r.add_term(f, c);
  }
  return r;
}

TruncSeries TruncSeries::retruncated(const Truncation& t) const {
  if (t.vars != t_.vars) throw ArgumentError("retruncation must keep the variables");
  TruncSeries r(t);
  for (const auto& [e, c] : c_) r.add_term(e, c);
  return r;
}

bool TruncSeries::operator==(const TruncSeries& o) const {
  if (t_.vars != o.t_.vars) return false;
  for (const auto& [e, c] : c_)
    if (o.t_.keeps(e) && o.coeff(e) != c) return false;
  for (const auto& [e, c] : o.c_)
    if (t_.keeps(e) && coeff(e) != c) return false;
  return true;
}

TruncSeries substitute(const TruncSeries& outer, const std::map<std::string, TruncSeries>& repl,
                       const Truncation& target) {
  const auto& ov = outer.truncation().vars;
  // per outer variable: replacement series, with cached powers
  std::vector<std::vector<TruncSeries>> powers(ov.size());
  for (std::size_t i = 0; i < ov.size(); ++i) {
    auto it = repl.find(ov[i]);
    TruncSeries base = it != repl.end() ? it->second : TruncSeries::variable(target, ov[i]);
    if (!(base.truncation() == target))
      throw ArgumentError("substituted series must use the target truncation");
    if (base.constant_term() != 0)
      throw ArgumentError("substituted series for '" + ov[i] + "' has a nonzero constant term");
    powers[i].push_back(TruncSeries::constant(target, 1));
    powers[i].push_back(std::move(base));
  }
  for (const auto& [v, s] : repl) outer.truncation().index_of(v);
  TruncSeries r(target);
  for (const auto& [e, c] : outer.terms()) {
    TruncSeries t = TruncSeries::constant(target, c);
    for (std::size_t i = 0; i < e.size() && !t.is_zero(); ++i) {
      auto& pw = powers[i];
      while (static_cast<int>(pw.size()) <= e[i]) pw.push_back(pw.back() * pw[1]);
      if (e[i] > 0) t = t * pw[e[i]];
    }
    r = r + t;
  }
  return r;
}

TruncSeries rename(const TruncSeries& s, const std::vector<std::string>& names,
                   const Truncation& target) {
  if (names.size() != s.truncation().vars.size())
    throw ArgumentError("rename needs one name per variable");
  std::vector<int> pos;
  for (const auto& n : names) pos.push_back(target.index_of(n));
  TruncSeries r(target);
  for (const auto& [e, c] : s.terms()) {
    Exponents f(target.vars.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) f[pos[i]] += e[i];
    r.add_term(f, c);
  }
  return r;
}

}  // namespace propkit
