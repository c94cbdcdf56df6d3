#include "propkit/dims.hpp"
#include "propkit/errors.hpp"

#include <algorithm>
#include <sstream>

namespace propkit {

namespace {
std::string key_text(int m, int n, int rho) {
  std::ostringstream s;
  s << "(" << m << "," << n << "," << rho << ")";
  return s.str();
}
}  // namespace

Window hull(const Window& a, const Window& b) {
  return {std::max(a.m, b.m), std::max(a.n, b.n), std::max(a.rho, b.rho)};
}

const char* to_string(Action a) {
  switch (a) {
    case Action::Trivial: return "trivial";
    case Action::Free: return "free";
    default: return "other";
  }
}

Action parse_action(const std::string& s) {
  if (s == "trivial") return Action::Trivial;
  if (s == "free") return Action::Free;
  if (s == "other") return Action::Other;
  throw ArgumentError("unknown action '" + s + "'");
}

DimTable::DimTable(Window w) : w_(w) {
  if (w.m < 0 || w.n < 0 || w.rho < 0) throw ArgumentError("negative window");
  d_.assign(static_cast<std::size_t>(w.m) * w.n * (w.rho + 1), Rational(0));
}

std::size_t DimTable::index(int m, int n, int rho) const {
  return (static_cast<std::size_t>(m - 1) * w_.n + (n - 1)) * (w_.rho + 1) + rho;
}

bool DimTable::proven_zero(int m, int n, int rho) const {
  if (m < 1 || n < 1 || rho < 0) return true;
  if (slope_ && m + n > *slope_ * rho + 2) return true;
  if (max_out_ && m > *max_out_) return true;
  if (max_in_ && n > *max_in_) return true;
  return false;
}

Rational DimTable::at(int m, int n, int rho) const {
  if (m >= 1 && n >= 1 && rho >= 0 && w_.contains(m, n, rho)) return d_[index(m, n, rho)];
  if (proven_zero(m, n, rho)) return 0;
  throw CapabilityError("entry " + key_text(m, n, rho) + " lies outside the table window " +
                        key_text(w_.m, w_.n, w_.rho) + " and is not known to vanish");
}

void DimTable::set(int m, int n, int rho, const Rational& v) {
  if (m < 1 || n < 1) throw ArgumentError("reduced table: m and n must be >= 1");
  if (rho < 0) throw ArgumentError("negative weight");
  if (!w_.contains(m, n, rho)) throw ArgumentError("entry " + key_text(m, n, rho) + " outside window");
  if (v < 0) throw ArgumentError("negative dimension at " + key_text(m, n, rho));
  if (v != 0 && proven_zero(m, n, rho))
    throw ArgumentError("entry " + key_text(m, n, rho) + " contradicts the declared support");
  d_[index(m, n, rho)] = v;
}

void DimTable::check_support_consistent() const {
  for (int m = 1; m <= w_.m; ++m)
    for (int n = 1; n <= w_.n; ++n)
      for (int r = 0; r <= w_.rho; ++r)
        if (d_[index(m, n, r)] != 0 && proven_zero(m, n, r))
          throw ArgumentError("support declaration contradicts entry " + key_text(m, n, r));
}

void DimTable::declare_slope(int s) {
  auto old = slope_;
  slope_ = s;
  try {
    check_support_consistent();
  } catch (...) {
    slope_ = old;
    throw;
  }
}

void DimTable::declare_max_out(int k) {
  auto old = max_out_;
  max_out_ = k;
  try {
    check_support_consistent();
  } catch (...) {
    max_out_ = old;
    throw;
  }
}

void DimTable::declare_max_in(int k) {
  auto old = max_in_;
  max_in_ = k;
  try {
    check_support_consistent();
  } catch (...) {
    max_in_ = old;
    throw;
  }
}

void DimTable::clear_support() {
  slope_.reset();
  max_out_.reset();
  max_in_.reset();
}

std::vector<std::tuple<int, int, int, Rational>> DimTable::nonzero() const {
  std::vector<std::tuple<int, int, int, Rational>> out;
  for (int m = 1; m <= w_.m; ++m)
    for (int n = 1; n <= w_.n; ++n)
      for (int r = 0; r <= w_.rho; ++r)
        if (d_[index(m, n, r)] != 0) out.emplace_back(m, n, r, d_[index(m, n, r)]);
  return out;
}

DimTable DimTable::resized(Window w) const {
  DimTable t(w);
  t.slope_ = slope_;
  t.max_out_ = max_out_;
  t.max_in_ = max_in_;
  for (int m = 1; m <= w.m; ++m)
    for (int n = 1; n <= w.n; ++n)
      for (int r = 0; r <= w.rho; ++r) t.d_[t.index(m, n, r)] = at(m, n, r);
  return t;
}

bool DimTable::is_connected_normalized() const {
  for (int m = 1; m <= w_.m; ++m)
    for (int n = 1; n <= w_.n; ++n) {
      Rational expect = (m == 1 && n == 1) ? 1 : 0;
      if (d_[index(m, n, 0)] != expect) return false;
    }
  return true;
}

bool DimTable::all_integral() const {
  return std::all_of(d_.begin(), d_.end(),
                     [](const Rational& q) { return boost::multiprecision::denominator(q) == 1; });
}

bool DimTable::same_entries(const DimTable& o) const {
  Window c{std::min(w_.m, o.w_.m), std::min(w_.n, o.w_.n), std::min(w_.rho, o.w_.rho)};
  for (int m = 1; m <= c.m; ++m)
    for (int n = 1; n <= c.n; ++n)
      for (int r = 0; r <= c.rho; ++r)
        if (at(m, n, r) != o.at(m, n, r)) return false;
  return true;
}

DimTable unit_table(Window w) {
  DimTable t(w);
  if (w.m >= 1 && w.n >= 1) t.set(1, 1, 0, 1);
  t.declare_slope(0);
  t.declare_max_out(1);
  t.declare_max_in(1);
  return t;
}

DimTable opposite(const DimTable& M) {
  const Window& w = M.window();
  DimTable t(Window{w.n, w.m, w.rho});
  for (const auto& [m, n, r, v] : M.nonzero()) t.set(n, m, r, v);
  if (M.slope()) t.declare_slope(*M.slope());
  if (M.max_out()) t.declare_max_in(*M.max_out());
  if (M.max_in()) t.declare_max_out(*M.max_in());
  return t;
}

DimTable restrict_weight(const DimTable& M, int k) {
  DimTable t(M.window());
  for (const auto& [m, n, r, v] : M.nonzero())
    if (r == k) t.set(m, n, r, v);
  if (M.slope()) t.declare_slope(*M.slope());
  if (M.max_out()) t.declare_max_out(*M.max_out());
  if (M.max_in()) t.declare_max_in(*M.max_in());
  return t;
}

DimTable add_tables(const DimTable& a, const DimTable& b) {
  Window w{std::min(a.window().m, b.window().m), std::min(a.window().n, b.window().n),
           std::min(a.window().rho, b.window().rho)};
  DimTable t(w);
  for (int m = 1; m <= w.m; ++m)
    for (int n = 1; n <= w.n; ++n)
      for (int r = 0; r <= w.rho; ++r) t.set(m, n, r, a.at(m, n, r) + b.at(m, n, r));
  if (a.slope() && b.slope()) t.declare_slope(std::max(*a.slope(), *b.slope()));
  if (a.max_out() && b.max_out()) t.declare_max_out(std::max(*a.max_out(), *b.max_out()));
  if (a.max_in() && b.max_in()) t.declare_max_in(std::max(*a.max_in(), *b.max_in()));
  return t;
}

}  // namespace propkit
