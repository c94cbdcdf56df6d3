#include "propkit/linalg.hpp"

#include "propkit/errors.hpp"

#include <algorithm>

namespace propkit {

SparseVec SparseVec::from_map(const std::map<int, Rational>& m) {
  SparseVec v;
  for (const auto& [c, x] : m)
    if (x != 0) v.e_.emplace_back(c, x);
  return v;
}

Rational SparseVec::get(int col) const {
  auto it = std::lower_bound(e_.begin(), e_.end(), col,
                             [](const Entry& e, int c) { return e.first < c; });
  if (it != e_.end() && it->first == col) return it->second;
  return 0;
}

void SparseVec::axpy(const Rational& a, const SparseVec& other) {
  if (a == 0 || other.e_.empty()) return;
  std::vector<Entry> out;
  out.reserve(e_.size() + other.e_.size());
  auto i = e_.begin();
  auto j = other.e_.begin();
  while (i != e_.end() || j != other.e_.end()) {
    if (j == other.e_.end() || (i != e_.end() && i->first < j->first)) {
      out.push_back(std::move(*i++));
    } else if (i == e_.end() || j->first < i->first) {
      out.emplace_back(j->first, a * j->second);
      ++j;
    } else {
      Rational s = i->second + a * j->second;
      if (s != 0) out.emplace_back(i->first, std::move(s));
      ++i;
      ++j;
    }
  }
  e_ = std::move(out);
}

void SparseVec::scale(const Rational& a) {
  if (a == 0) {
    e_.clear();
    return;
  }
  for (auto& e : e_) e.second *= a;
}

void SparseVec::add(int col, const Rational& v) {
  if (v == 0) return;
  auto it = std::lower_bound(e_.begin(), e_.end(), col,
                             [](const Entry& e, int c) { return e.first < c; });
  if (it != e_.end() && it->first == col) {
    it->second += v;
    if (it->second == 0) e_.erase(it);
  } else {
    e_.insert(it, Entry(col, v));
  }
}

bool Matrix::is_zero() const {
  return std::all_of(a.begin(), a.end(), [](const Rational& x) { return x == 0; });
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols != o.rows) throw ArgumentError("matrix product: shape mismatch");
  Matrix r(rows, o.cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      const Rational& x = at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < o.cols; ++j)
        if (o.at(k, j) != 0) r.at(i, j) += x * o.at(k, j);
    }
  return r;
}

Matrix Matrix::transpose() const {
  Matrix t(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
  return t;
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

SparseVec RowSpace::reduce(SparseVec v) const {
  std::size_t i = 0;
  while (i < v.size()) {
    int col = v.entries()[i].first;
    auto it = pivot_row_.find(col);
    if (it == pivot_row_.end()) {
      ++i;
      continue;
    }
    // the pivot entry cancels; everything added lies to the right of col
    Rational f = -v.entries()[i].second;
    v.axpy(f, rows_[it->second]);
  }
  return v;
}

bool RowSpace::insert(SparseVec v) {
  for (const auto& e : v.entries())
    if (e.first < 0 || e.first >= ncols_) throw ArgumentError("RowSpace: column out of range");
  v = reduce(std::move(v));
  if (v.empty()) return false;
  Rational inv = 1 / v.entries().front().second;
  v.scale(inv);
  pivot_row_[v.lead()] = rows_.size();
  rows_.push_back(std::move(v));
  return true;
}

std::vector<int> RowSpace::pivots() const {
  std::vector<int> p;
  for (const auto& kv : pivot_row_) p.push_back(kv.first);
  return p;
}

std::vector<int> RowSpace::free_columns() const {
  std::vector<int> f;
  for (int c = 0; c < ncols_; ++c)
    if (!pivot_row_.count(c)) f.push_back(c);
  return f;
}

std::vector<SparseVec> RowSpace::rref() const {
  std::vector<SparseVec> out;
  std::vector<int> piv = pivots();
  out.reserve(piv.size());
  for (int p : piv) out.push_back(rows_[pivot_row_.at(p)]);
  // back substitution, largest pivot first
  for (int a = static_cast<int>(piv.size()) - 1; a >= 0; --a) {
    for (int b = 0; b < static_cast<int>(piv.size()); ++b) {
      if (b == a) continue;
      Rational x = out[b].get(piv[a]);
      if (x != 0) out[b].axpy(-x, out[a]);
    }
  }
  return out;
}

std::vector<SparseVec> RowSpace::kernel() const {
  std::vector<SparseVec> R = rref();
  std::vector<int> piv = pivots();
  std::vector<SparseVec> ker;
  for (int f : free_columns()) {
    std::map<int, Rational> m;
    m[f] = 1;
    for (std::size_t r = 0; r < R.size(); ++r) {
      Rational x = R[r].get(f);
      if (x != 0) m[piv[r]] = -x;
    }
    ker.push_back(SparseVec::from_map(m));
  }
  return ker;
}

bool RowSpace::same_span(const RowSpace& o) const {
  if (ncols_ != o.ncols_ || rank() != o.rank()) return false;
  for (const auto& r : o.rows_)
    if (!contains(r)) return false;
  return true;
}

int rank_bareiss(const Matrix& m) {
  int R = m.rows, C = m.cols;
  std::vector<std::vector<Integer>> a(R, std::vector<Integer>(C));
  for (int i = 0; i < R; ++i) {
    Integer l = 1;
    for (int j = 0; j < C; ++j) {
      Integer d = boost::multiprecision::denominator(m.at(i, j));
      l = boost::multiprecision::lcm(l, d);
    }
    for (int j = 0; j < C; ++j) {
      Rational s = m.at(i, j) * l;
      a[i][j] = boost::multiprecision::numerator(s);
    }
  }
  int rank = 0;
  Integer prev = 1;
  for (int col = 0; col < C && rank < R; ++col) {
    int p = -1;
    for (int i = rank; i < R; ++i)
      if (a[i][col] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(a[p], a[rank]);
    for (int i = rank + 1; i < R; ++i) {
      for (int j = col + 1; j < C; ++j) {
        a[i][j] = (a[rank][col] * a[i][j] - a[i][col] * a[rank][j]) / prev;
      }
      a[i][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

}  // namespace propkit
