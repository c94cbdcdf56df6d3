#pragma once

#include "propkit/rational.hpp"

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

namespace propkit {

// Sparse vector: entries sorted by column, no explicit zeros.
class SparseVec {
 public:
  using Entry = std::pair<int, Rational>;

  SparseVec() = default;
  static SparseVec from_map(const std::map<int, Rational>& m);

  bool empty() const { return e_.empty(); }
  std::size_t size() const { return e_.size(); }
  const std::vector<Entry>& entries() const { return e_; }
  Rational get(int col) const;
  int lead() const { return e_.front().first; }

  // this += a * other
  void axpy(const Rational& a, const SparseVec& other);
  void scale(const Rational& a);
  void add(int col, const Rational& v);  // O(n) insert; fine for assembly

  bool operator==(const SparseVec& o) const { return e_ == o.e_; }

 private:
  std::vector<Entry> e_;
};

struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<Rational> a;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}
  Rational& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  const Rational& at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
  bool is_zero() const;
  Matrix operator*(const Matrix& o) const;
  Matrix transpose() const;
  static Matrix identity(int n);
};

// Incremental row echelon form over Q. Rows are kept with leading 1.
class RowSpace {
 public:
  explicit RowSpace(int ncols) : ncols_(ncols) {}

  int ncols() const { return ncols_; }
  int rank() const { return static_cast<int>(rows_.size()); }

  // Returns true if v was independent of the rows so far.
  bool insert(SparseVec v);
  // Eliminates every pivot column of v.
  SparseVec reduce(SparseVec v) const;
  bool contains(const SparseVec& v) const { return reduce(v).empty(); }

  std::vector<int> pivots() const;
  std::vector<int> free_columns() const;

  // Fully reduced rows sorted by pivot column.
  std::vector<SparseVec> rref() const;
  // Null space of the matrix whose rows span this space: one vector per
  // free column f, with entry 1 at f and zero at the other free columns.
  std::vector<SparseVec> kernel() const;

  bool same_span(const RowSpace& o) const;

 private:
  int ncols_;
  std::vector<SparseVec> rows_;
  std::map<int, std::size_t> pivot_row_;
};

// Rank by fraction-free elimination (rows scaled to integers first).
int rank_bareiss(const Matrix& m);

}  // namespace propkit
