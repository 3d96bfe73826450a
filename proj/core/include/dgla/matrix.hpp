#pragma once

#include <map>
#include <optional>
#include <vector>

#include "dgla/rational.hpp"

namespace dgla {

using SparseRow = std::map<int, Rational>;

void row_axpy(SparseRow& dst, const Rational& c, const SparseRow& src);
void row_scale(SparseRow& r, const Rational& c);

// Sparse matrix over the rationals, rows stored as ordered column->value maps.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols), row_(rows) {}

  static SparseMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  void set(int r, int c, const Rational& v);
  void add_to(int r, int c, const Rational& v);
  Rational get(int r, int c) const;
  const SparseRow& row(int r) const { return row_[r]; }

  bool is_zero() const;
  std::size_t nnz() const;

  SparseMatrix transpose() const;
  SparseMatrix operator*(const SparseMatrix& rhs) const;
  SparseMatrix operator+(const SparseMatrix& rhs) const;
  SparseMatrix scaled(const Rational& c) const;
  bool operator==(const SparseMatrix& rhs) const;

  SparseRow apply(const SparseRow& x) const;  // column vector in, column vector out

  // Rank by fraction-free Bareiss elimination on denominator-cleared rows.
  long rank() const;

  // Basis of the column kernel {x : A x = 0}, deterministic echelon order.
  std::vector<SparseRow> kernel_basis() const;

  // One solution of A x = b if consistent.
  std::optional<SparseRow> solve(const SparseRow& b) const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<SparseRow> row_;
};

// Incremental echelon span with combination tracking: inserted vectors get
// ids 0,1,2,...; only independent ones enter the echelon. express() writes a
// vector as a combination of the independent inserted ones.
class LinSolver {
 public:
  // Returns true when v was independent of the span so far (v gets kept).
  bool insert(const SparseRow& v);
  long rank() const { return static_cast<long>(rows_.size()); }

  // Residual after reduction plus the combination of kept vectors used.
  std::pair<SparseRow, SparseRow> reduce(SparseRow v) const;
  std::optional<SparseRow> express(const SparseRow& v) const;
  bool contains(const SparseRow& v) const;

 private:
  struct ERow {
    SparseRow v;
    SparseRow combo;  // v == sum combo[k] * inserted_kept[k]
    int lead = 0;
  };
  std::vector<ERow> rows_;
  std::map<int, int> lead_to_row_;
  int kept_ = 0;
};

// Naive dense Gaussian elimination rank; used as an independent oracle.
long dense_rank(std::vector<std::vector<Rational>> m);

}  // namespace dgla
