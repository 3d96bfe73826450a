#include "dgla/matrix.hpp"

#include <cassert>
#include <stdexcept>

namespace dgla {

void row_axpy(SparseRow& dst, const Rational& c, const SparseRow& src) {
  if (dgla::is_zero(c)) return;
  for (const auto& [j, v] : src) {
    auto it = dst.find(j);
    if (it == dst.end()) {
      Rational w = c * v;
      if (!dgla::is_zero(w)) dst.emplace(j, w);
    } else {
      it->second += c * v;
      if (dgla::is_zero(it->second)) dst.erase(it);
    }
  }
}

void row_scale(SparseRow& r, const Rational& c) {
  if (dgla::is_zero(c)) {
    r.clear();
    return;
  }
  for (auto& [j, v] : r) v *= c;
}

SparseMatrix SparseMatrix::identity(int n) {
  SparseMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

void SparseMatrix::set(int r, int c, const Rational& v) {
  assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
  if (dgla::is_zero(v))
    row_[r].erase(c);
  else
    row_[r][c] = v;
}

void SparseMatrix::add_to(int r, int c, const Rational& v) {
  assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
  auto it = row_[r].find(c);
  if (it == row_[r].end()) {
    if (!dgla::is_zero(v)) row_[r].emplace(c, v);
  } else {
    it->second += v;
    if (dgla::is_zero(it->second)) row_[r].erase(it);
  }
}

Rational SparseMatrix::get(int r, int c) const {
  auto it = row_[r].find(c);
  return it == row_[r].end() ? Rational(0) : it->second;
}

bool SparseMatrix::is_zero() const {
  for (const auto& r : row_)
    if (!r.empty()) return false;
  return true;
}

std::size_t SparseMatrix::nnz() const {
  std::size_t n = 0;
  for (const auto& r : row_) n += r.size();
  return n;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (const auto& [j, v] : row_[i]) t.row_[j].emplace(i, v);
  return t;
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("matrix shape mismatch in product");
  SparseMatrix out(rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i)
    for (const auto& [k, v] : row_[i]) row_axpy(out.row_[i], v, rhs.row_[k]);
  return out;
}

SparseMatrix SparseMatrix::operator+(const SparseMatrix& rhs) const {
  if (cols_ != rhs.cols_ || rows_ != rhs.rows_)
    throw std::invalid_argument("matrix shape mismatch in sum");
  SparseMatrix out = *this;
  for (int i = 0; i < rows_; ++i) row_axpy(out.row_[i], 1, rhs.row_[i]);
  return out;
}

SparseMatrix SparseMatrix::scaled(const Rational& c) const {
  SparseMatrix out(rows_, cols_);
  if (dgla::is_zero(c)) return out;
  for (int i = 0; i < rows_; ++i) {
    out.row_[i] = row_[i];
    row_scale(out.row_[i], c);
  }
  return out;
}

bool SparseMatrix::operator==(const SparseMatrix& rhs) const {
  return rows_ == rhs.rows_ && cols_ == rhs.cols_ && row_ == rhs.row_;
}

SparseRow SparseMatrix::apply(const SparseRow& x) const {
  SparseRow out;
  for (int i = 0; i < rows_; ++i) {
    Rational acc = 0;
    const auto& r = row_[i];
    if (r.size() <= x.size()) {
      for (const auto& [j, v] : r) {
        auto it = x.find(j);
        if (it != x.end()) acc += v * it->second;
      }
    } else {
      for (const auto& [j, v] : x) {
        auto it = r.find(j);
        if (it != r.end()) acc += it->second * v;
      }
    }
    if (!dgla::is_zero(acc)) out.emplace(i, acc);
  }
  return out;
}

long SparseMatrix::rank() const {
  // Clear denominators per row, then run one-step fraction-free elimination
  // (Bareiss): entries stay integral, divisions are exact by the Sylvester
  // identity.
  using IRow = std::map<int, Integer>;
  std::vector<IRow> work;
  work.reserve(row_.size());
  for (const auto& r : row_) {
    if (r.empty()) continue;
    Integer l = 1;
    for (const auto& [j, v] : r) l = lcm(l, v.get_den());
    IRow ir;
    for (const auto& [j, v] : r) {
      Rational s = v * l;
      ir.emplace(j, s.get_num());
    }
    work.push_back(std::move(ir));
  }
  long rank = 0;
  Integer prev = 1;
  std::size_t top = 0;
  while (top < work.size()) {
    // pivot: smallest leading column among remaining rows, then lowest row
    int pc = -1;
    std::size_t pr = top;
    for (std::size_t i = top; i < work.size(); ++i) {
      if (work[i].empty()) continue;
      int lead = work[i].begin()->first;
      if (pc == -1 || lead < pc) {
        pc = lead;
        pr = i;
      }
    }
    if (pc == -1) break;
    std::swap(work[top], work[pr]);
    const Integer piv = work[top].begin()->second;
    for (std::size_t i = top + 1; i < work.size(); ++i) {
      IRow& r = work[i];
      auto it = r.find(pc);
      Integer f = (it == r.end()) ? Integer(0) : it->second;
      IRow out;
      auto a = r.begin();
      auto b = work[top].begin();
      while (a != r.end() || b != work[top].end()) {
        int col;
        Integer val;
        if (b == work[top].end() || (a != r.end() && a->first < b->first)) {
          col = a->first;
          val = piv * a->second;
          ++a;
        } else if (a == r.end() || b->first < a->first) {
          col = b->first;
          val = -f * b->second;
          ++b;
        } else {
          col = a->first;
          val = piv * a->second - f * b->second;
          ++a;
          ++b;
        }
        if (sgn(val) != 0) {
          Integer q;
          mpz_divexact(q.get_mpz_t(), val.get_mpz_t(), prev.get_mpz_t());
          out.emplace(col, std::move(q));
        }
      }
      out.erase(pc);
      r = std::move(out);
    }
    prev = piv;
    ++rank;
    ++top;
  }
  return rank;
}

std::vector<SparseRow> SparseMatrix::kernel_basis() const {
  // Insert columns left to right; a dependent column yields a kernel vector.
  LinSolver solver;
  SparseMatrix t = transpose();
  std::vector<SparseRow> out;
  std::vector<int> kept;
  for (int j = 0; j < cols_; ++j) {
    const SparseRow& col = t.row(j);
    auto [residual, combo] = solver.reduce(col);
    if (residual.empty()) {
      SparseRow k;
      // combo indexes previously kept columns; map back to column ids
      for (const auto& [kid, c] : combo) k[kept[kid]] = -c;
      k[j] = 1;
      out.push_back(std::move(k));
    } else {
      solver.insert(col);
      kept.push_back(j);
    }
  }
  return out;
}

std::optional<SparseRow> SparseMatrix::solve(const SparseRow& b) const {
  LinSolver solver;
  SparseMatrix t = transpose();
  std::vector<int> kept;
  for (int j = 0; j < cols_; ++j)
    if (solver.insert(t.row(j))) kept.push_back(j);
  auto combo = solver.express(b);
  if (!combo) return std::nullopt;
  SparseRow x;
  for (const auto& [kid, c] : *combo) x[kept[kid]] = c;
  return x;
}

bool LinSolver::insert(const SparseRow& v) {
  auto [residual, combo] = reduce(v);
  if (residual.empty()) return false;
  ERow er;
  er.lead = residual.begin()->first;
  Rational inv = 1 / residual.begin()->second;
  er.v = std::move(residual);
  row_scale(er.v, inv);
  er.combo = std::move(combo);
  // combo currently expresses the *reduction*: v - sum combo_k kept_k = residual
  // we want residual_normalized = (v - sum combo_k kept_k) / lead
  for (auto& [k, c] : er.combo) c = -c * inv;
  er.combo[kept_] = inv;
  lead_to_row_[er.lead] = static_cast<int>(rows_.size());
  rows_.push_back(std::move(er));
  ++kept_;
  return true;
}

std::pair<SparseRow, SparseRow> LinSolver::reduce(SparseRow v) const {
  SparseRow combo;
  while (!v.empty()) {
    int lead = v.begin()->first;
    auto it = lead_to_row_.find(lead);
    if (it == lead_to_row_.end()) break;
    const ERow& er = rows_[it->second];
    Rational c = v.begin()->second;  // er.v has leading coefficient 1
    row_axpy(v, -c, er.v);
    row_axpy(combo, c, er.combo);
    v.erase(lead);  // guard against residue from exact cancellation bookkeeping
  }
  return {std::move(v), std::move(combo)};
}

std::optional<SparseRow> LinSolver::express(const SparseRow& v) const {
  auto [residual, combo] = reduce(v);
  if (!residual.empty()) return std::nullopt;
  return combo;
}

bool LinSolver::contains(const SparseRow& v) const {
  auto [residual, combo] = reduce(v);
  return residual.empty();
}

long dense_rank(std::vector<std::vector<Rational>> m) {
  if (m.empty()) return 0;
  std::size_t rows = m.size(), cols = m[0].size();
  long rank = 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && is_zero(m[p][c])) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    Rational inv = 1 / m[r][c];
    for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || is_zero(m[i][c])) continue;
      Rational f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
    ++rank;
  }
  return rank;
}

}  // namespace dgla
