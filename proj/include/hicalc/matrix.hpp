#ifndef HICALC_MATRIX_HPP
#define HICALC_MATRIX_HPP

#include <initializer_list>
#include <utility>
#include <vector>

#include "hicalc/rational.hpp"

namespace hicalc {

// Dense matrix over Q, row-major.  Rows or columns may be zero; the data
// vector is then empty but the shape is still meaningful.
class QMatrix {
 public:
  QMatrix() : rows_(0), cols_(0) {}
  QMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {
    if (rows < 0 || cols < 0) throw input_error("negative matrix dimension");
  }
  QMatrix(std::initializer_list<std::initializer_list<Rational>> init) {
    rows_ = static_cast<int>(init.size());
    cols_ = rows_ == 0 ? 0 : static_cast<int>(init.begin()->size());
    a_.reserve(static_cast<std::size_t>(rows_) * cols_);
    for (const auto& row : init) {
      if (static_cast<int>(row.size()) != cols_)
        throw input_error("ragged matrix initializer");
      for (const auto& v : row) a_.push_back(v);
    }
  }

  static QMatrix identity(int n) {
    QMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Rational& at(int r, int c) const {
    return a_[static_cast<std::size_t>(r) * cols_ + c];
  }

  bool operator==(const QMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

  bool is_zero() const {
    for (const auto& v : a_)
      if (v != 0) return false;
    return true;
  }

  void swap_rows(int r1, int r2) {
    if (r1 == r2) return;
    for (int c = 0; c < cols_; ++c) std::swap(at(r1, c), at(r2, c));
  }

  QMatrix transpose() const {
    QMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
  }

  QMatrix operator*(const QMatrix& o) const {
    if (cols_ != o.rows_) throw input_error("matrix product shape mismatch");
    QMatrix p(rows_, o.cols_);
    for (int r = 0; r < rows_; ++r)
      for (int k = 0; k < cols_; ++k) {
        const Rational& v = at(r, k);
        if (v == 0) continue;
        for (int c = 0; c < o.cols_; ++c) p.at(r, c) += v * o.at(k, c);
      }
    return p;
  }

  QMatrix operator-(const QMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw input_error("matrix difference shape mismatch");
    QMatrix d(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) d.a_[i] = a_[i] - o.a_[i];
    return d;
  }

  // Columns of `o` appended on the right.
  QMatrix hstack(const QMatrix& o) const {
    if (rows_ != o.rows_) throw input_error("hstack row mismatch");
    QMatrix s(rows_, cols_ + o.cols_);
    for (int r = 0; r < rows_; ++r) {
      for (int c = 0; c < cols_; ++c) s.at(r, c) = at(r, c);
      for (int c = 0; c < o.cols_; ++c) s.at(r, cols_ + c) = o.at(r, c);
    }
    return s;
  }

  QMatrix column(int c) const {
    QMatrix v(rows_, 1);
    for (int r = 0; r < rows_; ++r) v.at(r, 0) = at(r, c);
    return v;
  }

 private:
  int rows_;
  int cols_;
  std::vector<Rational> a_;
};

struct RrefResult {
  QMatrix reduced;
  std::vector<int> pivot_columns;  // strictly increasing
};

// Reduced row echelon form.  Forward elimination is fraction-free
// (cross-multiplied row updates, no divisions); pivots are normalized to 1
// during back-substitution.  Pivot choice is deterministic: first row with a
// nonzero entry in the leftmost unfinished column.
inline RrefResult rref(QMatrix m) {
  std::vector<int> pivots;
  int pr = 0;
  for (int c = 0; c < m.cols() && pr < m.rows(); ++c) {
    int sel = -1;
    for (int r = pr; r < m.rows(); ++r)
      if (m.at(r, c) != 0) {
        sel = r;
        break;
      }
    if (sel < 0) continue;
    m.swap_rows(pr, sel);
    for (int r = pr + 1; r < m.rows(); ++r) {
      if (m.at(r, c) == 0) continue;
      const Rational f = m.at(r, c);
      const Rational p = m.at(pr, c);
      m.at(r, c) = 0;
      for (int k = c + 1; k < m.cols(); ++k) m.at(r, k) = p * m.at(r, k) - f * m.at(pr, k);
    }
    pivots.push_back(c);
    ++pr;
  }
  for (int i = static_cast<int>(pivots.size()) - 1; i >= 0; --i) {
    const int c = pivots[i];
    const Rational p = m.at(i, c);
    m.at(i, c) = 1;
    for (int k = c + 1; k < m.cols(); ++k) m.at(i, k) /= p;
    for (int r = 0; r < i; ++r) {
      const Rational f = m.at(r, c);
      if (f == 0) continue;
      m.at(r, c) = 0;
      for (int k = c + 1; k < m.cols(); ++k) m.at(r, k) -= f * m.at(i, k);
    }
  }
  return RrefResult{std::move(m), std::move(pivots)};
}

inline int rank(const QMatrix& m) {
  return static_cast<int>(rref(m).pivot_columns.size());
}

// Basis of ker(m) as columns, one per free column of the rref.  Deterministic:
// free columns in increasing order, each basis vector has a 1 in its free slot.
inline QMatrix kernel_basis(const QMatrix& m) {
  const RrefResult rr = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : rr.pivot_columns) is_pivot[c] = true;
  const int nullity = m.cols() - static_cast<int>(rr.pivot_columns.size());
  QMatrix k(m.cols(), nullity);
  int out = 0;
  for (int fc = 0; fc < m.cols(); ++fc) {
    if (is_pivot[fc]) continue;
    k.at(fc, out) = 1;
    for (std::size_t i = 0; i < rr.pivot_columns.size(); ++i)
      k.at(rr.pivot_columns[i], out) = -rr.reduced.at(static_cast<int>(i), fc);
    ++out;
  }
  return k;
}

// Columns spanning a complement of ker(m) inside the domain: the standard
// basis vectors indexed by the pivot columns of rref(m).  The restriction of m
// to their span is injective and column count equals rank(m).  Ties break to
// the lowest column index because rref picks leftmost pivots.
inline QMatrix image_complement_basis(const QMatrix& m) {
  const RrefResult rr = rref(m);
  QMatrix y(m.cols(), static_cast<int>(rr.pivot_columns.size()));
  for (std::size_t j = 0; j < rr.pivot_columns.size(); ++j)
    y.at(rr.pivot_columns[j], static_cast<int>(j)) = 1;
  return y;
}

}  // namespace hicalc

#endif
