#include "galcomp/qmatrix.hpp"

#include <stdexcept>
#include <utility>

namespace galcomp::nf {

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::from_columns(const std::vector<QVector>& columns, std::size_t rows) {
  QMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw std::invalid_argument("QMatrix::from_columns: ragged columns");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

QVector QMatrix::column(std::size_t c) const {
  QVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

QVector QMatrix::operator*(const QVector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("QMatrix * vector: size mismatch");
  QVector out(rows_, mpq_class(0));
  for (std::size_t r = 0; r < rows_; ++r) {
    mpq_class acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
      const mpq_class& x = a_[r * cols_ + c];
      if (sgn(x) != 0 && sgn(v[c]) != 0) acc += x * v[c];
    }
    out[r] = acc;
  }
  return out;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("QMatrix product: size mismatch");
  QMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const mpq_class& x = a(i, k);
      if (sgn(x) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (sgn(b(k, j)) != 0) out(i, j) += x * b(k, j);
      }
    }
  }
  return out;
}

QMatrix operator-(const QMatrix& a, const QMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("QMatrix difference: size mismatch");
  QMatrix out = a;
  for (std::size_t i = 0; i < out.a_.size(); ++i) out.a_[i] -= b.a_[i];
  return out;
}

std::vector<std::size_t> QMatrix::rref() {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
    std::size_t p = row;
    while (p < rows_ && sgn((*this)(p, col)) == 0) ++p;
    if (p == rows_) continue;
    if (p != row) {
      for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(p, c), (*this)(row, c));
    }
    const mpq_class inv = 1 / (*this)(row, col);
    for (std::size_t c = col; c < cols_; ++c) (*this)(row, c) *= inv;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == row) continue;
      const mpq_class f = (*this)(r, col);
      if (sgn(f) == 0) continue;
      for (std::size_t c = col; c < cols_; ++c) {
        if (sgn((*this)(row, c)) != 0) (*this)(r, c) -= f * (*this)(row, c);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t QMatrix::rank() const {
  QMatrix m = *this;
  return m.rref().size();
}

std::vector<QVector> QMatrix::kernel() const {
  QMatrix m = *this;
  std::vector<std::size_t> pivots = m.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<QVector> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    QVector v(cols_, mpq_class(0));
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<QVector> QMatrix::solve(const QVector& b) const {
  if (b.size() != rows_) throw std::invalid_argument("QMatrix::solve: size mismatch");
  QMatrix aug(rows_, cols_ + 1);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) aug(r, c) = (*this)(r, c);
    aug(r, cols_) = b[r];
  }
  std::vector<std::size_t> pivots = aug.rref();
  if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
  QVector x(cols_, mpq_class(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, cols_);
  return x;
}

bool is_zero(const QVector& v) {
  for (const auto& x : v) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

std::optional<QVector> LinearSpan::add(const QVector& v) {
  if (v.size() != dim_) throw std::invalid_argument("LinearSpan::add: size mismatch");
  const std::size_t n = rows_.size();
  QVector w = v;
  QVector comb(n + 1, mpq_class(0));
  comb[n] = 1;
  for (const auto& row : rows_) {
    if (sgn(w[row.pivot]) == 0) continue;
    const mpq_class c = w[row.pivot] / row.v[row.pivot];
    for (std::size_t i = 0; i < dim_; ++i) {
      if (sgn(row.v[i]) != 0) w[i] -= c * row.v[i];
    }
    for (std::size_t i = 0; i < row.comb.size(); ++i) {
      if (sgn(row.comb[i]) != 0) comb[i] -= c * row.comb[i];
    }
  }
  std::size_t pivot = 0;
  while (pivot < dim_ && sgn(w[pivot]) == 0) ++pivot;
  if (pivot == dim_) {
    // 0 = w = sum comb[i] v_i with comb[n] = 1.
    QVector out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = -comb[i];
    return out;
  }
  rows_.push_back(Row{std::move(w), pivot, std::move(comb)});
  return std::nullopt;
}

}  // namespace galcomp::nf
