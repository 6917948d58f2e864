#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <vector>

namespace galcomp::nf {

using QVector = std::vector<mpq_class>;

/// Dense row-major matrix over the rationals.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, mpq_class(0)) {}

  static QMatrix identity(std::size_t n);
  /// Matrix whose columns are the given vectors (all of equal length).
  static QMatrix from_columns(const std::vector<QVector>& columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  mpq_class& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const mpq_class& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  QVector column(std::size_t c) const;
  QVector operator*(const QVector& v) const;
  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator-(const QMatrix& a, const QMatrix& b);
  friend bool operator==(const QMatrix& a, const QMatrix& b) = default;

  /// Reduced row echelon form in place; returns the pivot columns.
  std::vector<std::size_t> rref();
  std::size_t rank() const;
  /// A basis of { x : A x = 0 }.
  std::vector<QVector> kernel() const;
  /// Some x with A x = b, if one exists.
  std::optional<QVector> solve(const QVector& b) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpq_class> a_;
};

bool is_zero(const QVector& v);

/// Vectors added one at a time and kept in echelon form, to find the first
/// linear dependency in a sequence cheaply.
class LinearSpan {
 public:
  explicit LinearSpan(std::size_t dim) : dim_(dim) {}

  /// If v lies in the span of the vectors added so far, returns c with
  /// v = sum_i c[i] v_i over them in order of addition; otherwise records v
  /// and returns nothing.
  std::optional<QVector> add(const QVector& v);
  std::size_t size() const { return rows_.size(); }

 private:
  struct Row {
    QVector v;
    std::size_t pivot;
    QVector comb;  // v as a combination of the added vectors
  };
  std::size_t dim_;
  std::vector<Row> rows_;
};

}  // namespace galcomp::nf
