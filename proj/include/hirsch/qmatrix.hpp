#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "hirsch/rational.hpp"

namespace hirsch {

/// Dense row-major matrix of exact rationals.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static QMatrix identity(std::size_t n);
  /// All rows must have equal length; `cols` is used when `rows` is empty.
  static QMatrix from_rows(const std::vector<QVector>& rows, std::size_t cols = 0);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<const Rational> row(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }
  std::span<Rational> row(std::size_t r) { return {entries_.data() + r * cols_, cols_}; }

  QVector column(std::size_t c) const;
  QMatrix transpose() const;

  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  QVector operator*(std::span<const Rational> x) const;

  bool operator==(const QMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

struct RowEchelon {
  QMatrix reduced;                   // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

RowEchelon rref(QMatrix m);

std::size_t rank(const QMatrix& m);

/// One exact solution of A·x = b, or nullopt when the system is inconsistent.
/// Free variables are set to zero.
std::optional<QVector> solve_affine(const QMatrix& a, std::span<const Rational> b);

/// Basis of {x : A·x = 0}, one vector per free column of rref(A), in column order.
std::vector<QVector> null_space(const QMatrix& a);

}  // namespace hirsch
