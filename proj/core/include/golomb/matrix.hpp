#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "golomb/rational.hpp"

namespace golomb {

/// Dense row-major rational matrix.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  RatMatrix(std::size_t rows, std::size_t cols, RatVector entries);

  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rat& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<const Rat> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }
  RatVector column(std::size_t c) const;
  const RatVector& entries() const { return entries_; }

  /// Restriction to the given columns, in the given order.
  RatMatrix select_columns(std::span<const std::size_t> cols) const;

  RatVector operator*(std::span<const Rat> v) const;

  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  RatVector entries_;
};

/// Reduced row echelon form together with its pivot columns.
struct RowEchelon {
  RatMatrix reduced;                     // zero rows trail
  std::vector<std::size_t> pivot_cols;   // ascending; size == rank
  std::size_t rank() const { return pivot_cols.size(); }
};

/// Fraction-free (Bareiss) forward elimination over integers followed by
/// exact back-substitution. Rows are first scaled to integers, which leaves
/// the row space unchanged.
RowEchelon row_reduce(const RatMatrix& m);

std::size_t rank(const RatMatrix& m);

/// Basis of {v : m v = 0}: one vector per free column, in ascending column
/// order, with a 1 in that free column and 0 in the other free columns.
std::vector<RatVector> kernel_basis(const RatMatrix& m);

/// Nonzero rows of the reduced echelon form.
std::vector<RatVector> row_space_basis(const RatMatrix& m);

}  // namespace golomb
