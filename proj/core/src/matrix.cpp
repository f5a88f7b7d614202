#include "golomb/matrix.hpp"

#include <utility>

#include "golomb/error.hpp"

namespace golomb {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols, RatVector entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw InputError("matrix entry count does not match its dimensions");
  }
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatVector RatMatrix::column(std::size_t c) const {
  RatVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

RatMatrix RatMatrix::select_columns(std::span<const std::size_t> cols) const {
  RatMatrix out(rows_, cols.size());
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols.size(); ++k) out(r, k) = (*this)(r, cols[k]);
  }
  return out;
}

RatVector RatMatrix::operator*(std::span<const Rat> v) const {
  if (v.size() != cols_) throw InputError("matrix-vector dimension mismatch");
  RatVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Rat acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (sgn(entries_[r * cols_ + c]) != 0) acc += entries_[r * cols_ + c] * v[c];
    }
    out[r] = std::move(acc);
  }
  return out;
}

RowEchelon row_reduce(const RatMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();

  // Integer copy, one row at a time scaled by the lcm of its denominators.
  std::vector<mpz_class> a(rows * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const auto row = m.row(r);
    const mpz_class lcm = common_denominator(RatVector(row.begin(), row.end()));
    for (std::size_t c = 0; c < cols; ++c) {
      a[r * cols + c] = row[c].get_num() * (lcm / row[c].get_den());
    }
  }
  auto at = [&](std::size_t r, std::size_t c) -> mpz_class& { return a[r * cols + c]; };

  std::vector<std::size_t> pivots;
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && at(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(at(p, j), at(r, j));
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class v = at(r, c) * at(i, j) - at(i, c) * at(r, j);
        mpz_divexact(at(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      at(i, c) = 0;
    }
    prev = at(r, c);
    pivots.push_back(c);
    ++r;
  }

  // Back-substitution to reduced form in rationals.
  RatMatrix reduced(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) reduced(i, j) = Rat(at(i, j));
  }
  for (std::size_t k = pivots.size(); k-- > 0;) {
    const std::size_t pc = pivots[k];
    const Rat inv = 1 / reduced(k, pc);
    for (std::size_t j = pc; j < cols; ++j) reduced(k, j) *= inv;
    for (std::size_t i = 0; i < k; ++i) {
      const Rat factor = reduced(i, pc);
      if (sgn(factor) == 0) continue;
      for (std::size_t j = pc; j < cols; ++j) reduced(i, j) -= factor * reduced(k, j);
    }
  }
  return {std::move(reduced), std::move(pivots)};
}

std::size_t rank(const RatMatrix& m) { return row_reduce(m).rank(); }

std::vector<RatVector> kernel_basis(const RatMatrix& m) {
  const RowEchelon ech = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : ech.pivot_cols) is_pivot[c] = true;

  std::vector<RatVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RatVector v(m.cols());
    v[f] = 1;
    for (std::size_t k = 0; k < ech.pivot_cols.size(); ++k) {
      v[ech.pivot_cols[k]] = -ech.reduced(k, f);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<RatVector> row_space_basis(const RatMatrix& m) {
  const RowEchelon ech = row_reduce(m);
  std::vector<RatVector> out;
  for (std::size_t k = 0; k < ech.rank(); ++k) {
    const auto row = ech.reduced.row(k);
    out.emplace_back(row.begin(), row.end());
  }
  return out;
}

}  // namespace golomb
