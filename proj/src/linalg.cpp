#include "sumsets/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace sumsets {

FqMatrix::FqMatrix(std::size_t rows, std::size_t cols, std::vector<Elem> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows_ * cols_) throw std::invalid_argument("FqMatrix: size mismatch");
}

FqMatrix FqMatrix::identity(std::size_t k) {
  FqMatrix out(k, k);
  for (std::size_t i = 0; i < k; ++i) out(i, i) = 1;
  return out;
}

bool FqMatrix::is_zero() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](Elem e) { return e == 0; });
}

FqMatrix FqMatrix::transposed() const {
  FqMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  }
  return out;
}

RowEchelon row_reduce(FqMatrix a, const PrimeField& field) {
  RowEchelon out;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < a.cols() && pivot_row < a.rows(); ++col) {
    std::size_t found = pivot_row;
    while (found < a.rows() && a(found, col) == 0) ++found;
    if (found == a.rows()) continue;
    if (found != pivot_row) {
      auto r1 = a.row(found);
      auto r2 = a.row(pivot_row);
      std::swap_ranges(r1.begin(), r1.end(), r2.begin());
    }
    const Elem scale = field.inv(a(pivot_row, col));
    for (auto& e : a.row(pivot_row)) e = field.mul(e, scale);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == pivot_row || a(r, col) == 0) continue;
      const Elem factor = a(r, col);
      auto target = a.row(r);
      auto source = a.row(pivot_row);
      for (std::size_t j = col; j < a.cols(); ++j) {
        target[j] = field.sub(target[j], field.mul(factor, source[j]));
      }
    }
    out.pivot_cols.push_back(col);
    ++pivot_row;
  }
  out.reduced = std::move(a);
  return out;
}

std::size_t matrix_rank(const FqMatrix& a, const PrimeField& field) {
  return row_reduce(a, field).pivot_cols.size();
}

std::vector<std::vector<Elem>> null_space(const FqMatrix& a, const PrimeField& field) {
  const auto ech = row_reduce(a, field);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : ech.pivot_cols) is_pivot[c] = true;

  std::vector<std::vector<Elem>> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Elem> v(a.cols(), 0);
    v[free] = 1;
    for (std::size_t r = 0; r < ech.pivot_cols.size(); ++r) {
      v[ech.pivot_cols[r]] = field.neg(ech.reduced(r, free));
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace sumsets
