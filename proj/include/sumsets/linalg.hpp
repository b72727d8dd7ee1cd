#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sumsets/field.hpp"

namespace sumsets {

// Dense row-major matrix with entries in F_q.
class FqMatrix {
 public:
  FqMatrix() = default;
  FqMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  FqMatrix(std::size_t rows, std::size_t cols, std::vector<Elem> data);
  static FqMatrix identity(std::size_t k);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return data_.empty(); }

  Elem& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  Elem operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  std::span<Elem> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const Elem> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  const std::vector<Elem>& data() const noexcept { return data_; }

  bool is_zero() const noexcept;
  FqMatrix transposed() const;

  friend bool operator==(const FqMatrix&, const FqMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> data_;
};

struct RowEchelon {
  FqMatrix reduced;                     // reduced row-echelon form
  std::vector<std::size_t> pivot_cols;  // one per nonzero row, increasing
};

// Gauss-Jordan elimination, pivoting on the first nonzero entry of each column.
RowEchelon row_reduce(FqMatrix a, const PrimeField& field);

std::size_t matrix_rank(const FqMatrix& a, const PrimeField& field);

// Basis of {x : A x = 0}, one vector per free column of the reduced form, with
// a 1 in that free position and 0 in every other free position.
std::vector<std::vector<Elem>> null_space(const FqMatrix& a, const PrimeField& field);

}  // namespace sumsets
