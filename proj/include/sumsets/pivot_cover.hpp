#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include "sumsets/field.hpp"
#include "sumsets/sum_matrix.hpp"

namespace sumsets {

struct Position {
  std::size_t row = 0;
  std::size_t col = 0;
  friend auto operator<=>(const Position&, const Position&) = default;
};

// Row-major first nonzero entry. ZeroMatrix if there is none.
Position first_nonzero_position(const FqMatrix& a);

// A basis of the same span whose first-nonzero positions are pairwise distinct.
struct PivotBasis {
  std::vector<SumMatrix> matrices;
  std::vector<Position> pivots;
};

// Processes the input in order; a matrix whose pivot collides with an accepted
// one has a multiple of that one subtracted (source polynomial included) until
// its pivot is new. DependentInput if some matrix is reduced to zero.
PivotBasis pivot_basis(std::vector<SumMatrix> basis, const PrimeField& field);

bool pivots_distinct(const PivotBasis& basis);
bool pivot_sums_distinct(const PivotBasis& basis);

struct Matching {
  static constexpr std::size_t kUnmatched = static_cast<std::size_t>(-1);
  std::vector<std::size_t> row_mate;
  std::vector<std::size_t> col_mate;
  std::size_t size = 0;
};

// Hopcroft-Karp. adjacency[r] lists the columns joined to row r.
Matching maximum_matching(const std::vector<std::vector<std::size_t>>& adjacency,
                          std::size_t num_cols);

struct LineCover {
  std::vector<std::size_t> cover_rows;
  std::vector<std::size_t> cover_cols;
  std::size_t matching_size = 0;

  std::size_t size() const noexcept { return cover_rows.size() + cover_cols.size(); }
  bool covers(const Position& p) const;
};

// Minimum set of rows and columns containing every position (Konig's
// construction from a maximum matching). BoundViolated if it needs more than
// rank_bound lines.
LineCover line_cover(std::span<const Position> positions, std::size_t rank_bound);

}  // namespace sumsets
