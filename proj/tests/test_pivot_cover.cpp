#include <doctest.h>

#include <random>

#include "sumsets/decomposer.hpp"
#include "sumsets/pivot_cover.hpp"

using namespace sumsets;

namespace {

SumMatrix bare(FqMatrix entries) {
  std::vector<FieldVector> rows;
  std::vector<FieldVector> cols;
  for (std::size_t i = 0; i < entries.rows(); ++i) rows.push_back(FieldVector::from_index(7, 1, i));
  for (std::size_t j = 0; j < entries.cols(); ++j) cols.push_back(FieldVector::from_index(7, 1, j));
  return {rows, cols, std::move(entries), Polynomial(7, 1)};
}

// Smallest number of lines covering `points`, by trying every row subset and
// taking the columns it leaves uncovered.
std::size_t brute_cover(const std::vector<Position>& points, std::size_t rows) {
  std::size_t best = points.size();
  for (std::uint32_t mask = 0; mask < (1u << rows); ++mask) {
    std::vector<bool> col_needed(16, false);
    for (const auto& p : points) {
      if (!((mask >> p.row) & 1)) col_needed[p.col] = true;
    }
    std::size_t size = static_cast<std::size_t>(__builtin_popcount(mask));
    for (bool b : col_needed) size += b;
    best = std::min(best, size);
  }
  return best;
}

}  // namespace

TEST_CASE("first_nonzero_position") {
  FqMatrix a(3, 2);
  a(2, 1) = 1;
  CHECK(first_nonzero_position(a) == Position{2, 1});
  CHECK_THROWS_AS(first_nonzero_position(FqMatrix(2, 2)), ZeroMatrix);
  FqMatrix b(2, 4);
  b(0, 3) = 1;
  b(1, 0) = 1;
  CHECK(first_nonzero_position(b) == Position{0, 3});
}

TEST_CASE("pivot_basis separates colliding pivots") {
  const PrimeField f(7);
  const auto single = pivot_basis({bare(FqMatrix(2, 2, {0, 3, 0, 0}))}, f);
  CHECK(single.pivots == std::vector<Position>{{0, 1}});
  CHECK(single.matrices[0].entries == FqMatrix(2, 2, {0, 3, 0, 0}));

  const auto two = pivot_basis(
      {bare(FqMatrix(2, 2, {1, 0, 0, 0})), bare(FqMatrix(2, 2, {1, 1, 0, 0}))}, f);
  CHECK(two.pivots == std::vector<Position>{{0, 0}, {0, 1}});
  CHECK(two.matrices[1].entries == FqMatrix(2, 2, {0, 1, 0, 0}));

  CHECK_THROWS_AS(pivot_basis({bare(FqMatrix(2, 2, {1, 2, 0, 0})),
                               bare(FqMatrix(2, 2, {2, 4, 0, 0}))}, f),
                  DependentInput);
}

TEST_CASE("pivot_basis preserves the span") {
  std::mt19937_64 rng(1);
  const PrimeField f(3);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<SumMatrix> input;
    for (int k = 0; k < 4; ++k) {
      FqMatrix a(3, 3);
      for (std::size_t i = 0; i < 9; ++i) a(i / 3, i % 3) = rng() % 3;
      input.push_back(bare(a));
    }
    FqMatrix stacked_in(4, 9);
    for (std::size_t k = 0; k < 4; ++k) {
      for (std::size_t i = 0; i < 9; ++i) stacked_in(k, i) = input[k].entries.data()[i];
    }
    if (matrix_rank(stacked_in, f) < 4) {
      CHECK_THROWS_AS(pivot_basis(input, f), DependentInput);
      continue;
    }
    const auto out = pivot_basis(input, f);
    CHECK(pivots_distinct(out));
    FqMatrix both(8, 9);
    for (std::size_t k = 0; k < 4; ++k) {
      for (std::size_t i = 0; i < 9; ++i) {
        both(k, i) = stacked_in(k, i);
        both(4 + k, i) = out.matrices[k].entries.data()[i];
      }
    }
    CHECK(matrix_rank(both, f) == 4);
  }
}

TEST_CASE("pivot sums are distinct on a basis of V") {
  const auto all = full_space(2, 2);
  const auto v = build_vanishing_space(all, all, 1);
  std::vector<SumMatrix> ms;
  for (const auto& p : v.basis) ms.push_back(sum_matrix(p, all, all));
  const auto out = pivot_basis(ms, PrimeField(2));
  CHECK(out.pivots.size() == v.dimension());
  CHECK(pivots_distinct(out));
  CHECK(pivot_sums_distinct(out));
  for (const auto& m : out.matrices) {
    CHECK(sum_matrix(m.source, all, all).entries == m.entries);
  }
}

TEST_CASE("line_cover examples") {
  const std::vector<Position> single{{0, 0}};
  const auto one = line_cover(single, 5);
  CHECK(one.size() == 1);
  CHECK(one.covers({0, 0}));

  const std::vector<Position> diagonal{{0, 0}, {1, 1}, {2, 2}};
  CHECK(line_cover(diagonal, 3).size() == 3);
  CHECK_THROWS_AS(line_cover(diagonal, 2), BoundViolated);

  std::vector<Position> cross;
  for (std::size_t j = 0; j < 4; ++j) cross.push_back({0, j});
  for (std::size_t i = 1; i < 4; ++i) cross.push_back({i, 0});
  const auto c = line_cover(cross, 2);
  CHECK(c.cover_rows == std::vector<std::size_t>{0});
  CHECK(c.cover_cols == std::vector<std::size_t>{0});

  CHECK(line_cover({}, 0).size() == 0);
}

TEST_CASE("line_cover is minimum, valid, and equals the matching size") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t rows = 1 + rng() % 7;
    const std::size_t cols = 1 + rng() % 7;
    std::vector<Position> points;
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        if (rng() % 3 == 0) points.push_back({i, j});
      }
    }
    const auto cover = line_cover(points, 100);
    for (const auto& p : points) CHECK(cover.covers(p));
    CHECK(cover.size() == cover.matching_size);
    CHECK(cover.size() == brute_cover(points, rows));
  }
}
