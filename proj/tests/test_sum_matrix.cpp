#include <doctest.h>

#include <random>
#include <set>

#include "sumsets/sum_matrix.hpp"

using namespace sumsets;

namespace {

PointSet random_set(std::mt19937_64& rng, std::uint32_t q, std::size_t n) {
  std::vector<FieldVector> members;
  for (std::uint64_t i = 0; i < space_size(q, n); ++i) {
    if (rng() % 2) members.push_back(FieldVector::from_index(q, n, i));
  }
  return PointSet(q, n, std::move(members));
}

// Rank as log_q of the size of the row space, enumerating every combination.
std::size_t rank_by_span(const FqMatrix& a, std::uint32_t q) {
  std::set<std::vector<Elem>> span;
  std::vector<std::size_t> c(a.rows(), 0);
  while (true) {
    std::vector<Elem> v(a.cols(), 0);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) v[j] = (v[j] + c[i] * a(i, j)) % q;
    }
    span.insert(v);
    std::size_t i = 0;
    while (i < a.rows() && c[i] == q - 1) c[i++] = 0;
    if (i == a.rows()) break;
    ++c[i];
  }
  std::size_t r = 0;
  for (std::size_t size = 1; size < span.size(); size *= q) ++r;
  return r;
}

Polynomial random_poly(std::mt19937_64& rng, std::uint32_t q, std::size_t n, std::int64_t d) {
  Polynomial p(q, n);
  for (const auto& m : enumerate_monomials(q, n, d)) p.add_term(m, rng() % q);
  return p;
}

}  // namespace

TEST_CASE("sum_matrix examples") {
  const auto f3 = full_space(3, 1);
  const auto ones = sum_matrix(Polynomial::constant(3, 1, 1), f3, f3);
  for (auto e : ones.entries.data()) CHECK(e == 1);
  CHECK(matrix_rank(ones.entries, PrimeField(3)) == 1);

  const auto sq = sum_matrix(Polynomial::term(Monomial(3, {2}), 1), f3, f3);
  CHECK(sq.entries == FqMatrix(3, 3, {0, 1, 1, 1, 1, 0, 1, 0, 1}));
  CHECK(matrix_rank(sq.entries, PrimeField(3)) == 3);

  CHECK(sum_matrix(Polynomial(3, 1), f3, f3).entries.is_zero());
}

TEST_CASE("matrix_rank") {
  const PrimeField f(5);
  CHECK(matrix_rank(FqMatrix::identity(4), f) == 4);
  CHECK(matrix_rank(FqMatrix(3, 5, std::vector<Elem>(15, 1)), f) == 1);
  CHECK(matrix_rank(FqMatrix(0, 0), f) == 0);
  std::mt19937_64 rng(17);
  for (std::uint32_t q : {2u, 3u}) {
    for (int trial = 0; trial < 40; ++trial) {
      FqMatrix a(1 + rng() % 4, 1 + rng() % 5);
      for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = rng() % q;
      }
      CHECK(matrix_rank(a, PrimeField(q)) == rank_by_span(a, q));
      CHECK(matrix_rank(a.transposed(), PrimeField(q)) == matrix_rank(a, PrimeField(q)));
    }
  }
}

TEST_CASE("entries are constant on equal sums") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 30; ++trial) {
    const auto s = random_set(rng, 3, 2);
    const auto t = random_set(rng, 3, 2);
    CHECK(constant_on_equal_sums(sum_matrix(random_poly(rng, 3, 2, 4), s, t)));
  }
}

TEST_CASE("clp_decompose of a constant") {
  const auto cert = clp_decompose(Polynomial::constant(3, 2, 2), 0);
  REQUIRE(cert.term_count() == 1);
  REQUIRE(cert.left_factors.size() == 1);
  CHECK(cert.left_factors[0].x_factor == Polynomial::constant(3, 2, 1));
  CHECK(cert.left_factors[0].y_factor == Polynomial::constant(3, 2, 2));
}

TEST_CASE("clp_decompose of x^2 over F_3") {
  // (x + y)^2 = x^2 + 2xy + y^2.
  const auto cert = clp_decompose(Polynomial::term(Monomial(3, {2}), 1), 2);
  CHECK(cert.split_degree == 1);
  CHECK(cert.term_count() == 3);
  REQUIRE(cert.left_factors.size() == 2);
  REQUIRE(cert.right_factors.size() == 1);
  CHECK(cert.left_factors[0].x_factor == Polynomial::constant(3, 1, 1));
  CHECK(cert.left_factors[0].y_factor == Polynomial::term(Monomial(3, {2}), 1));
  CHECK(cert.left_factors[1].x_factor == Polynomial::term(Monomial(3, {1}), 1));
  CHECK(cert.left_factors[1].y_factor == Polynomial::term(Monomial(3, {1}), 2));
  CHECK(cert.right_factors[0].x_factor == Polynomial::term(Monomial(3, {2}), 1));
  CHECK(cert.right_factors[0].y_factor == Polynomial::constant(3, 1, 1));
  CHECK(cert.term_count() <= 2 * count_m(3, 1, 1));

  const auto f3 = full_space(3, 1);
  const auto m = sum_matrix(Polynomial::term(Monomial(3, {2}), 1), f3, f3);
  CHECK(cert.reconstruct(m.rows, m.cols) == m.entries);
}

TEST_CASE("clp_decompose rejects polynomials above the degree") {
  CHECK_THROWS_AS(clp_decompose(Polynomial::term(Monomial(3, {2, 1}), 1), 2), DegreeTooHigh);
}

TEST_CASE("clp certificates reconstruct and bound the rank") {
  std::mt19937_64 rng(99);
  for (auto [q, n] : {std::pair<std::uint32_t, std::size_t>{3, 2}, {2, 3}, {5, 2}, {3, 3}}) {
    for (int trial = 0; trial < 15; ++trial) {
      const std::int64_t d = static_cast<std::int64_t>(rng() % ((q - 1) * n + 1));
      const auto p = random_poly(rng, q, n, d);
      const auto s = random_set(rng, q, n);
      const auto t = random_set(rng, q, n);
      const auto m = sum_matrix(p, s, t);
      const auto cert = clp_decompose(p, d);
      CHECK(cert.reconstruct(m.rows, m.cols) == m.entries);
      CHECK(matrix_rank(m.entries, PrimeField(q)) <= cert.term_count());
      CHECK(cert.term_count() <= 2 * count_m(q, n, d / 2));
      for (const auto& term : cert.left_factors) CHECK(term.x_factor.total_degree() <= d / 2);
      for (const auto& term : cert.right_factors) CHECK(term.y_factor.total_degree() <= d / 2);
    }
  }
}
