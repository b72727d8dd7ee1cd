#pragma once

#include <span>
#include <vector>

#include "sumsets/field.hpp"
#include "sumsets/linalg.hpp"
#include "sumsets/polynomial.hpp"

namespace sumsets {

// The |S| x |T| matrix with entry P(s + t), rows and columns in the given order.
struct SumMatrix {
  std::vector<FieldVector> rows;
  std::vector<FieldVector> cols;
  FqMatrix entries;
  Polynomial source;
};

SumMatrix sum_matrix(const Polynomial& p, std::span<const FieldVector> rows,
                     std::span<const FieldVector> cols);
SumMatrix sum_matrix(const Polynomial& p, const PointSet& s, const PointSet& t);

// True when entries at (s, t) and (s', t') agree whenever s + t = s' + t'.
bool constant_on_equal_sums(const SumMatrix& m);

// f(x) * g(y), viewed as the rank-one matrix (f(s) g(t)).
struct RankOneTerm {
  Polynomial x_factor;
  Polynomial y_factor;
};

// Splitting of P(x + y) into rank-one terms in which one side has total degree
// at most floor(d / 2). Left terms carry the low-degree factor in x, right
// terms carry it in y.
struct ClpCertificate {
  std::int64_t d = 0;
  std::int64_t split_degree = 0;
  std::vector<RankOneTerm> left_factors;
  std::vector<RankOneTerm> right_factors;

  std::size_t term_count() const noexcept { return left_factors.size() + right_factors.size(); }
  FqMatrix reconstruct(std::span<const FieldVector> rows, std::span<const FieldVector> cols) const;
};

// DegreeTooHigh when deg P > d.
ClpCertificate clp_decompose(const Polynomial& p, std::int64_t d);

}  // namespace sumsets
