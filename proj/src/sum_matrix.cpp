#include "sumsets/sum_matrix.hpp"

#include <map>
#include <string>

namespace sumsets {

SumMatrix sum_matrix(const Polynomial& p, std::span<const FieldVector> rows,
                     std::span<const FieldVector> cols) {
  SumMatrix out{{rows.begin(), rows.end()}, {cols.begin(), cols.end()},
                FqMatrix(rows.size(), cols.size()), p};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      out.entries(i, j) = eval_poly(p, rows[i] + cols[j]);
    }
  }
  return out;
}

SumMatrix sum_matrix(const Polynomial& p, const PointSet& s, const PointSet& t) {
  return sum_matrix(p, std::span<const FieldVector>(s.members()),
                    std::span<const FieldVector>(t.members()));
}

bool constant_on_equal_sums(const SumMatrix& m) {
  std::map<FieldVector, Elem> value_at;
  for (std::size_t i = 0; i < m.rows.size(); ++i) {
    for (std::size_t j = 0; j < m.cols.size(); ++j) {
      auto [it, inserted] = value_at.try_emplace(m.rows[i] + m.cols[j], m.entries(i, j));
      if (!inserted && it->second != m.entries(i, j)) return false;
    }
  }
  return true;
}

FqMatrix ClpCertificate::reconstruct(std::span<const FieldVector> rows,
                                     std::span<const FieldVector> cols) const {
  FqMatrix out(rows.size(), cols.size());
  auto accumulate = [&](const RankOneTerm& term) {
    const std::uint32_t q = term.x_factor.q();
    std::vector<Elem> g(cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) g[j] = eval_poly(term.y_factor, cols[j]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const std::uint64_t f = eval_poly(term.x_factor, rows[i]);
      if (f == 0) continue;
      for (std::size_t j = 0; j < cols.size(); ++j) {
        out(i, j) = static_cast<Elem>((out(i, j) + f * g[j]) % q);
      }
    }
  };
  for (const auto& term : left_factors) accumulate(term);
  for (const auto& term : right_factors) accumulate(term);
  return out;
}

namespace {

// C(m, a) mod q for m < q.
Elem binomial_mod(std::uint32_t m, std::uint32_t a, const PrimeField& field) {
  Elem num = 1;
  Elem den = 1;
  for (std::uint32_t k = 0; k < a; ++k) {
    num = field.mul(num, m - k);
    den = field.mul(den, k + 1);
  }
  return field.mul(num, field.inv(den));
}

}  // namespace

ClpCertificate clp_decompose(const Polynomial& p, std::int64_t d) {
  if (p.total_degree() > d) {
    throw DegreeTooHigh("polynomial of degree " + std::to_string(p.total_degree()) +
                        " exceeds d = " + std::to_string(d));
  }
  const std::uint32_t q = p.q();
  const std::size_t n = p.dim();
  const PrimeField field(q);
  const std::int64_t split = d / 2;

  // Keyed by the low-degree monomial; the value is the partner polynomial.
  std::map<Monomial, Polynomial> left;   // x^a, polynomial in y
  std::map<Monomial, Polynomial> right;  // y^b, polynomial in x

  std::vector<std::uint32_t> a(n);
  std::vector<std::uint32_t> b(n);
  for (const auto& [m, c] : p.terms()) {
    // (x + y)^m = sum over a <= m of prod_i C(m_i, a_i) x^a y^{m - a}.
    std::fill(a.begin(), a.end(), 0);
    while (true) {
      Elem coeff = c;
      for (std::size_t i = 0; i < n; ++i) {
        coeff = field.mul(coeff, binomial_mod(m[i], a[i], field));
        b[i] = m[i] - a[i];
      }
      Monomial xa(q, a);
      Monomial yb(q, b);
      if (static_cast<std::int64_t>(xa.total_degree()) <= split) {
        left.try_emplace(xa, q, n).first->second.add_term(yb, coeff);
      } else {
        right.try_emplace(yb, q, n).first->second.add_term(xa, coeff);
      }
      std::size_t i = 0;
      while (i < n && a[i] == m[i]) a[i++] = 0;
      if (i == n) break;
      ++a[i];
    }
  }

  ClpCertificate cert;
  cert.d = d;
  cert.split_degree = split;
  for (auto& [xa, ypart] : left) {
    if (!ypart.is_zero()) cert.left_factors.push_back({Polynomial::term(xa, 1), std::move(ypart)});
  }
  for (auto& [yb, xpart] : right) {
    if (!xpart.is_zero()) cert.right_factors.push_back({std::move(xpart), Polynomial::term(yb, 1)});
  }
  return cert;
}

}  // namespace sumsets
