#include "sumsets/polynomial.hpp"

#include <string>

namespace sumsets {

namespace {

Elem pow_mod(Elem base, std::uint32_t e, std::uint32_t q) {
  std::uint64_t result = 1 % q;
  std::uint64_t b = base;
  while (e > 0) {
    if (e & 1) result = result * b % q;
    b = b * b % q;
    e >>= 1;
  }
  return static_cast<Elem>(result);
}

}  // namespace

Polynomial::Polynomial(std::uint32_t q, std::size_t n, const Terms& terms) : q_(q), n_(n) {
  for (const auto& [m, c] : terms) add_term(m, c);
}

Polynomial Polynomial::constant(std::uint32_t q, std::size_t n, Elem c) {
  Polynomial p(q, n);
  p.add_term(Monomial::one(q, n), c);
  return p;
}

Polynomial Polynomial::term(const Monomial& m, Elem c) {
  Polynomial p(m.q(), m.dim());
  p.add_term(m, c);
  return p;
}

Polynomial Polynomial::from_coefficients(std::uint32_t q, std::size_t n,
                                         const std::vector<Monomial>& basis,
                                         std::span<const Elem> coeffs) {
  if (basis.size() != coeffs.size()) {
    throw DimensionMismatch("coefficient vector of length " + std::to_string(coeffs.size()) +
                            " for " + std::to_string(basis.size()) + " monomials");
  }
  Polynomial p(q, n);
  for (std::size_t k = 0; k < basis.size(); ++k) p.add_term(basis[k], coeffs[k]);
  return p;
}

std::int64_t Polynomial::total_degree() const noexcept {
  std::int64_t deg = -1;
  for (const auto& [m, c] : terms_) deg = std::max<std::int64_t>(deg, m.total_degree());
  return deg;
}

Elem Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

void Polynomial::add_term(const Monomial& m, Elem c) {
  if (m.q() != q_ || m.dim() != n_) {
    throw DimensionMismatch("monomial over F_" + std::to_string(m.q()) + " in " +
                            std::to_string(m.dim()) + " variables added to a polynomial over F_" +
                            std::to_string(q_) + " in " + std::to_string(n_));
  }
  c %= q_;
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second = static_cast<Elem>((it->second + c) % q_);
  if (it->second == 0) terms_.erase(it);
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial Polynomial::scaled(Elem c) const {
  Polynomial out(q_, n_);
  for (const auto& [m, coeff] : terms_) {
    out.add_term(m, static_cast<Elem>(static_cast<std::uint64_t>(coeff) * c % q_));
  }
  return out;
}

Elem eval_monomial(const Monomial& m, const FieldVector& x) {
  if (m.q() != x.q() || m.dim() != x.dim()) {
    throw DimensionMismatch("evaluating a monomial in " + std::to_string(m.dim()) +
                            " variables at a point of dimension " + std::to_string(x.dim()));
  }
  const std::uint32_t q = m.q();
  std::uint64_t value = 1 % q;
  for (std::size_t i = 0; i < m.dim() && value != 0; ++i) {
    if (m[i] != 0) value = value * pow_mod(x[i], m[i], q) % q;
  }
  return static_cast<Elem>(value);
}

Elem eval_poly(const Polynomial& p, const FieldVector& x) {
  if (p.q() != x.q() || p.dim() != x.dim()) {
    throw DimensionMismatch("evaluating a polynomial over F_" + std::to_string(p.q()) + "^" +
                            std::to_string(p.dim()) + " at a point of F_" +
                            std::to_string(x.q()) + "^" + std::to_string(x.dim()));
  }
  std::uint64_t sum = 0;
  for (const auto& [m, c] : p.terms()) {
    sum = (sum + static_cast<std::uint64_t>(c) * eval_monomial(m, x)) % p.q();
  }
  return static_cast<Elem>(sum);
}

FqMatrix evaluation_matrix(const std::vector<Monomial>& monomials, const PointSet& points) {
  FqMatrix out(points.size(), monomials.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t k = 0; k < monomials.size(); ++k) {
      out(i, k) = eval_monomial(monomials[k], points[i]);
    }
  }
  return out;
}

PolySubspace build_vanishing_space(const PointSet& s, const PointSet& t, std::int64_t d,
                                   const Limits& limits) {
  const PrimeField field(s.q());
  const PointSet sums = sumset(s, t);
  PolySubspace v{s.q(), s.dim(), d, enumerate_monomials(s.q(), s.dim(), d, limits), {}, {},
                 complement(sums, limits)};

  v.coefficients = null_space(evaluation_matrix(v.monomials, v.complement), field);
  v.basis.reserve(v.coefficients.size());
  for (const auto& c : v.coefficients) {
    v.basis.push_back(Polynomial::from_coefficients(v.q, v.n, v.monomials, c));
  }
  return v;
}

}  // namespace sumsets
