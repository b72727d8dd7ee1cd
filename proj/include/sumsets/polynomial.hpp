#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "sumsets/field.hpp"
#include "sumsets/linalg.hpp"
#include "sumsets/monomials.hpp"

namespace sumsets {

// Reduced polynomial over F_q in n variables. Zero coefficients are never stored.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Elem>;

  Polynomial(std::uint32_t q, std::size_t n) : q_(q), n_(n) {}
  Polynomial(std::uint32_t q, std::size_t n, const Terms& terms);

  static Polynomial constant(std::uint32_t q, std::size_t n, Elem c);
  static Polynomial term(const Monomial& m, Elem c);
  // sum_k coeffs[k] * basis[k]
  static Polynomial from_coefficients(std::uint32_t q, std::size_t n,
                                      const std::vector<Monomial>& basis,
                                      std::span<const Elem> coeffs);

  std::uint32_t q() const noexcept { return q_; }
  std::size_t dim() const noexcept { return n_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  // -1 for the zero polynomial.
  std::int64_t total_degree() const noexcept;
  Elem coefficient(const Monomial& m) const;

  // Adds c * m in place.
  void add_term(const Monomial& m, Elem c);
  Polynomial& operator+=(const Polynomial& other);
  Polynomial scaled(Elem c) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::uint32_t q_;
  std::size_t n_;
  Terms terms_;
};

inline Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }

Elem eval_monomial(const Monomial& m, const FieldVector& x);
Elem eval_poly(const Polynomial& p, const FieldVector& x);

// Reduced polynomials of total degree <= d vanishing at every point of
// `complement`, the complement of S + T in F_q^n.
struct PolySubspace {
  std::uint32_t q;
  std::size_t n;
  std::int64_t d;
  std::vector<Monomial> monomials;          // ambient basis, graded-lex
  std::vector<std::vector<Elem>> coefficients;  // one row per basis polynomial
  std::vector<Polynomial> basis;
  PointSet complement;

  std::size_t ambient_dim() const noexcept { return monomials.size(); }
  std::size_t dimension() const noexcept { return basis.size(); }
};

// Evaluation matrix with one row per point and one column per monomial.
FqMatrix evaluation_matrix(const std::vector<Monomial>& monomials, const PointSet& points);

PolySubspace build_vanishing_space(const PointSet& s, const PointSet& t, std::int64_t d,
                                   const Limits& limits = {});

}  // namespace sumsets
