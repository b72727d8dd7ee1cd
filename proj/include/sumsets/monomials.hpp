#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "sumsets/field.hpp"

namespace sumsets {

using BigInt = boost::multiprecision::cpp_int;
using BigDecimal = boost::multiprecision::cpp_dec_float_50;

// Reduced monomial x_1^{e_1} ... x_n^{e_n} with every e_i <= q - 1.
//
// Monomials are ordered graded-lexicographically: by total degree first, and
// within a degree by exponent tuple in descending lexicographic order, so for
// two variables of degree <= 2 the order is 1, x1, x2, x1^2, x1 x2, x2^2.
class Monomial {
 public:
  Monomial() = default;
  // ValidationError when an exponent exceeds q - 1.
  Monomial(std::uint32_t q, std::vector<std::uint32_t> exponents);

  static Monomial one(std::uint32_t q, std::size_t n) {
    return Monomial(q, std::vector<std::uint32_t>(n, 0));
  }

  std::uint32_t q() const noexcept { return q_; }
  std::size_t dim() const noexcept { return exponents_.size(); }
  const std::vector<std::uint32_t>& exponents() const noexcept { return exponents_; }
  std::uint32_t operator[](std::size_t i) const { return exponents_[i]; }
  std::uint32_t total_degree() const noexcept { return total_degree_; }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.q_ == b.q_ && a.exponents_ == b.exponents_;
  }
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

 private:
  std::uint32_t q_ = 2;
  std::vector<std::uint32_t> exponents_;
  std::uint32_t total_degree_ = 0;
};

// Exact number of reduced monomials of each total degree 0..(q-1)n, i.e. the
// coefficients of (1 + x + ... + x^{q-1})^n.
class CountTable {
 public:
  CountTable(std::uint32_t q, std::size_t n);

  std::uint32_t q() const noexcept { return q_; }
  std::size_t dim() const noexcept { return n_; }
  std::int64_t max_degree() const noexcept {
    return static_cast<std::int64_t>(counts_.size()) - 1;
  }
  const std::vector<BigInt>& counts() const noexcept { return counts_; }
  const BigInt& count_at(std::int64_t e) const;

  // m_d: monomials of total degree <= d; 0 for d < 0, q^n for d >= (q-1)n.
  const BigInt& m(std::int64_t d) const;

  // Table for n + 1 variables (one more convolution).
  CountTable extended() const;

 private:
  CountTable(std::uint32_t q, std::size_t n, std::vector<BigInt> counts);
  void accumulate();

  std::uint32_t q_;
  std::size_t n_;
  std::vector<BigInt> counts_;
  std::vector<BigInt> cumulative_;
  BigInt zero_;
};

// All reduced monomials of total degree <= d in graded-lex order.
// EnumerationTooLarge when m_d exceeds limits.enumeration_cap.
std::vector<Monomial> enumerate_monomials(std::uint32_t q, std::size_t n, std::int64_t d,
                                          const Limits& limits = {});

BigInt count_m(std::uint32_t q, std::size_t n, std::int64_t d);

// 3 * m_{floor((q-1)n/3)}.
BigInt capset_bound_M(std::uint32_t q, std::size_t n);

// M(F_q^n)^{1/n} for n = 1..n_max.
std::vector<BigDecimal> growth_estimate(std::uint32_t q, std::size_t n_max);

}  // namespace sumsets
