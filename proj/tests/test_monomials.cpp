#include <doctest.h>

#include <set>

#include "sumsets/monomials.hpp"

using namespace sumsets;

namespace {

// Odometer over all of [0, q-1]^n: an enumeration that shares nothing with
// the graded recursion or the convolution.
std::vector<std::vector<std::uint32_t>> all_exponents(std::uint32_t q, std::size_t n) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> e(n, 0);
  while (true) {
    out.push_back(e);
    std::size_t i = 0;
    while (i < n && e[i] == q - 1) e[i++] = 0;
    if (i == n) break;
    ++e[i];
  }
  return out;
}

std::uint64_t brute_m(std::uint32_t q, std::size_t n, std::int64_t d) {
  std::uint64_t count = 0;
  for (const auto& e : all_exponents(q, n)) {
    std::int64_t deg = 0;
    for (auto x : e) deg += x;
    if (deg <= d) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("enumerate_monomials small cases") {
  const auto ms = enumerate_monomials(3, 2, 2);
  REQUIRE(ms.size() == 6);
  const std::vector<std::vector<std::uint32_t>> expected = {
      {0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}};
  for (std::size_t k = 0; k < ms.size(); ++k) CHECK(ms[k].exponents() == expected[k]);

  CHECK(enumerate_monomials(5, 3, 0).size() == 1);
  CHECK(enumerate_monomials(5, 3, 0).front() == Monomial::one(5, 3));
  CHECK(enumerate_monomials(2, 3, 3).size() == 8);
  CHECK(enumerate_monomials(2, 3, -1).empty());
}

TEST_CASE("enumeration is strictly increasing in graded-lex order and respects caps") {
  for (std::uint32_t q : {2u, 3u, 5u}) {
    for (std::size_t n = 1; n <= 3; ++n) {
      const auto ms = enumerate_monomials(q, n, static_cast<std::int64_t>((q - 1) * n));
      std::set<Monomial> unique(ms.begin(), ms.end());
      CHECK(unique.size() == ms.size());
      for (std::size_t k = 0; k + 1 < ms.size(); ++k) CHECK(ms[k] < ms[k + 1]);
      for (const auto& m : ms) {
        for (auto e : m.exponents()) CHECK(e <= q - 1);
      }
    }
  }
  Limits tight;
  tight.enumeration_cap = 5;
  CHECK_THROWS_AS(enumerate_monomials(3, 2, 2, tight), EnumerationTooLarge);
  CHECK_THROWS_AS(Monomial(3, {3, 0}), ValidationError);
}

TEST_CASE("count_m matches brute force") {
  for (std::uint32_t q : {2u, 3u, 5u}) {
    for (std::size_t n = 1; n <= 4; ++n) {
      for (std::int64_t d = -1; d <= static_cast<std::int64_t>((q - 1) * n) + 2; ++d) {
        CHECK(count_m(q, n, d) == brute_m(q, n, d));
      }
    }
  }
  CHECK(count_m(3, 2, 2) == 6);
}

TEST_CASE("count table invariants") {
  for (std::uint32_t q : {2u, 3u, 7u}) {
    for (std::size_t n : {1u, 4u, 9u}) {
      const CountTable table(q, n);
      BigInt total = 0;
      for (const auto& c : table.counts()) total += c;
      CHECK(total == boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(n)));
      const auto top = table.max_degree();
      for (std::int64_t e = 0; e <= top; ++e) CHECK(table.count_at(e) == table.count_at(top - e));
      for (std::int64_t d = 0; d < top; ++d) CHECK(table.m(d) <= table.m(d + 1));
      CHECK(table.m(top) == total);
      // q^n - m_d counts degrees above d, which by symmetry is m_{top-d-1}.
      for (std::int64_t d = 0; d <= top; ++d) CHECK(total - table.m(d) == table.m(top - d - 1));
    }
  }
}

TEST_CASE("count_m at n = 200 agrees with the symmetry identity") {
  const CountTable table(3, 200);
  const BigInt space = boost::multiprecision::pow(BigInt(3), 200);
  BigInt above = 0;
  for (std::int64_t e = 101; e <= 400; ++e) above += table.count_at(400 - e);
  CHECK(count_m(3, 200, 100) == space - above);
  CHECK(count_m(3, 200, 100) == space - count_m(3, 200, 299));
}

TEST_CASE("capset_bound_M") {
  CHECK(capset_bound_M(3, 1) == 3);
  CHECK(capset_bound_M(3, 2) == 9);
  CHECK(capset_bound_M(2, 3) == 12);
}

TEST_CASE("growth_estimate") {
  const auto g = growth_estimate(3, 200);
  REQUIRE(g.size() == 200);
  CHECK(abs(g[0] - 3) < BigDecimal("1e-40"));
  CHECK(g[5] < 3);
  CHECK(g[199] > BigDecimal("2.5"));
  CHECK(g[199] < BigDecimal("2.9"));
  // M(F_3^6) = 3 * m_4 over six variables; 6th root by the definition.
  const BigDecimal m6(capset_bound_M(3, 6));
  CHECK(abs(pow(g[5], 6) - m6) < BigDecimal("1e-30") * m6);
}
