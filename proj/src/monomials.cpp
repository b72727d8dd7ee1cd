#include "sumsets/monomials.hpp"

#include <numeric>
#include <string>

namespace sumsets {

Monomial::Monomial(std::uint32_t q, std::vector<std::uint32_t> exponents)
    : q_(q), exponents_(std::move(exponents)) {
  for (auto e : exponents_) {
    if (e >= q_) {
      throw ValidationError("exponent " + std::to_string(e) + " exceeds q - 1 = " +
                            std::to_string(q_ - 1));
    }
    total_degree_ += e;
  }
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.q_ <=> b.q_; c != 0) return c;
  if (auto c = a.dim() <=> b.dim(); c != 0) return c;
  if (auto c = a.total_degree_ <=> b.total_degree_; c != 0) return c;
  // Larger exponent on an earlier variable comes first.
  return b.exponents_ <=> a.exponents_;
}

CountTable::CountTable(std::uint32_t q, std::size_t n) : q_(q), n_(0), counts_{1} {
  for (std::size_t i = 0; i < n; ++i) *this = extended();
  accumulate();
}

CountTable::CountTable(std::uint32_t q, std::size_t n, std::vector<BigInt> counts)
    : q_(q), n_(n), counts_(std::move(counts)) {
  accumulate();
}

void CountTable::accumulate() {
  cumulative_.resize(counts_.size());
  BigInt running = 0;
  for (std::size_t e = 0; e < counts_.size(); ++e) {
    running += counts_[e];
    cumulative_[e] = running;
  }
}

CountTable CountTable::extended() const {
  std::vector<BigInt> next(counts_.size() + q_ - 1);
  // Sliding window sum of q consecutive coefficients.
  BigInt window = 0;
  for (std::size_t e = 0; e < next.size(); ++e) {
    if (e < counts_.size()) window += counts_[e];
    if (e >= q_ && e - q_ < counts_.size()) window -= counts_[e - q_];
    next[e] = window;
  }
  return CountTable(q_, n_ + 1, std::move(next));
}

const BigInt& CountTable::count_at(std::int64_t e) const {
  if (e < 0 || e > max_degree()) return zero_;
  return counts_[static_cast<std::size_t>(e)];
}

const BigInt& CountTable::m(std::int64_t d) const {
  if (d < 0) return zero_;
  if (d > max_degree()) return cumulative_.back();
  return cumulative_[static_cast<std::size_t>(d)];
}

namespace {

void enumerate_degree(std::uint32_t q, std::size_t var, std::uint32_t remaining,
                      std::vector<std::uint32_t>& exps, std::vector<Monomial>& out) {
  const std::size_t n = exps.size();
  if (var + 1 == n) {
    if (remaining <= q - 1) {
      exps[var] = remaining;
      out.emplace_back(q, exps);
    }
    return;
  }
  const std::uint32_t hi = std::min(remaining, q - 1);
  for (std::uint32_t e = hi + 1; e-- > 0;) {
    if (remaining - e > static_cast<std::uint32_t>((q - 1) * (n - var - 1))) break;
    exps[var] = e;
    enumerate_degree(q, var + 1, remaining - e, exps, out);
  }
}

}  // namespace

std::vector<Monomial> enumerate_monomials(std::uint32_t q, std::size_t n, std::int64_t d,
                                          const Limits& limits) {
  if (d < 0) return {};
  const BigInt total = count_m(q, n, d);
  if (total > limits.enumeration_cap) {
    throw EnumerationTooLarge("m_" + std::to_string(d) + " = " + total.str() +
                              " monomials exceed the enumeration cap");
  }
  std::vector<Monomial> out;
  out.reserve(static_cast<std::size_t>(total));
  if (n == 0) {
    out.push_back(Monomial::one(q, 0));
    return out;
  }
  const auto top = std::min<std::int64_t>(d, static_cast<std::int64_t>((q - 1) * n));
  std::vector<std::uint32_t> exps(n, 0);
  for (std::int64_t e = 0; e <= top; ++e) {
    enumerate_degree(q, 0, static_cast<std::uint32_t>(e), exps, out);
  }
  return out;
}

BigInt count_m(std::uint32_t q, std::size_t n, std::int64_t d) {
  return CountTable(q, n).m(d);
}

BigInt capset_bound_M(std::uint32_t q, std::size_t n) {
  const auto index = static_cast<std::int64_t>((q - 1) * n / 3);
  return 3 * count_m(q, n, index);
}

std::vector<BigDecimal> growth_estimate(std::uint32_t q, std::size_t n_max) {
  std::vector<BigDecimal> out;
  out.reserve(n_max);
  CountTable table(q, 1);
  for (std::size_t n = 1; n <= n_max; ++n) {
    if (n > 1) table = table.extended();
    const BigInt bound = 3 * table.m(static_cast<std::int64_t>((q - 1) * n / 3));
    const BigDecimal value(bound);
    out.push_back(boost::multiprecision::exp(boost::multiprecision::log(value) /
                                             static_cast<unsigned>(n)));
  }
  return out;
}

}  // namespace sumsets
