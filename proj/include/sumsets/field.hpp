#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "sumsets/errors.hpp"

namespace sumsets {

using Elem = std::uint32_t;

// Caps on the work the library agrees to do. Anything that enumerates F_q^n
// refuses once q^n exceeds enumeration_cap; the brute-force oracle refuses
// once |S| + |T| exceeds search_cap.
struct Limits {
  std::uint64_t enumeration_cap = std::uint64_t{1} << 22;
  std::size_t search_cap = 16;
};

bool is_prime(std::uint64_t q);

// Arithmetic in F_q for a prime q. Elements are residues in [0, q).
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t q);

  std::uint32_t q() const noexcept { return q_; }

  Elem reduce(std::int64_t x) const noexcept {
    auto r = x % static_cast<std::int64_t>(q_);
    return static_cast<Elem>(r < 0 ? r + q_ : r);
  }
  Elem add(Elem a, Elem b) const noexcept {
    Elem s = a + b;
    return s >= q_ ? s - q_ : s;
  }
  Elem sub(Elem a, Elem b) const noexcept { return a >= b ? a - b : a + q_ - b; }
  Elem neg(Elem a) const noexcept { return a == 0 ? 0 : q_ - a; }
  Elem mul(Elem a, Elem b) const noexcept {
    return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % q_);
  }
  Elem pow(Elem base, std::uint64_t e) const noexcept;
  // Throws std::domain_error on zero.
  Elem inv(Elem a) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t q_;
};

// Throws NotPrime for composite q (or q < 2).
PrimeField make_field(std::int64_t q);

// q^n, or EnumerationTooLarge when it exceeds the cap.
std::uint64_t space_size(std::uint32_t q, std::size_t n, const Limits& limits = {});

// A point of F_q^n. Ordered lexicographically by coordinates, which is also
// the order of index() when the first coordinate is most significant.
class FieldVector {
 public:
  FieldVector() = default;
  // Coordinates must already lie in [0, q); ValidationError otherwise.
  FieldVector(std::uint32_t q, std::vector<Elem> coords);
  FieldVector(std::uint32_t q, std::initializer_list<Elem> coords)
      : FieldVector(q, std::vector<Elem>(coords)) {}

  static FieldVector zero(std::uint32_t q, std::size_t n);
  static FieldVector from_index(std::uint32_t q, std::size_t n, std::uint64_t index);

  std::uint32_t q() const noexcept { return q_; }
  std::size_t dim() const noexcept { return coords_.size(); }
  std::span<const Elem> coords() const noexcept { return coords_; }
  Elem operator[](std::size_t i) const { return coords_[i]; }
  std::uint64_t index() const noexcept;
  bool is_zero() const noexcept;

  friend auto operator<=>(const FieldVector&, const FieldVector&) = default;
  friend bool operator==(const FieldVector&, const FieldVector&) = default;

 private:
  std::uint32_t q_ = 2;
  std::vector<Elem> coords_;
};

FieldVector vec_add(const FieldVector& u, const FieldVector& v);
FieldVector vec_sub(const FieldVector& u, const FieldVector& v);
FieldVector vec_scale(const FieldVector& v, Elem k);
inline FieldVector operator+(const FieldVector& u, const FieldVector& v) { return vec_add(u, v); }
inline FieldVector operator-(const FieldVector& u, const FieldVector& v) { return vec_sub(u, v); }

// A duplicate-free, canonically sorted set of points sharing (q, n).
class PointSet {
 public:
  using const_iterator = std::vector<FieldVector>::const_iterator;

  PointSet(std::uint32_t q, std::size_t n) : q_(q), n_(n) {}
  // Sorts and drops duplicates; DimensionMismatch if a member has another (q, n).
  PointSet(std::uint32_t q, std::size_t n, std::vector<FieldVector> members);

  std::uint32_t q() const noexcept { return q_; }
  std::size_t dim() const noexcept { return n_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  const std::vector<FieldVector>& members() const noexcept { return members_; }
  const FieldVector& operator[](std::size_t i) const { return members_[i]; }
  const_iterator begin() const noexcept { return members_.begin(); }
  const_iterator end() const noexcept { return members_.end(); }

  bool contains(const FieldVector& v) const;
  std::optional<std::size_t> position(const FieldVector& v) const;
  bool is_subset_of(const PointSet& other) const;
  bool same_space(const PointSet& other) const noexcept {
    return q_ == other.q_ && n_ == other.n_;
  }

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  std::uint32_t q_;
  std::size_t n_;
  std::vector<FieldVector> members_;
};

PointSet sumset(const PointSet& s, const PointSet& t);
PointSet complement(const PointSet& a, const Limits& limits = {});
PointSet full_space(std::uint32_t q, std::size_t n, const Limits& limits = {});
PointSet set_union(const PointSet& a, const PointSet& b);
PointSet set_difference(const PointSet& a, const PointSet& b);

}  // namespace sumsets
