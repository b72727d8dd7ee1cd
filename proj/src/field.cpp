#include "sumsets/field.hpp"

#include <algorithm>
#include <iterator>
#include <string>

namespace sumsets {

bool is_prime(std::uint64_t q) {
  if (q < 2) return false;
  for (std::uint64_t f = 2; f * f <= q; ++f) {
    if (q % f == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t q) : q_(q) {
  if (!is_prime(q)) throw NotPrime(std::to_string(q) + " is not prime");
}

Elem PrimeField::pow(Elem base, std::uint64_t e) const noexcept {
  Elem result = 1 % q_;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Elem PrimeField::inv(Elem a) const {
  if (a % q_ == 0) throw std::domain_error("inverse of zero in F_" + std::to_string(q_));
  return pow(a, q_ - 2);
}

PrimeField make_field(std::int64_t q) {
  if (q < 2 || q > std::int64_t{0xffffffff} || !is_prime(static_cast<std::uint64_t>(q))) {
    throw NotPrime(std::to_string(q) + " is not a supported prime");
  }
  return PrimeField(static_cast<std::uint32_t>(q));
}

std::uint64_t space_size(std::uint32_t q, std::size_t n, const Limits& limits) {
  std::uint64_t size = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (size > limits.enumeration_cap / q) {
      throw EnumerationTooLarge(std::to_string(q) + "^" + std::to_string(n) +
                                " exceeds the enumeration cap " +
                                std::to_string(limits.enumeration_cap));
    }
    size *= q;
  }
  if (size > limits.enumeration_cap) {
    throw EnumerationTooLarge(std::to_string(q) + "^" + std::to_string(n) +
                              " exceeds the enumeration cap");
  }
  return size;
}

FieldVector::FieldVector(std::uint32_t q, std::vector<Elem> coords)
    : q_(q), coords_(std::move(coords)) {
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i] >= q_) {
      throw ValidationError("coordinate " + std::to_string(i) + " = " +
                            std::to_string(coords_[i]) + " is not reduced mod " +
                            std::to_string(q_));
    }
  }
}

FieldVector FieldVector::zero(std::uint32_t q, std::size_t n) {
  return FieldVector(q, std::vector<Elem>(n, 0));
}

FieldVector FieldVector::from_index(std::uint32_t q, std::size_t n, std::uint64_t index) {
  std::vector<Elem> coords(n);
  for (std::size_t i = n; i-- > 0;) {
    coords[i] = static_cast<Elem>(index % q);
    index /= q;
  }
  return FieldVector(q, std::move(coords));
}

std::uint64_t FieldVector::index() const noexcept {
  std::uint64_t idx = 0;
  for (Elem c : coords_) idx = idx * q_ + c;
  return idx;
}

bool FieldVector::is_zero() const noexcept {
  return std::all_of(coords_.begin(), coords_.end(), [](Elem c) { return c == 0; });
}

namespace {

void require_same_space(const FieldVector& u, const FieldVector& v) {
  if (u.q() != v.q() || u.dim() != v.dim()) {
    throw DimensionMismatch("vectors over F_" + std::to_string(u.q()) + "^" +
                            std::to_string(u.dim()) + " and F_" + std::to_string(v.q()) +
                            "^" + std::to_string(v.dim()));
  }
}

void require_same_space(const PointSet& a, const PointSet& b) {
  if (!a.same_space(b)) {
    throw DimensionMismatch("sets over F_" + std::to_string(a.q()) + "^" +
                            std::to_string(a.dim()) + " and F_" + std::to_string(b.q()) +
                            "^" + std::to_string(b.dim()));
  }
}

}  // namespace

FieldVector vec_add(const FieldVector& u, const FieldVector& v) {
  require_same_space(u, v);
  std::vector<Elem> out(u.dim());
  for (std::size_t i = 0; i < out.size(); ++i) {
    Elem s = u[i] + v[i];
    out[i] = s >= u.q() ? s - u.q() : s;
  }
  return FieldVector(u.q(), std::move(out));
}

FieldVector vec_sub(const FieldVector& u, const FieldVector& v) {
  require_same_space(u, v);
  std::vector<Elem> out(u.dim());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = u[i] >= v[i] ? u[i] - v[i] : u[i] + u.q() - v[i];
  }
  return FieldVector(u.q(), std::move(out));
}

FieldVector vec_scale(const FieldVector& v, Elem k) {
  std::vector<Elem> out(v.dim());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = static_cast<Elem>(static_cast<std::uint64_t>(v[i]) * k % v.q());
  }
  return FieldVector(v.q(), std::move(out));
}

PointSet::PointSet(std::uint32_t q, std::size_t n, std::vector<FieldVector> members)
    : q_(q), n_(n), members_(std::move(members)) {
  for (const auto& m : members_) {
    if (m.q() != q_ || m.dim() != n_) {
      throw DimensionMismatch("point over F_" + std::to_string(m.q()) + "^" +
                              std::to_string(m.dim()) + " in a set over F_" +
                              std::to_string(q_) + "^" + std::to_string(n_));
    }
  }
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool PointSet::contains(const FieldVector& v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

std::optional<std::size_t> PointSet::position(const FieldVector& v) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), v);
  if (it == members_.end() || *it != v) return std::nullopt;
  return static_cast<std::size_t>(it - members_.begin());
}

bool PointSet::is_subset_of(const PointSet& other) const {
  return same_space(other) && std::includes(other.members_.begin(), other.members_.end(),
                                            members_.begin(), members_.end());
}

PointSet sumset(const PointSet& s, const PointSet& t) {
  require_same_space(s, t);
  std::vector<FieldVector> sums;
  sums.reserve(s.size() * t.size());
  for (const auto& a : s) {
    for (const auto& b : t) sums.push_back(a + b);
  }
  return PointSet(s.q(), s.dim(), std::move(sums));
}

PointSet full_space(std::uint32_t q, std::size_t n, const Limits& limits) {
  const auto size = space_size(q, n, limits);
  std::vector<FieldVector> all;
  all.reserve(size);
  for (std::uint64_t i = 0; i < size; ++i) all.push_back(FieldVector::from_index(q, n, i));
  return PointSet(q, n, std::move(all));
}

PointSet complement(const PointSet& a, const Limits& limits) {
  return set_difference(full_space(a.q(), a.dim(), limits), a);
}

PointSet set_union(const PointSet& a, const PointSet& b) {
  require_same_space(a, b);
  std::vector<FieldVector> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return PointSet(a.q(), a.dim(), std::move(out));
}

PointSet set_difference(const PointSet& a, const PointSet& b) {
  require_same_space(a, b);
  std::vector<FieldVector> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return PointSet(a.q(), a.dim(), std::move(out));
}

}  // namespace sumsets
