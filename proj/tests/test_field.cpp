#include <doctest.h>

#include <random>

#include "sumsets/field.hpp"

using namespace sumsets;

namespace {

PointSet random_set(std::mt19937_64& rng, std::uint32_t q, std::size_t n) {
  std::vector<FieldVector> members;
  const auto size = space_size(q, n);
  for (std::uint64_t i = 0; i < size; ++i) {
    if (rng() % 2) members.push_back(FieldVector::from_index(q, n, i));
  }
  return PointSet(q, n, std::move(members));
}

}  // namespace

TEST_CASE("make_field accepts primes and rejects composites") {
  CHECK(make_field(3).q() == 3);
  CHECK(make_field(2).q() == 2);
  CHECK_THROWS_AS(make_field(4), NotPrime);
  CHECK_THROWS_AS(make_field(1), NotPrime);
  CHECK_THROWS_AS(make_field(91), NotPrime);
  CHECK(make_field(101).q() == 101);
}

TEST_CASE("field arithmetic") {
  PrimeField f(7);
  CHECK(f.add(5, 4) == 2);
  CHECK(f.sub(2, 5) == 4);
  CHECK(f.mul(3, 5) == 1);
  CHECK(f.inv(3) == 5);
  CHECK(f.neg(0) == 0);
  CHECK_THROWS_AS(f.inv(0), std::domain_error);
  for (Elem a = 1; a < 7; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
}

TEST_CASE("vec_add") {
  const FieldVector u(3, {1, 2});
  const FieldVector v(3, {2, 2});
  CHECK(u + v == FieldVector(3, {0, 1}));
  CHECK(u + FieldVector::zero(3, 2) == u);
  const FieldVector w(2, {1, 0, 1});
  CHECK((w + w).is_zero());
  CHECK_THROWS_AS(u + FieldVector(3, {1}), DimensionMismatch);
  CHECK_THROWS_AS(u + FieldVector(5, {1, 1}), DimensionMismatch);
  CHECK_THROWS_AS(FieldVector(3, {3}), ValidationError);
}

TEST_CASE("vector order matches index order") {
  for (std::uint64_t i = 0; i + 1 < 27; ++i) {
    const auto a = FieldVector::from_index(3, 3, i);
    const auto b = FieldVector::from_index(3, 3, i + 1);
    CHECK(a < b);
    CHECK(a.index() == i);
  }
}

TEST_CASE("group laws on random vectors") {
  std::mt19937_64 rng(11);
  for (std::uint32_t q : {2u, 3u, 5u, 7u}) {
    for (int trial = 0; trial < 50; ++trial) {
      const auto size = space_size(q, 3);
      const auto a = FieldVector::from_index(q, 3, rng() % size);
      const auto b = FieldVector::from_index(q, 3, rng() % size);
      const auto c = FieldVector::from_index(q, 3, rng() % size);
      CHECK(a + b == b + a);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a + vec_scale(a, q - 1)).is_zero());
      CHECK(a - b + b == a);
    }
  }
}

TEST_CASE("sumset examples") {
  const PointSet s(2, 1, {FieldVector(2, {0})});
  const PointSet t(2, 1, {FieldVector(2, {1})});
  CHECK(sumset(s, t) == t);
  CHECK(sumset(full_space(2, 1), full_space(2, 1)) == full_space(2, 1));
  const PointSet u(3, 1, {FieldVector(3, {0}), FieldVector(3, {1})});
  CHECK(sumset(u, u) == full_space(3, 1));
  CHECK(sumset(u, PointSet(3, 1)).empty());
  CHECK_THROWS_AS(sumset(u, s), DimensionMismatch);
}

TEST_CASE("sumset is commutative and monotone") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const auto s1 = random_set(rng, 3, 2);
    const auto extra = random_set(rng, 3, 2);
    const auto s2 = set_union(s1, extra);
    const auto t = random_set(rng, 3, 2);
    CHECK(sumset(s1, t) == sumset(t, s1));
    CHECK(sumset(s1, t).is_subset_of(sumset(s2, t)));
  }
}

TEST_CASE("complement") {
  CHECK(complement(full_space(3, 2)).empty());
  CHECK(complement(PointSet(2, 2)).size() == 4);
  const PointSet a(2, 2, {FieldVector(2, {0, 0}), FieldVector(2, {0, 1})});
  CHECK(complement(a) == PointSet(2, 2, {FieldVector(2, {1, 0}), FieldVector(2, {1, 1})}));
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const auto s = random_set(rng, 5, 2);
    CHECK(complement(s).size() + s.size() == 25);
  }
  CHECK_THROWS_AS(complement(PointSet(3, 30)), EnumerationTooLarge);
  Limits tight;
  tight.enumeration_cap = 8;
  CHECK_THROWS_AS(complement(PointSet(3, 2), tight), EnumerationTooLarge);
  CHECK(complement(PointSet(2, 3), tight).size() == 8);
}

TEST_CASE("point sets drop duplicates and reject mixed spaces") {
  const PointSet s(3, 1, {FieldVector(3, {2}), FieldVector(3, {0}), FieldVector(3, {2})});
  CHECK(s.size() == 2);
  CHECK(s[0] == FieldVector(3, {0}));
  CHECK_THROWS_AS(PointSet(3, 1, {FieldVector(3, {0, 1})}), DimensionMismatch);
}
