#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sumsets/field.hpp"
#include "sumsets/monomials.hpp"
#include "sumsets/pivot_cover.hpp"

namespace sumsets {

// 2 m_{floor(d/2)} + q^n - m_d.
BigInt decomposition_bound(const CountTable& table, std::int64_t d);

struct DegreeChoice {
  std::int64_t d = 0;
  BigInt bound;
};

// Smallest d in [0, (q-1)n] minimizing decomposition_bound.
DegreeChoice choose_degree(std::uint32_t q, std::size_t n);

// Per basis element of V: the low-rank splitting checked against its matrix.
struct ClpCheck {
  std::size_t rank = 0;
  std::size_t term_count = 0;
  bool reconstructs = false;
};

// Everything needed to re-check the construction without the library.
struct Certificate {
  PointSet s0{2, 0};         // covered rows
  PointSet t0{2, 0};         // covered columns
  PointSet s1{2, 0};         // one representative per uncovered sum
  PointSet uncovered{2, 0};  // W
  std::size_t sumset_size = 0;
  std::uint64_t space_size = 0;
  BigInt m_d;
  BigInt m_half;               // m_{floor(d/2)}
  std::size_t dim_v = 0;
  std::size_t rank_bound = 0;  // 2 m_{floor(d/2)}, saturated to size_t
  std::size_t cover_size = 0;
  std::size_t matching_size = 0;
  std::vector<Position> pivots;
  std::vector<FieldVector> pivot_sums;
  bool pivots_distinct = false;
  bool pivot_sums_distinct = false;
  std::size_t pivot_sums_covered = 0;
  std::vector<ClpCheck> clp_checks;  // filled when requested
};

struct Decomposition {
  PointSet s_prime{2, 0};
  PointSet t_prime{2, 0};
  std::int64_t d = 0;
  BigInt bound;
  Certificate certificate;

  std::size_t total() const noexcept { return s_prime.size() + t_prime.size(); }
};

struct DecomposeOptions {
  std::optional<std::int64_t> d;  // chosen by choose_degree when absent
  Limits limits;
  bool check_clp = false;
};

// EnumerationTooLarge past the cap; BoundViolated if the line cover exceeds
// 2 m_{floor(d/2)}.
Decomposition decompose(const PointSet& s, const PointSet& t, const DecomposeOptions& options = {});

struct SymmetricDecomposition {
  PointSet subset;
  Decomposition decomposition;
};

SymmetricDecomposition symmetric_decomposition(const PointSet& s,
                                               const DecomposeOptions& options = {});
// S' of S with S' + S = S + S.
PointSet symmetric_subset(const PointSet& s, const DecomposeOptions& options = {});

// S' in S, T' in T and (S' + T) u (S + T') = S + T, by direct enumeration.
bool verify_decomposition(const PointSet& s, const PointSet& t, const PointSet& s_prime,
                          const PointSet& t_prime);

// A checked inequality with both sides evaluated.
struct InvariantCheck {
  std::string name;
  std::string lhs;
  std::string relation;
  std::string rhs;
  bool passed = false;
};

// Every postcondition of decompose, re-evaluated.
std::vector<InvariantCheck> check_decomposition(const PointSet& s, const PointSet& t,
                                                const Decomposition& result);

}  // namespace sumsets
