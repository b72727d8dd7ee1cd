#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sumsets/decomposer.hpp"
#include "sumsets/field.hpp"

namespace sumsets {

// Ordered pairs (s_i, t_i), i = 0..N-1. ValidationError when the lists differ
// in length, repeat an entry, or mix spaces.
class OrderedPairFamily {
 public:
  OrderedPairFamily(std::vector<FieldVector> s_ord, std::vector<FieldVector> t_ord);

  std::size_t size() const noexcept { return s_ord_.size(); }
  const std::vector<FieldVector>& s_ord() const noexcept { return s_ord_; }
  const std::vector<FieldVector>& t_ord() const noexcept { return t_ord_; }
  PointSet s_set() const;
  PointSet t_set() const;

 private:
  std::vector<FieldVector> s_ord_;
  std::vector<FieldVector> t_ord_;
};

// No distinct a, a+b, a+2b (b != 0) inside S. Always true over F_2.
bool is_ap_free(const PointSet& s);

// For every s in S, (S \ {s}) + S misses some sum of S + S. By monotonicity
// this is the same as every proper subset failing to cover S + S.
bool every_proper_subset_misses_sums(const PointSet& s);

struct CapsetReport {
  bool applicable = false;  // q >= 3 and S is AP-free
  std::size_t size = 0;
  BigInt bound;             // M(F_q^n)
  bool within_bound = false;
  bool subset_is_whole = false;  // symmetric_subset(S) == S
  std::vector<InvariantCheck> checks;
  bool passed() const;
};

CapsetReport check_capset_bound(const PointSet& s, const DecomposeOptions& options = {});

// s_i + t_i = s_j + t_k only for (j, k) = (i, i).
bool is_matching_sumfree(const OrderedPairFamily& family);

struct SumfreeReport {
  std::size_t n_pairs = 0;
  BigInt bound;
  std::size_t witness_total = 0;
  std::vector<std::size_t> uncovered_indices;  // i with s_i not in S' and t_i not in T'
  std::vector<InvariantCheck> checks;
  bool passed() const;
};

// PreconditionFailed unless is_matching_sumfree(family).
SumfreeReport check_sumfree_bound(const OrderedPairFamily& family,
                                  const DecomposeOptions& options = {});

struct OracleResult {
  PointSet best_s_prime;
  PointSet best_t_prime;
  std::size_t best_total = 0;
};

// Minimum |S'| + |T'| over all covering pairs, searched by increasing total.
// SearchTooLarge when |S| + |T| exceeds limits.search_cap.
OracleResult oracle_min_decomposition(const PointSet& s, const PointSet& t,
                                      const Limits& limits = {});

struct GreedyResult {
  PointSet s_prime;
  PointSet t_prime;
  std::size_t total() const noexcept { return s_prime.size() + t_prime.size(); }
};

// Greedy cover of S + T by the lines {s} + T and S + {t}.
GreedyResult greedy_decomposition(const PointSet& s, const PointSet& t);

}  // namespace sumsets
