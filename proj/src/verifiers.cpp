#include "sumsets/verifiers.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>

namespace sumsets {

OrderedPairFamily::OrderedPairFamily(std::vector<FieldVector> s_ord,
                                     std::vector<FieldVector> t_ord)
    : s_ord_(std::move(s_ord)), t_ord_(std::move(t_ord)) {
  if (s_ord_.size() != t_ord_.size()) {
    throw ValidationError("ordered family needs lists of equal length, got " +
                          std::to_string(s_ord_.size()) + " and " +
                          std::to_string(t_ord_.size()));
  }
  auto check_distinct = [](const std::vector<FieldVector>& list, const char* name) {
    std::set<FieldVector> seen;
    for (const auto& v : list) {
      if (!list.empty() && (v.q() != list.front().q() || v.dim() != list.front().dim())) {
        throw ValidationError(std::string(name) + " mixes points of different spaces");
      }
      if (!seen.insert(v).second) {
        throw ValidationError(std::string(name) + " repeats an entry");
      }
    }
  };
  check_distinct(s_ord_, "S ordering");
  check_distinct(t_ord_, "T ordering");
  if (!s_ord_.empty() &&
      (s_ord_.front().q() != t_ord_.front().q() || s_ord_.front().dim() != t_ord_.front().dim())) {
    throw ValidationError("S and T orderings live in different spaces");
  }
}

PointSet OrderedPairFamily::s_set() const {
  if (s_ord_.empty()) throw ValidationError("empty family has no ambient space");
  return PointSet(s_ord_.front().q(), s_ord_.front().dim(), s_ord_);
}

PointSet OrderedPairFamily::t_set() const {
  if (t_ord_.empty()) throw ValidationError("empty family has no ambient space");
  return PointSet(t_ord_.front().q(), t_ord_.front().dim(), t_ord_);
}

bool is_ap_free(const PointSet& s) {
  if (s.q() == 2) return true;
  // For odd q, a 3-AP is a pair x != y (y the middle term) with 2y - x in S.
  for (const auto& x : s) {
    for (const auto& y : s) {
      if (x == y) continue;
      if (s.contains(vec_sub(vec_scale(y, 2), x))) return false;
    }
  }
  return true;
}

bool every_proper_subset_misses_sums(const PointSet& s) {
  const PointSet full = sumset(s, s);
  for (const auto& x : s) {
    std::vector<FieldVector> rest;
    for (const auto& y : s) {
      if (y != x) rest.push_back(y);
    }
    if (sumset(PointSet(s.q(), s.dim(), std::move(rest)), s) == full) return false;
  }
  return true;
}

bool CapsetReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

CapsetReport check_capset_bound(const PointSet& s, const DecomposeOptions& options) {
  CapsetReport report;
  report.size = s.size();
  report.bound = capset_bound_M(s.q(), s.dim());
  report.applicable = s.q() >= 3 && is_ap_free(s);
  if (!report.applicable) return report;

  report.within_bound = BigInt(report.size) <= report.bound;
  report.checks.push_back({"|S| <= M(F_q^n)", std::to_string(report.size), "<=",
                           report.bound.str(), report.within_bound});
  const PointSet subset = symmetric_subset(s, options);
  report.subset_is_whole = subset == s;
  report.checks.push_back({"symmetric_subset(S) = S", std::to_string(subset.size()), "==",
                           std::to_string(s.size()), report.subset_is_whole});
  const bool misses = every_proper_subset_misses_sums(s);
  report.checks.push_back({"every proper S' has S'+S != S+S", misses ? "true" : "false", "==",
                           "true", misses});
  return report;
}

bool is_matching_sumfree(const OrderedPairFamily& family) {
  const auto& s = family.s_ord();
  const auto& t = family.t_ord();
  const std::size_t n = family.size();
  for (std::size_t i = 0; i < n; ++i) {
    const FieldVector target = s[i] + t[i];
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if ((j != i || k != i) && s[j] + t[k] == target) return false;
      }
    }
  }
  return true;
}

bool SumfreeReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

SumfreeReport check_sumfree_bound(const OrderedPairFamily& family,
                                  const DecomposeOptions& options) {
  if (!is_matching_sumfree(family)) {
    throw PreconditionFailed("family is not multicolored sum-free");
  }
  SumfreeReport report;
  report.n_pairs = family.size();
  if (family.size() == 0) return report;

  const PointSet s = family.s_set();
  const PointSet t = family.t_set();
  report.bound = capset_bound_M(s.q(), s.dim());
  const Decomposition result = decompose(s, t, options);
  report.witness_total = result.total();
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (!result.s_prime.contains(family.s_ord()[i]) &&
        !result.t_prime.contains(family.t_ord()[i])) {
      report.uncovered_indices.push_back(i);
    }
  }
  report.checks.push_back({"every i has s_i in S' or t_i in T'",
                           std::to_string(report.uncovered_indices.size()), "==", "0",
                           report.uncovered_indices.empty()});
  report.checks.push_back({"N <= |S'|+|T'|", std::to_string(report.n_pairs), "<=",
                           std::to_string(report.witness_total),
                           report.n_pairs <= report.witness_total});
  report.checks.push_back({"N <= M(F_q^n)", std::to_string(report.n_pairs), "<=",
                           report.bound.str(), BigInt(report.n_pairs) <= report.bound});
  for (auto& c : check_decomposition(s, t, result)) report.checks.push_back(std::move(c));
  return report;
}

namespace {

// Fixed-width bitset over the elements of S + T.
class SumMask {
 public:
  explicit SumMask(std::size_t bits) : words_((bits + 63) / 64, 0) {}
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  SumMask& operator|=(const SumMask& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }
  std::size_t count_new(const SumMask& covered) const {
    std::size_t c = 0;
    for (std::size_t k = 0; k < words_.size(); ++k) {
      c += static_cast<std::size_t>(__builtin_popcountll(words_[k] & ~covered.words_[k]));
    }
    return c;
  }
  friend bool operator==(const SumMask&, const SumMask&) = default;

 private:
  std::vector<std::uint64_t> words_;
};

struct LineMasks {
  std::vector<SumMask> rows;  // {s} + T
  std::vector<SumMask> cols;  // S + {t}
  SumMask full;
};

LineMasks line_masks(const PointSet& s, const PointSet& t) {
  const PointSet sums = sumset(s, t);
  LineMasks out{std::vector<SumMask>(s.size(), SumMask(sums.size())),
                std::vector<SumMask>(t.size(), SumMask(sums.size())), SumMask(sums.size())};
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = 0; j < t.size(); ++j) {
      const std::size_t k = *sums.position(s[i] + t[j]);
      out.rows[i].set(k);
      out.cols[j].set(k);
      out.full.set(k);
    }
  }
  return out;
}

// Calls visit(indices) for each size-k subset of {0..n-1} in lexicographic
// order until visit returns true.
template <typename Visit>
bool for_each_combination(std::size_t n, std::size_t k, Visit&& visit) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (visit(idx)) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

PointSet pick(const PointSet& from, const std::vector<std::size_t>& idx) {
  std::vector<FieldVector> out;
  for (auto i : idx) out.push_back(from[i]);
  return PointSet(from.q(), from.dim(), std::move(out));
}

}  // namespace

OracleResult oracle_min_decomposition(const PointSet& s, const PointSet& t, const Limits& limits) {
  if (!s.same_space(t)) throw DimensionMismatch("S and T live in different spaces");
  if (s.size() + t.size() > limits.search_cap) {
    throw SearchTooLarge("|S|+|T| = " + std::to_string(s.size() + t.size()) +
                         " exceeds the search cap " + std::to_string(limits.search_cap));
  }
  const LineMasks masks = line_masks(s, t);
  const std::size_t width = sumset(s, t).size();

  for (std::size_t total = 0; total <= s.size() + t.size(); ++total) {
    // Larger |S'| first, so ties prefer witnesses drawn from S.
    for (std::size_t a = std::min(total, s.size()) + 1; a-- > 0;) {
      const std::size_t b = total - a;
      if (b > t.size()) break;
      std::vector<std::size_t> rows;
      std::vector<std::size_t> cols;
      const bool found = for_each_combination(s.size(), a, [&](const auto& row_idx) {
        SumMask from_rows(width);
        for (auto i : row_idx) from_rows |= masks.rows[i];
        return for_each_combination(t.size(), b, [&](const auto& col_idx) {
          SumMask covered = from_rows;
          for (auto j : col_idx) covered |= masks.cols[j];
          if (covered != masks.full) return false;
          rows = row_idx;
          cols = col_idx;
          return true;
        });
      });
      if (found) return {pick(s, rows), pick(t, cols), total};
    }
  }
  throw BoundViolated("no covering pair found, which is impossible since (S, T) covers");
}

GreedyResult greedy_decomposition(const PointSet& s, const PointSet& t) {
  if (!s.same_space(t)) throw DimensionMismatch("S and T live in different spaces");
  const LineMasks masks = line_masks(s, t);
  SumMask covered(sumset(s, t).size());
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  while (covered != masks.full) {
    std::size_t best_gain = 0;
    std::size_t best = 0;
    // Lines are ranked rows first, then columns, each in canonical order.
    for (std::size_t k = 0; k < s.size() + t.size(); ++k) {
      const SumMask& line = k < s.size() ? masks.rows[k] : masks.cols[k - s.size()];
      const std::size_t gain = line.count_new(covered);
      if (gain > best_gain) {
        best_gain = gain;
        best = k;
      }
    }
    if (best < s.size()) {
      rows.push_back(best);
      covered |= masks.rows[best];
    } else {
      cols.push_back(best - s.size());
      covered |= masks.cols[best - s.size()];
    }
  }
  return {pick(s, rows), pick(t, cols)};
}

}  // namespace sumsets
