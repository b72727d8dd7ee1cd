#include "sumsets/decomposer.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "sumsets/polynomial.hpp"
#include "sumsets/sum_matrix.hpp"

namespace sumsets {

BigInt decomposition_bound(const CountTable& table, std::int64_t d) {
  const BigInt space = table.m(table.max_degree());
  return 2 * table.m(d / 2) + space - table.m(d);
}

DegreeChoice choose_degree(std::uint32_t q, std::size_t n) {
  const CountTable table(q, n);
  DegreeChoice best{0, decomposition_bound(table, 0)};
  for (std::int64_t d = 1; d <= table.max_degree(); ++d) {
    BigInt b = decomposition_bound(table, d);
    if (b < best.bound) best = {d, std::move(b)};
  }
  return best;
}

namespace {

std::size_t saturate(const BigInt& x) {
  if (x > std::numeric_limits<std::size_t>::max()) return std::numeric_limits<std::size_t>::max();
  return static_cast<std::size_t>(x);
}

}  // namespace

Decomposition decompose(const PointSet& s, const PointSet& t, const DecomposeOptions& options) {
  if (!s.same_space(t)) {
    throw DimensionMismatch("S and T live in different spaces");
  }
  const std::uint32_t q = s.q();
  const std::size_t n = s.dim();
  const PrimeField field(q);
  const std::uint64_t space = space_size(q, n, options.limits);
  const CountTable table(q, n);
  const std::int64_t d = options.d ? *options.d : choose_degree(q, n).d;

  Decomposition out;
  out.d = d;
  out.bound = decomposition_bound(table, d);
  Certificate& cert = out.certificate;
  const PointSet sums = sumset(s, t);
  cert.sumset_size = sums.size();
  cert.space_size = space;
  cert.m_d = table.m(d);
  cert.m_half = table.m(d / 2);
  cert.rank_bound = saturate(2 * cert.m_half);

  const PolySubspace v = build_vanishing_space(s, t, d, options.limits);
  cert.dim_v = v.dimension();

  std::vector<SumMatrix> matrices;
  matrices.reserve(v.basis.size());
  for (const auto& p : v.basis) {
    matrices.push_back(sum_matrix(p, s, t));
    if (options.check_clp) {
      const ClpCertificate clp = clp_decompose(p, d);
      const SumMatrix& m = matrices.back();
      cert.clp_checks.push_back({matrix_rank(m.entries, field), clp.term_count(),
                                 clp.reconstruct(m.rows, m.cols) == m.entries});
    }
  }

  const PivotBasis pivots = pivot_basis(std::move(matrices), field);
  cert.pivots = pivots.pivots;
  for (const auto& p : pivots.pivots) cert.pivot_sums.push_back(s[p.row] + t[p.col]);
  cert.pivots_distinct = pivots_distinct(pivots);
  cert.pivot_sums_distinct = pivot_sums_distinct(pivots);

  const LineCover cover = line_cover(pivots.pivots, cert.rank_bound);
  cert.cover_size = cover.size();
  cert.matching_size = cover.matching_size;

  std::vector<FieldVector> rows;
  std::vector<FieldVector> cols;
  for (auto r : cover.cover_rows) rows.push_back(s[r]);
  for (auto c : cover.cover_cols) cols.push_back(t[c]);
  cert.s0 = PointSet(q, n, std::move(rows));
  cert.t0 = PointSet(q, n, std::move(cols));

  const PointSet covered = set_union(sumset(cert.s0, t), sumset(s, cert.t0));
  cert.pivot_sums_covered = static_cast<std::size_t>(
      std::count_if(cert.pivot_sums.begin(), cert.pivot_sums.end(),
                     [&](const FieldVector& w) { return covered.contains(w); }));
  cert.uncovered = set_difference(sums, covered);

  std::vector<FieldVector> representatives;
  for (const auto& w : cert.uncovered) {
    for (const auto& candidate : s) {
      if (t.contains(w - candidate)) {
        representatives.push_back(candidate);
        break;
      }
    }
  }
  cert.s1 = PointSet(q, n, std::move(representatives));

  out.s_prime = set_union(cert.s0, cert.s1);
  out.t_prime = cert.t0;
  return out;
}

SymmetricDecomposition symmetric_decomposition(const PointSet& s,
                                               const DecomposeOptions& options) {
  Decomposition result = decompose(s, s, options);
  PointSet subset = set_union(result.s_prime, result.t_prime);
  return {std::move(subset), std::move(result)};
}

PointSet symmetric_subset(const PointSet& s, const DecomposeOptions& options) {
  return symmetric_decomposition(s, options).subset;
}

bool verify_decomposition(const PointSet& s, const PointSet& t, const PointSet& s_prime,
                          const PointSet& t_prime) {
  if (!s.same_space(t) || !s.same_space(s_prime) || !s.same_space(t_prime)) {
    throw DimensionMismatch("verify_decomposition needs four sets over the same space");
  }
  for (const auto& x : s_prime) {
    if (!s.contains(x)) return false;
  }
  for (const auto& y : t_prime) {
    if (!t.contains(y)) return false;
  }
  std::set<FieldVector> full;
  for (const auto& a : s) {
    for (const auto& b : t) full.insert(a + b);
  }
  std::set<FieldVector> partial;
  for (const auto& a : s_prime) {
    for (const auto& b : t) partial.insert(a + b);
  }
  for (const auto& a : s) {
    for (const auto& b : t_prime) partial.insert(a + b);
  }
  return partial == full;
}

namespace {

InvariantCheck compare(std::string name, const BigInt& lhs, std::string relation,
                       const BigInt& rhs) {
  bool ok = false;
  if (relation == "<=") ok = lhs <= rhs;
  else if (relation == ">=") ok = lhs >= rhs;
  else if (relation == "==") ok = lhs == rhs;
  return {std::move(name), lhs.str(), std::move(relation), rhs.str(), ok};
}

InvariantCheck holds(std::string name, bool value) {
  return {std::move(name), value ? "true" : "false", "==", "true", value};
}

}  // namespace

std::vector<InvariantCheck> check_decomposition(const PointSet& s, const PointSet& t,
                                                const Decomposition& result) {
  const Certificate& c = result.certificate;
  std::vector<InvariantCheck> checks;
  checks.push_back(holds("S' subset of S", result.s_prime.is_subset_of(s)));
  checks.push_back(holds("T' subset of T", result.t_prime.is_subset_of(t)));
  checks.push_back(holds("(S'+T) u (S+T') = S+T",
                         verify_decomposition(s, t, result.s_prime, result.t_prime)));
  checks.push_back(compare("|S'|+|T'| <= 2m_{d/2} + q^n - m_d", BigInt(result.total()), "<=",
                           result.bound));
  if (result.d == choose_degree(s.q(), s.dim()).d) {
    checks.push_back(compare("min_d bound <= M(F_q^n)", result.bound, "<=",
                             capset_bound_M(s.q(), s.dim())));
  }
  checks.push_back(compare("dim V >= m_d - q^n + |S+T|", BigInt(c.dim_v), ">=",
                           c.m_d - BigInt(c.space_size) + BigInt(c.sumset_size)));
  checks.push_back(compare("|W| <= q^n - m_d", BigInt(c.uncovered.size()), "<=",
                           BigInt(c.space_size) - c.m_d));
  checks.push_back(compare("cover size <= 2m_{d/2}", BigInt(c.cover_size), "<=",
                           2 * c.m_half));
  checks.push_back(compare("cover size == maximum matching", BigInt(c.cover_size), "==",
                           BigInt(c.matching_size)));
  checks.push_back(compare("pivot count == dim V", BigInt(c.pivots.size()), "==",
                           BigInt(c.dim_v)));
  checks.push_back(holds("pivot positions distinct", c.pivots_distinct));
  checks.push_back(holds("pivot sums distinct", c.pivot_sums_distinct));
  checks.push_back(compare("pivot sums covered >= dim V", BigInt(c.pivot_sums_covered), ">=",
                           BigInt(c.dim_v)));
  if (!c.clp_checks.empty()) {
    std::size_t max_terms = 0;
    bool ranks_ok = true;
    bool reconstructs = true;
    for (const auto& clp : c.clp_checks) {
      max_terms = std::max(max_terms, clp.term_count);
      ranks_ok = ranks_ok && clp.rank <= clp.term_count;
      reconstructs = reconstructs && clp.reconstructs;
    }
    checks.push_back(holds("CLP terms reconstruct M(P)", reconstructs));
    checks.push_back(holds("rank M(P) <= CLP term count", ranks_ok));
    checks.push_back(compare("max CLP term count <= 2m_{d/2}", BigInt(max_terms), "<=",
                             2 * c.m_half));
  }
  return checks;
}

}  // namespace sumsets
