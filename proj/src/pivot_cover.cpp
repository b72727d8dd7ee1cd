#include "sumsets/pivot_cover.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <queue>
#include <set>
#include <string>

namespace sumsets {

Position first_nonzero_position(const FqMatrix& a) {
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) != 0) return {i, j};
    }
  }
  throw ZeroMatrix("matrix has no nonzero entry");
}

PivotBasis pivot_basis(std::vector<SumMatrix> basis, const PrimeField& field) {
  PivotBasis out;
  std::map<Position, std::size_t> owner;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    SumMatrix current = std::move(basis[k]);
    while (true) {
      if (current.entries.is_zero()) {
        throw DependentInput("basis element " + std::to_string(k) +
                             " lies in the span of its predecessors");
      }
      const Position p = first_nonzero_position(current.entries);
      auto it = owner.find(p);
      if (it == owner.end()) {
        owner.emplace(p, out.matrices.size());
        out.pivots.push_back(p);
        out.matrices.push_back(std::move(current));
        break;
      }
      const SumMatrix& prior = out.matrices[it->second];
      const Elem factor =
          field.mul(current.entries(p.row, p.col), field.inv(prior.entries(p.row, p.col)));
      const auto& src = prior.entries.data();
      for (std::size_t i = 0; i < current.entries.rows(); ++i) {
        for (std::size_t j = 0; j < current.entries.cols(); ++j) {
          current.entries(i, j) = field.sub(current.entries(i, j),
                                            field.mul(factor, src[i * prior.entries.cols() + j]));
        }
      }
      current.source += prior.source.scaled(field.neg(factor));
    }
  }
  return out;
}

bool pivots_distinct(const PivotBasis& basis) {
  std::set<Position> seen(basis.pivots.begin(), basis.pivots.end());
  return seen.size() == basis.pivots.size();
}

bool pivot_sums_distinct(const PivotBasis& basis) {
  std::set<FieldVector> sums;
  for (std::size_t k = 0; k < basis.pivots.size(); ++k) {
    const auto& m = basis.matrices[k];
    const auto& p = basis.pivots[k];
    if (!sums.insert(m.rows[p.row] + m.cols[p.col]).second) return false;
  }
  return true;
}

namespace {

class HopcroftKarp {
 public:
  HopcroftKarp(const std::vector<std::vector<std::size_t>>& adjacency, std::size_t num_cols)
      : adj_(adjacency),
        row_mate_(adjacency.size(), Matching::kUnmatched),
        col_mate_(num_cols, Matching::kUnmatched),
        level_(adjacency.size()) {}

  Matching run() {
    std::size_t size = 0;
    while (layer()) {
      for (std::size_t r = 0; r < adj_.size(); ++r) {
        if (row_mate_[r] == Matching::kUnmatched && augment(r)) ++size;
      }
    }
    return {row_mate_, col_mate_, size};
  }

 private:
  static constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();

  // BFS from free rows; true if some free column is reachable.
  bool layer() {
    std::queue<std::size_t> frontier;
    for (std::size_t r = 0; r < adj_.size(); ++r) {
      if (row_mate_[r] == Matching::kUnmatched) {
        level_[r] = 0;
        frontier.push(r);
      } else {
        level_[r] = kInf;
      }
    }
    bool found = false;
    while (!frontier.empty()) {
      const std::size_t r = frontier.front();
      frontier.pop();
      for (std::size_t c : adj_[r]) {
        const std::size_t next = col_mate_[c];
        if (next == Matching::kUnmatched) {
          found = true;
        } else if (level_[next] == kInf) {
          level_[next] = level_[r] + 1;
          frontier.push(next);
        }
      }
    }
    return found;
  }

  bool augment(std::size_t r) {
    for (std::size_t c : adj_[r]) {
      const std::size_t next = col_mate_[c];
      if (next == Matching::kUnmatched || (level_[next] == level_[r] + 1 && augment(next))) {
        row_mate_[r] = c;
        col_mate_[c] = r;
        return true;
      }
    }
    level_[r] = kInf;
    return false;
  }

  const std::vector<std::vector<std::size_t>>& adj_;
  std::vector<std::size_t> row_mate_;
  std::vector<std::size_t> col_mate_;
  std::vector<std::size_t> level_;
};

}  // namespace

Matching maximum_matching(const std::vector<std::vector<std::size_t>>& adjacency,
                          std::size_t num_cols) {
  return HopcroftKarp(adjacency, num_cols).run();
}

bool LineCover::covers(const Position& p) const {
  return std::binary_search(cover_rows.begin(), cover_rows.end(), p.row) ||
         std::binary_search(cover_cols.begin(), cover_cols.end(), p.col);
}

LineCover line_cover(std::span<const Position> positions, std::size_t rank_bound) {
  std::size_t num_rows = 0;
  std::size_t num_cols = 0;
  for (const auto& p : positions) {
    num_rows = std::max(num_rows, p.row + 1);
    num_cols = std::max(num_cols, p.col + 1);
  }
  std::vector<std::vector<std::size_t>> adjacency(num_rows);
  for (const auto& p : positions) adjacency[p.row].push_back(p.col);
  for (auto& cols : adjacency) {
    std::sort(cols.begin(), cols.end());
    cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
  }

  const Matching matching = maximum_matching(adjacency, num_cols);

  // Konig: Z = vertices reachable from free rows along alternating paths.
  // The cover is (rows not in Z) together with (columns in Z).
  std::vector<bool> row_seen(num_rows, false);
  std::vector<bool> col_seen(num_cols, false);
  std::queue<std::size_t> frontier;
  for (std::size_t r = 0; r < num_rows; ++r) {
    if (matching.row_mate[r] == Matching::kUnmatched) {
      row_seen[r] = true;
      frontier.push(r);
    }
  }
  while (!frontier.empty()) {
    const std::size_t r = frontier.front();
    frontier.pop();
    for (std::size_t c : adjacency[r]) {
      if (col_seen[c]) continue;
      col_seen[c] = true;
      const std::size_t mate = matching.col_mate[c];
      if (mate != Matching::kUnmatched && !row_seen[mate]) {
        row_seen[mate] = true;
        frontier.push(mate);
      }
    }
  }

  LineCover cover;
  cover.matching_size = matching.size;
  for (std::size_t r = 0; r < num_rows; ++r) {
    if (!row_seen[r] && !adjacency[r].empty()) cover.cover_rows.push_back(r);
  }
  for (std::size_t c = 0; c < num_cols; ++c) {
    if (col_seen[c]) cover.cover_cols.push_back(c);
  }
  if (cover.size() > rank_bound) {
    throw BoundViolated("minimum line cover has " + std::to_string(cover.size()) +
                        " lines, above the rank bound " + std::to_string(rank_bound));
  }
  return cover;
}

}  // namespace sumsets
