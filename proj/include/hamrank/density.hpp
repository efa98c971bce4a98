// Copyright 2026 The hamrank Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file density.hpp
 * @brief Exact metric-density decision by minimum-dimension realization.
 *
 * A set A is metrically dense when no isometric image has smaller rank. Any
 * isometric image, listed in A's point order, realizes A's distance matrix;
 * deleting its constant columns keeps every distance. So the least rank over
 * isometric images equals the least r for which the matrix is realizable by
 * m words of length r with every column non-constant.
 *
 * realize_in_dimension() searches canonical realizations only:
 *  - within a column, symbols first appear in increasing order down the rows
 *    (so row 0 is the zero word),
 *  - columns, read top to bottom, are in nondecreasing lexicographic order.
 * Per-column relabeling and column permutation both preserve distances, so
 * every realizable matrix keeps at least one canonical realization. The first
 * canonical realization met in row-major, symbol-ascending order is returned.
 */

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hamrank/bounds.hpp"
#include "hamrank/errors.hpp"
#include "hamrank/hamming.hpp"

namespace hamrank {

struct SearchConfig {
  std::size_t q = 2;
  std::optional<std::size_t> max_dimension;
  std::uint64_t node_budget = 50'000'000;

  void validate() const {
    if (q < 2) throw DomainError("search alphabet size must be >= 2");
    if (node_budget < 1) throw DomainError("node budget must be >= 1");
    if (max_dimension && *max_dimension < 1) throw DomainError("max dimension must be >= 1");
  }
};

enum class RealizationStatus { kFound, kInfeasible, kBudgetExhausted };

struct RealizationOutcome {
  RealizationStatus status = RealizationStatus::kInfeasible;
  std::optional<PointSet> realization;
  std::uint64_t nodes_explored = 0;
};

namespace detail {

class RealizationSearch {
 public:
  RealizationSearch(const DistanceMatrix& target, std::size_t q, std::size_t r, std::uint64_t budget)
      : d_(target),
        m_(target.size()),
        q_(q),
        r_(r),
        budget_(budget),
        grid_(m_ * r_, 0),
        col_max_((m_ + 1) * r_, -1),
        tied_((m_ + 1) * r_, 1),
        partial_(m_, 0) {}

  RealizationOutcome run() {
    RealizationOutcome out;
    const bool found = place(0, 0);
    out.nodes_explored = nodes_;
    if (found) {
      std::vector<Word> rows(m_, Word(r_));
      for (std::size_t i = 0; i < m_; ++i)
        for (std::size_t c = 0; c < r_; ++c) rows[i][c] = static_cast<Symbol>(grid_[i * r_ + c]);
      out.status = RealizationStatus::kFound;
      out.realization.emplace(SpaceParams{q_, r_}, std::move(rows));
    } else {
      out.status = exhausted_ ? RealizationStatus::kBudgetExhausted : RealizationStatus::kInfeasible;
    }
    return out;
  }

 private:
  // State arrays for "after row i" live at slot i + 1; slot 0 is the empty matrix.
  int& col_max(std::size_t rows_done, std::size_t c) { return col_max_[rows_done * r_ + c]; }
  char& tied(std::size_t rows_done, std::size_t c) { return tied_[rows_done * r_ + c]; }

  bool place(std::size_t i, std::size_t c) {
    if (c == r_) {
      for (std::size_t j = 0; j < i; ++j)
        if (partial_[j] != d_(i, j)) return false;
      std::fill(partial_.begin(), partial_.end(), 0);
      if (i + 1 == m_) return true;
      if (place(i + 1, 0)) return true;
      // Restore this row's finished distances for the caller's undo.
      for (std::size_t j = 0; j < i; ++j) partial_[j] = d_(i, j);
      return false;
    }

    const int prev_max = col_max(i, c);
    const bool last_row = i + 1 == m_;
    const int hi = std::min<int>(static_cast<int>(q_) - 1, prev_max + 1);
    int lo = 0;
    // Column c must not drop below column c - 1 while they agree so far.
    if (c > 0 && tied(i, c - 1)) lo = static_cast<int>(grid_[i * r_ + c - 1]);
    // The last row is the final chance to make a constant column vary.
    if (last_row && prev_max == 0) lo = std::max(lo, 1);

    const std::int64_t remaining = static_cast<std::int64_t>(r_ - c - 1);
    for (int s = lo; s <= hi; ++s) {
      if (nodes_ >= budget_) {
        exhausted_ = true;
        return false;
      }
      ++nodes_;
      grid_[i * r_ + c] = static_cast<std::uint32_t>(s);

      bool ok = true;
      for (std::size_t j = 0; j < i; ++j) {
        if (grid_[j * r_ + c] != static_cast<std::uint32_t>(s)) ++partial_[j];
        const std::int64_t target = d_(i, j);
        if (partial_[j] > target || partial_[j] + remaining < target) ok = false;
      }
      if (ok) {
        col_max(i + 1, c) = std::max(prev_max, s);
        if (c > 0) tied(i + 1, c - 1) = tied(i, c - 1) && grid_[i * r_ + c - 1] == static_cast<std::uint32_t>(s);
        if (place(i, c + 1)) return true;
      }
      for (std::size_t j = 0; j < i; ++j)
        if (grid_[j * r_ + c] != static_cast<std::uint32_t>(s)) --partial_[j];
      if (exhausted_) return false;
    }
    return false;
  }

  const DistanceMatrix& d_;
  std::size_t m_, q_, r_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  std::vector<std::uint32_t> grid_;
  std::vector<int> col_max_;
  std::vector<char> tied_;
  std::vector<std::int64_t> partial_;
};

}  // namespace detail

/// Canonically least m words of length r over E_q whose distances equal
/// `target` in its point order. Throws InvalidMatrixError on non-metric input.
inline RealizationOutcome realize_in_dimension(const DistanceMatrix& target, std::size_t q, std::size_t r,
                                               std::uint64_t node_budget) {
  target.validate_metric();
  if (q < 2) throw DomainError("alphabet size must be >= 2");
  if (target.size() < 2) throw DomainError("realize_in_dimension: need at least 2 points");
  if (target.max_entry() > static_cast<std::int64_t>(r)) return {};
  return detail::RealizationSearch(target, q, r, node_budget).run();
}

enum class EmbeddingStatus { kExact, kBudgetExhausted, kInfeasible, kDimensionCap };

inline std::string_view to_string(EmbeddingStatus s) {
  switch (s) {
    case EmbeddingStatus::kExact: return "exact";
    case EmbeddingStatus::kBudgetExhausted: return "budget_exhausted";
    case EmbeddingStatus::kInfeasible: return "infeasible";
    case EmbeddingStatus::kDimensionCap: return "dimension_cap";
  }
  return "unknown";
}

struct EmbeddingResult {
  EmbeddingStatus status = EmbeddingStatus::kInfeasible;
  /// Valid when exact; otherwise the last dimension attempted.
  std::size_t min_dimension = 0;
  std::optional<PointSet> realization;
  std::uint64_t nodes_explored = 0;
};

/// Tries r = ceil(lower bound), r + 1, ... up to floor(D / (m - 1)), beyond
/// which no realization with all columns non-constant can exist.
inline EmbeddingResult min_embedding_dimension(const DistanceMatrix& target, const SearchConfig& cfg) {
  cfg.validate();
  target.validate_metric();
  const auto m = static_cast<std::int64_t>(target.size());
  if (m < 2) throw DomainError("min_embedding_dimension: need at least 2 points");
  const std::int64_t d = target.pair_sum();
  const auto q = static_cast<std::int64_t>(cfg.q);

  const auto start = static_cast<std::size_t>(std::max<std::int64_t>(1, ceil_of(rank_lower_bound(d, m, q))));
  const auto limit = static_cast<std::size_t>(floor_of(rank_upper_bound(d, m)));
  std::size_t stop = limit;
  if (cfg.max_dimension) stop = std::min(stop, *cfg.max_dimension);

  EmbeddingResult res;
  for (std::size_t r = start; r <= stop; ++r) {
    res.min_dimension = r;
    auto out = realize_in_dimension(target, cfg.q, r, cfg.node_budget - res.nodes_explored);
    res.nodes_explored += out.nodes_explored;
    if (out.status == RealizationStatus::kFound) {
      res.status = EmbeddingStatus::kExact;
      res.realization = std::move(out.realization);
      return res;
    }
    if (out.status == RealizationStatus::kBudgetExhausted || res.nodes_explored >= cfg.node_budget) {
      res.status = EmbeddingStatus::kBudgetExhausted;
      return res;
    }
  }
  res.status = stop < limit ? EmbeddingStatus::kDimensionCap : EmbeddingStatus::kInfeasible;
  return res;
}

enum class Verdict { kDense, kNotDense, kUnknown };
enum class Certificate { kBoundCertificate, kExactSearch };

inline std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::kDense: return "dense";
    case Verdict::kNotDense: return "not_dense";
    case Verdict::kUnknown: return "unknown";
  }
  return "unknown";
}

inline std::string_view to_string(Certificate c) {
  return c == Certificate::kBoundCertificate ? "bound_certificate" : "exact_search";
}

struct DensityVerdict {
  Verdict verdict = Verdict::kUnknown;
  Certificate certified_by = Certificate::kExactSearch;
  /// Lower-rank isometric image in S's point order, when not dense.
  std::optional<PointSet> witness;
  std::size_t rank = 0;
  /// Least realizable dimension when known.
  std::optional<std::size_t> min_dimension;
  std::uint64_t nodes_explored = 0;
};

/// True iff `b` is isometric to `s` and has strictly smaller rank.
inline bool verify_witness(const PointSet& s, const PointSet& b) {
  return rank(b) < rank(s) && is_isometric(s, b).has_value();
}

inline DensityVerdict is_metrically_dense(const PointSet& s, const SearchConfig& cfg) {
  if (s.size() < 2) throw DomainError("is_metrically_dense: need at least 2 points");
  if (cfg.q != s.q()) {
    throw DomainError("search alphabet q = " + std::to_string(cfg.q) + " differs from the point set's q = " +
                      std::to_string(s.q()));
  }
  DensityVerdict v;
  v.rank = rank(s);
  if (bounds_report(s).density_certified) {
    v.verdict = Verdict::kDense;
    v.certified_by = Certificate::kBoundCertificate;
    v.min_dimension = v.rank;
    return v;
  }

  // Only dimensions below rank(S) matter: S itself realizes its matrix at rank(S).
  v.certified_by = Certificate::kExactSearch;
  SearchConfig below = cfg;
  const std::size_t cap = v.rank - 1;
  const bool user_capped = cfg.max_dimension && *cfg.max_dimension < cap;
  below.max_dimension = user_capped ? *cfg.max_dimension : cap;
  if (*below.max_dimension == 0) {
    v.verdict = Verdict::kDense;
    v.min_dimension = v.rank;
    return v;
  }

  const auto res = min_embedding_dimension(distance_matrix(s), below);
  v.nodes_explored = res.nodes_explored;
  switch (res.status) {
    case EmbeddingStatus::kExact: {
      if (res.min_dimension >= v.rank) throw Error("internal: realization not below rank");
      v.verdict = Verdict::kNotDense;
      v.min_dimension = res.min_dimension;
      std::vector<Word> rows = res.realization->rows();
      for (auto& w : rows) w.resize(std::max(s.n(), w.size()), 0);
      v.witness.emplace(SpaceParams{s.q(), rows.front().size()}, std::move(rows));
      break;
    }
    case EmbeddingStatus::kInfeasible:
      v.verdict = Verdict::kDense;
      v.min_dimension = v.rank;
      break;
    case EmbeddingStatus::kDimensionCap:
      // Without a user cap the search covered every dimension below rank(S).
      v.verdict = user_capped ? Verdict::kUnknown : Verdict::kDense;
      if (!user_capped) v.min_dimension = v.rank;
      break;
    case EmbeddingStatus::kBudgetExhausted:
      v.verdict = Verdict::kUnknown;
      break;
  }
  return v;
}

}  // namespace hamrank
