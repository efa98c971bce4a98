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
 * @file hamming.hpp
 * @brief Words, point sets and the combinatorial rank in E_q^n.
 *
 * A point set A is stored as the m x n matrix whose rows are the words of A.
 * The rank R(A) is the number of non-constant columns of that matrix, i.e. the
 * dimension of the smallest face of E_q^n containing A. The distance sum D_A
 * counts every unordered pair of distinct points once.
 */

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <ranges>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hamrank/errors.hpp"

namespace hamrank {

using Symbol = std::uint32_t;
using Word = std::vector<Symbol>;

struct SpaceParams {
  std::size_t q = 2;  ///< alphabet size
  std::size_t n = 1;  ///< word length

  void validate() const {
    if (q < 2) throw ValidationError("alphabet size q must be >= 2, got " + std::to_string(q));
    if (n < 1) throw ValidationError("word length n must be >= 1");
  }

  friend bool operator==(const SpaceParams&, const SpaceParams&) = default;
};

/// Number of coordinates where `x` and `y` differ.
template <std::ranges::sized_range R1, std::ranges::sized_range R2>
std::size_t hamming_distance(const R1& x, const R2& y) {
  if (std::ranges::size(x) != std::ranges::size(y)) {
    throw DimensionError("hamming_distance: lengths " + std::to_string(std::ranges::size(x)) +
                         " and " + std::to_string(std::ranges::size(y)) + " differ");
  }
  std::size_t d = 0;
  auto it = std::ranges::begin(y);
  for (const auto& s : x) {
    if (s != *it) ++d;
    ++it;
  }
  return d;
}

/// Ordered list of m >= 1 distinct words over E_q of length n.
class PointSet {
 public:
  PointSet(SpaceParams params, std::vector<Word> rows) : params_(params), rows_(std::move(rows)) {
    params_.validate();
    if (rows_.empty()) throw ValidationError("point set must contain at least one point");
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (rows_[i].size() != params_.n) {
        throw ValidationError("row " + std::to_string(i) + " has length " +
                              std::to_string(rows_[i].size()) + ", expected " +
                              std::to_string(params_.n));
      }
      for (Symbol s : rows_[i]) {
        if (s >= params_.q) {
          throw ValidationError("row " + std::to_string(i) + " has symbol " + std::to_string(s) +
                                " outside [0, " + std::to_string(params_.q - 1) + "]");
        }
      }
    }
    std::vector<std::size_t> order(rows_.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::ranges::sort(order, [&](std::size_t a, std::size_t b) { return rows_[a] < rows_[b]; });
    for (std::size_t i = 1; i < order.size(); ++i) {
      if (rows_[order[i - 1]] == rows_[order[i]]) {
        auto [a, b] = std::minmax(order[i - 1], order[i]);
        throw ValidationError("rows " + std::to_string(a) + " and " + std::to_string(b) +
                              " are identical");
      }
    }
  }

  const SpaceParams& params() const noexcept { return params_; }
  std::size_t q() const noexcept { return params_.q; }
  std::size_t n() const noexcept { return params_.n; }
  std::size_t size() const noexcept { return rows_.size(); }
  const std::vector<Word>& rows() const noexcept { return rows_; }
  const Word& row(std::size_t i) const { return rows_.at(i); }
  Symbol at(std::size_t i, std::size_t j) const { return rows_.at(i).at(j); }

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  SpaceParams params_;
  std::vector<Word> rows_;
};

/// Symmetric m x m matrix of pairwise distances, stored row-major.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;

  /// Takes entries as given; call `validate_metric()` for untrusted input.
  DistanceMatrix(std::size_t m, std::vector<std::int64_t> entries)
      : m_(m), entries_(std::move(entries)) {
    if (entries_.size() != m_ * m_) {
      throw DimensionError("distance matrix needs " + std::to_string(m_ * m_) + " entries, got " +
                           std::to_string(entries_.size()));
    }
  }

  static DistanceMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
    std::vector<std::int64_t> flat;
    for (const auto& r : rows) {
      if (r.size() != rows.size()) throw DimensionError("distance matrix must be square");
      flat.insert(flat.end(), r.begin(), r.end());
    }
    return DistanceMatrix(rows.size(), std::move(flat));
  }

  std::size_t size() const noexcept { return m_; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return entries_[i * m_ + j]; }
  std::span<const std::int64_t> row(std::size_t i) const {
    return std::span<const std::int64_t>(entries_).subspan(i * m_, m_);
  }
  std::int64_t max_entry() const {
    return entries_.empty() ? 0 : *std::ranges::max_element(entries_);
  }
  /// Sum over unordered pairs i < j.
  std::int64_t pair_sum() const {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < m_; ++i)
      for (std::size_t j = i + 1; j < m_; ++j) s += (*this)(i, j);
    return s;
  }

  /// Throws InvalidMatrixError unless this is the distance matrix of a metric
  /// on m distinct points.
  void validate_metric() const {
    for (std::size_t i = 0; i < m_; ++i) {
      if ((*this)(i, i) != 0) throw InvalidMatrixError("nonzero diagonal entry at " + std::to_string(i));
      for (std::size_t j = i + 1; j < m_; ++j) {
        if ((*this)(i, j) != (*this)(j, i)) {
          throw InvalidMatrixError("asymmetric entries at (" + std::to_string(i) + ", " +
                                   std::to_string(j) + ")");
        }
        if ((*this)(i, j) <= 0) {
          throw InvalidMatrixError("off-diagonal entry (" + std::to_string(i) + ", " +
                                   std::to_string(j) + ") must be positive");
        }
      }
    }
    for (std::size_t i = 0; i < m_; ++i)
      for (std::size_t j = 0; j < m_; ++j)
        for (std::size_t k = 0; k < m_; ++k)
          if ((*this)(i, k) > (*this)(i, j) + (*this)(j, k)) {
            throw InvalidMatrixError("triangle inequality fails for (" + std::to_string(i) + ", " +
                                     std::to_string(j) + ", " + std::to_string(k) + ")");
          }
  }

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  std::size_t m_ = 0;
  std::vector<std::int64_t> entries_;
};

/// Symbol counts y_0..y_{q-1} of one column.
struct ColumnHistogram {
  std::vector<std::int64_t> counts;

  std::int64_t total() const { return std::accumulate(counts.begin(), counts.end(), std::int64_t{0}); }
  std::size_t positive_count() const {
    return static_cast<std::size_t>(std::ranges::count_if(counts, [](std::int64_t c) { return c > 0; }));
  }
  bool is_constant() const { return positive_count() < 2; }

  friend bool operator==(const ColumnHistogram&, const ColumnHistogram&) = default;
};

/// Row i of the first set corresponds to row mapping[i] of the second.
struct IsometryWitness {
  std::vector<std::size_t> mapping;

  friend bool operator==(const IsometryWitness&, const IsometryWitness&) = default;
};

inline DistanceMatrix distance_matrix(const PointSet& s) {
  const std::size_t m = s.size();
  std::vector<std::int64_t> e(m * m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      auto d = static_cast<std::int64_t>(hamming_distance(s.row(i), s.row(j)));
      e[i * m + j] = d;
      e[j * m + i] = d;
    }
  return DistanceMatrix(m, std::move(e));
}

/// D_A: sum of distances over unordered pairs of distinct points.
inline std::int64_t distance_sum(const PointSet& s) {
  if (s.size() < 2) throw DomainError("distance_sum needs at least 2 points, got " + std::to_string(s.size()));
  std::int64_t total = 0;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      total += static_cast<std::int64_t>(hamming_distance(s.row(i), s.row(j)));
  return total;
}

inline ColumnHistogram column_histogram(const PointSet& s, std::size_t column) {
  if (column >= s.n()) {
    throw DimensionError("column " + std::to_string(column) + " out of range for n = " + std::to_string(s.n()));
  }
  ColumnHistogram h{std::vector<std::int64_t>(s.q(), 0)};
  for (const auto& w : s.rows()) ++h.counts[w[column]];
  return h;
}

/// Number of unordered row pairs that differ in a column with histogram `h`:
/// sum_{k<j} y_k y_j = (m^2 - sum y_j^2) / 2.
inline std::int64_t column_contribution(const ColumnHistogram& h) {
  const std::int64_t m = h.total();
  std::int64_t squares = 0;
  for (std::int64_t y : h.counts) squares += y * y;
  return (m * m - squares) / 2;
}

/// Number of non-constant columns.
inline std::size_t rank(const PointSet& s) {
  std::size_t r = 0;
  for (std::size_t j = 0; j < s.n(); ++j) {
    const Symbol first = s.at(0, j);
    if (std::ranges::any_of(s.rows(), [&](const Word& w) { return w[j] != first; })) ++r;
  }
  return r;
}

/// C(n, k) * q^(n-k), the number of k-dimensional faces of E_q^n.
inline boost::multiprecision::cpp_int count_faces(std::int64_t n, std::int64_t k, std::int64_t q) {
  using boost::multiprecision::cpp_int;
  if (q < 2) throw DomainError("count_faces: q must be >= 2");
  if (n < 0 || k < 0 || k > n) {
    throw DomainError("count_faces: need 0 <= k <= n, got n = " + std::to_string(n) + ", k = " + std::to_string(k));
  }
  cpp_int binom = 1;
  for (std::int64_t i = 1; i <= k; ++i) binom = binom * (n - k + i) / i;
  return binom * boost::multiprecision::pow(cpp_int(q), static_cast<unsigned>(n - k));
}

namespace detail {

inline std::vector<std::int64_t> sorted_row(const DistanceMatrix& d, std::size_t i) {
  auto r = d.row(i);
  std::vector<std::int64_t> v(r.begin(), r.end());
  std::ranges::sort(v);
  return v;
}

// Rows assigned in order 0..m-1, candidates tried in increasing index.
inline bool extend_isometry(const DistanceMatrix& a, const DistanceMatrix& b,
                            const std::vector<std::vector<std::int64_t>>& profile_a,
                            const std::vector<std::vector<std::int64_t>>& profile_b,
                            std::vector<std::size_t>& mapping, std::vector<bool>& used, std::size_t i) {
  const std::size_t m = a.size();
  if (i == m) return true;
  for (std::size_t t = 0; t < m; ++t) {
    if (used[t] || profile_a[i] != profile_b[t]) continue;
    bool ok = true;
    for (std::size_t j = 0; j < i && ok; ++j) ok = a(i, j) == b(t, mapping[j]);
    if (!ok) continue;
    mapping[i] = t;
    used[t] = true;
    if (extend_isometry(a, b, profile_a, profile_b, mapping, used, i + 1)) return true;
    used[t] = false;
  }
  return false;
}

}  // namespace detail

/// Lexicographically least distance-preserving bijection from `a`'s rows to
/// `b`'s rows, given as distance matrices.
inline std::optional<IsometryWitness> find_isometry(const DistanceMatrix& a, const DistanceMatrix& b) {
  if (a.size() != b.size()) return std::nullopt;
  const std::size_t m = a.size();
  std::vector<std::vector<std::int64_t>> pa(m), pb(m);
  for (std::size_t i = 0; i < m; ++i) {
    pa[i] = detail::sorted_row(a, i);
    pb[i] = detail::sorted_row(b, i);
  }
  std::multiset<std::vector<std::int64_t>> sa(pa.begin(), pa.end()), sb(pb.begin(), pb.end());
  if (sa != sb) return std::nullopt;
  std::vector<std::size_t> mapping(m, 0);
  std::vector<bool> used(m, false);
  if (!detail::extend_isometry(a, b, pa, pb, mapping, used, 0)) return std::nullopt;
  return IsometryWitness{std::move(mapping)};
}

/// Only distances matter: `s` and `t` may differ in n and q.
inline std::optional<IsometryWitness> is_isometric(const PointSet& s, const PointSet& t) {
  if (s.size() != t.size()) return std::nullopt;
  return find_isometry(distance_matrix(s), distance_matrix(t));
}

/// Checks `w` against both distance matrices entry by entry.
inline bool check_isometry_witness(const PointSet& s, const PointSet& t, const IsometryWitness& w) {
  const std::size_t m = s.size();
  if (t.size() != m || w.mapping.size() != m) return false;
  std::vector<bool> seen(m, false);
  for (std::size_t x : w.mapping) {
    if (x >= m || seen[x]) return false;
    seen[x] = true;
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (hamming_distance(s.row(i), s.row(j)) != hamming_distance(t.row(w.mapping[i]), t.row(w.mapping[j])))
        return false;
  return true;
}

}  // namespace hamrank
