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
 * @file bounds.hpp
 * @brief Exact rank bounds from the distance sum.
 *
 * Every non-constant column of an m-point set contributes between m - 1 and
 * a case-dependent maximum to D_A, so for r = R(A):
 *
 *   r * min_contribution(m) <= D_A <= r * max_contribution(m, q).
 *
 * Dividing through gives the two rank bounds. Both depend only on (D_A, m, q),
 * which are isometry invariants, so ceil(lower) bounds the rank of every
 * isometric image. A set whose rank meets that ceiling is metrically dense.
 */

#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

#include "hamrank/errors.hpp"
#include "hamrank/hamming.hpp"

namespace hamrank {

/// Exact rational in lowest terms with positive denominator.
using Rational = boost::rational<std::int64_t>;

inline std::int64_t floor_of(const Rational& r) {
  std::int64_t q = r.numerator() / r.denominator();
  if (r.numerator() % r.denominator() != 0 && r.numerator() < 0) --q;
  return q;
}

inline std::int64_t ceil_of(const Rational& r) {
  std::int64_t q = r.numerator() / r.denominator();
  if (r.numerator() % r.denominator() != 0 && r.numerator() > 0) ++q;
  return q;
}

enum class LowerBoundCase { kMAtLeastQ, kMBelowQ };

inline std::string_view to_string(LowerBoundCase c) {
  return c == LowerBoundCase::kMAtLeastQ ? "m >= q" : "m < q";
}

/// m >= q uses the balanced-histogram branch (the boundary m = q included).
inline LowerBoundCase lower_bound_case(std::int64_t m, std::int64_t q) {
  return m >= q ? LowerBoundCase::kMAtLeastQ : LowerBoundCase::kMBelowQ;
}

namespace detail {

inline void require_bound_domain(std::int64_t m, std::int64_t q, const char* fn) {
  if (m < 2) throw DomainError(std::string(fn) + ": need m >= 2, got m = " + std::to_string(m));
  if (q < 2) throw DomainError(std::string(fn) + ": need q >= 2, got q = " + std::to_string(q));
}

// (m^2 - 2)(q - 2) - (m - 2)^2; strictly positive whenever 2 <= m < q.
inline std::int64_t small_m_numerator(std::int64_t m, std::int64_t q) {
  const std::int64_t v = (m * m - 2) * (q - 2) - (m - 2) * (m - 2);
  if (v <= 0) {
    throw DomainError("m < q branch has non-positive denominator for m = " + std::to_string(m) +
                      ", q = " + std::to_string(q));
  }
  return v;
}

}  // namespace detail

/// R(A) <= D / (m - 1).
inline Rational rank_upper_bound(std::int64_t distance_sum, std::int64_t m) {
  if (m < 2) throw DomainError("rank_upper_bound: need m >= 2, got m = " + std::to_string(m));
  if (distance_sum < 0) throw DomainError("rank_upper_bound: negative distance sum");
  return Rational(distance_sum, m - 1);
}

/// Case m >= q: 2qD / ((q - 1) m^2).
/// Case m <  q: 2(q - 2)D / ((m^2 - 2)(q - 2) - (m - 2)^2).
inline Rational rank_lower_bound(std::int64_t distance_sum, std::int64_t m, std::int64_t q) {
  detail::require_bound_domain(m, q, "rank_lower_bound");
  if (distance_sum < 0) throw DomainError("rank_lower_bound: negative distance sum");
  if (lower_bound_case(m, q) == LowerBoundCase::kMAtLeastQ) {
    return Rational(2 * q * distance_sum, (q - 1) * m * m);
  }
  return Rational(2 * (q - 2) * distance_sum, detail::small_m_numerator(m, q));
}

/// Smallest contribution of a non-constant column: histogram (m - 1, 1).
inline std::int64_t min_column_contribution(std::int64_t m) {
  if (m < 2) throw DomainError("min_column_contribution: need m >= 2, got m = " + std::to_string(m));
  return m - 1;
}

/// Real-relaxation maximum of a column contribution. Integer histograms reach
/// it only when the relaxed optimum is integral (e.g. q | m in the first case).
inline Rational max_column_contribution(std::int64_t m, std::int64_t q) {
  detail::require_bound_domain(m, q, "max_column_contribution");
  if (lower_bound_case(m, q) == LowerBoundCase::kMAtLeastQ) {
    return Rational((q - 1) * m * m, 2 * q);
  }
  return Rational(detail::small_m_numerator(m, q), 2 * (q - 2));
}

struct BoundsReport {
  std::int64_t m = 0;
  std::int64_t q = 0;
  std::int64_t distance_sum = 0;
  std::int64_t rank = 0;
  Rational lower;
  Rational upper;
  LowerBoundCase lower_case = LowerBoundCase::kMAtLeastQ;
  bool lower_tight = false;
  bool upper_tight = false;
  bool density_certified = false;

  std::int64_t lower_ceiling() const { return ceil_of(lower); }
  std::int64_t upper_floor() const { return floor_of(upper); }
};

inline BoundsReport bounds_report(const PointSet& s) {
  if (s.size() < 2) throw DomainError("bounds_report: need at least 2 points, got " + std::to_string(s.size()));
  BoundsReport r;
  r.m = static_cast<std::int64_t>(s.size());
  r.q = static_cast<std::int64_t>(s.q());
  r.distance_sum = distance_sum(s);
  r.rank = static_cast<std::int64_t>(rank(s));
  r.lower = rank_lower_bound(r.distance_sum, r.m, r.q);
  r.upper = rank_upper_bound(r.distance_sum, r.m);
  r.lower_case = lower_bound_case(r.m, r.q);
  r.lower_tight = r.rank == r.lower_ceiling();
  r.upper_tight = r.rank == r.upper_floor();
  // Every isometric image has rank >= ceil(lower), so meeting it is a proof.
  r.density_certified = r.lower_tight;
  return r;
}

}  // namespace hamrank
