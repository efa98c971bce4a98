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

#include "hamrank/hamming.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <random>
#include <set>

#include "fixtures.hpp"
#include "oracles.hpp"

namespace hamrank {
namespace {

TEST(HammingDistance, CountsDifferingPositions) {
  EXPECT_EQ(hamming_distance(Word{0, 0, 0, 0}, Word{0, 0, 0, 0}), 0u);
  EXPECT_EQ(hamming_distance(Word{0, 0, 0, 0}, Word{0, 1, 1, 1}), 3u);
  EXPECT_EQ(hamming_distance(Word{0, 0, 1, 1}, Word{0, 1, 0, 1}), 2u);
}

TEST(HammingDistance, LengthMismatchThrows) {
  EXPECT_THROW(hamming_distance(Word{0, 1}, Word{0, 1, 1}), DimensionError);
}

TEST(PointSet, RejectsInvalidRows) {
  EXPECT_THROW(PointSet({2, 2}, {{0, 1}, {0, 1}}), ValidationError);
  EXPECT_THROW(PointSet({2, 2}, {{0, 2}}), ValidationError);
  EXPECT_THROW(PointSet({2, 2}, {{0, 1, 1}}), ValidationError);
  EXPECT_THROW(PointSet({2, 2}, {}), ValidationError);
  EXPECT_THROW(PointSet({1, 2}, {{0, 0}}), ValidationError);
  EXPECT_THROW(PointSet({2, 0}, {{}}), ValidationError);
}

TEST(DistanceMatrix, SingletonIsZero) {
  const PointSet s({3, 2}, {{1, 2}});
  const auto d = distance_matrix(s);
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d(0, 0), 0);
}

TEST(DistanceMatrix, ExampleAIsAllTwos) {
  const auto d = distance_matrix(fixtures::example_a());
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(d(i, j), i == j ? 0 : 2);
}

TEST(DistanceMatrix, MatchesPairwiseOracleOnRandomSets) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto rows = oracle::random_rows(rng, 3, 5, 4);
    const auto d = distance_matrix(PointSet({3, 5}, rows));
    const auto expected = oracle::pairwise(rows);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) ASSERT_EQ(d(i, j), expected[i][j]);
  }
}

TEST(DistanceMatrix, IsAMetricBoundedByN) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t q = 2 + rng() % 4, n = 1 + rng() % 6;
    const std::size_t cap = std::min<std::size_t>(12, static_cast<std::size_t>(std::pow(q, n)));
    const std::size_t m = 2 + rng() % (cap - 1);
    const PointSet s({q, n}, oracle::random_rows(rng, q, n, m));
    const auto d = distance_matrix(s);
    EXPECT_NO_THROW(d.validate_metric());
    EXPECT_LE(d.max_entry(), static_cast<std::int64_t>(n));
  }
}

TEST(DistanceMatrix, ValidateMetricRejectsBadMatrices) {
  EXPECT_THROW(DistanceMatrix::from_rows({{0, 1}, {2, 0}}).validate_metric(), InvalidMatrixError);
  EXPECT_THROW(DistanceMatrix::from_rows({{1, 1}, {1, 0}}).validate_metric(), InvalidMatrixError);
  EXPECT_THROW(DistanceMatrix::from_rows({{0, 0}, {0, 0}}).validate_metric(), InvalidMatrixError);
  EXPECT_THROW(DistanceMatrix::from_rows({{0, 1, 5}, {1, 0, 1}, {5, 1, 0}}).validate_metric(), InvalidMatrixError);
  EXPECT_THROW(DistanceMatrix::from_rows({{0, 1}, {1}}), DimensionError);
}

TEST(DistanceSum, WorkedValues) {
  EXPECT_EQ(distance_sum(fixtures::tight_binary()), 3);
  EXPECT_EQ(distance_sum(fixtures::example_a()), 12);
  EXPECT_EQ(oracle::pair_sum(fixtures::example_a().rows()), 12);
  EXPECT_EQ(distance_sum(fixtures::tight_ternary()), 2);
}

TEST(DistanceSum, TooFewPointsThrows) {
  EXPECT_THROW(distance_sum(PointSet({2, 3}, {{0, 1, 0}})), DomainError);
}

TEST(ColumnHistogram, CountsSymbols) {
  const auto a = fixtures::example_a();
  EXPECT_EQ(column_histogram(a, 0).counts, (std::vector<std::int64_t>{4, 0}));
  EXPECT_EQ(column_histogram(a, 1).counts, (std::vector<std::int64_t>{2, 2}));
  const PointSet single({3, 2}, {{2, 0}});
  EXPECT_EQ(column_histogram(single, 0).counts, (std::vector<std::int64_t>{0, 0, 1}));
  EXPECT_THROW(column_histogram(a, 4), DimensionError);
}

TEST(ColumnContribution, WorkedValues) {
  EXPECT_EQ(column_contribution({{5, 0, 0}}), 0);
  EXPECT_EQ(column_contribution({{2, 2}}), 4);
  EXPECT_EQ(oracle::contribution_by_pairs({2, 2}), 4);
  for (std::int64_t m = 2; m <= 12; ++m) EXPECT_EQ(column_contribution({{m - 1, 1}}), m - 1);
}

TEST(ColumnContribution, MatchesPairCountAndZeroIffConstant) {
  for (std::size_t q = 2; q <= 5; ++q)
    for (std::int64_t m = 1; m <= 9; ++m)
      for (const auto& h : oracle::all_histograms(m, q)) {
        const ColumnHistogram hist{h};
        ASSERT_EQ(column_contribution(hist), oracle::contribution_by_pairs(h));
        ASSERT_EQ(column_contribution(hist) == 0, hist.positive_count() == 1);
      }
}

TEST(Rank, WorkedValues) {
  EXPECT_EQ(rank(fixtures::example_a()), 3u);
  EXPECT_EQ(rank(fixtures::example_b()), 4u);
  EXPECT_EQ(rank(PointSet({2, 3}, {{1, 0, 1}})), 0u);
}

TEST(CountFaces, WorkedValues) {
  EXPECT_EQ(count_faces(5, 5, 7), 1);
  EXPECT_EQ(count_faces(2, 1, 2), 4);
  EXPECT_EQ(count_faces(3, 0, 3), 27);
  EXPECT_EQ(count_faces(60, 0, 3).str(), "42391158275216203514294433201");
  EXPECT_THROW(count_faces(2, 3, 2), DomainError);
  EXPECT_THROW(count_faces(2, -1, 2), DomainError);
  EXPECT_THROW(count_faces(2, 1, 1), DomainError);
}

// A face is fixed by its free coordinates and the values of the others;
// enumerate distinct faces as point sets.
TEST(CountFaces, MatchesEnumeratedFaces) {
  for (std::size_t q = 2; q <= 3; ++q)
    for (std::size_t n = 1; n <= 3; ++n)
      for (std::size_t k = 0; k <= n; ++k) {
        std::set<std::set<Word>> faces;
        for (const auto& base : oracle::all_words(q, n))
          for (unsigned mask = 0; mask < (1u << n); ++mask) {
            if (static_cast<std::size_t>(std::popcount(mask)) != k) continue;
            std::set<Word> face;
            for (const auto& w : oracle::all_words(q, n)) {
              bool in = true;
              for (std::size_t j = 0; j < n; ++j)
                if (!(mask >> j & 1u) && w[j] != base[j]) in = false;
              if (in) face.insert(w);
            }
            faces.insert(face);
          }
        EXPECT_EQ(count_faces(n, k, q), faces.size()) << "q=" << q << " n=" << n << " k=" << k;
      }
}

TEST(Isometry, WorkedValues) {
  const auto a = fixtures::example_a();
  const auto w = is_isometric(a, a);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->mapping, (std::vector<std::size_t>{0, 1, 2, 3}));

  const auto ab = is_isometric(a, fixtures::example_b());
  ASSERT_TRUE(ab);
  EXPECT_TRUE(check_isometry_witness(a, fixtures::example_b(), *ab));

  EXPECT_FALSE(is_isometric(PointSet({2, 2}, {{0, 0}, {0, 1}}), PointSet({2, 2}, {{0, 0}, {1, 1}})));
  EXPECT_FALSE(is_isometric(a, fixtures::tight_binary()));
}

TEST(Isometry, ReturnsLexicographicallyLeastWitness) {
  // Path 0-1-2 against the same path listed in reverse.
  const PointSet s({2, 2}, {{0, 0}, {0, 1}, {1, 1}});
  const PointSet t({2, 2}, {{1, 1}, {0, 1}, {0, 0}});
  const auto w = is_isometric(s, t);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->mapping, (std::vector<std::size_t>{0, 1, 2}));

  std::vector<std::size_t> perm{0, 1, 2};
  std::vector<std::size_t> first;
  do {
    if (check_isometry_witness(s, t, {perm})) {
      first = perm;
      break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  EXPECT_EQ(w->mapping, first);
}

TEST(Isometry, ReflexiveSymmetricAndVerifiable) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t q = 2 + rng() % 3, n = 2 + rng() % 4;
    const std::size_t m = 2 + rng() % 5;
    if (std::pow(q, n) < m) continue;
    const PointSet s({q, n}, oracle::random_rows(rng, q, n, m));
    // A random row shuffle plus per-column relabeling is an isometric image.
    auto rows = s.rows();
    std::shuffle(rows.begin(), rows.end(), rng);
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Symbol> relabel(q);
      std::iota(relabel.begin(), relabel.end(), Symbol{0});
      std::shuffle(relabel.begin(), relabel.end(), rng);
      for (auto& w : rows) w[j] = relabel[w[j]];
    }
    const PointSet t({q, n}, rows);
    ASSERT_TRUE(is_isometric(s, s));
    const auto st = is_isometric(s, t);
    const auto ts = is_isometric(t, s);
    ASSERT_TRUE(st);
    ASSERT_TRUE(ts);
    EXPECT_TRUE(check_isometry_witness(s, t, *st));
    EXPECT_TRUE(check_isometry_witness(t, s, *ts));

    const PointSet u({q, n}, oracle::random_rows(rng, q, n, m));
    EXPECT_EQ(is_isometric(s, u).has_value(), is_isometric(u, s).has_value());
    if (auto w = is_isometric(s, u)) {
      EXPECT_TRUE(check_isometry_witness(s, u, *w));
    }
  }
}

TEST(Invariance, RankAndDistanceSumSurviveRowColumnAndSymbolPermutations) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t q = 2 + rng() % 4, n = 1 + rng() % 7;
    const std::size_t cap = std::min<std::size_t>(14, static_cast<std::size_t>(std::pow(q, n)));
    if (cap < 2) continue;
    const std::size_t m = 2 + rng() % (cap - 1);
    const PointSet s({q, n}, oracle::random_rows(rng, q, n, m));

    auto rows = s.rows();
    std::shuffle(rows.begin(), rows.end(), rng);
    std::vector<std::size_t> cols(n);
    std::iota(cols.begin(), cols.end(), std::size_t{0});
    std::shuffle(cols.begin(), cols.end(), rng);
    std::vector<std::vector<Symbol>> relabel(n, std::vector<Symbol>(q));
    for (auto& r : relabel) {
      std::iota(r.begin(), r.end(), Symbol{0});
      std::shuffle(r.begin(), r.end(), rng);
    }
    for (auto& w : rows) {
      Word out(n);
      for (std::size_t j = 0; j < n; ++j) out[j] = relabel[j][w[cols[j]]];
      w = out;
    }
    const PointSet t({q, n}, rows);

    EXPECT_EQ(rank(s), rank(t));
    EXPECT_EQ(distance_sum(s), distance_sum(t));
    std::multiset<std::int64_t> cs, ct;
    for (std::size_t j = 0; j < n; ++j) {
      cs.insert(column_contribution(column_histogram(s, j)));
      ct.insert(column_contribution(column_histogram(t, j)));
    }
    EXPECT_EQ(cs, ct);
  }
}

TEST(Decomposition, DistanceSumIsSumOfColumnContributions) {
  std::mt19937_64 rng(2024);
  int checked = 0;
  for (int trial = 0; trial < 1500; ++trial) {
    const std::size_t q = 2 + rng() % 4, n = 1 + rng() % 8;
    const std::size_t cap = std::min<std::size_t>(16, static_cast<std::size_t>(std::pow(q, n)));
    if (cap < 2) continue;
    const std::size_t m = 2 + rng() % (cap - 1);
    const PointSet s({q, n}, oracle::random_rows(rng, q, n, m));
    std::int64_t total = 0;
    for (std::size_t j = 0; j < n; ++j) total += column_contribution(column_histogram(s, j));
    ASSERT_EQ(distance_sum(s), total);
    ASSERT_EQ(static_cast<std::int64_t>(rank(s)), oracle::varying_columns(s.rows()));
    ++checked;
  }
  EXPECT_GE(checked, 1000);
}

}  // namespace
}  // namespace hamrank
