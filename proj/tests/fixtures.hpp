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

#pragma once

#include "hamrank/hamming.hpp"

namespace hamrank::fixtures {

/// Four binary words, pairwise distance 2, rank 3 (a 2-dimensional GF(2) subspace).
inline PointSet example_a() {
  return PointSet({2, 4}, {{0, 0, 0, 0}, {0, 0, 1, 1}, {0, 1, 0, 1}, {0, 1, 1, 0}});
}

/// Isometric to example_a() but of rank 4.
inline PointSet example_b() {
  return PointSet({2, 4}, {{0, 0, 0, 0}, {0, 0, 1, 1}, {0, 1, 0, 1}, {1, 0, 0, 1}});
}

/// One pair at distance 3 in E_2^4: both rank bounds equal 3.
inline PointSet tight_binary() { return PointSet({2, 4}, {{0, 0, 0, 0}, {0, 1, 1, 1}}); }

/// One pair at distance 2 in E_3^3 (m < q branch): both rank bounds equal 2.
inline PointSet tight_ternary() { return PointSet({3, 3}, {{0, 0, 0}, {0, 2, 2}}); }

}  // namespace hamrank::fixtures
