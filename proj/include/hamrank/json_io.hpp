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

// JSON encodings of reports. Field names are part of the CLI contract.

#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "hamrank/bounds.hpp"
#include "hamrank/density.hpp"
#include "hamrank/hamming.hpp"

namespace hamrank {

inline nlohmann::json to_json(const Rational& r) {
  return {{"num", r.numerator()}, {"den", r.denominator()}};
}

inline nlohmann::json to_json(const PointSet& s) {
  auto rows = nlohmann::json::array();
  for (const auto& w : s.rows()) rows.push_back(w);
  return rows;
}

inline nlohmann::json to_json(const ColumnHistogram& h) { return h.counts; }

inline nlohmann::json to_json(const BoundsReport& r) {
  return {
      {"m", r.m},
      {"q", r.q},
      {"distance_sum", r.distance_sum},
      {"rank", r.rank},
      {"lower", to_json(r.lower)},
      {"upper", to_json(r.upper)},
      {"lower_ceiling", r.lower_ceiling()},
      {"upper_floor", r.upper_floor()},
      {"lower_case", std::string(to_string(r.lower_case))},
      {"lower_tight", r.lower_tight},
      {"upper_tight", r.upper_tight},
      {"density_certified", r.density_certified},
  };
}

inline nlohmann::json to_json(const EmbeddingResult& r) {
  return {
      {"status", std::string(to_string(r.status))},
      {"min_dimension", r.min_dimension},
      {"nodes_explored", r.nodes_explored},
      {"realization", r.realization ? to_json(*r.realization) : nlohmann::json(nullptr)},
  };
}

inline nlohmann::json to_json(const DensityVerdict& v) {
  return {
      {"verdict", std::string(to_string(v.verdict))},
      {"certified_by", std::string(to_string(v.certified_by))},
      {"witness", v.witness ? to_json(*v.witness) : nlohmann::json(nullptr)},
      {"rank", v.rank},
      {"min_dimension", v.min_dimension ? nlohmann::json(*v.min_dimension) : nlohmann::json(nullptr)},
      {"nodes_explored", v.nodes_explored},
  };
}

inline nlohmann::json to_json(const IsometryWitness& w) { return w.mapping; }

}  // namespace hamrank
