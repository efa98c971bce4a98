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
 * @file cli.hpp
 * @brief The `hamrank` command-line front end.
 *
 * Exit codes: 0 success, 1 a flagged negative finding (`dense-check --strict`
 * without a proven dense verdict), 2 usage or input errors.
 */

#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "hamrank/bounds.hpp"
#include "hamrank/density.hpp"
#include "hamrank/errors.hpp"
#include "hamrank/finite_field.hpp"
#include "hamrank/hamming.hpp"
#include "hamrank/json_io.hpp"
#include "hamrank/text_format.hpp"

namespace hamrank::cli {

enum class OutputMode { kTable, kJson };

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitUsage = 2;

struct CliConfig {
  OutputMode output = OutputMode::kTable;
  std::vector<std::string> files;
  std::optional<std::size_t> q, n, k;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> budget;
  std::optional<std::size_t> max_dim;
  std::string generators;
  std::string out_path;
  bool strict = false;
};

namespace detail {

inline std::string rational_text(const Rational& r) {
  return r.denominator() == 1 ? std::to_string(r.numerator())
                              : std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

inline std::string word_text(const Word& w) {
  std::string s;
  for (std::size_t j = 0; j < w.size(); ++j) s += (j ? " " : "") + std::to_string(w[j]);
  return s;
}

inline std::string histogram_text(const ColumnHistogram& h) {
  std::string s = "(";
  for (std::size_t i = 0; i < h.counts.size(); ++i) s += (i ? "," : "") + std::to_string(h.counts[i]);
  return s + ")";
}

inline void kv(std::ostream& out, const std::string& key, const std::string& value) {
  out << std::left << std::setw(20) << (key + ":") << value << '\n';
}

inline void print_points(std::ostream& out, const std::string& title, const PointSet& s) {
  out << title << ":\n";
  for (const auto& w : s.rows()) out << "  " << word_text(w) << '\n';
}

inline int cmd_rank(const CliConfig& cfg, std::ostream& out) {
  const auto s = read_point_set_file(cfg.files.at(0));
  const auto r = rank(s);
  std::optional<std::int64_t> dsum;
  if (s.size() >= 2) dsum = distance_sum(s);

  if (cfg.output == OutputMode::kJson) {
    nlohmann::json cols = nlohmann::json::array();
    for (std::size_t j = 0; j < s.n(); ++j) {
      const auto h = column_histogram(s, j);
      cols.push_back({{"index", j},
                      {"histogram", to_json(h)},
                      {"contribution", column_contribution(h)},
                      {"constant", h.is_constant()}});
    }
    out << nlohmann::json{{"m", s.size()},
                          {"q", s.q()},
                          {"n", s.n()},
                          {"rank", r},
                          {"distance_sum", dsum ? nlohmann::json(*dsum) : nlohmann::json(nullptr)},
                          {"columns", cols}}
               .dump(2)
        << '\n';
    return kExitOk;
  }
  kv(out, "m", std::to_string(s.size()));
  kv(out, "q", std::to_string(s.q()));
  kv(out, "n", std::to_string(s.n()));
  kv(out, "rank", std::to_string(r));
  kv(out, "distance_sum", dsum ? std::to_string(*dsum) : "n/a (m < 2)");
  out << "column  histogram            contribution  constant\n";
  for (std::size_t j = 0; j < s.n(); ++j) {
    const auto h = column_histogram(s, j);
    out << std::left << std::setw(8) << j << std::setw(21) << histogram_text(h) << std::setw(14)
        << column_contribution(h) << (h.is_constant() ? "yes" : "no") << '\n';
  }
  return kExitOk;
}

inline int cmd_bounds(const CliConfig& cfg, std::ostream& out) {
  const auto s = read_point_set_file(cfg.files.at(0));
  const auto r = bounds_report(s);
  if (cfg.output == OutputMode::kJson) {
    out << to_json(r).dump(2) << '\n';
    return kExitOk;
  }
  kv(out, "m", std::to_string(r.m));
  kv(out, "q", std::to_string(r.q));
  kv(out, "distance_sum", std::to_string(r.distance_sum));
  kv(out, "rank", std::to_string(r.rank));
  kv(out, "lower", rational_text(r.lower));
  kv(out, "upper", rational_text(r.upper));
  kv(out, "lower_ceiling", std::to_string(r.lower_ceiling()));
  kv(out, "upper_floor", std::to_string(r.upper_floor()));
  kv(out, "lower_case", std::string(to_string(r.lower_case)));
  kv(out, "lower_tight", r.lower_tight ? "true" : "false");
  kv(out, "upper_tight", r.upper_tight ? "true" : "false");
  kv(out, "density_certified", r.density_certified ? "true" : "false");
  return kExitOk;
}

inline int cmd_isometric(const CliConfig& cfg, std::ostream& out) {
  const auto a = read_point_set_file(cfg.files.at(0));
  const auto b = read_point_set_file(cfg.files.at(1));
  const auto w = is_isometric(a, b);
  if (cfg.output == OutputMode::kJson) {
    out << nlohmann::json{{"isometric", w.has_value()}, {"mapping", w ? to_json(*w) : nlohmann::json(nullptr)}}.dump(2)
        << '\n';
    return kExitOk;
  }
  if (!w) {
    out << "not isometric\n";
    return kExitOk;
  }
  out << "isometric\n";
  for (std::size_t i = 0; i < w->mapping.size(); ++i) out << "  " << i << " -> " << w->mapping[i] << '\n';
  return kExitOk;
}

inline SearchConfig search_config(const CliConfig& cfg, std::size_t q) {
  SearchConfig sc;
  sc.q = q;
  if (cfg.budget) sc.node_budget = *cfg.budget;
  sc.max_dimension = cfg.max_dim;
  sc.validate();
  return sc;
}

inline int cmd_min_embed(const CliConfig& cfg, std::ostream& out) {
  const auto s = read_point_set_file(cfg.files.at(0));
  if (s.size() < 2) throw DomainError("min-embed needs at least 2 points");
  const auto res = min_embedding_dimension(distance_matrix(s), search_config(cfg, cfg.q.value_or(s.q())));
  if (cfg.output == OutputMode::kJson) {
    out << to_json(res).dump(2) << '\n';
    return kExitOk;
  }
  kv(out, "status", std::string(to_string(res.status)));
  kv(out, "min_dimension", std::to_string(res.min_dimension));
  kv(out, "nodes_explored", std::to_string(res.nodes_explored));
  if (res.realization) print_points(out, "realization", *res.realization);
  return kExitOk;
}

inline int cmd_dense_check(const CliConfig& cfg, std::ostream& out) {
  const auto s = read_point_set_file(cfg.files.at(0));
  const auto v = is_metrically_dense(s, search_config(cfg, s.q()));
  if (cfg.output == OutputMode::kJson) {
    out << to_json(v).dump(2) << '\n';
  } else {
    kv(out, "verdict", std::string(to_string(v.verdict)));
    kv(out, "certified_by", std::string(to_string(v.certified_by)));
    kv(out, "rank", std::to_string(v.rank));
    kv(out, "min_dimension", v.min_dimension ? std::to_string(*v.min_dimension) : "unknown");
    kv(out, "nodes_explored", std::to_string(v.nodes_explored));
    if (v.witness) print_points(out, "witness", *v.witness);
  }
  return cfg.strict && v.verdict != Verdict::kDense ? kExitNegative : kExitOk;
}

inline int cmd_gen_subspace(const CliConfig& cfg, std::ostream& out) {
  const std::size_t q = *cfg.q, n = *cfg.n, k = *cfg.k;
  const auto field = make_field(q);
  std::optional<GeneratorMatrix> g;
  if (!cfg.generators.empty()) {
    const auto rows = read_point_set_file(cfg.generators);
    if (rows.q() != q || rows.n() != n) {
      throw ValidationError("generator file is over q = " + std::to_string(rows.q()) + ", n = " +
                            std::to_string(rows.n()) + " but --q " + std::to_string(q) + " --n " + std::to_string(n) +
                            " was given");
    }
    if (rows.size() != k) {
      throw ValidationError("generator file has " + std::to_string(rows.size()) + " rows but --k " +
                            std::to_string(k) + " was given");
    }
    g.emplace(field, n, rows.rows());
  } else {
    g.emplace(random_subspace(n, k, field, *cfg.seed));
  }
  const auto l = span(*g);
  const std::string comment =
      std::to_string(k) + "-dimensional subspace of GF(" + std::to_string(q) + ")^" + std::to_string(n);
  if (cfg.out_path.empty()) {
    write_point_set(out, l, comment);
    return kExitOk;
  }
  std::ofstream f(cfg.out_path);
  if (!f) throw Error("cannot write '" + cfg.out_path + "'");
  write_point_set(f, l, comment);
  if (!f) throw Error("write to '" + cfg.out_path + "' failed");
  return kExitOk;
}

inline int cmd_faces(const CliConfig& cfg, std::ostream& out) {
  const auto faces = count_faces(static_cast<std::int64_t>(*cfg.n), static_cast<std::int64_t>(*cfg.k),
                                 static_cast<std::int64_t>(*cfg.q));
  if (cfg.output == OutputMode::kJson) {
    // Decimal string: the count has no size limit.
    out << nlohmann::json{{"n", *cfg.n}, {"k", *cfg.k}, {"q", *cfg.q}, {"faces", faces.str()}}.dump(2) << '\n';
  } else {
    kv(out, "faces", faces.str());
  }
  return kExitOk;
}

inline int cmd_uniform_check(const CliConfig& cfg, std::ostream& out) {
  const auto s = read_point_set_file(cfg.files.at(0));
  const bool uniform = is_uniform_columns(s);
  const bool divides = s.size() % s.q() == 0;
  const auto per_symbol = static_cast<std::int64_t>(s.size() / s.q());
  auto column_uniform = [&](const ColumnHistogram& h) {
    return h.is_constant() || (divides && std::ranges::all_of(h.counts, [&](std::int64_t c) { return c == per_symbol; }));
  };
  if (cfg.output == OutputMode::kJson) {
    nlohmann::json cols = nlohmann::json::array();
    for (std::size_t j = 0; j < s.n(); ++j) {
      const auto h = column_histogram(s, j);
      cols.push_back({{"index", j}, {"histogram", to_json(h)}, {"constant", h.is_constant()}, {"uniform", column_uniform(h)}});
    }
    out << nlohmann::json{{"uniform", uniform}, {"m", s.size()}, {"q", s.q()}, {"q_divides_m", divides}, {"columns", cols}}
               .dump(2)
        << '\n';
    return kExitOk;
  }
  kv(out, "uniform", uniform ? "true" : "false");
  kv(out, "q_divides_m", divides ? "true" : "false");
  out << "column  histogram            constant  uniform\n";
  for (std::size_t j = 0; j < s.n(); ++j) {
    const auto h = column_histogram(s, j);
    out << std::left << std::setw(8) << j << std::setw(21) << histogram_text(h) << std::setw(10)
        << (h.is_constant() ? "yes" : "no") << (column_uniform(h) ? "yes" : "no") << '\n';
  }
  return kExitOk;
}

}  // namespace detail

/// Runs one invocation. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Combinatorial rank, distance-sum bounds and metric density in Hamming spaces", "hamrank"};
  app.require_subcommand(1);
  CliConfig cfg;
  std::string output = "table";
  app.add_option("--output", output, "Output format")->check(CLI::IsMember({"json", "table"}));

  auto* rank_cmd = app.add_subcommand("rank", "Rank, distance sum, column histograms and contributions");
  rank_cmd->add_option("file", cfg.files, "Point-set file")->required()->expected(1);

  auto* bounds_cmd = app.add_subcommand("bounds", "Rank bounds report");
  bounds_cmd->add_option("file", cfg.files, "Point-set file")->required()->expected(1);

  auto* iso_cmd = app.add_subcommand("isometric", "Find a distance-preserving bijection");
  iso_cmd->add_option("files", cfg.files, "Two point-set files")->required()->expected(2);

  auto* embed_cmd = app.add_subcommand("min-embed", "Minimum realization dimension of the distance matrix");
  embed_cmd->add_option("file", cfg.files, "Point-set file")->required()->expected(1);
  embed_cmd->add_option("--q", cfg.q, "Alphabet size for the realization (default: the file's q)")
      ->check(CLI::Range(std::size_t{2}, std::size_t{1} << 20));
  embed_cmd->add_option("--budget", cfg.budget, "Node budget")->check(CLI::PositiveNumber);
  embed_cmd->add_option("--max-dim", cfg.max_dim, "Largest dimension to try")->check(CLI::PositiveNumber);

  auto* dense_cmd = app.add_subcommand("dense-check", "Decide metric density");
  dense_cmd->add_option("file", cfg.files, "Point-set file")->required()->expected(1);
  dense_cmd->add_option("--budget", cfg.budget, "Node budget")->check(CLI::PositiveNumber);
  dense_cmd->add_flag("--strict", cfg.strict, "Exit 1 unless the verdict is dense");

  auto* gen_cmd = app.add_subcommand("gen-subspace", "Emit the span of a generator matrix as a point-set file");
  gen_cmd->add_option("--q", cfg.q, "Field size (prime power)")->required();
  gen_cmd->add_option("--n", cfg.n, "Word length")->required()->check(CLI::PositiveNumber);
  gen_cmd->add_option("--k", cfg.k, "Subspace dimension")->required()->check(CLI::PositiveNumber);
  auto* seed_opt = gen_cmd->add_option("--seed", cfg.seed, "Seed for a random generator matrix");
  auto* gens_opt = gen_cmd->add_option("--generators", cfg.generators, "Generator matrix file");
  seed_opt->excludes(gens_opt);
  gen_cmd->add_option("-o", cfg.out_path, "Output file (default: stdout)");

  auto* faces_cmd = app.add_subcommand("faces", "Number of k-dimensional faces of E_q^n");
  faces_cmd->add_option("--n", cfg.n, "Word length")->required();
  faces_cmd->add_option("--k", cfg.k, "Face dimension")->required();
  faces_cmd->add_option("--q", cfg.q, "Alphabet size")->required();

  auto* uniform_cmd = app.add_subcommand("uniform-check", "Uniform column distribution test");
  uniform_cmd->add_option("file", cfg.files, "Point-set file")->required()->expected(1);

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "hamrank: " << e.what() << '\n';
    return kExitUsage;
  }
  cfg.output = output == "json" ? OutputMode::kJson : OutputMode::kTable;

  try {
    if (*gen_cmd && !cfg.seed && cfg.generators.empty()) {
      err << "hamrank: gen-subspace needs exactly one of --seed or --generators\n";
      return kExitUsage;
    }
    if (*rank_cmd) return detail::cmd_rank(cfg, out);
    if (*bounds_cmd) return detail::cmd_bounds(cfg, out);
    if (*iso_cmd) return detail::cmd_isometric(cfg, out);
    if (*embed_cmd) return detail::cmd_min_embed(cfg, out);
    if (*dense_cmd) return detail::cmd_dense_check(cfg, out);
    if (*gen_cmd) return detail::cmd_gen_subspace(cfg, out);
    if (*faces_cmd) return detail::cmd_faces(cfg, out);
    if (*uniform_cmd) return detail::cmd_uniform_check(cfg, out);
  } catch (const Error& e) {
    err << "hamrank: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace hamrank::cli
