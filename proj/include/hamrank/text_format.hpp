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

// Point-set text format:
//
//   q n
//   s_1 s_2 ... s_n      (one word per line, symbols in [0, q-1])
//
// Blank lines and lines whose first non-blank character is '#' are skipped.
// LF and CRLF line endings are both accepted.

#pragma once

#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "hamrank/errors.hpp"
#include "hamrank/hamming.hpp"

namespace hamrank {

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

inline std::uint64_t parse_uint(std::string_view tok, std::size_t line_no, const char* what) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(line_no, std::string("invalid ") + what + " '" + std::string(tok) + "'");
  }
  return v;
}

}  // namespace detail

inline PointSet parse_point_set(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  bool have_header = false;
  SpaceParams params;
  std::vector<Word> rows;
  std::map<Word, std::size_t> first_seen;

  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line(raw);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    auto toks = detail::split_ws(line);
    if (toks.empty() || toks.front().front() == '#') continue;

    if (!have_header) {
      if (toks.size() != 2) throw ParseError(line_no, "header must be 'q n'");
      params.q = detail::parse_uint(toks[0], line_no, "alphabet size");
      params.n = detail::parse_uint(toks[1], line_no, "word length");
      if (params.q < 2) throw ParseError(line_no, "alphabet size q must be >= 2");
      if (params.n < 1) throw ParseError(line_no, "word length n must be >= 1");
      have_header = true;
      continue;
    }

    if (toks.size() != params.n) {
      throw ParseError(line_no, "expected " + std::to_string(params.n) + " symbols, got " +
                                    std::to_string(toks.size()));
    }
    Word w;
    w.reserve(params.n);
    for (auto tok : toks) {
      auto v = detail::parse_uint(tok, line_no, "symbol");
      if (v >= params.q) {
        throw ParseError(line_no, "symbol " + std::to_string(v) + " out of range [0, " +
                                      std::to_string(params.q - 1) + "]");
      }
      w.push_back(static_cast<Symbol>(v));
    }
    if (auto [it, inserted] = first_seen.emplace(w, line_no); !inserted) {
      throw ParseError(line_no, "duplicate point (first seen on line " + std::to_string(it->second) + ")");
    }
    rows.push_back(std::move(w));
  }

  if (!have_header) throw ParseError(0, "no header: expected 'q n'");
  if (rows.empty()) throw ParseError(0, "no points");
  return PointSet(params, std::move(rows));
}

inline PointSet parse_point_set(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_point_set(in);
}

inline PointSet read_point_set_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  try {
    return parse_point_set(in);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), e.message(), path);
  }
}

/// `comment`, when non-empty, is written as a leading '# ' line.
inline void write_point_set(std::ostream& out, const PointSet& s, std::string_view comment = {}) {
  if (!comment.empty()) out << "# " << comment << '\n';
  out << s.q() << ' ' << s.n() << '\n';
  for (const auto& w : s.rows()) {
    for (std::size_t j = 0; j < w.size(); ++j) {
      if (j) out << ' ';
      out << w[j];
    }
    out << '\n';
  }
}

inline std::string to_text(const PointSet& s, std::string_view comment = {}) {
  std::ostringstream out;
  write_point_set(out, s, comment);
  return out.str();
}

}  // namespace hamrank
