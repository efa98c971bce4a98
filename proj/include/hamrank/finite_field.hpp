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
 * @file finite_field.hpp
 * @brief GF(p^e) arithmetic and linear subspaces of E_q^n.
 *
 * Field elements are the integers 0..q-1 read as base-p digit vectors, digit i
 * being the coefficient of x^i in GF(p)[x] / (modulus). Symbols of E_q are
 * therefore field elements without any conversion; 0 and 1 encode the field's
 * zero and one. The modulus is the lexicographically smallest monic
 * irreducible polynomial of degree e (coefficients compared from x^0 upward);
 * for e = 1 that is x itself and arithmetic reduces to arithmetic mod p.
 */

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "hamrank/errors.hpp"
#include "hamrank/hamming.hpp"

namespace hamrank {

/// Polynomials over GF(p), coefficient of x^i at index i.
using Poly = std::vector<std::uint32_t>;

namespace detail {

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
  // p is prime, so a^(p-2) is the inverse.
  std::uint64_t result = 1, base = a % p;
  for (std::uint32_t e = p - 2; e; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

/// Remainder of a / b over GF(p); b must be nonzero.
inline Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const std::uint32_t lead_inv = mod_inverse(b.back(), p);
  while (a.size() >= b.size()) {
    const std::uint64_t factor = std::uint64_t{a.back()} * lead_inv % p;
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - factor * b[i] % p) % p);
    }
    trim(a);
  }
  return a;
}

/// All monic polynomials of exact degree `d`, in lexicographic order of
/// (c_0, c_1, ..., c_{d-1}).
inline std::vector<Poly> monic_polys(std::uint32_t p, std::size_t d) {
  std::vector<Poly> out;
  Poly cur(d + 1, 0);
  cur[d] = 1;
  while (true) {
    out.push_back(cur);
    // Increment with c_{d-1} least significant so c_0 varies slowest.
    std::size_t i = d;
    while (i > 0) {
      --i;
      if (++cur[i] < p) break;
      cur[i] = 0;
      if (i == 0) return out;
    }
    if (d == 0) return out;
  }
}

inline bool is_irreducible(const Poly& f, std::uint32_t p) {
  const std::size_t deg = f.size() - 1;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    for (const auto& g : monic_polys(p, d)) {
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return deg >= 1;
}

inline bool is_prime(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

}  // namespace detail

/// Description of GF(q), q = p^e, with base-p element encoding.
struct FieldSpec {
  std::uint32_t p = 2;
  std::uint32_t e = 1;
  std::uint32_t q = 2;
  Poly modulus;  ///< monic, degree e, irreducible over GF(p)

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

  Poly to_poly(std::uint32_t a) const {
    Poly c(e, 0);
    for (std::uint32_t i = 0; i < e; ++i) {
      c[i] = a % p;
      a /= p;
    }
    return c;
  }

  std::uint32_t from_poly(const Poly& c) const {
    std::uint32_t a = 0;
    for (std::size_t i = c.size(); i-- > 0;) a = a * p + c[i];
    return a;
  }
};

/// Builds GF(q) if q is a prime power, else throws NotPrimePowerError.
inline FieldSpec make_field(std::uint64_t q) {
  if (q < 2) throw NotPrimePowerError("q = " + std::to_string(q) + " is not a prime power");
  std::uint64_t p = 2;
  while (q % p != 0) ++p;
  std::uint32_t e = 0;
  std::uint64_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1 || !detail::is_prime(p)) {
    throw NotPrimePowerError("q = " + std::to_string(q) + " is not a prime power");
  }
  if (q > (std::uint64_t{1} << 31)) throw DomainError("field size " + std::to_string(q) + " too large");

  FieldSpec f;
  f.p = static_cast<std::uint32_t>(p);
  f.e = e;
  f.q = static_cast<std::uint32_t>(q);
  for (auto& cand : detail::monic_polys(f.p, e)) {
    if (detail::is_irreducible(cand, f.p)) {
      f.modulus = std::move(cand);
      break;
    }
  }
  return f;
}

namespace detail {

inline void require_element(std::uint32_t a, const FieldSpec& f) {
  if (a >= f.q) throw DomainError("element " + std::to_string(a) + " not in GF(" + std::to_string(f.q) + ")");
}

}  // namespace detail

inline std::uint32_t field_add(std::uint32_t a, std::uint32_t b, const FieldSpec& f) {
  detail::require_element(a, f);
  detail::require_element(b, f);
  std::uint32_t out = 0, scale = 1;
  for (std::uint32_t i = 0; i < f.e; ++i) {
    out += ((a % f.p + b % f.p) % f.p) * scale;
    a /= f.p;
    b /= f.p;
    scale *= f.p;
  }
  return out;
}

inline std::uint32_t field_neg(std::uint32_t a, const FieldSpec& f) {
  detail::require_element(a, f);
  std::uint32_t out = 0, scale = 1;
  for (std::uint32_t i = 0; i < f.e; ++i) {
    out += ((f.p - a % f.p) % f.p) * scale;
    a /= f.p;
    scale *= f.p;
  }
  return out;
}

inline std::uint32_t field_sub(std::uint32_t a, std::uint32_t b, const FieldSpec& f) {
  return field_add(a, field_neg(b, f), f);
}

inline std::uint32_t field_mul(std::uint32_t a, std::uint32_t b, const FieldSpec& f) {
  detail::require_element(a, f);
  detail::require_element(b, f);
  const Poly pa = f.to_poly(a), pb = f.to_poly(b);
  Poly prod(2 * f.e, 0);
  for (std::uint32_t i = 0; i < f.e; ++i)
    for (std::uint32_t j = 0; j < f.e; ++j)
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{pa[i]} * pb[j]) % f.p);
  return f.from_poly(detail::poly_mod(std::move(prod), f.modulus, f.p));
}

inline std::uint32_t field_pow(std::uint32_t a, std::uint64_t k, const FieldSpec& f) {
  std::uint32_t result = 1;
  for (; k; k >>= 1) {
    if (k & 1) result = field_mul(result, a, f);
    a = field_mul(a, a, f);
  }
  return result;
}

/// a^(q-2), the inverse of a nonzero element.
inline std::uint32_t field_inv(std::uint32_t a, const FieldSpec& f) {
  detail::require_element(a, f);
  if (a == 0) throw DivisionByZeroError("field_inv: zero has no inverse");
  return field_pow(a, f.q - 2, f);
}

/// Rank of `rows` over the field, by Gaussian elimination on a copy.
inline std::size_t row_rank(std::vector<Word> rows, const FieldSpec& f) {
  std::size_t r = 0;
  const std::size_t n = rows.empty() ? 0 : rows.front().size();
  for (std::size_t col = 0; col < n && r < rows.size(); ++col) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    const std::uint32_t inv = field_inv(rows[r][col], f);
    for (auto& s : rows[r]) s = field_mul(s, inv, f);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col] == 0) continue;
      const std::uint32_t factor = rows[i][col];
      for (std::size_t j = 0; j < n; ++j) rows[i][j] = field_sub(rows[i][j], field_mul(factor, rows[r][j], f), f);
    }
    ++r;
  }
  return r;
}

/// k linearly independent rows of length n over GF(q).
class GeneratorMatrix {
 public:
  GeneratorMatrix(FieldSpec field, std::size_t n, std::vector<Word> rows)
      : field_(std::move(field)), n_(n), rows_(std::move(rows)) {
    if (rows_.empty() || rows_.size() > n_) {
      throw DomainError("generator matrix needs 1 <= k <= n, got k = " + std::to_string(rows_.size()) +
                        ", n = " + std::to_string(n_));
    }
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (rows_[i].size() != n_) {
        throw ValidationError("generator row " + std::to_string(i) + " has length " +
                              std::to_string(rows_[i].size()) + ", expected " + std::to_string(n_));
      }
      for (Symbol s : rows_[i]) {
        if (s >= field_.q) throw ValidationError("generator row " + std::to_string(i) + " has symbol outside the field");
      }
    }
    if (row_rank(rows_, field_) != rows_.size()) {
      throw RankDeficiencyError("generator rows are linearly dependent over GF(" + std::to_string(field_.q) + ")");
    }
  }

  /// Reads the rows of a point set as generators over GF(s.q()).
  static GeneratorMatrix from_point_set(const PointSet& s) {
    return GeneratorMatrix(make_field(s.q()), s.n(), s.rows());
  }

  const FieldSpec& field() const noexcept { return field_; }
  std::size_t k() const noexcept { return rows_.size(); }
  std::size_t n() const noexcept { return n_; }
  const std::vector<Word>& rows() const noexcept { return rows_; }

 private:
  FieldSpec field_;
  std::size_t n_;
  std::vector<Word> rows_;
};

/// All q^k combinations sum c_i * row_i, coefficient vectors in
/// lexicographic order with c_1 most significant. The zero word comes first.
inline PointSet span(const GeneratorMatrix& g) {
  const FieldSpec& f = g.field();
  const std::size_t k = g.k(), n = g.n();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    total *= f.q;
    if (total > (std::uint64_t{1} << 24)) throw DomainError("span too large to enumerate");
  }
  std::vector<Word> words;
  words.reserve(total);
  std::vector<std::uint32_t> coeff(k, 0);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    Word w(n, 0);
    for (std::size_t i = 0; i < k; ++i) {
      if (coeff[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) w[j] = field_add(w[j], field_mul(coeff[i], g.rows()[i][j], f), f);
    }
    words.push_back(std::move(w));
    for (std::size_t i = k; i-- > 0;) {
      if (++coeff[i] < f.q) break;
      coeff[i] = 0;
    }
  }
  return PointSet(SpaceParams{f.q, n}, std::move(words));
}

/// Every non-constant column holds each symbol exactly m/q times. False when
/// q does not divide m.
inline bool is_uniform_columns(const PointSet& s) {
  const std::size_t m = s.size(), q = s.q();
  if (m % q != 0) return false;
  const auto per_symbol = static_cast<std::int64_t>(m / q);
  for (std::size_t j = 0; j < s.n(); ++j) {
    const auto h = column_histogram(s, j);
    if (h.is_constant()) continue;
    if (std::ranges::any_of(h.counts, [&](std::int64_t c) { return c != per_symbol; })) return false;
  }
  return true;
}

/// Uniformly random rows, rejected until independent. Deterministic in `seed`.
inline GeneratorMatrix random_subspace(std::size_t n, std::size_t k, const FieldSpec& f, std::uint64_t seed) {
  if (k < 1 || k > n) {
    throw DomainError("random_subspace: need 1 <= k <= n, got k = " + std::to_string(k) + ", n = " + std::to_string(n));
  }
  constexpr int kMaxRetries = 10000;
  std::mt19937_64 rng(seed);
  std::vector<Word> rows;
  while (rows.size() < k) {
    int tries = 0;
    while (true) {
      if (++tries > kMaxRetries) throw DomainError("random_subspace: failed to draw an independent row");
      Word w(n);
      for (auto& s : w) s = static_cast<Symbol>(rng() % f.q);
      rows.push_back(std::move(w));
      if (row_rank(rows, f) == rows.size()) break;
      rows.pop_back();
    }
  }
  return GeneratorMatrix(f, n, std::move(rows));
}

}  // namespace hamrank
