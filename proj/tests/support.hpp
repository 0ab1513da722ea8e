// Copyright 2026 The tljw Authors
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

// Generators and independent oracles shared by the unit tests. Nothing in
// here calls the code path it is used to check.

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "tljw/tljw.hpp"

namespace tljw::testing {

inline std::mt19937_64 make_rng(std::uint64_t salt = 0) { return std::mt19937_64(0x5eed0000u + salt); }

inline QLaurent random_laurent(std::mt19937_64& rng, int max_terms = 4, long span = 6, long bound = 9) {
  std::uniform_int_distribution<int> count(0, max_terms);
  std::uniform_int_distribution<long> exp(-span, span);
  std::uniform_int_distribution<long> coeff(-bound, bound);
  QLaurent p;
  for (int i = count(rng); i > 0; --i) p += QLaurent::monomial(coeff(rng), exp(rng));
  return p;
}

inline QLaurent random_nonzero_laurent(std::mt19937_64& rng) {
  QLaurent p;
  while (p.is_zero()) p = random_laurent(rng);
  return p;
}

/// Products of random quantum integers and small factors, so that gcds are
/// usually nontrivial.
inline QRat random_qrat(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> k(1, 6);
  QLaurent num = random_laurent(rng);
  QLaurent den = random_nonzero_laurent(rng);
  const QLaurent shared = qint(k(rng)) * qint(k(rng));
  return QRat(num * shared, den * shared);
}

/// [n] straight from (q^n - q^-n)/(q - q^-1).
inline QLaurent qint_closed_form(int n) {
  const QLaurent top = QLaurent::monomial(1, n) - QLaurent::monomial(1, -n);
  const QLaurent bottom = QLaurent::monomial(1, 1) - QLaurent::monomial(1, -1);
  return *top.divide_exact(bottom);
}

/// Element product term by term, one QRat operation per pair of terms.
inline Element naive_mul(const Element& a, const Element& b, LoopConvention conv) {
  Element out(a.n());
  const QRat loop(loop_value(conv));
  for (const auto& [da, ca] : a.terms()) {
    for (const auto& [db, cb] : b.terms()) {
      const Composite c = compose(da, db);
      QRat w = ca * cb;
      for (int i = 0; i < c.loops; ++i) w = w * loop;
      out.add(c.diagram, w);
    }
  }
  return out;
}

inline Element random_element(std::mt19937_64& rng, int n, int terms) {
  Element e(n);
  for (int i = 0; i < terms; ++i) e.add(random_diagram(n, n, rng), random_qrat(rng));
  return e;
}

/// True if no two pairs cross in the linear order of the points.
inline bool non_crossing(const std::vector<std::pair<int, int>>& pairs) {
  for (const auto& [a, b] : pairs) {
    for (const auto& [c, d] : pairs) {
      if (a < c && c < b && b < d) return false;
    }
  }
  return true;
}

/// Every perfect matching of 1..2m, crossing or not.
inline void all_matchings(std::vector<int>& free_points, std::vector<std::pair<int, int>>& cur,
                          std::vector<std::vector<std::pair<int, int>>>& out) {
  if (free_points.empty()) {
    out.push_back(cur);
    return;
  }
  const int first = free_points.front();
  for (std::size_t j = 1; j < free_points.size(); ++j) {
    const int other = free_points[j];
    std::vector<int> rest;
    for (std::size_t t = 1; t < free_points.size(); ++t) {
      if (t != j) rest.push_back(free_points[t]);
    }
    cur.emplace_back(first, other);
    all_matchings(rest, cur, out);
    cur.pop_back();
  }
}

/// Non-crossing perfect matchings of 2m points, found by brute force.
inline std::set<std::vector<std::pair<int, int>>> brute_force_noncrossing(int points) {
  std::vector<int> free_points;
  for (int i = 1; i <= points; ++i) free_points.push_back(i);
  std::vector<std::pair<int, int>> cur;
  std::vector<std::vector<std::pair<int, int>>> all;
  all_matchings(free_points, cur, all);
  std::set<std::vector<std::pair<int, int>>> out;
  for (auto& m : all) {
    if (non_crossing(m)) out.insert(m);
  }
  return out;
}

inline mpz_class catalan(int n) {
  mpz_class c;
  mpz_bin_uiui(c.get_mpz_t(), 2 * static_cast<unsigned long>(n), static_cast<unsigned long>(n));
  return c / (n + 1);
}

}  // namespace tljw::testing
