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

#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tljw/diagram.hpp"

namespace tljw {

/// Thrown when a k-move's preconditions fail; the message names the
/// violated condition.
class InvalidMove : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A TL_n diagram folded down to the right: 2n collinear points, every
/// strand an arch above the line.
///
/// Position p <= n is bottom point p (left to right); position n+k is the
/// k-th top point counted from the right. Arches never cross.
class Capform {
 public:
  Capform() = default;

  /// From 1-based arcs over positions 1..2n.
  Capform(int n, const std::vector<std::pair<int, int>>& arcs) : n_(n) {
    if (n < 0) throw InvalidDiagram("capform: negative strand count");
    partner_.assign(static_cast<std::size_t>(2 * n), -1);
    for (auto [a, b] : arcs) {
      if (a > b) std::swap(a, b);
      if (a < 1 || b > 2 * n || a == b) throw InvalidDiagram("capform: arc out of range");
      if (partner_[a - 1] != -1 || partner_[b - 1] != -1) {
        throw InvalidDiagram("capform: position used twice");
      }
      partner_[a - 1] = b - 1;
      partner_[b - 1] = a - 1;
    }
    std::vector<int> open;
    for (int i = 0; i < 2 * n; ++i) {
      const int p = partner_[static_cast<std::size_t>(i)];
      if (p == -1) throw InvalidDiagram("capform: position left unpaired");
      if (p > i) {
        open.push_back(i);
      } else if (open.empty() || open.back() != p) {
        throw InvalidDiagram("capform: arcs cross");
      } else {
        open.pop_back();
      }
    }
  }

  int n() const { return n_; }

  /// 1-based partner of a 1-based position.
  int partner(int position) const {
    return partner_.at(static_cast<std::size_t>(position - 1)) + 1;
  }

  bool has_arc(int a, int b) const {
    return a >= 1 && b >= 1 && a <= 2 * n_ && b <= 2 * n_ && partner(a) == b;
  }

  /// Arcs (left, right), sorted by left end.
  std::vector<std::pair<int, int>> arcs() const {
    std::vector<std::pair<int, int>> r;
    for (int i = 0; i < 2 * n_; ++i) {
      const int p = partner_[static_cast<std::size_t>(i)];
      if (p > i) r.emplace_back(i + 1, p + 1);
    }
    return r;
  }

  /// "(1 10)(2 3)(4 9)(5 6)(7 8)".
  std::string to_string() const {
    std::string s;
    for (const auto& [a, b] : arcs()) {
      s += "(" + std::to_string(a) + " " + std::to_string(b) + ")";
    }
    return s;
  }

  /// Parses the text form; n is inferred from the number of arcs.
  static Capform parse(std::string_view text) {
    std::vector<std::pair<int, int>> arcs;
    std::size_t i = 0;
    auto skip_ws = [&] {
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto read_int = [&]() -> int {
      skip_ws();
      const std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (start == i) throw InvalidDiagram("capform text: expected a number at offset " + std::to_string(start));
      return std::stoi(std::string(text.substr(start, i - start)));
    };
    skip_ws();
    while (i < text.size()) {
      if (text[i] != '(') throw InvalidDiagram("capform text: expected '(' at offset " + std::to_string(i));
      ++i;
      const int a = read_int();
      const int b = read_int();
      skip_ws();
      if (i >= text.size() || text[i] != ')') {
        throw InvalidDiagram("capform text: expected ')' at offset " + std::to_string(i));
      }
      ++i;
      arcs.emplace_back(a, b);
      skip_ws();
    }
    return Capform(static_cast<int>(arcs.size()), arcs);
  }

  friend bool operator==(const Capform&, const Capform&) = default;

 private:
  int n_ = 0;
  std::vector<int> partner_;
};

/// Folds a TL_n diagram down to the right. Capform position c is diagram
/// point 2n+1-c, so the capform is the boundary order read backwards.
inline Capform capform_of(const Diagram& d) {
  if (!d.is_square()) throw InvalidDiagram("capform_of: diagram must be square");
  const int n = d.n_top();
  std::vector<std::pair<int, int>> arcs;
  for (const auto& [a, b] : d.pairs()) arcs.emplace_back(2 * n + 1 - b, 2 * n + 1 - a);
  return Capform(n, arcs);
}

inline Diagram diagram_of(const Capform& c) {
  const int n = c.n();
  std::vector<std::pair<int, int>> pairs;
  for (const auto& [a, b] : c.arcs()) pairs.emplace_back(2 * n + 1 - b, 2 * n + 1 - a);
  return Diagram(n, n, pairs);
}

/// A k-move site: k nested arcs whose innermost arc is (p, p+1).
struct KMoveSite {
  int p;
  int k;
  friend bool operator==(const KMoveSite&, const KMoveSite&) = default;
};

/// Replaces the k nested arcs (p-j, p+1+j), j < k, by a single arc (a, a+1)
/// beside k-1 nested arcs over a+2..a+2k-1, where a = p-k+1. The nest must
/// be centred strictly in the left half: p+1 <= n.
inline Capform k_move(const Capform& c, int p, int k) {
  if (k < 1) throw InvalidMove("k-move: k must be at least 1");
  for (int j = 0; j < k; ++j) {
    if (!c.has_arc(p - j, p + 1 + j)) {
      throw InvalidMove("k-move: nest not present (missing arc (" + std::to_string(p - j) + " " +
                        std::to_string(p + 1 + j) + "))");
    }
  }
  if (p + 1 > c.n()) {
    throw InvalidMove("k-move: centre not strictly in the left half (need p+1 <= n, p=" +
                      std::to_string(p) + ", n=" + std::to_string(c.n()) + ")");
  }
  const int a = p - k + 1;
  std::vector<std::pair<int, int>> arcs;
  for (const auto& arc : c.arcs()) {
    if (arc.first >= a && arc.second <= p + k) continue;
    arcs.push_back(arc);
  }
  arcs.emplace_back(a, a + 1);
  for (int j = 0; j <= k - 2; ++j) arcs.emplace_back(a + 2 + j, a + 2 * k - 1 - j);
  return Capform(c.n(), arcs);
}

/// Undoes k_move: `a` is the left end of the single arc (a, a+1), followed
/// by k-1 nested arcs over a+2..a+2k-1.
inline Capform inverse_k_move(const Capform& c, int a, int k) {
  if (k < 1) throw InvalidMove("inverse k-move: k must be at least 1");
  if (!c.has_arc(a, a + 1)) {
    throw InvalidMove("inverse k-move: no single arc at (" + std::to_string(a) + " " +
                      std::to_string(a + 1) + ")");
  }
  for (int j = 0; j <= k - 2; ++j) {
    if (!c.has_arc(a + 2 + j, a + 2 * k - 1 - j)) {
      throw InvalidMove("inverse k-move: nest not present (missing arc (" +
                        std::to_string(a + 2 + j) + " " + std::to_string(a + 2 * k - 1 - j) + "))");
    }
  }
  const int p = a + k - 1;
  if (p + 1 > c.n()) {
    throw InvalidMove("inverse k-move: resulting centre not strictly in the left half (need a+k <= n)");
  }
  std::vector<std::pair<int, int>> arcs;
  for (const auto& arc : c.arcs()) {
    if (arc.first >= a && arc.second <= a + 2 * k - 1) continue;
    arcs.push_back(arc);
  }
  for (int j = 0; j < k; ++j) arcs.emplace_back(p - j, p + 1 + j);
  return Capform(c.n(), arcs);
}

/// Every valid forward k-move site, ordered by p then k (k = 1 included).
inline std::vector<KMoveSite> k_move_sites(const Capform& c) {
  std::vector<KMoveSite> r;
  for (int p = 1; p + 1 <= c.n(); ++p) {
    for (int k = 1; c.has_arc(p - k + 1, p + k); ++k) r.push_back({p, k});
  }
  return r;
}

inline Diagram k_move(const Diagram& d, int p, int k) {
  return diagram_of(k_move(capform_of(d), p, k));
}

inline Diagram inverse_k_move(const Diagram& d, int a, int k) {
  return diagram_of(inverse_k_move(capform_of(d), a, k));
}

}  // namespace tljw
