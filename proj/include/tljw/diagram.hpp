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

#include <algorithm>
#include <atomic>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tljw {

/// Thrown for malformed diagrams and out-of-range generator indices.
class InvalidDiagram : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Running totals of algebra work; the engines report deltas of these.
struct OpCounters {
  std::atomic<std::uint64_t> compositions{0};      ///< diagram-by-diagram products
  std::atomic<std::uint64_t> element_products{0};  ///< element-by-element products

  void reset() {
    compositions = 0;
    element_products = 0;
  }
};

inline OpCounters& op_counters() {
  static OpCounters counters;
  return counters;
}

enum class Edge { top, bottom };

/// A boundary point of a rectangle: its edge and 1-based left-to-right position.
struct BoundaryPoint {
  Edge edge;
  int position;

  friend bool operator==(const BoundaryPoint&, const BoundaryPoint&) = default;
};

/// Temperley-Lieb diagram in TL_{n_top, n_bottom}: a planar perfect matching
/// of the boundary points of a rectangle.
///
/// Points are numbered 1..n_top along the top edge left to right, then
/// n_top+1..n_top+n_bottom along the bottom edge right to left. With this
/// numbering planarity is exactly "no a < b < c < d with {a,c} and {b,d}
/// both paired". Internally the partner table is 0-based.
class Diagram {
 public:
  using Index = std::uint16_t;

  Diagram() = default;

  /// From 1-based pairs; validates perfect matching and planarity.
  Diagram(int n_top, int n_bottom, const std::vector<std::pair<int, int>>& pairs)
      : n_top_(n_top), n_bottom_(n_bottom) {
    check_sizes(n_top, n_bottom);
    const int total = n_top + n_bottom;
    partner_.assign(static_cast<std::size_t>(total), kUnset);
    for (const auto& [a, b] : pairs) {
      if (a < 1 || b < 1 || a > total || b > total || a == b) {
        throw InvalidDiagram("pair out of range: (" + std::to_string(a) + "," +
                             std::to_string(b) + ")");
      }
      if (partner_[a - 1] != kUnset || partner_[b - 1] != kUnset) {
        throw InvalidDiagram("point used twice in pairing");
      }
      partner_[a - 1] = static_cast<Index>(b - 1);
      partner_[b - 1] = static_cast<Index>(a - 1);
    }
    validate();
  }

  /// From a 0-based partner table; validates.
  static Diagram from_partners(int n_top, int n_bottom, std::vector<Index> partner) {
    check_sizes(n_top, n_bottom);
    Diagram d;
    d.n_top_ = n_top;
    d.n_bottom_ = n_bottom;
    d.partner_ = std::move(partner);
    if (d.partner_.size() != static_cast<std::size_t>(n_top + n_bottom)) {
      throw InvalidDiagram("partner table has wrong length");
    }
    for (std::size_t i = 0; i < d.partner_.size(); ++i) {
      const std::size_t p = d.partner_[i];
      if (p >= d.partner_.size() || p == i || d.partner_[p] != i) {
        throw InvalidDiagram("partner table is not a perfect matching");
      }
    }
    d.validate();
    return d;
  }

  int n_top() const { return n_top_; }
  int n_bottom() const { return n_bottom_; }
  int size() const { return n_top_ + n_bottom_; }
  bool is_square() const { return n_top_ == n_bottom_; }

  /// 0-based partner table in boundary order.
  const std::vector<Index>& partners() const { return partner_; }

  /// 1-based partner of a 1-based point.
  int partner(int point) const { return partner_.at(static_cast<std::size_t>(point - 1)) + 1; }

  /// 1-based point number of a boundary point.
  int point(BoundaryPoint b) const {
    return b.edge == Edge::top ? b.position : n_top_ + n_bottom_ + 1 - b.position;
  }
  int point(Edge e, int position) const { return point(BoundaryPoint{e, position}); }

  /// Boundary location of a 1-based point.
  BoundaryPoint locate(int point) const {
    if (point <= n_top_) return {Edge::top, point};
    return {Edge::bottom, n_top_ + n_bottom_ + 1 - point};
  }

  /// Partner of a boundary point, as a boundary point.
  BoundaryPoint partner(BoundaryPoint b) const { return locate(partner(point(b))); }

  /// Pairs (a, b) with a < b, sorted by a.
  std::vector<std::pair<int, int>> pairs() const {
    std::vector<std::pair<int, int>> r;
    for (std::size_t i = 0; i < partner_.size(); ++i) {
      if (i < partner_[i]) r.emplace_back(static_cast<int>(i) + 1, partner_[i] + 1);
    }
    return r;
  }

  int through_strand_count() const {
    int c = 0;
    for (int i = 0; i < n_top_; ++i) c += partner_[static_cast<std::size_t>(i)] >= n_top_ ? 1 : 0;
    return c;
  }

  /// "[[1,6],[2,5],[3,4]]" prefixed by the shape.
  std::string to_string() const {
    std::string s = "TL(" + std::to_string(n_top_) + "," + std::to_string(n_bottom_) + ")[";
    bool first = true;
    for (const auto& [a, b] : pairs()) {
      if (!first) s += ",";
      first = false;
      s += "[" + std::to_string(a) + "," + std::to_string(b) + "]";
    }
    return s + "]";
  }

  /// Canonical order: shape, then partner table lexicographically.
  friend auto operator<=>(const Diagram& a, const Diagram& b) {
    if (auto c = a.n_top_ <=> b.n_top_; c != 0) return c;
    if (auto c = a.n_bottom_ <=> b.n_bottom_; c != 0) return c;
    return a.partner_ <=> b.partner_;
  }
  friend bool operator==(const Diagram& a, const Diagram& b) = default;

  std::size_t hash() const {
    std::size_t h = static_cast<std::size_t>(n_top_) * 1000003u + static_cast<std::size_t>(n_bottom_);
    for (Index p : partner_) h = h * 131u + p;
    return h;
  }

 private:
  static constexpr Index kUnset = 0xFFFF;

  static void check_sizes(int n_top, int n_bottom) {
    if (n_top < 0 || n_bottom < 0) throw InvalidDiagram("negative boundary size");
    if ((n_top + n_bottom) % 2 != 0) throw InvalidDiagram("odd number of boundary points");
    if (n_top + n_bottom >= kUnset) throw InvalidDiagram("diagram too large");
  }

  void validate() const {
    // Planar iff the pairs nest like brackets in boundary order.
    std::vector<std::size_t> open;
    for (std::size_t i = 0; i < partner_.size(); ++i) {
      if (partner_[i] == kUnset) throw InvalidDiagram("point left unpaired");
      if (partner_[i] > i) {
        open.push_back(i);
      } else {
        if (open.empty() || open.back() != partner_[i]) {
          throw InvalidDiagram("pairing is crossing");
        }
        open.pop_back();
      }
    }
  }

  int n_top_ = 0;
  int n_bottom_ = 0;
  std::vector<Index> partner_;
};

struct DiagramHash {
  std::size_t operator()(const Diagram& d) const { return d.hash(); }
};

namespace detail {

// Connects boundary points by edge/position and produces a validated Diagram.
class DiagramBuilder {
 public:
  DiagramBuilder(int n_top, int n_bottom) : n_top_(n_top), n_bottom_(n_bottom) {}

  void connect(BoundaryPoint a, BoundaryPoint b) {
    pairs_.emplace_back(index(a), index(b));
  }

  Diagram build() const { return Diagram(n_top_, n_bottom_, pairs_); }

 private:
  int index(BoundaryPoint b) const {
    const int bound = b.edge == Edge::top ? n_top_ : n_bottom_;
    if (b.position < 1 || b.position > bound) throw InvalidDiagram("boundary position out of range");
    return b.edge == Edge::top ? b.position : n_top_ + n_bottom_ + 1 - b.position;
  }

  int n_top_;
  int n_bottom_;
  std::vector<std::pair<int, int>> pairs_;
};

}  // namespace detail

/// The identity diagram of TL_n: top i joined to bottom i.
inline Diagram identity(int n) {
  if (n < 0) throw InvalidDiagram("identity: n must be non-negative");
  detail::DiagramBuilder b(n, n);
  for (int i = 1; i <= n; ++i) b.connect({Edge::top, i}, {Edge::bottom, i});
  return b.build();
}

/// Generator e_i of TL_n: a cup on top points i, i+1 over a cap on bottom
/// points i, i+1, every other strand vertical.
inline Diagram gen_e(int n, int i) {
  if (i < 1 || i > n - 1) {
    throw InvalidDiagram("gen_e: need 1 <= i <= n-1, got i=" + std::to_string(i) +
                         ", n=" + std::to_string(n));
  }
  detail::DiagramBuilder b(n, n);
  b.connect({Edge::top, i}, {Edge::top, i + 1});
  b.connect({Edge::bottom, i}, {Edge::bottom, i + 1});
  for (int j = 1; j <= n; ++j) {
    if (j != i && j != i + 1) b.connect({Edge::top, j}, {Edge::bottom, j});
  }
  return b.build();
}

/// g_{n,i}: a single cup at top points n-1, n and a single cap at bottom
/// positions i, i+1; g_{n,n} is the identity.
inline Diagram g_diagram(int n, int i) {
  if (i < 1 || i > n) {
    throw InvalidDiagram("g_diagram: need 1 <= i <= n, got i=" + std::to_string(i) +
                         ", n=" + std::to_string(n));
  }
  if (i == n) return identity(n);
  detail::DiagramBuilder b(n, n);
  b.connect({Edge::top, n - 1}, {Edge::top, n});
  b.connect({Edge::bottom, i}, {Edge::bottom, i + 1});
  int bottom = 1;
  for (int t = 1; t <= n - 2; ++t) {
    if (bottom == i) bottom += 2;
    b.connect({Edge::top, t}, {Edge::bottom, bottom});
    ++bottom;
  }
  return b.build();
}

/// Result of stacking two diagrams.
struct Composite {
  Diagram diagram;
  int loops = 0;
};

/// Stacks `upper` on top of `lower` (so the product reads upper * lower),
/// traces strands through the shared edge, and counts closed loops.
inline Composite compose(const Diagram& upper, const Diagram& lower) {
  if (upper.n_bottom() != lower.n_top()) {
    throw InvalidDiagram("compose: size mismatch (" + std::to_string(upper.n_bottom()) +
                         " vs " + std::to_string(lower.n_top()) + ")");
  }
  op_counters().compositions.fetch_add(1, std::memory_order_relaxed);

  const int at = upper.n_top();
  const int m = upper.n_bottom();
  const int bb = lower.n_bottom();
  const auto& pu = upper.partners();
  const auto& pl = lower.partners();

  // Interface position j (1..m) is upper index at+m-j and lower index j-1.
  std::vector<char> seen(static_cast<std::size_t>(m) + 1, 0);
  std::vector<Diagram::Index> out(static_cast<std::size_t>(at + bb), 0xFFFF);

  // Follows a strand entering the interface at position j from `from_upper`
  // side until it reaches an outer point; returns the outer result index.
  auto trace = [&](int j, bool from_upper) -> int {
    while (true) {
      seen[static_cast<std::size_t>(j)] = 1;
      if (from_upper) {
        const int p = pl[static_cast<std::size_t>(j - 1)];
        if (p >= m) return at + (p - m);
        j = p + 1;
        from_upper = false;
      } else {
        const int p = pu[static_cast<std::size_t>(at + m - j)];
        if (p < at) return p;
        j = at + m - p;
        from_upper = true;
      }
    }
  };

  for (int i = 0; i < at; ++i) {
    if (out[static_cast<std::size_t>(i)] != 0xFFFF) continue;
    const int p = pu[static_cast<std::size_t>(i)];
    const int end = p < at ? p : trace(at + m - p, true);
    out[static_cast<std::size_t>(i)] = static_cast<Diagram::Index>(end);
    out[static_cast<std::size_t>(end)] = static_cast<Diagram::Index>(i);
  }
  for (int k = 0; k < bb; ++k) {
    const int i = at + k;
    if (out[static_cast<std::size_t>(i)] != 0xFFFF) continue;
    const int p = pl[static_cast<std::size_t>(m + k)];
    const int end = p >= m ? at + (p - m) : trace(p + 1, false);
    out[static_cast<std::size_t>(i)] = static_cast<Diagram::Index>(end);
    out[static_cast<std::size_t>(end)] = static_cast<Diagram::Index>(i);
  }

  int loops = 0;
  for (int j = 1; j <= m; ++j) {
    if (seen[static_cast<std::size_t>(j)]) continue;
    ++loops;
    int cur = j;
    bool from_upper = true;
    do {
      seen[static_cast<std::size_t>(cur)] = 1;
      if (from_upper) {
        cur = pl[static_cast<std::size_t>(cur - 1)] + 1;
      } else {
        cur = at + m - pu[static_cast<std::size_t>(at + m - cur)];
      }
      from_upper = !from_upper;
    } while (cur != j || !from_upper);
  }
  return {Diagram::from_partners(at, bb, std::move(out)), loops};
}

/// Adds one vertical strand on the right: TL_{n,m} -> TL_{n+1,m+1}.
inline Diagram include_right(const Diagram& d) {
  const int nt = d.n_top();
  const int nb = d.n_bottom();
  detail::DiagramBuilder b(nt + 1, nb + 1);
  for (const auto& [x, y] : d.pairs()) b.connect(d.locate(x), d.locate(y));
  b.connect({Edge::top, nt + 1}, {Edge::bottom, nb + 1});
  return b.build();
}

/// Mirror in a horizontal line: top and bottom swap, left-right order kept.
inline Diagram reflect_horizontal(const Diagram& d) {
  detail::DiagramBuilder b(d.n_bottom(), d.n_top());
  auto flip = [](BoundaryPoint p) {
    return BoundaryPoint{p.edge == Edge::top ? Edge::bottom : Edge::top, p.position};
  };
  for (const auto& [x, y] : d.pairs()) b.connect(flip(d.locate(x)), flip(d.locate(y)));
  return b.build();
}

/// Moves the rightmost top point round the corner to become the rightmost
/// bottom point: TL_{n+1,m} -> TL_{n,m+1}. The boundary order is unchanged.
inline Diagram fold_down(const Diagram& d) {
  if (d.n_top() < 1) throw InvalidDiagram("fold_down: no top point to fold");
  return Diagram::from_partners(d.n_top() - 1, d.n_bottom() + 1, d.partners());
}

/// Inverse of fold_down: TL_{n,m+1} -> TL_{n+1,m}.
inline Diagram fold_up(const Diagram& d) {
  if (d.n_bottom() < 1) throw InvalidDiagram("fold_up: no bottom point to fold");
  return Diagram::from_partners(d.n_top() + 1, d.n_bottom() - 1, d.partners());
}

/// Bottom positions i at which bottom points i and i+1 are joined, ascending.
inline std::vector<int> innermost_caps(const Diagram& d) {
  std::vector<int> r;
  for (int i = 1; i < d.n_bottom(); ++i) {
    const BoundaryPoint p = d.partner(BoundaryPoint{Edge::bottom, i});
    if (p.edge == Edge::bottom && p.position == i + 1) r.push_back(i);
  }
  return r;
}

/// Top positions i at which top points i and i+1 are joined, ascending.
inline std::vector<int> innermost_cups(const Diagram& d) {
  std::vector<int> r;
  for (int i = 1; i < d.n_top(); ++i) {
    if (d.partner(i) == i + 1) r.push_back(i);
  }
  return r;
}

/// Deletes the innermost cap at bottom positions i, i+1: TL_{n,m} -> TL_{n,m-2}.
inline Diagram remove_cap(const Diagram& d, int i) {
  const auto caps = innermost_caps(d);
  if (std::find(caps.begin(), caps.end(), i) == caps.end()) {
    throw InvalidDiagram("remove_cap: no innermost cap at position " + std::to_string(i));
  }
  // Bottom position i sits at index n_top + n_bottom - i; its neighbour i+1
  // is the index just before it.
  const int hi = d.n_top() + d.n_bottom() - i;
  const int lo = hi - 1;
  std::vector<Diagram::Index> out;
  out.reserve(d.partners().size() - 2);
  for (int k = 0; k < d.size(); ++k) {
    if (k == lo || k == hi) continue;
    int p = d.partners()[static_cast<std::size_t>(k)];
    if (p > hi) p -= 2;
    out.push_back(static_cast<Diagram::Index>(p));
  }
  return Diagram::from_partners(d.n_top(), d.n_bottom() - 2, std::move(out));
}

/// Inserts a new cap at bottom positions i, i+1 (1 <= i <= m+1): TL_{n,m} -> TL_{n,m+2}.
inline Diagram insert_cap(const Diagram& d, int i) {
  if (i < 1 || i > d.n_bottom() + 1) {
    throw InvalidDiagram("insert_cap: position out of range");
  }
  // New bottom positions i, i+1 land at indices hi-1, hi of the result.
  const int hi = d.n_top() + d.n_bottom() + 2 - i;
  const int lo = hi - 1;
  std::vector<Diagram::Index> out(static_cast<std::size_t>(d.size() + 2));
  for (int k = 0; k < d.size(); ++k) {
    const int nk = k >= lo ? k + 2 : k;
    int p = d.partners()[static_cast<std::size_t>(k)];
    if (p >= lo) p += 2;
    out[static_cast<std::size_t>(nk)] = static_cast<Diagram::Index>(p);
  }
  out[static_cast<std::size_t>(lo)] = static_cast<Diagram::Index>(hi);
  out[static_cast<std::size_t>(hi)] = static_cast<Diagram::Index>(lo);
  return Diagram::from_partners(d.n_top(), d.n_bottom() + 2, std::move(out));
}

/// True iff each of the leftmost n-2 top points of a TL_n diagram is joined
/// to the bottom edge.
inline bool is_in_K(const Diagram& d) {
  const int n = d.n_top();
  for (int i = 1; i <= n - 2; ++i) {
    if (d.partner(i) <= n) return false;
  }
  return true;
}

namespace detail {

inline void enumerate_matchings(std::vector<Diagram::Index>& partner, int lo, int hi,
                                const std::function<void()>& emit) {
  // Pairs points lo..hi-1 (an even count) in every planar way.
  if (lo >= hi) {
    emit();
    return;
  }
  for (int j = lo + 1; j < hi; j += 2) {
    partner[static_cast<std::size_t>(lo)] = static_cast<Diagram::Index>(j);
    partner[static_cast<std::size_t>(j)] = static_cast<Diagram::Index>(lo);
    enumerate_matchings(partner, lo + 1, j, [&] { enumerate_matchings(partner, j + 1, hi, emit); });
  }
}

}  // namespace detail

/// Every diagram in TL_{n_top, n_bottom}, in canonical order.
inline std::vector<Diagram> enumerate_diagrams(int n_top, int n_bottom) {
  if (n_top < 0 || n_bottom < 0 || (n_top + n_bottom) % 2 != 0) {
    throw InvalidDiagram("enumerate_diagrams: n_top + n_bottom must be even and non-negative");
  }
  std::vector<Diagram> out;
  std::vector<Diagram::Index> partner(static_cast<std::size_t>(n_top + n_bottom));
  detail::enumerate_matchings(partner, 0, n_top + n_bottom, [&] {
    out.push_back(Diagram::from_partners(n_top, n_bottom, partner));
  });
  std::sort(out.begin(), out.end());
  return out;
}

/// Uniformly random diagram in TL_{n_top, n_bottom} (cycle lemma on a
/// shuffled bracket word).
template <class Rng>
Diagram random_diagram(int n_top, int n_bottom, Rng& rng) {
  const int total = n_top + n_bottom;
  if (total % 2 != 0 || n_top < 0 || n_bottom < 0) {
    throw InvalidDiagram("random_diagram: n_top + n_bottom must be even");
  }
  const int half = total / 2;
  // half+1 up-steps and half down-steps; exactly one rotation keeps every
  // prefix sum positive, and dropping its leading up-step gives a Dyck word.
  std::vector<int> steps(static_cast<std::size_t>(half), -1);
  steps.insert(steps.end(), static_cast<std::size_t>(half + 1), 1);
  std::shuffle(steps.begin(), steps.end(), rng);
  int sum = 0;
  int min_sum = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    sum += steps[i];
    if (sum <= min_sum) {
      min_sum = sum;
      start = i + 1;
    }
  }
  std::rotate(steps.begin(), steps.begin() + static_cast<std::ptrdiff_t>(start), steps.end());
  std::vector<Diagram::Index> partner(static_cast<std::size_t>(total));
  std::vector<int> open;
  for (int i = 0; i < total; ++i) {
    if (steps[static_cast<std::size_t>(i) + 1] > 0) {
      open.push_back(i);
    } else {
      partner[static_cast<std::size_t>(i)] = static_cast<Diagram::Index>(open.back());
      partner[static_cast<std::size_t>(open.back())] = static_cast<Diagram::Index>(i);
      open.pop_back();
    }
  }
  return Diagram::from_partners(n_top, n_bottom, std::move(partner));
}

}  // namespace tljw

template <>
struct std::hash<tljw::Diagram> {
  std::size_t operator()(const tljw::Diagram& d) const { return d.hash(); }
};
