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

// Four independent ways to obtain Jones-Wenzl coefficients, plus the
// closed-form shortcuts built on top of them.
//
//   jw_wenzl        full projector via JW_{m+1} = JW_m + [m]/[m+1] JW_m e_m JW_m
//   jw_linear       full projector via JW_{m+1} = JW_m/[m+1] * sum_i [i] g_{m+1,i}
//   ReductionEngine one coefficient by fold-down / innermost-cap recursion
//   coeff_formula   one coefficient as a sum over cap-removal orders

#include <algorithm>
#include <cstddef>
#include <functional>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tljw/capform.hpp"
#include "tljw/diagram.hpp"
#include "tljw/element.hpp"
#include "tljw/qlaurent.hpp"
#include "tljw/qrat.hpp"

namespace tljw {

namespace detail {

// x * qint(i, conv).
inline QLaurent times_qint(const QLaurent& x, int i, LoopConvention conv) {
  QLaurent r = tljw::times_qint(x, i);
  if (conv == LoopConvention::positive && i % 2 == 0) r = -r;
  return r;
}

}  // namespace detail

/// JW^{(n)} from the Wenzl recurrence. Each rank step forms two full
/// element products.
inline Element jw_wenzl(int n, LoopConvention conv = LoopConvention::negative) {
  if (n < 0) throw std::invalid_argument("jw_wenzl: n must be non-negative");
  Element f = one(n == 0 ? 0 : 1);
  for (int m = 1; m < n; ++m) {
    Element lifted = include_right(f);
    const Element e = Element::of(gen_e(m + 1, m));
    const Element middle = mul(mul(lifted, e, conv), lifted, conv);
    const QRat scale(qint(m, conv), qint(m + 1, conv));
    f = lifted + scale * middle;
  }
  return f;
}

/// include_right(h) * g_{m+1,i} for h in TL_m, done on the diagram: insert a
/// cap at bottom position i and fold the rightmost bottom point up. Never
/// produces a closed loop.
inline Diagram times_g(const Diagram& h, int i) {
  op_counters().compositions.fetch_add(1, std::memory_order_relaxed);
  return fold_up(insert_cap(h, i));
}

/// JW^{(n)} from the single-right-cup recurrence. Each rank step is one
/// product with the sum of the g_{m+1,i}; JW is never squared.
inline Element jw_linear(int n, LoopConvention conv = LoopConvention::negative) {
  if (n < 0) throw std::invalid_argument("jw_linear: n must be non-negative");
  Element f = one(n == 0 ? 0 : 1);
  for (int m = 1; m < n; ++m) {
    op_counters().element_products.fetch_add(1, std::memory_order_relaxed);
    const auto cd = detail::common_denominator(f);
    std::unordered_map<Diagram, QLaurent, DiagramHash> acc;
    std::size_t t = 0;
    for (const auto& term : f.terms()) {
      const QLaurent& num = cd.nums[t++];
      for (int i = 1; i <= m + 1; ++i) acc[times_g(term.first, i)] += detail::times_qint(num, i, conv);
    }
    const QLaurent den = cd.den * qint(m + 1, conv);
    Element next(m + 1);
    for (auto& [d, num] : acc) {
      if (!num.is_zero()) next.emplace_unchecked(d, QRat(std::move(num), den));
    }
    f = std::move(next);
  }
  return f;
}

/// Single coefficients of JW^{(n)} by repeated fold-down and innermost-cap
/// removal; no algebra products are ever formed.
///
/// Memoizes [n]! * coeff(D) per diagram. Safe to share between threads:
/// lookups take a shared lock, inserts an exclusive one, and racing inserts
/// store equal values.
class ReductionEngine {
 public:
  explicit ReductionEngine(LoopConvention conv = LoopConvention::negative) : conv_(conv) {}

  LoopConvention convention() const { return conv_; }

  /// Coefficient of the TL_n diagram d in JW^{(n)}.
  QRat coeff(const Diagram& d) {
    if (!d.is_square()) throw InvalidDiagram("coeff: diagram must be square");
    return QRat(numerator(d), qfact(d.n_top(), conv_));
  }

  /// [n]! * coeff(d), an element of Z[q, q^-1].
  QLaurent numerator(const Diagram& d) {
    if (!d.is_square()) throw InvalidDiagram("coeff: diagram must be square");
    if (d.n_top() == 0) return QLaurent(1);
    {
      std::shared_lock lock(mu_);
      if (auto it = memo_.find(d); it != memo_.end()) return it->second;
    }
    const Diagram folded = fold_down(d);
    QLaurent sum;
    for (int i : innermost_caps(folded)) {
      sum += detail::times_qint(numerator(remove_cap(folded, i)), i, conv_);
    }
    std::unique_lock lock(mu_);
    memo_.insert_or_assign(d, sum);
    return sum;
  }

  std::size_t memo_size() const {
    std::shared_lock lock(mu_);
    return memo_.size();
  }

  void clear() {
    std::unique_lock lock(mu_);
    memo_.clear();
  }

 private:
  LoopConvention conv_;
  mutable std::shared_mutex mu_;
  std::unordered_map<Diagram, QLaurent, DiagramHash> memo_;
};

/// One-shot convenience wrapper with a private memo.
inline QRat coeff_reduction(const Diagram& d, LoopConvention conv = LoopConvention::negative) {
  ReductionEngine engine(conv);
  return engine.coeff(d);
}

// ---------------------------------------------------------------------------
// Index sets of cap-removal orders.

using Sequence = std::vector<int>;

/// kappa(s)_i = #{ j < i : s_j < s_i }.
inline Sequence kappa(const Sequence& s) {
  Sequence k(s.size(), 0);
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) k[i] += s[j] < s[i] ? 1 : 0;
  }
  return k;
}

/// tau(s)_i = s_i - 2 kappa(s)_i: the position of the i-th removed cap at
/// the moment it is removed.
inline Sequence tau(const Sequence& s) {
  Sequence k = kappa(s);
  for (std::size_t i = 0; i < s.size(); ++i) k[i] = s[i] - 2 * k[i];
  return k;
}

namespace detail {

// Depth-first walk over every order of removing caps from a capform. At
// each step with 2m points left, any arc (p, p+1) with p <= m may go; the
// visitor sees (original left end, current left end) on the way down and a
// leaf call once every arc is gone.
struct RemovalVisitor {
  std::function<void(int original, int current)> push;
  std::function<void()> pop;
  std::function<void()> leaf;
};

inline void walk_removals(std::vector<int>& original, std::vector<int>& partner,
                          const RemovalVisitor& v) {
  const int size = static_cast<int>(original.size());
  if (size == 0) {
    v.leaf();
    return;
  }
  const int m = size / 2;
  for (int p = 0; p < m; ++p) {
    if (partner[static_cast<std::size_t>(p)] != p + 1) continue;
    std::vector<int> next_original;
    std::vector<int> next_partner;
    next_original.reserve(original.size() - 2);
    next_partner.reserve(partner.size() - 2);
    for (int k = 0; k < size; ++k) {
      if (k == p || k == p + 1) continue;
      next_original.push_back(original[static_cast<std::size_t>(k)]);
      int q = partner[static_cast<std::size_t>(k)];
      next_partner.push_back(q > p + 1 ? q - 2 : q);
    }
    v.push(original[static_cast<std::size_t>(p)], p + 1);
    walk_removals(next_original, next_partner, v);
    v.pop();
  }
}

inline void walk_removals(const Capform& c, const RemovalVisitor& v) {
  std::vector<int> original(static_cast<std::size_t>(2 * c.n()));
  std::vector<int> partner(original.size());
  for (int i = 0; i < 2 * c.n(); ++i) {
    original[static_cast<std::size_t>(i)] = i + 1;
    partner[static_cast<std::size_t>(i)] = c.partner(i + 1) - 1;
  }
  walk_removals(original, partner, v);
}

}  // namespace detail

/// All cap-removal orders of a capform, each recorded by the original left
/// ends of the arcs in the order removed. Sorted.
inline std::vector<Sequence> index_set(const Capform& c) {
  std::vector<Sequence> out;
  Sequence cur;
  detail::walk_removals(c, {[&](int orig, int) { cur.push_back(orig); },
                            [&] { cur.pop_back(); },
                            [&] { out.push_back(cur); }});
  std::sort(out.begin(), out.end());
  return out;
}

/// The same set described by constraints alone: sequences of distinct arc
/// left ends with s_i <= n+i-1, where a cap removed earlier and further left
/// must close before a later one opens. Brute force; used as a cross-check.
inline std::vector<Sequence> index_set_by_constraints(const Capform& c) {
  const int n = c.n();
  std::vector<int> lefts;
  for (const auto& arc : c.arcs()) lefts.push_back(arc.first);
  std::vector<Sequence> out;
  Sequence cur;
  std::vector<char> used(lefts.size(), 0);
  std::function<void()> extend = [&] {
    const int i = static_cast<int>(cur.size()) + 1;
    if (i > n) {
      out.push_back(cur);
      return;
    }
    for (std::size_t a = 0; a < lefts.size(); ++a) {
      if (used[a]) continue;
      const int s = lefts[a];
      if (s > n + i - 1) continue;
      bool ok = true;
      for (int prev : cur) {
        if (prev < s && c.partner(prev) > s) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      used[a] = 1;
      cur.push_back(s);
      extend();
      cur.pop_back();
      used[a] = 0;
    }
  };
  extend();
  std::sort(out.begin(), out.end());
  return out;
}

/// Coefficient of d in JW^{(n)} as (1/[n]!) * sum over removal orders s of
/// [tau(s)_1] ... [tau(s)_n].
inline QRat coeff_formula(const Diagram& d, LoopConvention conv = LoopConvention::negative) {
  const Capform c = capform_of(d);
  const int n = c.n();
  QLaurent total;
  std::vector<QLaurent> partial{QLaurent(1)};
  detail::walk_removals(
      c, {[&](int, int current) { partial.push_back(detail::times_qint(partial.back(), current, conv)); },
          [&] { partial.pop_back(); },
          [&] { total += partial.back(); }});
  return QRat(std::move(total), qfact(n, conv));
}

/// The formula engine's native expression, e.g.
/// "([2][3][3][2][1] + [5][2][3][2][1])/[5]!".
inline std::string formula_expression(const Diagram& d) {
  const Capform c = capform_of(d);
  std::vector<std::string> products;
  std::vector<int> current_stack;
  detail::walk_removals(c, {[&](int, int current) { current_stack.push_back(current); },
                            [&] { current_stack.pop_back(); },
                            [&] {
                              std::string p;
                              for (int t : current_stack) p += "[" + std::to_string(t) + "]";
                              products.push_back(p.empty() ? "1" : p);
                            }});
  std::string sum;
  for (std::size_t i = 0; i < products.size(); ++i) {
    if (i > 0) sum += " + ";
    sum += products[i];
  }
  if (products.empty()) sum = "0";
  const std::string den = "[" + std::to_string(c.n()) + "]!";
  return products.size() > 1 ? "(" + sum + ")/" + den : sum + "/" + den;
}

// ---------------------------------------------------------------------------
// Closed forms.

/// Coefficient after a k-move: [k] * coeff.
inline QRat kmove_transport(const QRat& coeff, int k, LoopConvention conv = LoopConvention::negative) {
  if (k < 1) throw std::invalid_argument("kmove_transport: k must be at least 1");
  return QRat(qint(k, conv)) * coeff;
}

/// Coefficient after an inverse k-move: coeff / [k].
inline QRat inverse_kmove_transport(const QRat& coeff, int k,
                                    LoopConvention conv = LoopConvention::negative) {
  if (k < 1) throw std::invalid_argument("inverse_kmove_transport: k must be at least 1");
  return coeff / QRat(qint(k, conv));
}

/// Thrown when a closed form is asked for a case it does not cover.
class UnderivedCase : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Parameters of a TL_n diagram with exactly two caps and two cups, none
/// nested: caps at bottom positions (b1, b1+1), (b2, b2+1) and cups at top
/// positions (t1, t1+1), (t2, t2+1).
struct TwoCapTwoCup {
  int n;
  int b1;
  int b2;
  int t1;
  int t2;
};

inline void check_shape(const TwoCapTwoCup& p) {
  if (p.n < 4 || p.b1 < 1 || p.t1 < 1 || p.b2 < p.b1 + 2 || p.t2 < p.t1 + 2 || p.b2 + 1 > p.n ||
      p.t2 + 1 > p.n) {
    throw InvalidDiagram("two-cap two-cup diagram: need 1 <= b1, b1+2 <= b2 <= n-1, "
                         "1 <= t1, t1+2 <= t2 <= n-1");
  }
}

inline Diagram two_cap_two_cup_diagram(const TwoCapTwoCup& p) {
  check_shape(p);
  detail::DiagramBuilder b(p.n, p.n);
  b.connect({Edge::bottom, p.b1}, {Edge::bottom, p.b1 + 1});
  b.connect({Edge::bottom, p.b2}, {Edge::bottom, p.b2 + 1});
  b.connect({Edge::top, p.t1}, {Edge::top, p.t1 + 1});
  b.connect({Edge::top, p.t2}, {Edge::top, p.t2 + 1});
  std::vector<int> tops;
  std::vector<int> bottoms;
  for (int i = 1; i <= p.n; ++i) {
    if (i != p.t1 && i != p.t1 + 1 && i != p.t2 && i != p.t2 + 1) tops.push_back(i);
    if (i != p.b1 && i != p.b1 + 1 && i != p.b2 && i != p.b2 + 1) bottoms.push_back(i);
  }
  for (std::size_t k = 0; k < tops.size(); ++k) b.connect({Edge::top, tops[k]}, {Edge::bottom, bottoms[k]});
  return b.build();
}

/// True for the parameter range the closed form covers: the right cap no
/// further right than the right cup (t2 >= b2) and t1 >= b2 - 2.
inline bool n_minus_4_closed_form_applies(const TwoCapTwoCup& p) {
  return p.t2 >= p.b2 && p.t1 >= p.b2 - 2;
}

/// [2][b1][b2-1][n-1-t1][n-t2] / ([n][n-1]).
inline QRat coeff_n_minus_4(const TwoCapTwoCup& p, LoopConvention conv = LoopConvention::negative) {
  check_shape(p);
  if (!n_minus_4_closed_form_applies(p)) {
    throw UnderivedCase("closed form covers only t2 >= b2 and t1 >= b2-2; use coeff_reduction");
  }
  const QLaurent num = qint(2, conv) * qint(p.b1, conv) * qint(p.b2 - 1, conv) *
                       qint(p.n - 1 - p.t1, conv) * qint(p.n - p.t2, conv);
  return QRat(num, qint(p.n, conv) * qint(p.n - 1, conv));
}

}  // namespace tljw
