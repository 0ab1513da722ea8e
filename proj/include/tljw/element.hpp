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

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tljw/diagram.hpp"
#include "tljw/qlaurent.hpp"
#include "tljw/qrat.hpp"

namespace tljw {

/// Value given to each closed loop removed during composition.
enum class LoopConvention {
  negative,  ///< -[2]
  positive,  ///< +[2]
};

inline std::string_view to_string(LoopConvention c) {
  return c == LoopConvention::negative ? "negative" : "positive";
}

inline LoopConvention parse_convention(std::string_view s) {
  if (s == "negative") return LoopConvention::negative;
  if (s == "positive") return LoopConvention::positive;
  throw std::invalid_argument("unknown loop convention: " + std::string(s));
}

/// The quantum integer that plays the role of [n] under a convention: [n]
/// itself for the negative convention, (-1)^(n+1)[n] (that is, q -> -q)
/// for the positive one.
inline QLaurent qint(int n, LoopConvention conv) {
  return conv == LoopConvention::negative ? qint(n) : qint(n).negate_q();
}

inline QLaurent qfact(int n, LoopConvention conv) {
  return conv == LoopConvention::negative ? qfact(n) : qfact(n).negate_q();
}

/// The scalar contributed by one closed loop.
inline QLaurent loop_value(LoopConvention conv) {
  return conv == LoopConvention::negative ? -qint(2) : qint(2);
}

/// A finite linear combination of TL_n diagrams with coefficients in Q(q).
/// Zero coefficients are never stored; terms iterate in canonical diagram
/// order.
class Element {
 public:
  using Terms = std::map<Diagram, QRat>;

  explicit Element(int n = 0) : n_(n) {}

  static Element of(const Diagram& d, const QRat& c = QRat(1)) {
    if (!d.is_square()) throw InvalidDiagram("Element: diagram must be square");
    Element e(d.n_top());
    e.add(d, c);
    return e;
  }

  int n() const { return n_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  QRat coeff(const Diagram& d) const {
    auto it = terms_.find(d);
    return it == terms_.end() ? QRat() : it->second;
  }

  /// this += c * d.
  void add(const Diagram& d, const QRat& c) {
    if (d.n_top() != n_ || d.n_bottom() != n_) {
      throw InvalidDiagram("Element::add: diagram " + d.to_string() + " is not in TL_" +
                           std::to_string(n_));
    }
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(d, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Element& operator+=(const Element& o) {
    check_same(o);
    for (const auto& [d, c] : o.terms_) add(d, c);
    return *this;
  }
  Element& operator-=(const Element& o) {
    check_same(o);
    for (const auto& [d, c] : o.terms_) add(d, -c);
    return *this;
  }
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }

  /// Scalar multiple.
  friend Element operator*(const QRat& s, const Element& e) {
    Element r(e.n_);
    if (s.is_zero()) return r;
    for (const auto& [d, c] : e.terms_) r.terms_.emplace_hint(r.terms_.end(), d, s * c);
    return r;
  }

  /// Applies f to every coefficient (e.g. q -> -q).
  template <class F>
  Element map_coefficients(F&& f) const {
    Element r(n_);
    for (const auto& [d, c] : terms_) r.add(d, f(c));
    return r;
  }

  friend bool operator==(const Element& a, const Element& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  /// Installs a term that is already known to be canonical and nonzero; the
  /// diagram must not be present yet.
  void emplace_unchecked(Diagram d, QRat c) { terms_.emplace(std::move(d), std::move(c)); }

 private:
  void check_same(const Element& o) const {
    if (o.n_ != n_) throw InvalidDiagram("Element: strand count mismatch");
  }

  int n_;
  Terms terms_;
};

/// Identity diagram as an element.
inline Element one(int n) { return Element::of(identity(n)); }

/// Adds a vertical strand to every diagram.
inline Element include_right(const Element& e) {
  Element r(e.n() + 1);
  for (const auto& [d, c] : e.terms()) r.emplace_unchecked(include_right(d), c);
  return r;
}

namespace detail {

// Common denominator of a set of canonical coefficients together with the
// matching numerators, so products can be formed in Z[q, q^-1].
struct CommonDenominator {
  QLaurent den{1};
  std::vector<QLaurent> nums;
};

inline QLaurent lcm(const QLaurent& a, const QLaurent& b) {
  if (b.divide_exact(a)) return b;
  if (a.divide_exact(b)) return a;
  const poly::Coeffs g = poly::gcd(a.dense(), b.dense());
  return *(a * b).divide_exact(QLaurent::from_coeffs(g));
}

inline CommonDenominator common_denominator(const Element& e) {
  CommonDenominator r;
  for (const auto& term : e.terms()) r.den = lcm(r.den, term.second.den());
  r.nums.reserve(e.size());
  for (const auto& term : e.terms()) {
    const QRat& c = term.second;
    r.nums.push_back(c.num() * *r.den.divide_exact(c.den()));
  }
  return r;
}

}  // namespace detail

/// Product a * b (a stacked above b): the bilinear extension of compose,
/// each closed loop contributing loop_value(conv).
inline Element mul(const Element& a, const Element& b, LoopConvention conv) {
  if (a.n() != b.n()) throw InvalidDiagram("mul: strand count mismatch");
  op_counters().element_products.fetch_add(1, std::memory_order_relaxed);
  Element result(a.n());
  if (a.is_zero() || b.is_zero()) return result;

  const auto ca = detail::common_denominator(a);
  const auto cb = detail::common_denominator(b);
  std::vector<QLaurent> loop_power{QLaurent(1)};
  const QLaurent delta = loop_value(conv);

  std::vector<const Diagram*> left;
  left.reserve(a.size());
  for (const auto& term : a.terms()) left.push_back(&term.first);

  std::unordered_map<Diagram, QLaurent, DiagramHash> acc;
  // For each right factor, first add up the left numerators landing on the
  // same (diagram, loops), then multiply once by the right numerator.
  std::unordered_map<Diagram, std::vector<QLaurent>, DiagramHash> by_target;
  std::size_t j = 0;
  for (const auto& [db, cbj] : b.terms()) {
    (void)cbj;
    by_target.clear();
    for (std::size_t i = 0; i < left.size(); ++i) {
      auto [d, loops] = compose(*left[i], db);
      auto& slots = by_target[std::move(d)];
      if (slots.size() <= static_cast<std::size_t>(loops)) slots.resize(static_cast<std::size_t>(loops) + 1);
      slots[static_cast<std::size_t>(loops)] += ca.nums[i];
    }
    for (auto& [d, slots] : by_target) {
      QLaurent sum;
      for (std::size_t l = 0; l < slots.size(); ++l) {
        if (slots[l].is_zero()) continue;
        while (loop_power.size() <= l) loop_power.push_back(loop_power.back() * delta);
        sum.add_product(slots[l], loop_power[l]);
      }
      if (sum.is_zero()) continue;
      acc[d].add_product(sum, cb.nums[j]);
    }
    ++j;
  }

  const QLaurent den = ca.den * cb.den;
  for (auto& [d, num] : acc) {
    if (num.is_zero()) continue;
    result.emplace_unchecked(d, QRat(std::move(num), den));
  }
  return result;
}

}  // namespace tljw
