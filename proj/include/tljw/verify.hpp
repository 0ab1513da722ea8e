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

// Executable checks over the engines. Every check is exact equality of
// canonical forms and returns a Report; a failing Report carries the first
// offending diagram in canonical order with both values.

#include <chrono>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "tljw/capform.hpp"
#include "tljw/diagram.hpp"
#include "tljw/element.hpp"
#include "tljw/engines.hpp"
#include "tljw/io.hpp"
#include "tljw/qlaurent.hpp"
#include "tljw/qrat.hpp"

namespace tljw {

struct Report {
  explicit Report(std::string name) : check(std::move(name)) {}

  std::string check;
  json params = json::object();
  bool passed = true;
  std::string message;
  json diagram;  ///< first failing diagram, if any
  json expected;
  json actual;
  json metrics = json::object();

  json to_json() const {
    json j{{"check", check}, {"params", params}, {"status", passed ? "pass" : "fail"},
           {"metrics", metrics}};
    if (!message.empty()) j["message"] = message;
    if (!diagram.is_null()) j["diagram"] = diagram;
    if (!expected.is_null()) j["expected"] = expected;
    if (!actual.is_null()) j["actual"] = actual;
    return j;
  }

  std::string to_line() const { return to_json().dump(); }

  /// Records the first failure only; later ones just bump the count.
  void fail(const std::string& why, const Diagram* d = nullptr, const QRat* want = nullptr,
            const QRat* got = nullptr) {
    metrics["failures"] = metrics.value("failures", 0) + 1;
    if (!passed) return;
    passed = false;
    message = why;
    if (d != nullptr) diagram = tljw::to_json(*d);
    if (want != nullptr) expected = tljw::to_json(*want);
    if (got != nullptr) actual = tljw::to_json(*got);
  }
};

namespace detail {

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

struct CounterSnapshot {
  std::uint64_t compositions = op_counters().compositions.load();
  std::uint64_t element_products = op_counters().element_products.load();

  json delta() const {
    return json{{"compositions", op_counters().compositions.load() - compositions},
                {"element_products", op_counters().element_products.load() - element_products}};
  }
};

}  // namespace detail

/// JW != 0, identity coefficient 1, JW*JW = JW, and e_i*JW = JW*e_i = 0.
inline Report check_jw_axioms(int n, LoopConvention conv = LoopConvention::negative) {
  Report r{"jw_axioms"};
  r.params = json{{"n", n}, {"convention", std::string(to_string(conv))}};
  const Element jw = jw_linear(n, conv);
  if (jw.is_zero()) r.fail("projector is zero");
  const QRat id = jw.coeff(identity(n));
  if (!id.is_one()) {
    const QRat want(1);
    const Diagram d = identity(n);
    r.fail("identity coefficient is not 1", &d, &want, &id);
  }
  const Element square = mul(jw, jw, conv);
  if (!(square == jw)) {
    for (const auto& d : enumerate_diagrams(n, n)) {
      const QRat want = jw.coeff(d);
      const QRat got = square.coeff(d);
      if (!(want == got)) {
        r.fail("JW*JW != JW", &d, &want, &got);
        break;
      }
    }
  }
  for (int i = 1; i <= n - 1; ++i) {
    const Element e = Element::of(gen_e(n, i));
    for (const bool left : {true, false}) {
      const Element prod = left ? mul(e, jw, conv) : mul(jw, e, conv);
      if (!prod.is_zero()) {
        const auto& [d, c] = *prod.terms().begin();
        const QRat zero;
        r.fail(std::string(left ? "e_" : "JW*e_") + std::to_string(i) + (left ? "*JW" : "") + " != 0",
               &d, &zero, &c);
      }
    }
  }
  r.metrics["terms"] = jw.size();
  return r;
}

/// Every diagram of TL_n gets the same coefficient from each engine. The
/// full-projector engines run only while n <= full_build_max.
inline Report check_engine_agreement(int n, int full_build_max = 7,
                                     LoopConvention conv = LoopConvention::negative) {
  Report r{"engine_agreement"};
  const bool full = n <= full_build_max;
  r.params = json{{"n", n}, {"convention", std::string(to_string(conv))},
                  {"engines", full ? json::array({"wenzl", "linear", "reduction", "formula"})
                                   : json::array({"reduction", "formula"})}};
  Element wenzl(n);
  Element linear(n);
  if (full) {
    wenzl = jw_wenzl(n, conv);
    linear = jw_linear(n, conv);
  }
  ReductionEngine reduction(conv);
  const auto diagrams = enumerate_diagrams(n, n);
  for (const auto& d : diagrams) {
    const QRat red = reduction.coeff(d);
    const QRat form = coeff_formula(d, conv);
    if (!(red == form)) r.fail("reduction != formula", &d, &red, &form);
    if (full) {
      const QRat w = wenzl.coeff(d);
      const QRat l = linear.coeff(d);
      if (!(red == w)) r.fail("reduction != wenzl", &d, &red, &w);
      if (!(red == l)) r.fail("reduction != linear", &d, &red, &l);
    }
  }
  if (full && (wenzl.size() > diagrams.size() || linear.size() > diagrams.size())) {
    r.fail("full projector has terms outside TL_n");
  }
  r.metrics["diagrams"] = diagrams.size();
  return r;
}

/// coeff(D') = [k] coeff(D) for k-moves. samples == 0 means every diagram of
/// TL_n and every valid site; otherwise that many seeded random draws.
inline Report check_kmoves(int n, std::uint64_t seed = 0, int samples = 0,
                           LoopConvention conv = LoopConvention::negative) {
  Report r{"kmoves"};
  r.params = json{{"n", n}, {"seed", seed}, {"samples", samples},
                  {"convention", std::string(to_string(conv))}};
  ReductionEngine engine(conv);
  std::size_t moves = 0;
  auto check_one = [&](const Diagram& d, const KMoveSite& site) {
    const Capform before = capform_of(d);
    const Capform after = k_move(before, site.p, site.k);
    const Diagram moved = diagram_of(after);
    ++moves;
    if (moved.through_strand_count() < d.through_strand_count()) {
      r.fail("k-move decreased the through-strand count", &d);
    }
    if (after.arcs().size() != before.arcs().size()) r.fail("k-move changed the arc count", &d);
    if (!(inverse_k_move(after, site.p - site.k + 1, site.k) == before)) {
      r.fail("inverse k-move did not restore the capform", &d);
    }
    const QRat want = kmove_transport(engine.coeff(d), site.k, conv);
    const QRat got = engine.coeff(moved);
    if (!(want == got)) {
      r.fail("coeff(D') != [k] coeff(D) at p=" + std::to_string(site.p) + ", k=" + std::to_string(site.k),
             &d, &want, &got);
    }
  };
  if (samples == 0) {
    for (const auto& d : enumerate_diagrams(n, n)) {
      for (const auto& site : k_move_sites(capform_of(d))) check_one(d, site);
    }
  } else {
    std::mt19937_64 rng(seed);
    int drawn = 0;
    while (drawn < samples) {
      const Diagram d = random_diagram(n, n, rng);
      const auto sites = k_move_sites(capform_of(d));
      if (sites.empty()) continue;
      std::uniform_int_distribution<std::size_t> pick(0, sites.size() - 1);
      check_one(d, sites[pick(rng)]);
      ++drawn;
    }
  }
  r.metrics["moves"] = moves;
  return r;
}

/// coeff(g_{n,i}) = [i]/[n] for 1 <= i <= n <= n_max, and the two-cap
/// two-cup closed form against reduction for 6 <= n <= n_max.
inline Report check_closed_forms(int n_max, LoopConvention conv = LoopConvention::negative) {
  Report r{"closed_forms"};
  r.params = json{{"n_max", n_max}, {"convention", std::string(to_string(conv))}};
  ReductionEngine engine(conv);
  std::size_t g_checked = 0;
  std::size_t tuples = 0;
  for (int n = 1; n <= n_max; ++n) {
    for (int i = 1; i <= n; ++i) {
      const Diagram d = g_diagram(n, i);
      const QRat want(qint(i, conv), qint(n, conv));
      const QRat got = engine.coeff(d);
      ++g_checked;
      if (!(want == got)) r.fail("coeff(g_{n,i}) != [i]/[n]", &d, &want, &got);
    }
  }
  for (int n = 6; n <= n_max; ++n) {
    for (int b1 = 1; b1 <= n - 1; ++b1) {
      for (int b2 = b1 + 2; b2 <= n - 1; ++b2) {
        for (int t1 = 1; t1 <= n - 1; ++t1) {
          for (int t2 = t1 + 2; t2 <= n - 1; ++t2) {
            const TwoCapTwoCup p{n, b1, b2, t1, t2};
            if (!n_minus_4_closed_form_applies(p)) continue;
            const Diagram d = two_cap_two_cup_diagram(p);
            const QRat want = engine.coeff(d);
            const QRat got = coeff_n_minus_4(p, conv);
            ++tuples;
            if (!(want == got)) r.fail("two-cap two-cup closed form != reduction", &d, &want, &got);
          }
        }
      }
    }
  }
  r.metrics["single_right_cups"] = g_checked;
  r.metrics["two_cap_two_cup_tuples"] = tuples;
  return r;
}

/// e_n g_{n,i} = g_{n+1,i} with no loops, for 1 <= i <= n <= n_max.
inline Report check_eg_identity(int n_max) {
  Report r{"eg_identity"};
  r.params = json{{"n_max", n_max}};
  std::size_t checked = 0;
  for (int n = 1; n <= n_max; ++n) {
    for (int i = 1; i <= n; ++i) {
      const Composite c = compose(gen_e(n + 1, n), include_right(g_diagram(n, i)));
      ++checked;
      if (!(c.diagram == g_diagram(n + 1, i)) || c.loops != 0) {
        r.fail("e_n g_{n,i} != g_{n+1,i} at n=" + std::to_string(n) + ", i=" + std::to_string(i), &c.diagram);
      }
    }
  }
  r.metrics["checked"] = checked;
  return r;
}

/// coeff(D) = coeff(reflect(D)) over all of TL_n.
inline Report check_reflection(int n, LoopConvention conv = LoopConvention::negative) {
  Report r{"reflection"};
  r.params = json{{"n", n}, {"convention", std::string(to_string(conv))}};
  ReductionEngine engine(conv);
  for (const auto& d : enumerate_diagrams(n, n)) {
    const QRat a = engine.coeff(d);
    const QRat b = engine.coeff(reflect_horizontal(d));
    if (!(a == b)) r.fail("coefficient changed under reflection", &d, &a, &b);
  }
  return r;
}

/// Positive-convention coefficients are the negative-convention ones with
/// q -> -q, for the Wenzl engine (which really uses +[2] loops) and for the
/// reduction engine.
inline Report check_convention_transport(int n) {
  Report r{"convention_transport"};
  r.params = json{{"n", n}};
  const Element neg = jw_wenzl(n, LoopConvention::negative);
  const Element pos = jw_wenzl(n, LoopConvention::positive);
  ReductionEngine red_pos(LoopConvention::positive);
  for (const auto& d : enumerate_diagrams(n, n)) {
    const QRat want = neg.coeff(d).negate_q();
    const QRat got = pos.coeff(d);
    if (!(want == got)) r.fail("wenzl: positive != negate_q(negative)", &d, &want, &got);
    const QRat got_red = red_pos.coeff(d);
    if (!(want == got_red)) r.fail("reduction: positive != negate_q(negative)", &d, &want, &got_red);
  }
  return r;
}

namespace detail {

inline bool all_positive(const QLaurent& p) {
  for (const auto& c : p.dense()) {
    if (c < 0) return false;
  }
  return true;
}

}  // namespace detail

/// Every negative-convention coefficient, written over [n]! as the removal
/// recursion produces it, has a numerator with nonnegative integer
/// coefficients (a sum of products of quantum integers).
inline Report check_positivity(int n) {
  Report r{"positivity"};
  r.params = json{{"n", n}};
  ReductionEngine engine(LoopConvention::negative);
  for (const auto& d : enumerate_diagrams(n, n)) {
    const QLaurent num = engine.numerator(d);
    if (num.is_zero() || !detail::all_positive(num)) {
      const QRat got(num);
      r.fail("numerator over [n]! has a negative coefficient", &d, nullptr, &got);
    }
  }
  return r;
}

/// The stronger statement that the reduced canonical numerator and
/// denominator both have nonnegative integer coefficients.
inline Report check_canonical_positivity(int n) {
  Report r{"canonical_positivity"};
  r.params = json{{"n", n}};
  ReductionEngine engine(LoopConvention::negative);
  for (const auto& d : enumerate_diagrams(n, n)) {
    const QRat c = engine.coeff(d);
    if (c.is_zero() || !detail::all_positive(c.num()) || !detail::all_positive(c.den())) {
      r.fail("canonical coefficient has a negative integer coefficient", &d, nullptr, &c);
    }
  }
  return r;
}

/// JW_n e_n h = 0 in TL_{n+1} whenever two of h's leftmost n-2 top points
/// are joined.
inline Report check_kernel(int n, LoopConvention conv = LoopConvention::negative) {
  Report r{"kernel"};
  r.params = json{{"n", n}, {"convention", std::string(to_string(conv))}};
  const Element left = mul(include_right(jw_linear(n, conv)), Element::of(gen_e(n + 1, n)), conv);
  std::size_t checked = 0;
  for (const auto& h : enumerate_diagrams(n, n)) {
    bool in_j = false;
    for (int a = 1; a <= n - 2 && !in_j; ++a) in_j = h.partner(a) <= n - 2;
    if (!in_j) continue;
    ++checked;
    const Element prod = mul(left, Element::of(include_right(h)), conv);
    if (!prod.is_zero()) r.fail("JW_n e_n h != 0", &h);
  }
  r.metrics["checked"] = checked;
  return r;
}

/// The constraint description of the index set matches the removal walk,
/// over all of TL_n.
inline Report check_index_set_constraints(int n) {
  Report r{"index_set_constraints"};
  r.params = json{{"n", n}};
  for (const auto& d : enumerate_diagrams(n, n)) {
    const Capform c = capform_of(d);
    if (index_set(c) != index_set_by_constraints(c)) r.fail("index sets differ", &d);
  }
  return r;
}

/// Wall time and operation counts for each engine at each n.
inline std::vector<Report> bench(int n_max, int full_build_max = 9,
                                 LoopConvention conv = LoopConvention::negative) {
  std::vector<Report> out;
  for (int n = 1; n <= n_max; ++n) {
    auto record = [&](const std::string& engine, auto&& run) {
      Report r{"bench"};
      r.params = json{{"n", n}, {"engine", engine}, {"convention", std::string(to_string(conv))}};
      const detail::CounterSnapshot before;
      const detail::Stopwatch clock;
      run();
      r.metrics = before.delta();
      r.metrics["seconds"] = clock.seconds();
      out.push_back(std::move(r));
    };
    if (n <= full_build_max) {
      record("wenzl", [&] { (void)jw_wenzl(n, conv); });
      record("linear", [&] { (void)jw_linear(n, conv); });
    }
    if (n <= 8) {
      const auto diagrams = enumerate_diagrams(n, n);
      record("reduction", [&] {
        ReductionEngine engine(conv);
        for (const auto& d : diagrams) (void)engine.coeff(d);
      });
      record("formula", [&] {
        for (const auto& d : diagrams) (void)coeff_formula(d, conv);
      });
    }
  }
  return out;
}

}  // namespace tljw
