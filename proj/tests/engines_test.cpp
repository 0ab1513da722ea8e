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

#include <gtest/gtest.h>

#include <chrono>
#include <thread>
#include <vector>

#include "support.hpp"
#include "tljw/tljw.hpp"

namespace tljw {
namespace {

using testing::make_rng;

constexpr auto kNeg = LoopConvention::negative;
constexpr auto kPos = LoopConvention::positive;

QRat frac(const QLaurent& num, const QLaurent& den) { return QRat(num, den); }

const Capform& example_capform() {
  static const Capform c = Capform::parse("(1 10)(2 3)(4 9)(5 6)(7 8)");
  return c;
}

// --- elements ------------------------------------------------------------------

TEST(Element, ZeroCoefficientsAreDropped) {
  Element e(2);
  e.add(gen_e(2, 1), QRat(qint(2)));
  e.add(gen_e(2, 1), QRat(-qint(2)));
  EXPECT_TRUE(e.is_zero());
  EXPECT_THROW(e.add(identity(3), QRat(1)), InvalidDiagram);
  EXPECT_THROW(e += one(3), InvalidDiagram);
}

TEST(Element, GeneratorSquare) {
  for (int n = 2; n <= 5; ++n) {
    const Element e = Element::of(gen_e(n, 1));
    EXPECT_EQ(mul(e, e, kNeg), QRat(-qint(2)) * e);
    EXPECT_EQ(mul(e, e, kPos), QRat(qint(2)) * e);
  }
}

TEST(Element, ProductMatchesNaiveOracle) {
  auto rng = make_rng(20);
  for (int t = 0; t < 60; ++t) {
    const int n = 1 + t % 5;
    const Element a = testing::random_element(rng, n, 4);
    const Element b = testing::random_element(rng, n, 4);
    for (auto conv : {kNeg, kPos}) EXPECT_EQ(mul(a, b, conv), testing::naive_mul(a, b, conv));
  }
}

TEST(Element, UnitDistributivityAssociativity) {
  auto rng = make_rng(21);
  for (int t = 0; t < 30; ++t) {
    const int n = 1 + t % 4;
    const Element a = testing::random_element(rng, n, 3);
    const Element b = testing::random_element(rng, n, 3);
    const Element c = testing::random_element(rng, n, 3);
    EXPECT_EQ(mul(one(n), a, kNeg), a);
    EXPECT_EQ(mul(a, one(n), kNeg), a);
    EXPECT_EQ(mul(a + b, c, kNeg), mul(a, c, kNeg) + mul(b, c, kNeg));
    EXPECT_EQ(mul(mul(a, b, kNeg), c, kNeg), mul(a, mul(b, c, kNeg), kNeg));
  }
}

TEST(Element, IncludeRight) {
  const Element jw = jw_wenzl(3);
  const Element up = include_right(jw);
  EXPECT_EQ(up.n(), 4);
  EXPECT_EQ(up.size(), jw.size());
  EXPECT_EQ(up.coeff(include_right(gen_e(3, 1))), jw.coeff(gen_e(3, 1)));
}

// --- whole-projector engines ----------------------------------------------------

TEST(FullEngines, JW1AndJW2) {
  for (auto build : {&jw_wenzl, &jw_linear}) {
    const Element j1 = build(1, kNeg);
    EXPECT_EQ(j1.size(), 1u);
    EXPECT_EQ(j1.coeff(identity(1)), QRat(1));
    const Element j2 = build(2, kNeg);
    EXPECT_EQ(j2.size(), 2u);
    EXPECT_EQ(j2.coeff(identity(2)), QRat(1));
    EXPECT_EQ(j2.coeff(gen_e(2, 1)), frac(qint(1), qint(2)));
  }
}

TEST(FullEngines, JW3) {
  const Diagram g31 = g_diagram(3, 1);
  for (auto build : {&jw_wenzl, &jw_linear}) {
    const Element j = build(3, kNeg);
    ASSERT_EQ(j.size(), 5u);
    EXPECT_EQ(j.coeff(identity(3)), QRat(1));
    EXPECT_EQ(j.coeff(gen_e(3, 1)), frac(qint(2), qint(3)));
    EXPECT_EQ(j.coeff(gen_e(3, 2)), frac(qint(2), qint(3)));
    EXPECT_EQ(j.coeff(g31), frac(1, qint(3)));
    EXPECT_EQ(j.coeff(reflect_horizontal(g31)), frac(1, qint(3)));
    // The two 1/[3] diagrams are the products e_2 e_1 and e_1 e_2.
    EXPECT_EQ(g31, compose(gen_e(3, 2), gen_e(3, 1)).diagram);
    EXPECT_EQ(reflect_horizontal(g31), compose(gen_e(3, 1), gen_e(3, 2)).diagram);
  }
}

TEST(FullEngines, LinearEqualsWenzl) {
  for (int n = 1; n <= 8; ++n) {
    const Element w = jw_wenzl(n, kNeg);
    EXPECT_EQ(jw_linear(n, kNeg), w) << n;
    EXPECT_EQ(mpz_class(static_cast<unsigned long>(w.size())), testing::catalan(n));
  }
}

TEST(FullEngines, Axioms) {
  for (int n = 1; n <= 6; ++n) {
    const Element jw = jw_linear(n, kNeg);
    EXPECT_FALSE(jw.is_zero());
    EXPECT_EQ(jw.coeff(identity(n)), QRat(1));
    EXPECT_EQ(mul(jw, jw, kNeg), jw);
    for (int i = 1; i < n; ++i) {
      EXPECT_TRUE(mul(Element::of(gen_e(n, i)), jw, kNeg).is_zero());
      EXPECT_TRUE(mul(jw, Element::of(gen_e(n, i)), kNeg).is_zero());
    }
  }
}

TEST(FullEngines, SingleRightCupsInLinearBuild) {
  for (int n = 1; n <= 10; ++n) {
    const Element jw = jw_linear(n, kNeg);
    for (int i = 1; i <= n; ++i) EXPECT_EQ(jw.coeff(g_diagram(n, i)), frac(qint(i), qint(n))) << n << "," << i;
  }
}

TEST(FullEngines, TimesGIsCompositionWithG) {
  auto rng = make_rng(22);
  for (int t = 0; t < 200; ++t) {
    const int m = 1 + t % 7;
    const Diagram h = random_diagram(m, m, rng);
    for (int i = 1; i <= m + 1; ++i) {
      const Composite c = compose(include_right(h), g_diagram(m + 1, i));
      EXPECT_EQ(times_g(h, i), c.diagram);
      EXPECT_EQ(c.loops, 0);
    }
  }
}

TEST(FullEngines, ProductCounts) {
  for (int n = 2; n <= 6; ++n) {
    auto before = op_counters().element_products.load();
    (void)jw_wenzl(n);
    EXPECT_EQ(op_counters().element_products.load() - before, 2u * static_cast<unsigned>(n - 1));
    before = op_counters().element_products.load();
    (void)jw_linear(n);
    EXPECT_EQ(op_counters().element_products.load() - before, static_cast<unsigned>(n - 1));
  }
}

TEST(FullEngines, ConventionTransport) {
  for (int n = 1; n <= 6; ++n) {
    const Element neg = jw_wenzl(n, kNeg);
    const Element pos = jw_wenzl(n, kPos);
    EXPECT_EQ(pos, neg.map_coefficients([](const QRat& c) { return c.negate_q(); })) << n;
    EXPECT_EQ(jw_linear(n, kPos), pos);
  }
}

TEST(FullEngines, KernelOfLeftIdeal) {
  for (int n = 3; n <= 5; ++n) {
    const Element left = mul(include_right(jw_linear(n)), Element::of(gen_e(n + 1, n)), kNeg);
    for (const auto& h : enumerate_diagrams(n, n)) {
      bool in_j = false;
      for (int a = 1; a <= n - 2; ++a) in_j = in_j || h.partner(a) <= n - 2;
      if (in_j) {
        EXPECT_TRUE(mul(left, Element::of(include_right(h)), kNeg).is_zero());
      }
    }
  }
}

// --- reduction ---------------------------------------------------------------------

TEST(Reduction, WorkedExample) {
  const Diagram d = diagram_of(example_capform());
  const QRat want = frac(qint(2) * qint(3) + qint(5) * qint(2), qint(5) * qint(4));
  EXPECT_EQ(coeff_reduction(d), want);
  EXPECT_EQ(jw_linear(5).coeff(d), want);
  // One level down: removing the caps at 2 and 5 leaves [3]/[4] and [2]/[4].
  const Diagram f = fold_down(d);
  EXPECT_EQ(coeff_reduction(remove_cap(f, 2)), frac(qint(3), qint(4)));
  EXPECT_EQ(coeff_reduction(remove_cap(f, 5)), frac(qint(2), qint(4)));
}

TEST(Reduction, IdentityAndSingleRightCups) {
  ReductionEngine engine;
  for (int n = 1; n <= 12; ++n) {
    EXPECT_EQ(engine.coeff(identity(n)), QRat(1)) << n;
    for (int i = 1; i <= n; ++i) EXPECT_EQ(engine.coeff(g_diagram(n, i)), frac(qint(i), qint(n)));
  }
}

TEST(Reduction, NoCompositions) {
  const auto before = op_counters().compositions.load();
  auto rng = make_rng(23);
  ReductionEngine engine;
  for (int t = 0; t < 20; ++t) (void)engine.coeff(random_diagram(12, 12, rng));
  (void)coeff_formula(diagram_of(example_capform()));
  EXPECT_EQ(op_counters().compositions.load(), before);
}

TEST(Reduction, MemoIsSharedAndClearable) {
  ReductionEngine engine;
  (void)engine.coeff(identity(6));
  const auto size = engine.memo_size();
  EXPECT_GT(size, 0u);
  (void)engine.coeff(identity(6));
  EXPECT_EQ(engine.memo_size(), size);
  engine.clear();
  EXPECT_EQ(engine.memo_size(), 0u);
  EXPECT_THROW((void)engine.coeff(Diagram(1, 3, {{1, 2}, {3, 4}})), InvalidDiagram);
}

TEST(Reduction, ConcurrentQueriesAgree) {
  const auto diagrams = enumerate_diagrams(7, 7);
  ReductionEngine shared;
  std::vector<std::thread> pool;
  std::vector<std::vector<QRat>> results(4);
  for (int t = 0; t < 4; ++t) {
    pool.emplace_back([&, t] {
      for (const auto& d : diagrams) results[t].push_back(shared.coeff(d));
    });
  }
  for (auto& th : pool) th.join();
  ReductionEngine solo;
  for (std::size_t i = 0; i < diagrams.size(); ++i) {
    const QRat want = solo.coeff(diagrams[i]);
    for (int t = 0; t < 4; ++t) EXPECT_EQ(results[t][i], want);
  }
}

TEST(Reduction, ReflectionInvariance) {
  ReductionEngine engine;
  for (int n = 1; n <= 7; ++n) {
    for (const auto& d : enumerate_diagrams(n, n)) EXPECT_EQ(engine.coeff(d), engine.coeff(reflect_horizontal(d)));
  }
}

TEST(Reduction, PositiveConventionIsQToMinusQ) {
  ReductionEngine neg(kNeg);
  ReductionEngine pos(kPos);
  for (int n = 1; n <= 6; ++n) {
    for (const auto& d : enumerate_diagrams(n, n)) {
      EXPECT_EQ(pos.coeff(d), neg.coeff(d).negate_q());
      EXPECT_EQ(coeff_formula(d, kPos), pos.coeff(d));
    }
  }
}

// --- explicit formula ----------------------------------------------------------------

TEST(Formula, IndexSetOfWorkedExample) {
  const std::vector<Sequence> s = index_set(example_capform());
  EXPECT_EQ(s, (std::vector<Sequence>{{2, 5, 7, 4, 1}, {5, 2, 7, 4, 1}}));
  EXPECT_EQ(tau(s[0]), (Sequence{2, 3, 3, 2, 1}));
  EXPECT_EQ(tau(s[1]), (Sequence{5, 2, 3, 2, 1}));
  EXPECT_EQ(kappa(s[0]), (Sequence{0, 1, 2, 1, 0}));
  EXPECT_EQ(kappa(s[1]), (Sequence{0, 0, 2, 1, 0}));
}

TEST(Formula, WorkedExample) {
  const Diagram d = diagram_of(example_capform());
  const QLaurent sum = qint(2) * qint(3) * qint(3) * qint(2) * qint(1) + qint(5) * qint(2) * qint(3) * qint(2) * qint(1);
  EXPECT_EQ(coeff_formula(d), QRat(sum, qfact(5)));
  EXPECT_EQ(coeff_formula(d), frac(qint(2) * qint(3) + qint(5) * qint(2), qint(5) * qint(4)));
  EXPECT_EQ(formula_expression(d), "([2][3][3][2][1] + [5][2][3][2][1])/[5]!");
}

TEST(Formula, IdentityHasOneSequence) {
  for (int n = 1; n <= 5; ++n) {
    const auto s = index_set(capform_of(identity(n)));
    ASSERT_EQ(s.size(), 1u);
    QLaurent prod(1);
    for (int t : tau(s[0])) prod *= qint(t);
    EXPECT_EQ(prod, qfact(n));
    EXPECT_EQ(coeff_formula(identity(n)), QRat(1));
  }
}

TEST(Formula, ConstraintsMatchRemovalWalk) {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& d : enumerate_diagrams(n, n)) {
      const Capform c = capform_of(d);
      EXPECT_EQ(index_set(c), index_set_by_constraints(c)) << c.to_string();
    }
  }
}

TEST(Formula, AgreesWithReduction) {
  ReductionEngine engine;
  for (int n = 1; n <= 7; ++n) {
    for (const auto& d : enumerate_diagrams(n, n)) EXPECT_EQ(coeff_formula(d), engine.coeff(d));
  }
}

TEST(Formula, AgreesWithFullBuildAtSeven) {
  const Element jw = jw_linear(7);
  for (const auto& d : enumerate_diagrams(7, 7)) EXPECT_EQ(coeff_formula(d), jw.coeff(d));
}

// (1 8)(2 7)(3 6)(4 5) followed by sixteen nested arcs over 9..40.
Diagram nested_left_block() {
  std::string text = "(1 8)(2 7)(3 6)(4 5)";
  for (int a = 9; a <= 24; ++a) text += "(" + std::to_string(a) + " " + std::to_string(49 - a) + ")";
  return diagram_of(Capform::parse(text));
}

TEST(Formula, AgreesWithReductionAtTwenty) {
  // The index set grows factorially with the number of freely ordered caps,
  // so these TL_20 diagrams are ones whose caps are mostly forced in order.
  ReductionEngine engine;
  std::vector<Diagram> picks{g_diagram(20, 1), g_diagram(20, 13), two_cap_two_cup_diagram({20, 3, 9, 12, 17}),
                             k_move(nested_left_block(), 4, 4)};
  for (const auto& d : picks) {
    const auto t0 = std::chrono::steady_clock::now();
    EXPECT_EQ(coeff_formula(d), engine.coeff(d)) << capform_of(d).to_string();
    EXPECT_LT(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(), 10.0);
  }
}

// --- closed forms ---------------------------------------------------------------------

TEST(KMoveTransport, Basics) {
  const QRat c = frac(qint(2), qint(5));
  EXPECT_EQ(kmove_transport(c, 1), c);
  EXPECT_EQ(kmove_transport(c, 3), c * QRat(qint(3)));
  EXPECT_EQ(inverse_kmove_transport(kmove_transport(c, 4), 4), c);
}

TEST(KMoveTransport, ExhaustiveUpToEight) {
  ReductionEngine engine;
  std::size_t moves = 0;
  for (int n = 1; n <= 8; ++n) {
    for (const auto& d : enumerate_diagrams(n, n)) {
      for (const auto& site : k_move_sites(capform_of(d))) {
        const Diagram moved = k_move(d, site.p, site.k);
        EXPECT_EQ(engine.coeff(moved), kmove_transport(engine.coeff(d), site.k)) << capform_of(d).to_string();
        EXPECT_EQ(engine.coeff(d), inverse_kmove_transport(engine.coeff(moved), site.k));
        ++moves;
      }
    }
  }
  EXPECT_GT(moves, 0u);
}

TEST(NMinusFour, AgreesWithReduction) {
  ReductionEngine engine;
  std::size_t checked = 0;
  for (int n = 6; n <= 10; ++n) {
    for (int b1 = 1; b1 <= n - 1; ++b1) {
      for (int b2 = b1 + 2; b2 <= n - 1; ++b2) {
        for (int t1 = 1; t1 <= n - 1; ++t1) {
          for (int t2 = t1 + 2; t2 <= n - 1; ++t2) {
            const TwoCapTwoCup p{n, b1, b2, t1, t2};
            const Diagram d = two_cap_two_cup_diagram(p);
            EXPECT_EQ(innermost_caps(d), (std::vector<int>{b1, b2}));
            EXPECT_EQ(innermost_cups(d), (std::vector<int>{t1, t2}));
            EXPECT_EQ(d.through_strand_count(), n - 4);
            if (!n_minus_4_closed_form_applies(p)) {
              EXPECT_THROW((void)coeff_n_minus_4(p), UnderivedCase);
              continue;
            }
            EXPECT_EQ(coeff_n_minus_4(p), engine.coeff(d));
            EXPECT_EQ(engine.coeff(reflect_horizontal(d)), engine.coeff(d));
            ++checked;
          }
        }
      }
    }
  }
  EXPECT_GT(checked, 0u);
}

TEST(NMinusFour, QuantumIntegerStep) {
  for (int b = 2; b <= 20; ++b) EXPECT_EQ(qint(b) + qint(b - 2), qint(2) * qint(b - 1));
}

TEST(NMinusFour, ShapeChecks) {
  EXPECT_THROW(two_cap_two_cup_diagram({6, 1, 2, 1, 3}), InvalidDiagram);
  EXPECT_THROW(two_cap_two_cup_diagram({6, 1, 3, 1, 6}), InvalidDiagram);
}

}  // namespace
}  // namespace tljw
