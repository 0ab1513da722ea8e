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

#include <thread>
#include <vector>

#include "support.hpp"
#include "tljw/format.hpp"
#include "tljw/poly.hpp"
#include "tljw/qlaurent.hpp"
#include "tljw/qrat.hpp"

namespace tljw {
namespace {

using testing::make_rng;
using testing::random_qrat;

QLaurent L(std::vector<std::pair<long, long>> terms) {
  QLaurent p;
  for (auto [e, c] : terms) p += QLaurent::monomial(c, e);
  return p;
}

// --- integer polynomials ---------------------------------------------------

TEST(Poly, TrimAndArithmetic) {
  poly::Coeffs a{1, 2, 0, 0};
  poly::trim(a);
  EXPECT_EQ(a.size(), 2u);
  EXPECT_EQ(poly::mul({1, 1}, {-1, 1}), (poly::Coeffs{-1, 0, 1}));
  EXPECT_TRUE(poly::sub({1, 2}, {1, 2}).empty());
  EXPECT_EQ(poly::content({6, -9, 12}), 3);
  EXPECT_EQ(poly::primitive_part({-6, 9, -12}), (poly::Coeffs{2, -3, 4}));
}

TEST(Poly, DivideExact) {
  const poly::Coeffs f = poly::mul({1, 1, 1}, {3, 0, -2, 5});
  EXPECT_EQ(*poly::divide_exact(f, {1, 1, 1}), (poly::Coeffs{3, 0, -2, 5}));
  EXPECT_FALSE(poly::divide_exact({1, 0, 1}, {1, 1}).has_value());
  EXPECT_FALSE(poly::divide_exact({1, 1}, {}).has_value());
}

TEST(Poly, HeuristicGcdMatchesPrs) {
  auto rng = make_rng(1);
  std::uniform_int_distribution<int> c(-7, 7);
  std::uniform_int_distribution<int> deg(0, 5);
  auto random_poly = [&] {
    poly::Coeffs p;
    while (poly::is_zero(p)) {
      p.clear();
      for (int i = deg(rng); i >= 0; --i) p.push_back(c(rng));
      poly::trim(p);
    }
    return p;
  };
  for (int trial = 0; trial < 300; ++trial) {
    const poly::Coeffs g = random_poly();
    const poly::Coeffs a = poly::primitive_part(poly::mul(g, random_poly()));
    const poly::Coeffs b = poly::primitive_part(poly::mul(g, random_poly()));
    const poly::Coeffs prs = poly::primitive_part(poly::detail::gcd_prs(a, b));
    const auto heu = poly::detail::gcd_heuristic(a, b);
    if (heu) {
      EXPECT_EQ(poly::primitive_part(*heu), prs) << "trial " << trial;
    }
    EXPECT_EQ(poly::gcd(a, b), prs);
    // The gcd divides both inputs.
    EXPECT_TRUE(poly::divide_exact(a, prs).has_value());
    EXPECT_TRUE(poly::divide_exact(b, prs).has_value());
  }
}

// --- Laurent polynomials and quantum integers ------------------------------

TEST(QLaurent, QintSmallValues) {
  EXPECT_TRUE(qint(0).is_zero());
  EXPECT_EQ(qint(1), QLaurent(1));
  EXPECT_EQ(qint(2), L({{1, 1}, {-1, 1}}));
  EXPECT_EQ(qint(3), L({{2, 1}, {0, 1}, {-2, 1}}));
  EXPECT_THROW(qint(-1), std::invalid_argument);
}

TEST(QLaurent, QintMatchesClosedForm) {
  for (int n = 1; n <= 30; ++n) EXPECT_EQ(qint(n), testing::qint_closed_form(n)) << n;
}

TEST(QLaurent, ProductOfThreeAndTwo) {
  // (q^2 + 1 + q^-2)(q + q^-1) multiplied out by hand.
  EXPECT_EQ(qint(3) * qint(2), L({{3, 1}, {1, 2}, {-1, 2}, {-3, 1}}));
}

TEST(QLaurent, QuantumFactorial) {
  EXPECT_EQ(qfact(0), QLaurent(1));
  EXPECT_EQ(qfact(1), QLaurent(1));
  EXPECT_EQ(qfact(3), qint(3) * qint(2));
  EXPECT_EQ(qfact(4).eval_at_one(), 24);
}

TEST(QLaurent, Palindromic) {
  for (int n = 0; n <= 25; ++n) EXPECT_EQ(qint(n).invert_q(), qint(n)) << n;
}

TEST(QLaurent, EvalAtOne) {
  for (int n = 0; n <= 10; ++n) EXPECT_EQ(qint(n).eval_at_one(), n);
}

TEST(QLaurent, QuantumIntegerIdentity) {
  // [m-a] + [m+1][a] = [m][a+1] whenever m >= a.
  for (int m = 0; m <= 20; ++m) {
    for (int a = 0; a <= m; ++a) {
      EXPECT_EQ(qint(m - a) + qint(m + 1) * qint(a), qint(m) * qint(a + 1)) << "m=" << m << " a=" << a;
    }
  }
}

TEST(QLaurent, TimesQintIsMultiplication) {
  auto rng = make_rng(2);
  for (int t = 0; t < 100; ++t) {
    const QLaurent x = testing::random_laurent(rng);
    for (int k = 0; k <= 6; ++k) EXPECT_EQ(times_qint(x, k), qint(k) * x);
  }
}

TEST(QLaurent, NegateQ) {
  EXPECT_EQ(qint(2).negate_q(), -qint(2));
  EXPECT_EQ(qint(3).negate_q(), qint(3));
  for (int i = 1; i <= 12; ++i) EXPECT_EQ(qint(i).negate_q(), i % 2 == 1 ? qint(i) : -qint(i)) << i;
}

TEST(QLaurent, ToString) {
  EXPECT_EQ(qint(3).to_string(), "q^2 + 1 + q^-2");
  EXPECT_EQ(QLaurent().to_string(), "0");
  EXPECT_EQ(L({{1, -2}, {0, 3}}).to_string(), "-2*q + 3");
}

TEST(QLaurent, DivideExact) {
  EXPECT_EQ(*(qint(6)).divide_exact(qint(3)), L({{3, 1}, {-3, 1}}));
  EXPECT_FALSE(qint(5).divide_exact(qint(2)).has_value());
  EXPECT_THROW((void)qint(2).divide_exact(QLaurent()), DivisionByZero);
}

// --- rational functions ---------------------------------------------------

TEST(QRat, CommonDenominator) {
  EXPECT_EQ(QRat(qint(2), qint(3)) + QRat(1, qint(3)), QRat(qint(2) + 1, qint(3)));
}

TEST(QRat, Cancellation) {
  for (int n = 1; n <= 8; ++n) {
    for (int i = 1; i <= n; ++i) EXPECT_EQ(QRat(qint(i), qint(n)) * QRat(qint(n)), QRat(qint(i)));
  }
}

TEST(QRat, WorkedExampleCanonicalForm) {
  const QRat a(qint(2) * qint(3) + qint(5) * qint(2), qint(5) * qint(4));
  const QRat b(qint(2) * (qint(3) + qint(5)), qint(5) * qint(4));
  EXPECT_EQ(a, b);
  // Multiplying out: [2]([3]+[5]) = [2]^2 [4], so the value is [2]^2/[5].
  EXPECT_EQ(a, QRat(qint(2) * qint(2), qint(5)));
}

TEST(QRat, CanonicalShape) {
  auto rng = make_rng(3);
  for (int t = 0; t < 200; ++t) {
    const QRat x = random_qrat(rng);
    if (x.is_zero()) {
      EXPECT_TRUE(x.den().is_one());
      continue;
    }
    EXPECT_EQ(x.den().low(), 0);
    EXPECT_NE(x.den().coeff(0), 0);
    EXPECT_GT(x.den().dense().back(), 0);
    EXPECT_TRUE(QRat::is_canonical(x.num(), x.den()));
    // Canonicalising again changes nothing.
    const QRat again(x.num(), x.den());
    EXPECT_EQ(again.num(), x.num());
    EXPECT_EQ(again.den(), x.den());
  }
}

TEST(QRat, FieldAxiomsOnRandomTriples) {
  auto rng = make_rng(4);
  for (int t = 0; t < 150; ++t) {
    const QRat a = random_qrat(rng);
    const QRat b = random_qrat(rng);
    const QRat c = random_qrat(rng);
    EXPECT_EQ((a + b) * c, a * c + b * c);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a - a, QRat());
    if (!b.is_zero()) {
      EXPECT_EQ((a / b) * b, a);
    }
  }
}

TEST(QRat, DivisionByZeroIsDistinct) {
  EXPECT_THROW((void)(QRat(1) / QRat()), DivisionByZero);
  EXPECT_THROW(QRat(1, QLaurent()), DivisionByZero);
}

TEST(QRat, NegateQ) {
  EXPECT_EQ(QRat(qint(2)).negate_q(), QRat(-qint(2)));
  EXPECT_EQ(QRat(qint(3)).negate_q(), QRat(qint(3)));
  EXPECT_EQ(QRat(1).negate_q(), QRat(1));
  EXPECT_EQ(QRat(qint(2), qint(4)).negate_q(), QRat(qint(2), qint(4)));
}

TEST(QRat, EvalAtOne) {
  for (int n = 0; n <= 10; ++n) EXPECT_EQ(QRat(qint(n)).eval_at_one(), mpq_class(n));
  EXPECT_EQ(QRat(qint(2), qint(3)).eval_at_one(), mpq_class(2, 3));
  EXPECT_EQ(QRat(qfact(4)).eval_at_one(), mpq_class(24));
  // 1/(q - 1) has a pole at q = 1.
  EXPECT_THROW((void)QRat(1, L({{1, 1}, {0, -1}})).eval_at_one(), PoleAtOne);
}

TEST(QRat, SharedAcrossThreads) {
  const QRat x(qint(2) * qint(2), qint(5));
  std::vector<std::thread> pool;
  std::vector<int> ok(4, 0);
  for (int t = 0; t < 4; ++t) {
    pool.emplace_back([&, t] { ok[t] = (x * QRat(qint(5)) == QRat(qint(2) * qint(2))) ? 1 : 0; });
  }
  for (auto& th : pool) th.join();
  for (int v : ok) EXPECT_EQ(v, 1);
}

// --- presentation ------------------------------------------------------------

TEST(Format, Factored) {
  EXPECT_EQ(factored(QRat(qint(2) * qint(2), qint(5))), "[2]^2/[5]");
  EXPECT_EQ(factored(QRat(qint(2), qint(3))), "[2]/[3]");
  EXPECT_EQ(factored(QRat(1, qint(3))), "1/[3]");
  EXPECT_EQ(factored(QRat(1)), "1");
  EXPECT_EQ(factored(QRat()), "0");
  EXPECT_EQ(factored(QRat(-qint(4))), "-[4]");
  EXPECT_EQ(factored(QRat(qint(2) * qint(3), qint(6))), "[3] [2]/[6]");
}

TEST(Format, PalindromicFactorsMultiplyToQuantumIntegers) {
  for (int d = 2; d <= 40; ++d) {
    QLaurent prod(1);
    for (int k = 2; k <= d; ++k) {
      if (d % k == 0) prod *= detail::psi(k);
    }
    EXPECT_EQ(prod, qint(d)) << d;
  }
}

TEST(Format, FactoredRoundTrips) {
  auto rng = make_rng(5);
  std::uniform_int_distribution<int> k(1, 9);
  for (int t = 0; t < 100; ++t) {
    QLaurent num(1);
    QLaurent den(1);
    for (int i = 0; i < 3; ++i) num *= qint(k(rng));
    for (int i = 0; i < 3; ++i) den *= qint(k(rng));
    const QRat x(num, den);
    const QIntFactorization f = factor_qints(x);
    // Pure quantum-integer ratios leave nothing behind.
    EXPECT_TRUE(f.rest_num.is_one());
    EXPECT_TRUE(f.rest_den.is_one());
    EXPECT_EQ(f.shift, 0);
    QLaurent top(1);
    QLaurent bottom(1);
    for (auto [kk, e] : f.factors) {
      for (int i = 0; i < std::abs(e); ++i) (e > 0 ? top : bottom) *= qint(kk);
    }
    EXPECT_EQ(QRat(top, bottom), x);
  }
}

}  // namespace
}  // namespace tljw
