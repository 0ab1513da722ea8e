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

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>

#include "tljw/poly.hpp"
#include "tljw/qlaurent.hpp"

namespace tljw {

/// Thrown when evaluating at q = 1 hits a pole.
class PoleAtOne : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Element of Q(q), kept as a reduced ratio of Laurent polynomials.
///
/// Canonical form: the denominator is an ordinary polynomial with nonzero
/// constant term and positive leading coefficient, and numerator and
/// denominator share no common factor in Z[q, q^-1] (polynomial or integer
/// content). Zero is 0/1. Equality is structural.
class QRat {
 public:
  QRat() : den_(1) {}
  QRat(long c) : num_(c), den_(1) {}                  // NOLINT(google-explicit-constructor)
  QRat(const mpz_class& c) : num_(c), den_(1) {}      // NOLINT(google-explicit-constructor)
  QRat(QLaurent num) : num_(std::move(num)), den_(1) {}  // NOLINT(google-explicit-constructor)

  QRat(QLaurent num, QLaurent den) {
    if (den.is_zero()) throw DivisionByZero("QRat with zero denominator");
    assign_canonical(std::move(num), std::move(den));
  }

  const QLaurent& num() const { return num_; }
  const QLaurent& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }

  QRat operator-() const {
    QRat r(*this);
    r.num_ = -r.num_;
    return r;
  }

  friend QRat operator+(const QRat& a, const QRat& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return QRat(a.num_ + b.num_, a.den_);
    return QRat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend QRat operator-(const QRat& a, const QRat& b) { return a + (-b); }

  friend QRat operator*(const QRat& a, const QRat& b) {
    if (a.is_zero() || b.is_zero()) return {};
    return QRat(a.num_ * b.num_, a.den_ * b.den_);
  }

  friend QRat operator/(const QRat& a, const QRat& b) {
    if (b.is_zero()) throw DivisionByZero("QRat division by zero");
    if (a.is_zero()) return {};
    return QRat(a.num_ * b.den_, a.den_ * b.num_);
  }

  QRat& operator+=(const QRat& o) { return *this = *this + o; }
  QRat& operator-=(const QRat& o) { return *this = *this - o; }
  QRat& operator*=(const QRat& o) { return *this = *this * o; }
  QRat& operator/=(const QRat& o) { return *this = *this / o; }

  /// Substitutes q -> -q.
  QRat negate_q() const { return QRat(num_.negate_q(), den_.negate_q()); }

  /// Substitutes q -> q^-1.
  QRat invert_q() const { return QRat(num_.invert_q(), den_.invert_q()); }

  /// Value at q = 1; throws PoleAtOne when the denominator vanishes there.
  mpq_class eval_at_one() const {
    const mpz_class d = den_.eval_at_one();
    if (d == 0) throw PoleAtOne("QRat has a pole at q = 1");
    mpq_class r(num_.eval_at_one(), d);
    r.canonicalize();
    return r;
  }

  friend bool operator==(const QRat& a, const QRat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// "num" when the denominator is 1, otherwise "(num)/(den)".
  std::string to_string() const {
    if (den_.is_one()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
  }

  /// Builds a value that is already canonical; used by deserialization after
  /// it has checked the invariants.
  static QRat unchecked(QLaurent num, QLaurent den) {
    QRat r;
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    return r;
  }

  /// True if (num, den) is exactly in canonical form.
  static bool is_canonical(const QLaurent& num, const QLaurent& den) {
    if (den.is_zero()) return false;
    const QRat r(num, den);
    return r.num_ == num && r.den_ == den;
  }

 private:
  void assign_canonical(QLaurent num, QLaurent den) {
    if (num.is_zero()) {
      num_ = QLaurent{};
      den_ = QLaurent(1);
      return;
    }
    // Move powers of q into the numerator: both become ordinary polynomials
    // with nonzero constant term.
    const long shift = num.low() - den.low();
    poly::Coeffs n = num.dense();
    poly::Coeffs d = den.dense();

    if (d.size() > 1 && n.size() > 1) {
      poly::Coeffs g = poly::gcd(n, d);
      if (g.size() > 1) {
        n = *poly::divide_exact(n, g);
        d = *poly::divide_exact(d, g);
      }
    }
    mpz_class c = poly::content(n);
    mpz_class cd = poly::content(d);
    mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), cd.get_mpz_t());
    if (d.back() < 0) c = -c;
    if (c != 1) {
      for (auto& x : n) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
      for (auto& x : d) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    }
    num_ = QLaurent::from_coeffs(std::move(n), shift);
    den_ = QLaurent::from_coeffs(std::move(d), 0);
  }

  QLaurent num_;
  QLaurent den_;
};

}  // namespace tljw
