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

#include <cstddef>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tljw/poly.hpp"

namespace tljw {

/// Thrown by exact division when the divisor is zero.
class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Laurent polynomial in q with arbitrary-precision integer coefficients.
///
/// Stored densely from the lowest nonzero exponent; the coefficient vector
/// never begins or ends with a zero, and the zero polynomial is empty.
/// Two values are equal iff they have the same terms.
class QLaurent {
 public:
  QLaurent() = default;

  /// Constant polynomial.
  QLaurent(long c)  // NOLINT(google-explicit-constructor)
      : QLaurent(mpz_class(c)) {}
  QLaurent(const mpz_class& c) {  // NOLINT(google-explicit-constructor)
    if (c != 0) coeffs_.push_back(c);
  }

  /// c * q^e.
  static QLaurent monomial(const mpz_class& c, long e) {
    QLaurent r(c);
    if (!r.is_zero()) r.low_ = e;
    return r;
  }

  /// Builds from ordinary coefficients c0 + c1 q + ..., multiplied by q^low.
  static QLaurent from_coeffs(poly::Coeffs coeffs, long low = 0) {
    QLaurent r;
    r.coeffs_ = std::move(coeffs);
    r.low_ = low;
    r.normalize();
    return r;
  }

  /// Builds from (exponent, coefficient) pairs; repeated exponents add.
  static QLaurent from_terms(const std::vector<std::pair<long, mpz_class>>& terms) {
    QLaurent r;
    for (const auto& [e, c] : terms) r += monomial(c, e);
    return r;
  }

  static QLaurent q() { return monomial(1, 1); }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && low_ == 0 && coeffs_[0] == 1; }

  /// Lowest and highest exponents carrying a nonzero coefficient.
  /// Meaningless for zero.
  long low() const { return low_; }
  long high() const { return low_ + static_cast<long>(coeffs_.size()) - 1; }

  /// Coefficient of q^e (zero outside the support).
  mpz_class coeff(long e) const {
    if (is_zero() || e < low() || e > high()) return 0;
    return coeffs_[static_cast<std::size_t>(e - low_)];
  }

  /// Dense coefficients, lowest exponent first.
  const poly::Coeffs& dense() const { return coeffs_; }

  /// Nonzero terms in ascending exponent order.
  std::vector<std::pair<long, mpz_class>> terms() const {
    std::vector<std::pair<long, mpz_class>> r;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i] != 0) r.emplace_back(low_ + static_cast<long>(i), coeffs_[i]);
    }
    return r;
  }

  QLaurent shifted(long k) const {
    QLaurent r(*this);
    if (!r.is_zero()) r.low_ += k;
    return r;
  }

  QLaurent operator-() const {
    QLaurent r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  QLaurent& operator+=(const QLaurent& o) { return accumulate(o, false); }
  QLaurent& operator-=(const QLaurent& o) { return accumulate(o, true); }

  friend QLaurent operator+(QLaurent a, const QLaurent& b) { return a += b; }
  friend QLaurent operator-(QLaurent a, const QLaurent& b) { return a -= b; }

  friend QLaurent operator*(const QLaurent& a, const QLaurent& b) {
    if (a.is_zero() || b.is_zero()) return {};
    QLaurent r;
    r.coeffs_ = poly::mul(a.coeffs_, b.coeffs_);
    r.low_ = a.low_ + b.low_;
    return r;
  }
  QLaurent& operator*=(const QLaurent& o) { return *this = *this * o; }

  /// this += x * y, without materializing the product.
  void add_product(const QLaurent& x, const QLaurent& y) {
    if (x.is_zero() || y.is_zero()) return;
    const long lo = x.low_ + y.low_;
    const long hi = x.high() + y.high();
    reserve_range(lo, hi);
    for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
      if (x.coeffs_[i] == 0) continue;
      const std::size_t base = static_cast<std::size_t>(lo - low_) + i;
      for (std::size_t j = 0; j < y.coeffs_.size(); ++j) {
        mpz_addmul(coeffs_[base + j].get_mpz_t(), x.coeffs_[i].get_mpz_t(),
                   y.coeffs_[j].get_mpz_t());
      }
    }
    normalize();
  }

  /// Exact quotient in Z[q, q^-1], or nullopt if `d` does not divide.
  std::optional<QLaurent> divide_exact(const QLaurent& d) const {
    if (d.is_zero()) throw DivisionByZero("QLaurent division by zero");
    if (is_zero()) return QLaurent{};
    auto quo = poly::divide_exact(coeffs_, d.coeffs_);
    if (!quo) return std::nullopt;
    return from_coeffs(std::move(*quo), low_ - d.low_);
  }

  /// Substitutes q -> -q.
  QLaurent negate_q() const {
    QLaurent r(*this);
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i) {
      if ((r.low_ + static_cast<long>(i)) % 2 != 0) r.coeffs_[i] = -r.coeffs_[i];
    }
    return r;
  }

  /// Substitutes q -> q^-1.
  QLaurent invert_q() const {
    QLaurent r;
    r.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
    r.low_ = is_zero() ? 0 : -high();
    return r;
  }

  mpz_class eval_at_one() const {
    mpz_class s = 0;
    for (const auto& c : coeffs_) s += c;
    return s;
  }

  friend bool operator==(const QLaurent& a, const QLaurent& b) {
    return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
  }

  /// Total order used only for deterministic containers.
  friend bool operator<(const QLaurent& a, const QLaurent& b) {
    if (a.coeffs_.size() != b.coeffs_.size()) return a.coeffs_.size() < b.coeffs_.size();
    if (a.low_ != b.low_) return a.low_ < b.low_;
    return a.coeffs_ < b.coeffs_;
  }

  /// Human-readable form, highest power first, e.g. "q^2 + 1 + q^-2".
  std::string to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
      const mpz_class& c = coeffs_[i];
      if (c == 0) continue;
      const long e = low_ + static_cast<long>(i);
      mpz_class mag = abs(c);
      if (first) {
        if (c < 0) os << "-";
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      first = false;
      if (e == 0) {
        os << mag.get_str();
        continue;
      }
      if (mag != 1) os << mag.get_str() << "*";
      os << "q";
      if (e != 1) os << "^" << e;
    }
    return os.str();
  }

 private:
  QLaurent& accumulate(const QLaurent& o, bool negate) {
    if (o.is_zero()) return *this;
    reserve_range(o.low_, o.high());
    const std::size_t off = static_cast<std::size_t>(o.low_ - low_);
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
      if (negate) {
        coeffs_[off + i] -= o.coeffs_[i];
      } else {
        coeffs_[off + i] += o.coeffs_[i];
      }
    }
    normalize();
    return *this;
  }

  // Grows storage so that exponents lo..hi are addressable.
  void reserve_range(long lo, long hi) {
    if (is_zero()) {
      coeffs_.assign(static_cast<std::size_t>(hi - lo + 1), 0);
      low_ = lo;
      return;
    }
    if (lo < low_) {
      coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - lo), mpz_class(0));
      low_ = lo;
    }
    if (hi > high()) coeffs_.resize(static_cast<std::size_t>(hi - low_ + 1), 0);
  }

  void normalize() {
    poly::trim(coeffs_);
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
    if (lead > 0) {
      coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
      low_ += static_cast<long>(lead);
    }
    if (coeffs_.empty()) low_ = 0;
  }

  poly::Coeffs coeffs_;
  long low_ = 0;
};

/// Quantum integer [n] = q^(n-1) + q^(n-3) + ... + q^-(n-1); [0] = 0.
inline QLaurent qint(int n) {
  if (n < 0) throw std::invalid_argument("qint: n must be non-negative");
  if (n == 0) return {};
  poly::Coeffs c(static_cast<std::size_t>(2 * n - 1), 0);
  for (std::size_t i = 0; i < c.size(); i += 2) c[i] = 1;
  return QLaurent::from_coeffs(std::move(c), -(n - 1));
}

/// Quantum factorial [n]! = [n][n-1]...[1]; [0]! = 1.
inline QLaurent qfact(int n) {
  if (n < 0) throw std::invalid_argument("qfact: n must be non-negative");
  QLaurent r(1);
  for (int k = 2; k <= n; ++k) r *= qint(k);
  return r;
}

/// [k] * x computed as a sum of shifted copies of x.
inline QLaurent times_qint(const QLaurent& x, int k) {
  QLaurent r;
  for (int j = 0; j < k; ++j) r += x.shifted(k - 1 - 2 * j);
  return r;
}

}  // namespace tljw
