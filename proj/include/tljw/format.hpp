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

// Presentation helpers. Nothing here is used for equality; canonical QRat
// form stays authoritative.

#include <algorithm>
#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

#include "tljw/qlaurent.hpp"
#include "tljw/qrat.hpp"

namespace tljw {

/// x written as sign * q^shift * prod [k]^e_k * rest_num / rest_den, with
/// e_k of either sign. The quantum integers split over the palindromic
/// factors psi_d = prod_{k | d} [k]^mu(d/k), so x is factored over those and
/// the multiplicities are turned back into exponents of [k] by Moebius
/// inversion.
struct QIntFactorization {
  int sign = 1;
  long shift = 0;
  std::vector<std::pair<int, int>> factors;  ///< (k, e), descending k, e != 0
  QLaurent rest_num{1};
  QLaurent rest_den{1};
};

namespace detail {

inline int moebius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  return n > 1 ? -result : result;
}

inline int totient(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  return n > 1 ? result - result / n : result;
}

// psi_d = q^-phi(d) Phi_d(q^2), with the cyclotomic polynomial built from
// Phi_d(x) = prod_{k | d} (x^k - 1)^mu(d/k): multiply first, then divide.
inline QLaurent psi(int d) {
  std::vector<mpz_class> c{1};
  for (int k = 1; k <= d; ++k) {
    if (d % k != 0 || moebius(d / k) != 1) continue;
    std::vector<mpz_class> next(c.size() + static_cast<std::size_t>(k));
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + static_cast<std::size_t>(k)] += c[i];
      next[i] -= c[i];
    }
    c = std::move(next);
  }
  for (int k = 1; k <= d; ++k) {
    if (d % k != 0 || moebius(d / k) != -1) continue;
    // c / (x^k - 1): the quotient's coefficients satisfy b_i = b_{i-k} - c_i.
    const auto uk = static_cast<std::size_t>(k);
    std::vector<mpz_class> quo(c.size() - uk);
    for (std::size_t i = 0; i < quo.size(); ++i) quo[i] = (i >= uk ? quo[i - uk] : mpz_class(0)) - c[i];
    c = std::move(quo);
  }
  std::vector<std::pair<long, mpz_class>> terms;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] != 0) terms.emplace_back(2 * static_cast<long>(i) - totient(d), c[i]);
  }
  return QLaurent::from_terms(terms);
}

// Pulls out sign and q^shift so that the rest has positive lowest coefficient
// and lowest exponent 0.
inline QLaurent strip_monomial(const QLaurent& x, int& sign, long& shift) {
  const long low = x.low();
  QLaurent rest = x.shifted(-low);
  shift += low;
  if (rest.dense().front() < 0) {
    sign = -sign;
    rest = -rest;
  }
  return rest;
}

inline std::vector<int> divide_out_psi(QLaurent& x, const std::vector<QLaurent>& psi) {
  std::vector<int> mult(psi.size(), 0);
  for (std::size_t d = psi.size(); d-- > 2;) {
    if (psi[d].is_zero()) continue;
    const long width = psi[d].high() - psi[d].low();
    while (x.high() - x.low() >= width) {
      auto quo = x.divide_exact(psi[d]);
      if (!quo) break;
      x = std::move(*quo);
      ++mult[d];
    }
  }
  return mult;
}

}  // namespace detail

inline QIntFactorization factor_qints(const QRat& r) {
  QIntFactorization f;
  if (r.is_zero()) {
    f.sign = 0;
    f.rest_num = QLaurent{};
    return f;
  }
  long unused = 0;
  QLaurent num = detail::strip_monomial(r.num(), f.sign, unused);
  QLaurent den = detail::strip_monomial(r.den(), f.sign, unused);
  // psi_d has width 2 phi(d), and phi(d) >= sqrt(d/2), so only d up to
  // width^2/2 can divide either side; of those, only d with 2 phi(d) <= width.
  const long width = std::max(num.high() - num.low(), den.high() - den.low());
  const long limit = width * width / 2 + 2;
  std::vector<int> candidates;
  for (int d = 2; d <= limit; ++d) {
    if (2L * detail::totient(d) <= width) candidates.push_back(d);
  }
  const int max_k = candidates.empty() ? 1 : candidates.back();
  std::vector<QLaurent> psi(static_cast<std::size_t>(max_k) + 1);
  for (int d : candidates) psi[static_cast<std::size_t>(d)] = detail::psi(d);
  const std::vector<int> up = detail::divide_out_psi(num, psi);
  const std::vector<int> down = detail::divide_out_psi(den, psi);
  for (int k = max_k; k >= 2; --k) {
    int e = 0;
    for (int j = 1; k * j <= max_k; ++j) {
      const auto d = static_cast<std::size_t>(k * j);
      e += detail::moebius(j) * (up[d] - down[d]);
    }
    if (e != 0) f.factors.emplace_back(k, e);
  }
  // Leftover factors are centred on q^0 when their width allows; whatever
  // power of q remains is read off from the exact ratio.
  auto centre = [](const QLaurent& p) {
    const long span = p.high() - p.low();
    return p.shifted(-p.low() - (span % 2 == 0 ? span / 2 : 0));
  };
  f.rest_num = centre(num);
  f.rest_den = centre(den);
  QLaurent top = f.sign < 0 ? -f.rest_num : f.rest_num;
  QLaurent bottom = f.rest_den;
  for (const auto& [k, e] : f.factors) {
    for (int i = 0; i < std::abs(e); ++i) (e > 0 ? top : bottom) *= qint(k);
  }
  const QRat ratio = r / QRat(std::move(top), std::move(bottom));
  f.shift = ratio.num().low() - ratio.den().low();
  return f;
}

inline QIntFactorization factor_qints(const QLaurent& x) { return factor_qints(QRat(x)); }

namespace detail {

inline std::string product_string(std::vector<std::string> pieces) {
  std::string s;
  for (const auto& p : pieces) s += (s.empty() ? "" : " ") + p;
  return s;
}

inline std::string wrap(const QLaurent& p) {
  const std::string s = p.to_string();
  return p.terms().size() > 1 ? "(" + s + ")" : s;
}

}  // namespace detail

inline std::string to_string(const QIntFactorization& f) {
  if (f.sign == 0) return "0";
  std::vector<std::string> top;
  std::vector<std::string> bottom;
  if (f.shift != 0) top.push_back("q^" + std::to_string(f.shift));
  for (const auto& [k, e] : f.factors) {
    const int a = std::abs(e);
    (e > 0 ? top : bottom).push_back("[" + std::to_string(k) + "]" + (a > 1 ? "^" + std::to_string(a) : ""));
  }
  if (!f.rest_num.is_one()) top.push_back(detail::wrap(f.rest_num));
  if (!f.rest_den.is_one()) bottom.push_back(detail::wrap(f.rest_den));
  std::string s = f.sign < 0 ? "-" : "";
  s += top.empty() ? "1" : detail::product_string(top);
  if (!bottom.empty()) {
    s += "/";
    s += bottom.size() == 1 ? bottom[0] : "(" + detail::product_string(bottom) + ")";
  }
  return s;
}

/// e.g. "[2]^2/[5]".
inline std::string factored(const QRat& r) { return to_string(factor_qints(r)); }

}  // namespace tljw
