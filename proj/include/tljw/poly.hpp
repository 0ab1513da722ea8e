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

// Dense univariate polynomials over Z, coefficients in ascending degree.
// These are the building blocks underneath QLaurent; nothing here knows
// about negative exponents.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace tljw::poly {

using Coeffs = std::vector<mpz_class>;

inline void trim(Coeffs& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline bool is_zero(const Coeffs& p) { return p.empty(); }

inline long degree(const Coeffs& p) { return static_cast<long>(p.size()) - 1; }

inline const mpz_class& leading(const Coeffs& p) { return p.back(); }

inline Coeffs add(const Coeffs& a, const Coeffs& b) {
  Coeffs r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

inline Coeffs sub(const Coeffs& a, const Coeffs& b) {
  Coeffs r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

inline Coeffs mul(const Coeffs& a, const Coeffs& b) {
  if (a.empty() || b.empty()) return {};
  Coeffs r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  trim(r);
  return r;
}

inline Coeffs scale(const Coeffs& a, const mpz_class& c) {
  if (c == 0) return {};
  Coeffs r(a);
  for (auto& x : r) x *= c;
  return r;
}

/// gcd of the coefficients; zero for the zero polynomial.
inline mpz_class content(const Coeffs& p) {
  mpz_class g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

/// Divides out the content and makes the leading coefficient positive.
inline Coeffs primitive_part(const Coeffs& p) {
  if (p.empty()) return {};
  mpz_class g = content(p);
  if (p.back() < 0) g = -g;
  Coeffs r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    mpz_divexact(r[i].get_mpz_t(), p[i].get_mpz_t(), g.get_mpz_t());
  }
  return r;
}

/// Exact quotient a / b in Z[x], or nullopt when b does not divide a.
inline std::optional<Coeffs> divide_exact(const Coeffs& a, const Coeffs& b) {
  if (b.empty()) return std::nullopt;
  if (a.empty()) return Coeffs{};
  if (a.size() < b.size()) return std::nullopt;
  Coeffs rem(a);
  const std::size_t db = b.size() - 1;
  Coeffs q(a.size() - b.size() + 1);
  const mpz_class& lb = b.back();
  mpz_class t;
  for (std::size_t k = q.size(); k-- > 0;) {
    const mpz_class& top = rem[k + db];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
    mpz_divexact(q[k].get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    for (std::size_t j = 0; j <= db; ++j) {
      mpz_submul(rem[k + j].get_mpz_t(), q[k].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  for (std::size_t i = 0; i < db; ++i) {
    if (rem[i] != 0) return std::nullopt;
  }
  trim(q);
  return q;
}

inline mpz_class evaluate(const Coeffs& p, const mpz_class& x) {
  mpz_class acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

namespace detail {

inline mpz_class max_norm(const Coeffs& p) {
  mpz_class m = 0;
  for (const auto& c : p) {
    if (abs(c) > m) m = abs(c);
  }
  return m;
}

// Symmetric x-adic digits of an integer read back as a polynomial.
inline Coeffs interpolate(mpz_class h, const mpz_class& x) {
  Coeffs r;
  const mpz_class half = x / 2;
  mpz_class digit;
  while (h != 0) {
    mpz_fdiv_r(digit.get_mpz_t(), h.get_mpz_t(), x.get_mpz_t());
    if (digit > half) digit -= x;
    r.push_back(digit);
    h -= digit;
    mpz_divexact(h.get_mpz_t(), h.get_mpz_t(), x.get_mpz_t());
  }
  trim(r);
  return r;
}

// Pseudo-remainder of a by b (b nonzero): lc(b)^(da-db+1) * a mod b.
inline Coeffs pseudo_remainder(Coeffs a, const Coeffs& b) {
  const std::size_t db = b.size() - 1;
  const mpz_class& lb = b.back();
  while (!a.empty() && a.size() >= b.size()) {
    const mpz_class top = a.back();
    const std::size_t shift = a.size() - b.size();
    for (auto& c : a) c *= lb;
    for (std::size_t j = 0; j <= db; ++j) {
      mpz_submul(a[shift + j].get_mpz_t(), top.get_mpz_t(), b[j].get_mpz_t());
    }
    trim(a);
  }
  return a;
}

// Primitive polynomial remainder sequence; slow but unconditional.
inline Coeffs gcd_prs(Coeffs a, Coeffs b) {
  a = primitive_part(a);
  b = primitive_part(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    Coeffs r = primitive_part(pseudo_remainder(std::move(a), b));
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Heuristic gcd (evaluate, integer gcd, interpolate, verify). Inputs must be
// primitive. Returns nullopt if every evaluation point was unlucky.
inline std::optional<Coeffs> gcd_heuristic(const Coeffs& f, const Coeffs& g) {
  const mpz_class fn = max_norm(f);
  const mpz_class gn = max_norm(g);
  mpz_class bound = 2 * std::min(fn, gn) + 29;
  const mpz_class root_bound = 99 * mpz_class(sqrt(bound));
  const mpz_class fq = fn / abs(f.back());
  const mpz_class gq = gn / abs(g.back());
  mpz_class x = std::max<mpz_class>(std::min(bound, root_bound), 2 * std::min(fq, gq) + 2);
  for (int attempt = 0; attempt < 6; ++attempt) {
    const mpz_class fx = evaluate(f, x);
    const mpz_class gx = evaluate(g, x);
    if (fx != 0 && gx != 0) {
      mpz_class h;
      mpz_gcd(h.get_mpz_t(), fx.get_mpz_t(), gx.get_mpz_t());
      Coeffs cand = primitive_part(interpolate(h, x));
      if (!cand.empty() && divide_exact(f, cand) && divide_exact(g, cand)) {
        return cand;
      }
    }
    x = 73794 * x * mpz_class(sqrt(mpz_class(sqrt(x)))) / 27011;
  }
  return std::nullopt;
}

}  // namespace detail

/// Primitive gcd with positive leading coefficient. gcd(0, 0) = 0.
inline Coeffs gcd(const Coeffs& a, const Coeffs& b) {
  if (a.empty()) return primitive_part(b);
  if (b.empty()) return primitive_part(a);
  Coeffs pa = primitive_part(a);
  Coeffs pb = primitive_part(b);
  if (pa.size() == 1 || pb.size() == 1) return Coeffs{1};
  if (auto h = detail::gcd_heuristic(pa, pb)) return *h;
  return detail::gcd_prs(std::move(pa), std::move(pb));
}

}  // namespace tljw::poly
