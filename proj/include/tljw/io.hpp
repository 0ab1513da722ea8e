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

// JSON wire formats.
//
//   QLaurent  [[exponent, "coefficient"], ...]   ascending exponent, no zeros
//   QRat      {"den": QLaurent, "num": QLaurent} canonical form only
//   Diagram   {"n_bottom": m, "n_top": n, "pairs": [[a, b], ...]}  a < b, sorted
//   Element   {"convention": "...", "n": n, "terms": [{"coeff": ..., "diagram": ...}]}
//
// Object keys come out sorted, so dump() is byte-stable.

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "tljw/diagram.hpp"
#include "tljw/element.hpp"
#include "tljw/qlaurent.hpp"
#include "tljw/qrat.hpp"

namespace tljw {

using json = nlohmann::json;

/// Thrown for structurally valid JSON that does not describe a valid value.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline json to_json(const QLaurent& p) {
  json out = json::array();
  for (const auto& [e, c] : p.terms()) out.push_back(json::array({e, c.get_str()}));
  return out;
}

inline QLaurent qlaurent_from_json(const json& j) {
  if (!j.is_array()) throw FormatError("QLaurent: expected an array of [exponent, coefficient]");
  std::vector<std::pair<long, mpz_class>> terms;
  bool first = true;
  long prev = 0;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer() || !t[1].is_string()) {
      throw FormatError("QLaurent: each term must be [integer, \"decimal\"]");
    }
    const long e = t[0].get<long>();
    if (!first && e <= prev) throw FormatError("QLaurent: exponents must be strictly ascending");
    mpz_class c;
    if (c.set_str(t[1].get<std::string>(), 10) != 0) throw FormatError("QLaurent: bad coefficient");
    if (c == 0) throw FormatError("QLaurent: zero coefficient stored");
    if (c.get_str() != t[1].get<std::string>()) throw FormatError("QLaurent: non-canonical decimal");
    terms.emplace_back(e, c);
    prev = e;
    first = false;
  }
  return QLaurent::from_terms(terms);
}

inline json to_json(const QRat& r) { return json{{"num", to_json(r.num())}, {"den", to_json(r.den())}}; }

inline QRat qrat_from_json(const json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den")) {
    throw FormatError("QRat: expected {\"num\": ..., \"den\": ...}");
  }
  QLaurent num = qlaurent_from_json(j.at("num"));
  QLaurent den = qlaurent_from_json(j.at("den"));
  if (!QRat::is_canonical(num, den)) throw FormatError("QRat: not in canonical form");
  return QRat::unchecked(std::move(num), std::move(den));
}

inline json to_json(const Diagram& d) {
  json pairs = json::array();
  for (const auto& [a, b] : d.pairs()) pairs.push_back(json::array({a, b}));
  return json{{"n_top", d.n_top()}, {"n_bottom", d.n_bottom()}, {"pairs", pairs}};
}

inline Diagram diagram_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n_top") || !j.contains("n_bottom") || !j.contains("pairs")) {
    throw FormatError("Diagram: expected {\"n_top\", \"n_bottom\", \"pairs\"}");
  }
  std::vector<std::pair<int, int>> pairs;
  for (const auto& p : j.at("pairs")) {
    if (!p.is_array() || p.size() != 2) throw FormatError("Diagram: each pair must be [a, b]");
    pairs.emplace_back(p[0].get<int>(), p[1].get<int>());
  }
  try {
    return Diagram(j.at("n_top").get<int>(), j.at("n_bottom").get<int>(), pairs);
  } catch (const InvalidDiagram& e) {
    throw FormatError(std::string("Diagram: ") + e.what());
  }
}

inline json to_json(const Element& e, LoopConvention conv) {
  json terms = json::array();
  for (const auto& [d, c] : e.terms()) terms.push_back(json{{"diagram", to_json(d)}, {"coeff", to_json(c)}});
  return json{{"n", e.n()}, {"convention", std::string(to_string(conv))}, {"terms", terms}};
}

struct ParsedElement {
  Element element;
  LoopConvention convention;
};

inline ParsedElement element_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("convention") || !j.contains("terms")) {
    throw FormatError("Element: expected {\"n\", \"convention\", \"terms\"}");
  }
  ParsedElement out{Element(j.at("n").get<int>()), parse_convention(j.at("convention").get<std::string>())};
  std::optional<Diagram> prev;
  for (const auto& t : j.at("terms")) {
    Diagram d = diagram_from_json(t.at("diagram"));
    QRat c = qrat_from_json(t.at("coeff"));
    if (c.is_zero()) throw FormatError("Element: zero coefficient stored");
    if (prev && !(*prev < d)) throw FormatError("Element: terms not in canonical order");
    out.element.add(d, c);
    prev = std::move(d);
  }
  return out;
}

}  // namespace tljw
