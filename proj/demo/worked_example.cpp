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

// Walks through one coefficient of JW_5 four ways, then asks for a TL_20
// coefficient that would be hopeless to read off the full projector.

#include <iostream>
#include <random>

#include "tljw/tljw.hpp"

int main() {
  using namespace tljw;

  std::cout << "JW_3:\n";
  const Element jw3 = jw_wenzl(3);
  for (const auto& [d, c] : jw3.terms()) {
    std::cout << "  " << capform_of(d).to_string() << "  " << factored(c) << "\n";
  }

  const Capform cf = Capform::parse("(1 10)(2 3)(4 9)(5 6)(7 8)");
  const Diagram d = diagram_of(cf);
  std::cout << "\ncapform " << cf.to_string() << " is " << d.to_string() << "\n";

  std::cout << "index set and tau:\n";
  for (const auto& s : index_set(cf)) {
    std::cout << "  (";
    for (std::size_t i = 0; i < s.size(); ++i) std::cout << (i ? "," : "") << s[i];
    std::cout << ") -> (";
    const Sequence t = tau(s);
    for (std::size_t i = 0; i < t.size(); ++i) std::cout << (i ? "," : "") << t[i];
    std::cout << ")\n";
  }

  std::cout << "formula:   " << formula_expression(d) << " = " << factored(coeff_formula(d)) << "\n";
  std::cout << "reduction: " << factored(coeff_reduction(d)) << "\n";
  std::cout << "linear:    " << factored(jw_linear(5).coeff(d)) << "\n";
  std::cout << "wenzl:     " << factored(jw_wenzl(5).coeff(d)) << "\n";

  std::mt19937_64 rng(2026);
  const Diagram big = random_diagram(20, 20, rng);
  ReductionEngine engine;
  std::cout << "\nTL_20 diagram " << capform_of(big).to_string() << "\n  coefficient "
            << factored(engine.coeff(big)) << "\n  (" << engine.memo_size()
            << " intermediate diagrams, no products in the algebra)\n";
}
