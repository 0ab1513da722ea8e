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

// tljw: build Jones-Wenzl projectors, query single coefficients, apply
// k-moves, and run the verification suite from the shell.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "tljw/tljw.hpp"

namespace {

using tljw::json;

enum class Format { json, text, factored };

struct Config {
  std::string convention = "negative";
  std::string format = "json";
  std::optional<std::string> method;
  std::uint64_t seed = 0;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Format parse_format(const std::string& s) {
  if (s == "json") return Format::json;
  if (s == "text") return Format::text;
  if (s == "factored") return Format::factored;
  throw UsageError("unknown format '" + s + "' (expected json, text or factored)");
}

void add_common(CLI::App* cmd, Config& cfg, bool with_method) {
  cmd->add_option("--convention", cfg.convention, "Loop value: negative (-[2]) or positive ([2])")
      ->envname("TLJW_CONVENTION")
      ->check(CLI::IsMember({"negative", "positive"}));
  cmd->add_option("--format", cfg.format, "Output format: json, text or factored")
      ->envname("TLJW_FORMAT")
      ->check(CLI::IsMember({"json", "text", "factored"}));
  if (with_method) {
    cmd->add_option("--method", cfg.method, "Engine: wenzl, linear, reduction or formula")
        ->envname("TLJW_METHOD")
        ->check(CLI::IsMember({"wenzl", "linear", "reduction", "formula"}));
  }
}

// Capform text such as "(1 4)(2 3)", a diagram JSON object, or "@file" /
// "-" to read either form from a file or standard input.
tljw::Diagram read_diagram(std::string arg) {
  if (arg == "-" || (!arg.empty() && arg[0] == '@')) {
    std::ifstream file;
    std::istream* in = &std::cin;
    if (arg != "-") {
      file.open(arg.substr(1));
      if (!file) throw UsageError("cannot open " + arg.substr(1));
      in = &file;
    }
    arg.assign(std::istreambuf_iterator<char>(*in), std::istreambuf_iterator<char>());
  }
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && arg[first] == '{') {
    return tljw::diagram_from_json(json::parse(arg));
  }
  return tljw::diagram_of(tljw::Capform::parse(arg));
}

std::string describe(const tljw::Diagram& d) {
  return d.is_square() ? tljw::capform_of(d).to_string() : d.to_string();
}

int cmd_build(int n, const Config& cfg) {
  const std::string method = cfg.method.value_or("linear");
  if (method == "reduction" || method == "formula") {
    throw UsageError("method '" + method +
                     "' computes one coefficient at a time; use 'tljw coeff' for a single diagram, "
                     "or --method wenzl|linear to build the whole projector");
  }
  if (n < 1) throw UsageError("n must be at least 1");
  const auto conv = tljw::parse_convention(cfg.convention);
  const tljw::Element jw = method == "wenzl" ? tljw::jw_wenzl(n, conv) : tljw::jw_linear(n, conv);
  switch (parse_format(cfg.format)) {
    case Format::json:
      std::cout << tljw::to_json(jw, conv).dump() << "\n";
      break;
    case Format::text:
      for (const auto& [d, c] : jw.terms()) std::cout << describe(d) << "\t" << c.to_string() << "\n";
      break;
    case Format::factored:
      for (const auto& [d, c] : jw.terms()) {
        std::cout << describe(d) << "\t" << tljw::factored(c) << "\t" << c.to_string() << "\n";
      }
      break;
  }
  return 0;
}

int cmd_coeff(const std::string& input, const Config& cfg) {
  const std::string method = cfg.method.value_or("reduction");
  if (method != "reduction" && method != "formula") {
    throw UsageError("method '" + method +
                     "' builds the whole projector; use 'tljw build N' for that, or --method reduction|formula here");
  }
  const tljw::Diagram d = read_diagram(input);
  if (!d.is_square()) throw UsageError("coefficients are defined for square diagrams only");
  const auto conv = tljw::parse_convention(cfg.convention);
  const tljw::QRat c = method == "formula" ? tljw::coeff_formula(d, conv) : tljw::coeff_reduction(d, conv);
  const std::string capform = tljw::capform_of(d).to_string();
  switch (parse_format(cfg.format)) {
    case Format::json:
      std::cout << json{{"capform", capform}, {"coeff", tljw::to_json(c)}, {"convention", cfg.convention},
                        {"method", method}, {"n", d.n_top()}}
                       .dump()
                << "\n";
      break;
    case Format::text:
      std::cout << c.to_string() << "\n";
      break;
    case Format::factored: {
      // The formula's own expression is written in the negative convention's
      // quantum integers; the positive one reads [i] as (-1)^(i+1) [i].
      const std::string native = method == "formula" ? tljw::formula_expression(d) : tljw::factored(c);
      std::cout << native << " = " << c.to_string() << "\n";
      break;
    }
  }
  return 0;
}

int cmd_kmove(const std::string& input, int position, int k, const std::string& direction, const Config& cfg) {
  const tljw::Capform before = tljw::capform_of(read_diagram(input));
  const tljw::Capform after = direction == "inverse" ? tljw::inverse_k_move(before, position, k)
                                                     : tljw::k_move(before, position, k);
  if (parse_format(cfg.format) == Format::json) {
    std::cout << json{{"direction", direction}, {"input", before.to_string()}, {"k", k},
                      {"output", after.to_string()}, {"position", position}}
                     .dump()
              << "\n";
  } else {
    std::cout << after.to_string() << "\n";
  }
  return 0;
}

std::vector<tljw::Report> run_suite(int max_n, std::uint64_t seed) {
  std::vector<tljw::Report> reports;
  for (int n = 1; n <= max_n; ++n) {
    if (n <= 7) reports.push_back(tljw::check_jw_axioms(n));
    reports.push_back(tljw::check_engine_agreement(n));
    reports.push_back(n <= 7 ? tljw::check_kmoves(n) : tljw::check_kmoves(n, seed + static_cast<unsigned>(n), 200));
    reports.push_back(tljw::check_reflection(n));
    reports.push_back(tljw::check_positivity(n));
    if (n <= 7) reports.push_back(tljw::check_convention_transport(n));
    if (n <= 7) reports.push_back(tljw::check_index_set_constraints(n));
    if (n >= 2 && n <= 7) reports.push_back(tljw::check_kernel(n));
  }
  reports.push_back(tljw::check_closed_forms(max_n));
  reports.push_back(tljw::check_eg_identity(max_n));
  std::stable_sort(reports.begin(), reports.end(),
                   [](const tljw::Report& a, const tljw::Report& b) { return a.check < b.check; });
  return reports;
}

int cmd_verify(int max_n, const Config& cfg) {
  if (max_n < 1) throw UsageError("--max-n must be at least 1");
  bool ok = true;
  for (const auto& r : run_suite(max_n, cfg.seed)) {
    ok = ok && r.passed;
    if (parse_format(cfg.format) == Format::json) {
      std::cout << r.to_line() << "\n";
    } else {
      std::cout << (r.passed ? "PASS " : "FAIL ") << r.check << " " << r.params.dump();
      if (!r.passed) std::cout << "  " << r.message;
      std::cout << "\n";
    }
  }
  return ok ? 0 : 1;
}

int cmd_enumerate(int n, const Config& cfg) {
  if (n < 0) throw UsageError("n must be nonnegative");
  const bool as_json = parse_format(cfg.format) == Format::json;
  for (const auto& d : tljw::enumerate_diagrams(n, n)) {
    std::cout << (as_json ? tljw::to_json(d).dump() : tljw::capform_of(d).to_string()) << "\n";
  }
  return 0;
}

int cmd_bench(int max_n, int full_max, const Config& cfg) {
  const auto conv = tljw::parse_convention(cfg.convention);
  const auto reports = tljw::bench(max_n, full_max, conv);
  if (parse_format(cfg.format) == Format::json) {
    for (const auto& r : reports) std::cout << r.to_line() << "\n";
    return 0;
  }
  std::printf("%3s  %-10s %12s %14s %10s\n", "n", "engine", "seconds", "compositions", "products");
  for (const auto& r : reports) {
    std::printf("%3d  %-10s %12.6f %14llu %10llu\n", r.params["n"].get<int>(),
                r.params["engine"].get<std::string>().c_str(), r.metrics["seconds"].get<double>(),
                static_cast<unsigned long long>(r.metrics["compositions"].get<std::uint64_t>()),
                static_cast<unsigned long long>(r.metrics["element_products"].get<std::uint64_t>()));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Temperley-Lieb algebra and Jones-Wenzl projector coefficients"};
  app.require_subcommand(1);
  Config cfg;

  int n = 0;
  auto* build = app.add_subcommand("build", "Expand the whole projector JW_n");
  build->add_option("n", n, "Number of strands")->required();
  add_common(build, cfg, true);

  std::string diagram;
  auto* coeff = app.add_subcommand("coeff", "Coefficient of one diagram in JW_n");
  coeff->add_option("diagram", diagram, "Capform text, diagram JSON, @file or -")->required();
  add_common(coeff, cfg, true);

  int position = 0;
  int k = 1;
  std::string direction = "forward";
  auto* kmove = app.add_subcommand("kmove", "Apply a k-move to a capform");
  kmove->add_option("diagram", diagram, "Capform text, diagram JSON, @file or -")->required();
  kmove->add_option("--position,-p", position,
                    "forward: left end of the innermost cap of the nest; inverse: left end of the single cap")
      ->required();
  kmove->add_option("-k,--k", k, "Nest depth")->required();
  kmove->add_option("--direction", direction, "forward or inverse")->check(CLI::IsMember({"forward", "inverse"}));
  add_common(kmove, cfg, false);

  int max_n = 6;
  auto* verify = app.add_subcommand("verify", "Run the verification suite; exit 1 on any failure");
  verify->add_option("--max-n", max_n, "Largest n to check")->envname("TLJW_MAX_N");
  verify->add_option("--seed", cfg.seed, "Seed for sampled checks")->envname("TLJW_SEED");
  add_common(verify, cfg, false);

  auto* enumerate = app.add_subcommand("enumerate", "List the diagrams of TL_n in canonical order");
  enumerate->add_option("n", n, "Number of strands")->required();
  add_common(enumerate, cfg, false);

  int bench_max = 7;
  int full_max = 9;
  auto* bench = app.add_subcommand("bench", "Time each engine and count diagram compositions");
  bench->add_option("--max-n", bench_max, "Largest n")->envname("TLJW_MAX_N");
  bench->add_option("--full-max", full_max, "Largest n for the whole-projector engines");
  add_common(bench, cfg, false);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*build) return cmd_build(n, cfg);
    if (*coeff) return cmd_coeff(diagram, cfg);
    if (*kmove) return cmd_kmove(diagram, position, k, direction, cfg);
    if (*verify) return cmd_verify(max_n, cfg);
    if (*enumerate) return cmd_enumerate(n, cfg);
    if (*bench) return cmd_bench(bench_max, full_max, cfg);
  } catch (const std::exception& e) {
    std::cerr << "tljw: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
