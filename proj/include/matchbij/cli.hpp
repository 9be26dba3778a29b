// Copyright 2026 The matchbij Authors.
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

// Command-line front end. `run` is the whole program minus process plumbing,
// so tests can drive it with string streams.
//
// Exit codes: 0 success, 1 domain error (not L & P, not a representative,
// enumeration cap, failed verification), 2 usage or parse error.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "matchbij/bijections.hpp"
#include "matchbij/count.hpp"
#include "matchbij/enumerate.hpp"
#include "matchbij/io.hpp"
#include "matchbij/lp.hpp"
#include "matchbij/render.hpp"
#include "matchbij/similarity.hpp"
#include "matchbij/verify.hpp"

namespace matchbij::cli {

namespace detail {

struct UsageError : Error {
  using Error::Error;
};

inline const std::map<std::string, InputFormat>& input_formats() {
  static const std::map<std::string, InputFormat> m = {{"auto", InputFormat::kAuto},
                                                       {"pairs", InputFormat::kPairs},
                                                       {"partner", InputFormat::kPartner},
                                                       {"dotbracket", InputFormat::kDotBracket}};
  return m;
}

inline const std::map<std::string, OutputFormat>& output_formats() {
  static const std::map<std::string, OutputFormat> m = {{"pairs", OutputFormat::kPairs},
                                                        {"partner", OutputFormat::kPartner},
                                                        {"dotbracket", OutputFormat::kDotBracket},
                                                        {"lr", OutputFormat::kLR}};
  return m;
}

inline std::string read_all(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }
  std::ifstream file(path);
  if (!file) throw UsageError("cannot open input file '" + path + "'");
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

inline std::string yes_no(bool value) { return value ? "true" : "false"; }

inline std::string label_set(const std::vector<Label>& labels) {
  std::string out = "{";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(labels[i]);
  }
  return out + "}";
}

inline BigCount count(const std::string& kind, int n, bool brute, const EnumerationCap& cap) {
  if (n < 1) throw UsageError("--n must be positive");
  std::uint64_t tally = 0;
  if (kind == "matchings") {
    if (!brute) return matching_count(n);
    all_matchings(n, [&](const Matching&) { ++tally; }, cap);
  } else if (kind == "noncrossing") {
    if (!brute) return catalan(n);
    all_matchings(n, [&](const Matching& m) { tally += is_noncrossing(m); }, cap);
  } else if (kind == "lp") {
    if (!brute) return lp_count_formula(n);
    all_matchings(n, [&](const Matching& m) { tally += is_lp(m); }, cap);
  } else if (kind == "classes") {
    if (!brute) return lp_count_formula(n);
    return census(n, cap).class_count();
  } else if (kind == "ncn") {
    // Always counted by enumeration; --brute filters M(n) instead of walking
    // Dyck words.
    if (brute) {
      all_matchings(
          n, [&](const Matching& m) { if (is_noncrossing(m)) tally += 1 + ne(m); }, cap);
    } else {
      ncn_elements(n, [&](const NCNTriple&) { ++tally; }, cap);
    }
  } else {
    throw UsageError("unknown count kind '" + kind + "'");
  }
  return tally;
}

inline void map(const std::string& kind, const std::string& text, InputFormat in_format,
                OutputFormat out_format, std::ostream& out) {
  if (kind == "phi") {
    out << emit_ncn(phi(parse_input(text, in_format)), out_format);
  } else if (kind == "phi-inv") {
    out << emit(phi_inv(parse_ncn(text, in_format)), out_format);
  } else if (kind == "tau") {
    out << emit(tau(parse_ncn(text, in_format)), out_format);
  } else if (kind == "tau-inv") {
    out << emit_ncn(tau_inv(parse_input(text, in_format)), out_format);
  } else if (kind == "sigma") {
    out << emit(sigma(parse_input(text, in_format)), out_format);
  } else if (kind == "sigma-inv") {
    out << emit(sigma_inv(parse_input(text, in_format)), out_format);
  } else {
    throw UsageError("unknown map '" + kind + "'");
  }
}

inline void classify(const Matching& m, std::ostream& out) {
  const auto hairpin = find_inflated_hairpin(m);
  out << "n=" << m.n() << "\n";
  out << "lr=" << lr_sequence(m).str() << "\n";
  out << "ne=" << ne(m) << "\n";
  out << "cr=" << cr(m) << "\n";
  out << "noncrossing=" << yes_no(is_noncrossing(m)) << "\n";
  out << "lp=" << yes_no(hairpin.has_value()) << "\n";
  if (hairpin && !hairpin->empty()) {
    out << "hairpin=A" << label_set(hairpin->a) << " B" << label_set(hairpin->b) << "\n";
  }
  out << "representative=" << yes_no(is_representative(m)) << "\n";
  out << "dotbracket=" << emit_dotbracket(m) << "\n";
}

inline void enumerate(const std::string& kind, int n, OutputFormat format,
                      const EnumerationCap& cap, std::ostream& out) {
  bool first = true;
  auto write = [&](const Matching& m) {
    if (format == OutputFormat::kPairs && !first) out << "\n";
    first = false;
    out << emit(m, format);
  };
  if (kind == "all") {
    all_matchings(n, write, cap);
  } else if (kind == "noncrossing") {
    noncrossing_matchings(n, write, cap);
  } else if (kind == "lp") {
    enumerate_lp(n, write, cap);
  } else if (kind == "ns") {
    ns_representatives(n, write, cap);
  } else {
    throw UsageError("unknown enumeration '" + kind + "'");
  }
}

inline bool verify(int n, const std::string& suite_name, const EnumerationCap& cap,
                   std::ostream& out) {
  std::vector<const Suite*> chosen;
  if (suite_name.empty() || suite_name == "all") {
    for (const Suite& s : suites()) chosen.push_back(&s);
  } else if (const Suite* s = find_suite(suite_name)) {
    chosen.push_back(s);
  } else {
    throw UsageError("unknown suite '" + suite_name + "'");
  }
  bool all_passed = true;
  for (const Suite* s : chosen) {
    std::uint64_t checked = 0;
    std::string failure;
    int failed_at = 0;
    for (int k = 1; k <= n && failure.empty(); ++k) {
      const SuiteResult r = s->run(k, cap);
      checked += r.checked;
      failure = r.failure;
      failed_at = k;
    }
    if (failure.empty()) {
      out << "PASS " << s->name << " n<=" << n << " (" << checked << " checked)\n";
    } else {
      all_passed = false;
      out << "FAIL " << s->name << " n=" << failed_at << ": " << failure << "\n";
    }
  }
  return all_passed;
}

}  // namespace detail

/// Runs one invocation. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"Bijections between L & P matchings and nesting-similarity classes", "matchbij"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);

  std::string kind;
  int n = 0;
  bool brute = false;
  std::string in_path;
  std::string in_format = "auto";
  std::string out_format = "pairs";
  std::string suite;
  bool list_suites = false;
  std::string render_format = "text";
  bool labels = false;
  int width = 0;
  int height = 0;

  std::vector<std::string> input_names, output_names;
  for (const auto& [name, f] : detail::input_formats()) input_names.push_back(name);
  for (const auto& [name, f] : detail::output_formats()) output_names.push_back(name);

  auto* count_cmd = app.add_subcommand("count", "Print the size of a family");
  count_cmd->add_option("kind", kind, "matchings | noncrossing | lp | classes | ncn")
      ->required()
      ->check(CLI::IsMember({"matchings", "noncrossing", "lp", "classes", "ncn"}));
  count_cmd->add_option("--n", n, "Number of edges")->required();
  count_cmd->add_flag("--brute", brute, "Count by exhaustive enumeration");

  auto* map_cmd = app.add_subcommand("map", "Apply a bijection to stdin or --in");
  map_cmd->add_option("kind", kind, "phi | phi-inv | tau | tau-inv | sigma | sigma-inv")
      ->required()
      ->check(CLI::IsMember({"phi", "phi-inv", "tau", "tau-inv", "sigma", "sigma-inv"}));
  map_cmd->add_option("--in", in_path, "Input file (default stdin)");
  map_cmd->add_option("--format", in_format, "Input format")->check(CLI::IsMember(input_names));
  map_cmd->add_option("--output", out_format, "Output format")->check(CLI::IsMember(output_names));

  auto* classify_cmd = app.add_subcommand("classify", "Report statistics of one matching");
  classify_cmd->add_option("--in", in_path, "Input file (default stdin)");
  classify_cmd->add_option("--format", in_format, "Input format")->check(CLI::IsMember(input_names));

  auto* enumerate_cmd = app.add_subcommand("enumerate", "List a family in canonical order");
  enumerate_cmd->add_option("kind", kind, "all | noncrossing | lp | ns")
      ->required()
      ->check(CLI::IsMember({"all", "noncrossing", "lp", "ns"}));
  enumerate_cmd->add_option("--n", n, "Number of edges")->required();
  enumerate_cmd->add_option("--format", out_format, "Output format")
      ->check(CLI::IsMember(output_names));

  auto* verify_cmd = app.add_subcommand("verify", "Run exhaustive property suites for 1..n");
  verify_cmd->add_option("--n", n, "Largest number of edges");
  verify_cmd->add_option("--suite", suite, "Suite name (default: all)");
  verify_cmd->add_flag("--list", list_suites, "List suites and exit");

  auto* render_cmd = app.add_subcommand("render", "Draw an arc diagram");
  render_cmd->add_option("--in", in_path, "Input file (default stdin)");
  render_cmd->add_option("--input-format", in_format, "Input format")
      ->check(CLI::IsMember(input_names));
  render_cmd->add_option("--format", render_format, "text | svg")
      ->check(CLI::IsMember({"text", "svg"}));
  render_cmd->add_flag("--labels", labels, "Print edge labels");
  render_cmd->add_option("--width", width, "SVG width in pixels");
  render_cmd->add_option("--height", height, "SVG height in pixels");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  const EnumerationCap cap = EnumerationCap::from_env();
  try {
    if (*count_cmd) {
      out << detail::count(kind, n, brute, cap).str() << "\n";
    } else if (*map_cmd) {
      detail::map(kind, detail::read_all(in_path, in), detail::input_formats().at(in_format),
                  detail::output_formats().at(out_format), out);
    } else if (*classify_cmd) {
      detail::classify(parse_input(detail::read_all(in_path, in), detail::input_formats().at(in_format)),
                       out);
    } else if (*enumerate_cmd) {
      detail::enumerate(kind, n, detail::output_formats().at(out_format), cap, out);
    } else if (*verify_cmd) {
      if (list_suites) {
        for (const Suite& s : suites()) out << s.name << "  " << s.description << "\n";
        return 0;
      }
      if (n < 1) throw detail::UsageError("verify needs --n >= 1");
      return detail::verify(n, suite, cap, out) ? 0 : 1;
    } else if (*render_cmd) {
      RenderSpec spec;
      spec.format = render_format == "svg" ? RenderFormat::kSvg : RenderFormat::kText;
      spec.labels = labels;
      spec.width = width;
      spec.height = height;
      out << render(parse_input(detail::read_all(in_path, in), detail::input_formats().at(in_format)),
                    spec);
    }
  } catch (const detail::UsageError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidMatching& e) {
    err << "invalid matching: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace matchbij::cli
