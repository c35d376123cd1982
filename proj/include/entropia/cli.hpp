// cli.hpp
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
//
// Copyright 2026 The entropia-cpp Authors.

// Command-line front end: option parsing, input/measure compatibility
// checks, dispatch and report formatting. Results go to stdout, timing and
// errors to stderr.

#pragma once

#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <initializer_list>
#include <iomanip>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "entropia/automata.hpp"
#include "entropia/entropy.hpp"
#include "entropia/error.hpp"
#include "entropia/formats.hpp"
#include "entropia/petri.hpp"
#include "entropia/stochastic.hpp"

namespace entropia::cli {

inline constexpr std::string_view kVersion = "1.5-reimpl";

enum class Measure {
  kNone,
  kExactPrecision,
  kExactRecall,
  kPartialPrecision,
  kPartialRecall,
  kControlledPrecision,
  kControlledRecall,
  kStochasticPrecision,
  kStochasticRecall,
  kRelevance,
  kBoundedness,
};

struct RunConfig {
  Measure measure = Measure::kNone;
  std::string rel_path;
  std::string ret_path;
  std::uint32_t rel_skips = 0;
  std::uint32_t ret_skips = 0;
  bool skips_given = false;
  bool silent = false;
  bool skip_checks = false;
  bool help = false;
  bool version = false;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

namespace detail {

struct MeasureOption {
  std::string_view flag;
  Measure measure;
  std::string_view description;
};

inline constexpr MeasureOption kMeasureOptions[] = {
    {"-emp", Measure::kExactPrecision, "exact matching precision"},
    {"-emr", Measure::kExactRecall, "exact matching recall"},
    {"-pmp", Measure::kPartialPrecision, "partial matching precision"},
    {"-pmr", Measure::kPartialRecall, "partial matching recall"},
    {"-cpmp", Measure::kControlledPrecision, "controlled partial matching precision"},
    {"-cpmr", Measure::kControlledRecall, "controlled partial matching recall"},
    {"-sp", Measure::kStochasticPrecision, "stochastic precision"},
    {"-sr", Measure::kStochasticRecall, "stochastic recall"},
    {"-r", Measure::kRelevance, "entropic relevance"},
    {"-b", Measure::kBoundedness, "check the given models for boundedness"},
};

inline bool is_controlled(Measure m) {
  return m == Measure::kControlledPrecision || m == Measure::kControlledRecall;
}

inline std::uint32_t parse_skips(std::string_view name, std::string_view value) {
  std::uint32_t v = 0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
  if (value.empty() || ec != std::errc() || ptr != value.data() + value.size()) {
    throw Error(ErrorCode::kMissingArgument,
                std::string(name) + " expects a nonnegative integer, got '" + std::string(value) + "'");
  }
  return v;
}

}  // namespace detail

inline std::string_view measure_name(Measure m) {
  for (const auto& opt : detail::kMeasureOptions) {
    if (opt.measure == m) return opt.description;
  }
  return "none";
}

inline std::string help_text() {
  std::string out =
      "Usage: entropia <measure> -rel=<path> [-ret=<path>] [options]\n"
      "\n"
      "Core options:\n"
      "  --help, -h                 print help message\n"
      "  --relevant, -rel <path>    model that describes relevant traces\n"
      "  --retrieved, -ret <path>   model that describes retrieved traces\n"
      "  --silent, -s               run tool in the silent mode\n"
      "  --version, -v              get version of this tool\n"
      "\n"
      "Measures:\n";
  for (const auto& opt : detail::kMeasureOptions) {
    std::string flag(opt.flag);
    flag.resize(27, ' ');
    out += "  " + flag + std::string(opt.description) + "\n";
  }
  out +=
      "\n"
      "Measure options:\n"
      "  -srel <num>                number of allowed skips in relevant traces\n"
      "  -sret <num>                number of allowed skips in retrieved traces\n"
      "  -t                         skip model correctness (boundedness) tests\n"
      "\n"
      "Formats by extension: .xes, .pnml, .spnml, .dfg, .sdfa\n";
  return out;
}

/// Accepts both "-rel=path" and "-rel path". `args` excludes the program
/// name.
inline RunConfig parse_args(std::span<const std::string_view> args) {
  RunConfig cfg;
  bool srel_given = false, sret_given = false;
  for (std::size_t i = 0; i < args.size(); ++i) {
    std::string_view arg = args[i];
    std::string_view name = arg;
    std::optional<std::string_view> value;
    if (auto eq = arg.find('='); eq != std::string_view::npos) {
      name = arg.substr(0, eq);
      value = arg.substr(eq + 1);
    }
    auto take_value = [&]() -> std::string_view {
      if (value) return *value;
      if (i + 1 >= args.size()) throw Error(ErrorCode::kMissingArgument, std::string(name) + " needs a value");
      return args[++i];
    };
    auto no_value = [&] {
      if (value) throw Error(ErrorCode::kUnknownOption, std::string(name) + " takes no value");
    };

    if (name == "-h" || name == "--help") {
      no_value();
      cfg.help = true;
    } else if (name == "-v" || name == "--version") {
      no_value();
      cfg.version = true;
    } else if (name == "-s" || name == "--silent") {
      no_value();
      cfg.silent = true;
    } else if (name == "-t") {
      no_value();
      cfg.skip_checks = true;
    } else if (name == "-rel" || name == "--relevant") {
      cfg.rel_path = std::string(take_value());
    } else if (name == "-ret" || name == "--retrieved") {
      cfg.ret_path = std::string(take_value());
    } else if (name == "-srel") {
      cfg.rel_skips = detail::parse_skips(name, take_value());
      srel_given = true;
    } else if (name == "-sret") {
      cfg.ret_skips = detail::parse_skips(name, take_value());
      sret_given = true;
    } else {
      const detail::MeasureOption* match = nullptr;
      for (const auto& opt : detail::kMeasureOptions) {
        if (opt.flag == name) match = &opt;
      }
      if (!match) throw Error(ErrorCode::kUnknownOption, "unknown option '" + std::string(arg) + "'");
      no_value();
      if (cfg.measure != Measure::kNone && cfg.measure != match->measure) {
        throw Error(ErrorCode::kConflictingMeasures,
                    std::string(measure_name(cfg.measure)) + " and " + std::string(match->description) +
                        " requested together");
      }
      cfg.measure = match->measure;
    }
  }
  cfg.skips_given = srel_given || sret_given;

  if (cfg.help || cfg.version) return cfg;
  if (cfg.measure == Measure::kNone) throw Error(ErrorCode::kNoMeasure, "no measure selected (see -h)");
  if (cfg.skips_given && !detail::is_controlled(cfg.measure)) {
    throw Error(ErrorCode::kSkipsWithoutCpm, "-srel/-sret apply only to -cpmp and -cpmr");
  }
  if (cfg.measure == Measure::kBoundedness) {
    if (cfg.rel_path.empty() && cfg.ret_path.empty()) {
      throw Error(ErrorCode::kMissingArgument, "-b needs a model via -rel or -ret");
    }
  } else if (cfg.rel_path.empty() || cfg.ret_path.empty()) {
    throw Error(ErrorCode::kMissingArgument, "both -rel and -ret are required");
  }
  return cfg;
}

inline RunConfig parse_args(int argc, const char* const* argv) {
  std::vector<std::string_view> args(argv + 1, argv + argc);
  return parse_args(std::span<const std::string_view>(args));
}

/// Inputs that passed the format and boundedness checks.
struct Plan {
  Measure measure;
  const Artifact* rel = nullptr;
  const Artifact* ret = nullptr;
  std::size_t nets_checked = 0;
};

namespace detail {

inline const PetriNet* net_of(const Artifact& a) {
  if (const auto* n = std::get_if<PetriNet>(&a.content)) return n;
  if (const auto* s = std::get_if<StochasticPetriNet>(&a.content)) return &s->net;
  return nullptr;
}

inline void require_format(const Artifact& a, std::initializer_list<Format> allowed, std::string_view role,
                           Measure m) {
  for (Format f : allowed) {
    if (a.format == f) return;
  }
  throw Error(ErrorCode::kIncompatibleFormat, std::string(to_string(a.format)) + " is not accepted as " +
                                                  std::string(role) + " input of " + std::string(measure_name(m)));
}

}  // namespace detail

inline Plan validate_inputs(const RunConfig& cfg, const Artifact* rel, const Artifact* ret) {
  Plan plan{cfg.measure, rel, ret, 0};
  std::vector<const Artifact*> given;
  if (rel) given.push_back(rel);
  if (ret) given.push_back(ret);

  switch (cfg.measure) {
    case Measure::kExactPrecision:
    case Measure::kExactRecall:
    case Measure::kPartialPrecision:
    case Measure::kPartialRecall:
    case Measure::kControlledPrecision:
    case Measure::kControlledRecall:
      detail::require_format(*rel, {Format::kXes, Format::kPnml}, "relevant", cfg.measure);
      detail::require_format(*ret, {Format::kXes, Format::kPnml}, "retrieved", cfg.measure);
      break;
    case Measure::kStochasticPrecision:
    case Measure::kStochasticRecall:
      detail::require_format(*rel, {Format::kXes, Format::kSpnml}, "relevant", cfg.measure);
      detail::require_format(*ret, {Format::kXes, Format::kSpnml}, "retrieved", cfg.measure);
      break;
    case Measure::kRelevance:
      detail::require_format(*rel, {Format::kXes}, "relevant", cfg.measure);
      detail::require_format(*ret, {Format::kDfg, Format::kSdfa}, "retrieved", cfg.measure);
      break;
    case Measure::kBoundedness:
      for (const auto* a : given) detail::require_format(*a, {Format::kPnml, Format::kSpnml}, "model", cfg.measure);
      return plan;
    case Measure::kNone:
      throw Error(ErrorCode::kNoMeasure, "no measure selected");
  }

  if (!cfg.skip_checks) {
    for (const auto* a : given) {
      if (const PetriNet* net = detail::net_of(*a)) {
        ++plan.nets_checked;
        if (!is_bounded(*net)) throw Error(ErrorCode::kUnboundedModel, "process models must be bounded");
      }
    }
  }
  return plan;
}

struct MeasureReport {
  std::string measure_name;
  double value = 0.0;
  std::string units;  // "dimensionless" or "bits"
  std::chrono::duration<double> elapsed{};
  std::vector<std::pair<std::string, std::string>> diagnostics;
};

/// Half-even rounding to three decimals.
inline std::string format_value(double v) {
  double scaled = std::nearbyint(v * 1000.0);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", scaled / 1000.0);
  std::string s = buf;
  if (s == "-0.000") s = "0.000";
  return s;
}

namespace detail {

inline Dfa to_dfa(const Artifact& a) {
  if (const auto* log = std::get_if<EventLog>(&a.content)) return log_to_dfa(*log);
  return net_to_dfa(std::get<PetriNet>(a.content));
}

inline Sdfa to_sdfa(const Artifact& a) {
  if (const auto* log = std::get_if<EventLog>(&a.content)) return log_to_sdfa(*log);
  if (const auto* spn = std::get_if<StochasticPetriNet>(&a.content)) return stochastic_rg_to_sdfa(*spn);
  return std::get<Sdfa>(a.content);
}

inline void add_counters(MeasureReport& r, const MeasureCounters& c) {
  r.diagnostics.emplace_back("relevant states", std::to_string(c.relevant_states));
  r.diagnostics.emplace_back("retrieved states", std::to_string(c.retrieved_states));
  r.diagnostics.emplace_back("shared states", std::to_string(c.shared_states));
  r.diagnostics.emplace_back("iterations", std::to_string(c.iterations));
}

}  // namespace detail

inline MeasureReport compute(const Plan& plan, const RunConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  MeasureReport report;
  report.measure_name = std::string(measure_name(plan.measure));
  report.units = "dimensionless";
  const bool wants_precision =
      plan.measure == Measure::kExactPrecision || plan.measure == Measure::kPartialPrecision ||
      plan.measure == Measure::kControlledPrecision || plan.measure == Measure::kStochasticPrecision;

  switch (plan.measure) {
    case Measure::kExactPrecision:
    case Measure::kExactRecall:
    case Measure::kPartialPrecision:
    case Measure::kPartialRecall:
    case Measure::kControlledPrecision:
    case Measure::kControlledRecall: {
      Dfa rel = detail::to_dfa(*plan.rel);
      Dfa ret = detail::to_dfa(*plan.ret);
      PrecisionRecall pr;
      if (plan.measure == Measure::kExactPrecision || plan.measure == Measure::kExactRecall) {
        pr = exact_precision_recall(rel, ret);
      } else if (plan.measure == Measure::kPartialPrecision || plan.measure == Measure::kPartialRecall) {
        pr = partial_precision_recall(rel, ret);
      } else {
        pr = controlled_partial_precision_recall(rel, ret, cfg.rel_skips, cfg.ret_skips);
        report.diagnostics.emplace_back("skips", std::to_string(cfg.rel_skips) + " relevant, " +
                                                     std::to_string(cfg.ret_skips) + " retrieved");
      }
      report.value = wants_precision ? pr.precision : pr.recall;
      detail::add_counters(report, pr.counters);
      break;
    }
    case Measure::kStochasticPrecision:
    case Measure::kStochasticRecall: {
      auto pr = stochastic_precision_recall(detail::to_sdfa(*plan.rel), detail::to_sdfa(*plan.ret));
      report.value = wants_precision ? pr.precision : pr.recall;
      detail::add_counters(report, pr.counters);
      break;
    }
    case Measure::kRelevance: {
      const auto& log = std::get<EventLog>(plan.rel->content);
      auto rv = entropic_relevance(log, std::get<Sdfa>(plan.ret->content));
      report.value = rv.bits;
      report.units = "bits";
      report.diagnostics.emplace_back("fitting ratio", format_value(rv.fitting_ratio));
      report.diagnostics.emplace_back("selector bits", format_value(rv.selector_bits));
      report.diagnostics.emplace_back("average trace bits", format_value(rv.avg_trace_bits));
      report.diagnostics.emplace_back("trace instances", std::to_string(log.total()));
      break;
    }
    case Measure::kBoundedness: {
      bool all = true;
      for (const Artifact* a : {plan.rel, plan.ret}) {
        if (!a) continue;
        bool bounded = is_bounded(*detail::net_of(*a));
        all = all && bounded;
        report.diagnostics.emplace_back(a == plan.rel ? "relevant model" : "retrieved model",
                                        bounded ? "bounded" : "unbounded");
      }
      report.value = all ? 1.0 : 0.0;
      break;
    }
    case Measure::kNone:
      throw Error(ErrorCode::kNoMeasure, "no measure selected");
  }
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

inline int exit_code(ErrorCategory c) {
  switch (c) {
    case ErrorCategory::kUsage: return 1;
    case ErrorCategory::kInput: return 2;
    case ErrorCategory::kSemantic: return 3;
    case ErrorCategory::kNumerical: return 4;
  }
  return 2;
}

inline void print_report(const MeasureReport& r, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.measure == Measure::kBoundedness) {
    if (cfg.silent) {
      out << (r.value == 1.0 ? "1" : "0") << '\n';
      return;
    }
    for (const auto& [what, verdict] : r.diagnostics) out << what << ": " << verdict << '\n';
    return;
  }
  if (cfg.silent) {
    out << format_value(r.value) << '\n';
    return;
  }
  out << r.measure_name << ": " << format_value(r.value);
  if (r.units == "bits") out << " bits";
  out << '\n';
  out << "  relevant: " << cfg.rel_path << '\n';
  out << "  retrieved: " << cfg.ret_path << '\n';
  for (const auto& [key, value] : r.diagnostics) out << "  " << key << ": " << value << '\n';
  err << "elapsed: " << std::fixed << std::setprecision(3) << r.elapsed.count() << " s\n";
}

/// Runs one invocation; returns the process exit code.
inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.help) {
    out << help_text();
    return 0;
  }
  if (cfg.version) {
    out << "entropia version " << kVersion << '\n';
    return 0;
  }
  try {
    std::optional<Artifact> rel, ret;
    if (!cfg.rel_path.empty()) rel = load_artifact(cfg.rel_path);
    if (!cfg.ret_path.empty()) ret = load_artifact(cfg.ret_path);
    Plan plan = validate_inputs(cfg, rel ? &*rel : nullptr, ret ? &*ret : nullptr);
    print_report(compute(plan, cfg), cfg, out, err);
    return 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code(e.category());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

inline int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  try {
    cfg = parse_args(argc, argv);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code(e.category());
  }
  return run(cfg, out, err);
}

}  // namespace entropia::cli
