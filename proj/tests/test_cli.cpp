// test_cli.cpp
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

#include <catch_amalgamated.hpp>

#include <cstdio>
#include <regex>
#include <sstream>
#include <sys/wait.h>

#include "entropia/cli.hpp"
#include "oracles.hpp"

using namespace entropia;
using namespace entropia::cli;

namespace {

RunConfig parse(std::initializer_list<std::string_view> args) {
  std::vector<std::string_view> v(args);
  return parse_args(std::span<const std::string_view>(v));
}

ErrorCode parse_error(std::initializer_list<std::string_view> args) {
  try {
    (void)parse(args);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no exception");
  return ErrorCode::kIo;
}

struct Outcome {
  int code;
  std::string out, err;
};

Outcome invoke(std::vector<std::string> args) {
  std::vector<const char*> argv{"entropia"};
  for (auto& a : args) {
    if (a.rfind("@", 0) == 0) a = oracle::data_path(a.substr(1));
    auto eq = a.find("=@");
    if (eq != std::string::npos) a = a.substr(0, eq + 1) + oracle::data_path(a.substr(eq + 2));
    argv.push_back(a.c_str());
  }
  std::ostringstream out, err;
  int code = entropia::cli::main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("argument parsing of the documented invocations", "[parse_args]") {
  auto emp = parse({"-emp", "-rel=E.xes", "-ret=N.pnml"});
  CHECK(emp.measure == Measure::kExactPrecision);
  CHECK(emp.rel_path == "E.xes");
  CHECK(emp.ret_path == "N.pnml");
  CHECK(emp.rel_skips == 0);

  auto cpmp = parse({"-cpmp", "-rel=E.xes", "-ret=N.pnml", "-srel=1", "-sret=2"});
  CHECK(cpmp.measure == Measure::kControlledPrecision);
  CHECK(cpmp.rel_skips == 1);
  CHECK(cpmp.ret_skips == 2);

  auto spaced = parse({"-cpmr", "-rel", "E.xes", "--retrieved", "N.pnml", "-srel", "3", "-s", "-t"});
  CHECK(spaced.measure == Measure::kControlledRecall);
  CHECK(spaced.ret_path == "N.pnml");
  CHECK(spaced.rel_skips == 3);
  CHECK(spaced.silent);
  CHECK(spaced.skip_checks);

  CHECK(parse({"--relevant=a.xes", "-r", "-ret=m.sdfa", "--silent"}).silent);
  CHECK(parse({"-h"}).help);
  CHECK(parse({"--help"}).help);
  CHECK(parse({"-v"}).version);
  CHECK(parse({"--version"}).version);
  CHECK(parse({"-b", "-rel=N.pnml"}).measure == Measure::kBoundedness);
  CHECK(parse({"-b", "-ret=N.pnml"}).measure == Measure::kBoundedness);
  CHECK(parse({"-emp", "-emp", "-rel=a", "-ret=b"}).measure == Measure::kExactPrecision);
}

TEST_CASE("every measure flag is accepted", "[parse_args]") {
  for (const char* flag : {"-emp", "-emr", "-pmp", "-pmr", "-cpmp", "-cpmr", "-sp", "-sr", "-r"}) {
    CHECK(parse({flag, "-rel=x.xes", "-ret=y.pnml"}).measure != Measure::kNone);
  }
}

TEST_CASE("argument errors", "[parse_args]") {
  CHECK(parse_error({"-emp", "-emr", "-rel=a", "-ret=b"}) == ErrorCode::kConflictingMeasures);
  CHECK(parse_error({"-emp", "-rel=a", "-ret=b", "-x"}) == ErrorCode::kUnknownOption);
  CHECK(parse_error({"-emp", "-rel=a", "-ret=b", "-s=1"}) == ErrorCode::kUnknownOption);
  CHECK(parse_error({"-emp", "-rel=a", "-ret"}) == ErrorCode::kMissingArgument);
  CHECK(parse_error({"-emp", "-rel=a"}) == ErrorCode::kMissingArgument);
  CHECK(parse_error({"-b"}) == ErrorCode::kMissingArgument);
  CHECK(parse_error({"-cpmp", "-rel=a", "-ret=b", "-srel=x"}) == ErrorCode::kMissingArgument);
  CHECK(parse_error({"-cpmp", "-rel=a", "-ret=b", "-srel=-1"}) == ErrorCode::kMissingArgument);
  CHECK(parse_error({"-emp", "-rel=a", "-ret=b", "-srel=1"}) == ErrorCode::kSkipsWithoutCpm);
  CHECK(parse_error({"-rel=a", "-ret=b"}) == ErrorCode::kNoMeasure);
  CHECK(category_of(ErrorCode::kConflictingMeasures) == ErrorCategory::kUsage);
}

TEST_CASE("help lists every option", "[help]") {
  auto help = help_text();
  for (const char* opt : {"--help", "-h", "--relevant", "-rel", "--retrieved", "-ret", "--silent", "-s", "--version",
                          "-v", "-emp", "-emr", "-pmp", "-pmr", "-cpmp", "-cpmr", "-srel", "-sret", "-sp", "-sr",
                          "-r ", "-b ", "-t "}) {
    CHECK(help.find(opt) != std::string::npos);
  }
  auto h = invoke({"-h"});
  CHECK(h.code == 0);
  CHECK(h.out == help);
  auto v = invoke({"-v"});
  CHECK(v.out.find("1.5-reimpl") != std::string::npos);
}

TEST_CASE("format compatibility", "[validate]") {
  auto log = load_artifact(oracle::data_path("E.xes"));
  auto net = load_artifact(oracle::data_path("N.pnml"));
  auto spn = load_artifact(oracle::data_path("N.spnml"));
  auto sdfa = load_artifact(oracle::data_path("A.sdfa"));
  auto dfg = load_artifact(oracle::data_path("E.dfg"));
  auto gen = load_artifact(oracle::data_path("generator.pnml"));
  auto code = [](Measure m, const Artifact* rel, const Artifact* ret, bool skip = false) {
    RunConfig cfg;
    cfg.measure = m;
    cfg.skip_checks = skip;
    try {
      (void)validate_inputs(cfg, rel, ret);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kIo;  // accepted
  };
  const auto ok = ErrorCode::kIo;

  CHECK(code(Measure::kRelevance, &net, &sdfa) == ErrorCode::kIncompatibleFormat);
  CHECK(code(Measure::kRelevance, &log, &sdfa) == ok);
  CHECK(code(Measure::kRelevance, &log, &dfg) == ok);
  CHECK(code(Measure::kRelevance, &log, &log) == ErrorCode::kIncompatibleFormat);
  CHECK(code(Measure::kExactPrecision, &net, &net) == ok);
  CHECK(code(Measure::kExactPrecision, &log, &log) == ok);
  CHECK(code(Measure::kExactPrecision, &net, &log) == ok);
  CHECK(code(Measure::kExactPrecision, &log, &sdfa) == ErrorCode::kIncompatibleFormat);
  CHECK(code(Measure::kPartialRecall, &log, &spn) == ErrorCode::kIncompatibleFormat);
  CHECK(code(Measure::kStochasticPrecision, &log, &spn) == ok);
  CHECK(code(Measure::kStochasticRecall, &spn, &spn) == ok);
  CHECK(code(Measure::kStochasticRecall, &log, &net) == ErrorCode::kIncompatibleFormat);
  CHECK(code(Measure::kBoundedness, &log, nullptr) == ErrorCode::kIncompatibleFormat);
  CHECK(code(Measure::kBoundedness, &gen, nullptr) == ok);

  CHECK(code(Measure::kExactPrecision, &log, &gen) == ErrorCode::kUnboundedModel);
  CHECK(code(Measure::kExactPrecision, &log, &gen, true) == ok);
  CHECK(category_of(ErrorCode::kUnboundedModel) == ErrorCategory::kSemantic);

  RunConfig cfg;
  cfg.measure = Measure::kExactRecall;
  CHECK(validate_inputs(cfg, &net, &log).nets_checked == 1);
}

TEST_CASE("documented values in silent mode", "[run]") {
  auto emp = invoke({"-emp", "-rel=@E.xes", "-ret=@N.pnml", "-s"});
  CHECK(emp.code == 0);
  CHECK(emp.out == "0.776\n");
  auto cpmp = invoke({"-cpmp", "-rel=@E.xes", "-ret=@N.pnml", "-srel=1", "-sret=2", "-s"});
  CHECK(cpmp.out == "0.833\n");
  auto r = invoke({"-r", "-rel=@E.xes", "-ret=@A.sdfa", "-s"});
  CHECK(r.code == 0);
  CHECK(r.out == "11.368\n");
  CHECK(r.err.empty());
}

TEST_CASE("silent output is a single number", "[run]") {
  const std::regex number("^-?[0-9]+\\.[0-9]{3}\n$");
  for (auto args : std::vector<std::vector<std::string>>{
           {"-emr", "-rel=@E.xes", "-ret=@N.pnml", "-s"},
           {"-pmp", "-rel=@E.xes", "-ret=@N.pnml", "-s"},
           {"-pmr", "-rel=@E.xes", "-ret=@N_final.pnml", "-s"},
           {"-cpmr", "-rel=@E.xes", "-ret=@N.pnml", "-srel=1", "-sret=2", "-s"},
           {"-sp", "-rel=@E.xes", "-ret=@N.spnml", "-s"},
           {"-sr", "-rel=@E.xes", "-ret=@N.spnml", "-s"},
           {"-r", "-rel=@E.xes", "-ret=@E.dfg", "-s"},
           {"-emp", "-rel=@skip.pnml", "-ret=@N.pnml", "-s"},
       }) {
    auto o = invoke(args);
    CHECK(o.code == 0);
    CHECK(std::regex_match(o.out, number));
  }
}

TEST_CASE("normal mode report", "[run]") {
  auto o = invoke({"-r", "-rel=@E.xes", "-ret=@A.sdfa"});
  CHECK(o.code == 0);
  CHECK(o.out.rfind("entropic relevance: 11.368 bits\n", 0) == 0);
  CHECK(o.out.find("selector bits: 0.863") != std::string::npos);
  CHECK(o.out.find("trace instances: 7") != std::string::npos);
  CHECK(o.err.rfind("elapsed: ", 0) == 0);

  auto e = invoke({"-emp", "-rel=@E.xes", "-ret=@N.pnml"});
  CHECK(e.out.rfind("exact matching precision: 0.776\n", 0) == 0);
  CHECK(e.out.find("iterations: ") != std::string::npos);
}

TEST_CASE("boundedness mode", "[run]") {
  auto n = invoke({"-b", "-rel=@N.pnml"});
  CHECK(n.code == 0);
  CHECK(n.out == "relevant model: bounded\n");
  CHECK(invoke({"-b", "-rel=@N.pnml", "-s"}).out == "1\n");
  auto g = invoke({"-b", "-rel=@N.pnml", "-ret=@generator.pnml", "-s"});
  CHECK(g.code == 0);
  CHECK(g.out == "0\n");
  CHECK(invoke({"-b", "-ret=@N.spnml"}).out == "retrieved model: bounded\n");
}

TEST_CASE("exit codes", "[run]") {
  CHECK(invoke({"-emp", "-emr", "-rel=a", "-ret=b"}).code == 1);
  CHECK(invoke({"--frobnicate"}).code == 1);
  CHECK(invoke({"-emp", "-rel=@E.xes", "-ret=@missing.pnml"}).code == 2);
  CHECK(invoke({"-emp", "-rel=@E.xes", "-ret=model.txt"}).code == 2);
  auto unbounded = invoke({"-emp", "-rel=@E.xes", "-ret=@generator.pnml", "-s"});
  CHECK(unbounded.code == 3);
  CHECK(unbounded.out.empty());
  CHECK(unbounded.err.find("bounded") != std::string::npos);
  CHECK(invoke({"-r", "-rel=@N.pnml", "-ret=@A.sdfa"}).code == 3);
  CHECK(exit_code(ErrorCategory::kNumerical) == 4);
  CHECK(exit_code(category_of(ErrorCode::kNotConverged)) == 4);
  CHECK(exit_code(category_of(ErrorCode::kParseError)) == 2);
}

TEST_CASE("half-even display rounding", "[format]") {
  CHECK(format_value(0.0625) == "0.062");
  CHECK(format_value(0.1875) == "0.188");
  CHECK(format_value(0.7756971) == "0.776");
  CHECK(format_value(1.0) == "1.000");
  CHECK(format_value(-0.0001) == "0.000");
}

TEST_CASE("identical invocations give identical output", "[run]") {
  auto first = invoke({"-cpmr", "-rel=@E.xes", "-ret=@N.pnml", "-srel=2", "-sret=1"});
  for (int i = 0; i < 3; ++i) {
    CHECK(invoke({"-cpmr", "-rel=@E.xes", "-ret=@N.pnml", "-srel=2", "-sret=1"}).out == first.out);
  }
}

#ifdef ENTROPIA_CLI_PATH
TEST_CASE("the installed binary", "[binary]") {
  auto run_binary = [](const std::string& args, std::string& out) {
    std::string cmd = std::string(ENTROPIA_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe);
    char buf[256];
    out.clear();
    while (std::fgets(buf, sizeof buf, pipe)) out += buf;
    int status = pclose(pipe);
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  };
  const std::string d = std::string(ENTROPIA_DATA_DIR) + "/";
  std::string out;
  CHECK(run_binary("-emp -rel=" + d + "E.xes -ret=" + d + "N.pnml -s", out) == 0);
  CHECK(out == "0.776\n");
  CHECK(run_binary("-cpmp -rel " + d + "E.xes -ret " + d + "N.pnml -srel=1 -sret=2 -s", out) == 0);
  CHECK(out == "0.833\n");
  CHECK(run_binary("-r -rel=" + d + "E.xes -ret=" + d + "A.sdfa -s", out) == 0);
  CHECK(out == "11.368\n");
  CHECK(run_binary("-b -rel=" + d + "N.pnml", out) == 0);
  CHECK(run_binary("-emp -rel=" + d + "E.xes -ret=" + d + "generator.pnml", out) == 3);
  CHECK(run_binary("-emp -emr", out) == 1);
}
#endif
