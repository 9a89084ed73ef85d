#include "gl/cli.hpp"

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <string>

namespace gl::cli {
namespace {

const CliOptions kDefaults{};

struct RunResult {
  int exit_code;
  std::string output;
};

// Runs the installed binary through the shell, capturing stdout+stderr.
RunResult run_binary(const std::string& args) {
  const std::string cmd = std::string(GLTOOL_BIN) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  EXPECT_NE(pipe, nullptr);
  std::string out;
  std::array<char, 512> buf{};
  while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

TEST(CmdProve, ExitCodesAndText) {
  {
    const CommandResult r = cmd_prove("[]([]p -> p) -> []p", kDefaults);
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.human_text, "Provable\n");
    EXPECT_EQ((*r.machine_payload)["verdict"], "Provable");
  }
  {
    const CommandResult r = cmd_prove("[]p -> []bot", kDefaults);
    EXPECT_EQ(r.exit_code, 1);
    EXPECT_NE(r.human_text.find("Refuted"), std::string::npos);
    EXPECT_NE(r.human_text.find("root: w0"), std::string::npos);
    EXPECT_EQ((*r.machine_payload)["verdict"], "Refuted");
    EXPECT_TRUE(r.machine_payload->contains("countermodel"));
  }
  {
    const CommandResult r = cmd_prove("][", kDefaults);
    EXPECT_EQ(r.exit_code, 2);
    EXPECT_NE(r.human_text.find("parse error"), std::string::npos);
  }
  {
    CliOptions tiny = kDefaults;
    tiny.budget = 2;
    EXPECT_EQ(cmd_prove("[]([]p -> p) -> []p", tiny).exit_code, 3);
  }
}

TEST(CmdClassify, VerdictsAndGuidance) {
  {
    const CommandResult r = cmd_classify("~[]bot", kDefaults);
    EXPECT_EQ(r.exit_code, 1);  // delivered, not constructively true
    EXPECT_NE(r.human_text.find("classically true: yes"), std::string::npos);
    EXPECT_NE(r.human_text.find("smallest n: 1"), std::string::npos);
    EXPECT_NE(r.human_text.find("BetaPlus(1)"), std::string::npos);
    EXPECT_NE(r.human_text.find("weak n-Rosser: 2"), std::string::npos);
  }
  {
    const CommandResult r = cmd_classify("[]bot", kDefaults);
    EXPECT_EQ(r.exit_code, 1);
    EXPECT_NE(r.human_text.find("Gamma(2)"), std::string::npos);
  }
  {
    const CommandResult r = cmd_classify("bot -> bot", kDefaults);
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_NE(r.human_text.find("Alpha"), std::string::npos);
  }
  {
    const CommandResult r = cmd_classify("p", kDefaults);
    EXPECT_EQ(r.exit_code, 2);
    EXPECT_NE(r.human_text.find("prove"), std::string::npos);
  }
}

TEST(CmdNfAndTrace, Examples) {
  EXPECT_EQ(cmd_nf("~bot & ~[]bot", kDefaults).human_text, "~[]bot\n");
  EXPECT_EQ(cmd_nf("bot", kDefaults).human_text, "bot\n");
  EXPECT_EQ(cmd_nf("p", kDefaults).exit_code, 2);
  const CommandResult t = cmd_trace("[][]bot -> []bot", kDefaults);
  EXPECT_EQ(t.exit_code, 0);
  EXPECT_EQ(t.human_text, "trace: [t,f,t] tail=t\n");
  EXPECT_EQ(cmd_trace("p", kDefaults).exit_code, 2);
}

TEST(CmdLiar, Examples) {
  const CommandResult r = cmd_liar(1, kDefaults);
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.human_text.find("certificate: checked"), std::string::npos);
  EXPECT_NE(r.human_text.find("smallest n: 2"), std::string::npos);
  EXPECT_NE(r.human_text.find("negation smallest n: 1"), std::string::npos);
  EXPECT_EQ(cmd_liar(0, kDefaults).exit_code, 2);
}

TEST(CmdFixedpoint, Examples) {
  {
    const CommandResult r = cmd_fixedpoint("~[]p", "p", kDefaults);
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_NE(r.human_text.find("certificate: checked"), std::string::npos);
  }
  EXPECT_EQ(cmd_fixedpoint("p", "p", kDefaults).exit_code, 2);
  EXPECT_EQ(cmd_fixedpoint("[]p", "p & q", kDefaults).exit_code, 2);
  {
    // A template with an extra atom still gets a fixed point, unclassified.
    const CommandResult r = cmd_fixedpoint("[](p & q)", "p", kDefaults);
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_NE(r.human_text.find("classification: none"), std::string::npos);
  }
}

TEST(CmdTable, VerifiedRows) {
  const CommandResult r = cmd_table(2, kDefaults);
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.human_text.find("~[]bot"), std::string::npos);   // row 1 true
  EXPECT_NE(r.human_text.find("liar(1)"), std::string::npos);  // row 2 true
  EXPECT_NE(r.human_text.find("Rosser"), std::string::npos);   // footnote
  EXPECT_EQ(cmd_table(0, kDefaults).exit_code, 2);
  EXPECT_EQ(cmd_table(9, kDefaults).exit_code, 2);
}

TEST(CmdAudit, ReportAndGuards) {
  const CommandResult r = cmd_audit(3, kDefaults);
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.human_text.find("claim c1"), std::string::npos);
  EXPECT_NE(r.human_text.find("counterexample: ~[]bot"), std::string::npos);
  EXPECT_EQ(cmd_audit(0, kDefaults).exit_code, 2);
  EXPECT_EQ(cmd_audit(9, kDefaults).exit_code, 3);
}

TEST(CmdProbe, ExamplesAndGuards) {
  {
    const CommandResult r = cmd_probe("p", 3, kDefaults);
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_NE(r.human_text.find("schema witness for extreme independence"),
              std::string::npos);
  }
  {
    const CommandResult r = cmd_probe("~[]bot", 3, kDefaults);
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_NE(r.human_text.find("Provable"), std::string::npos);
    EXPECT_NE(r.human_text.find("not an independence schema witness"),
              std::string::npos);
  }
  EXPECT_EQ(cmd_probe("p", 0, kDefaults).exit_code, 2);
  EXPECT_EQ(cmd_probe("p", 17, kDefaults).exit_code, 3);
}

TEST(MachinePayload, ByteStableAcrossRuns) {
  const auto dump = [](const CommandResult& r) {
    return r.machine_payload->dump(2);
  };
  EXPECT_EQ(dump(cmd_classify("~[]bot", kDefaults)),
            dump(cmd_classify("~[]bot", kDefaults)));
  EXPECT_EQ(dump(cmd_audit(2, kDefaults)), dump(cmd_audit(2, kDefaults)));
  EXPECT_EQ(dump(cmd_probe("p", 2, kDefaults)),
            dump(cmd_probe("p", 2, kDefaults)));
  EXPECT_EQ(dump(cmd_prove("[]p -> []bot", kDefaults)),
            dump(cmd_prove("[]p -> []bot", kDefaults)));
}

TEST(Binary, EndToEnd) {
  EXPECT_EQ(run_binary("prove '[]([]p -> p) -> []p'").exit_code, 0);
  EXPECT_EQ(run_binary("prove '[]([]p -> p) -> []p'").output, "Provable\n");
  {
    const RunResult r = run_binary("prove '[]p -> []bot'");
    EXPECT_EQ(r.exit_code, 1);
    EXPECT_NE(r.output.find("w1: {p}"), std::string::npos);
  }
  EXPECT_EQ(run_binary("prove ']['").exit_code, 2);
  EXPECT_EQ(run_binary("classify '~[]bot'").exit_code, 1);
  EXPECT_EQ(run_binary("classify 'bot -> bot'").exit_code, 0);
  EXPECT_EQ(run_binary("classify p").exit_code, 2);
  EXPECT_EQ(run_binary("nf '~bot & ~[]bot'").output, "~[]bot\n");
  EXPECT_EQ(run_binary("table 4").exit_code, 0);
  EXPECT_EQ(run_binary("liar 1").exit_code, 0);
  EXPECT_EQ(run_binary("audit 9").exit_code, 3);
  EXPECT_EQ(run_binary("").exit_code, 2);           // missing subcommand
  EXPECT_EQ(run_binary("frobnicate").exit_code, 2); // unknown subcommand
  EXPECT_EQ(run_binary("--budget 2 prove '[]([]p -> p) -> []p'").exit_code, 3);
  {
    // Exhausted iteration budget falls back to the structural construction.
    const RunResult r = run_binary("--max-iter 0 fixedpoint '[]p -> []bot' p");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_NE(r.output.find("certificate: checked"), std::string::npos);
  }
}

TEST(Binary, JsonByteStable) {
  const RunResult a = run_binary("--json classify '~[]bot'");
  const RunResult b = run_binary("--json classify '~[]bot'");
  EXPECT_EQ(a.exit_code, 1);
  EXPECT_EQ(a.output, b.output);
  const auto parsed = nlohmann::json::parse(a.output);
  EXPECT_EQ(parsed["classification"]["smallest_n"], 1);
  EXPECT_EQ(parsed["classification"]["category"]["name"], "BetaPlus");
}

TEST(Binary, JsonAuditCounterexamples) {
  const RunResult r = run_binary("--json audit 3");
  EXPECT_EQ(r.exit_code, 0);
  const auto parsed = nlohmann::json::parse(r.output);
  bool saw_mixed = false;
  for (const auto& claim : parsed["claims"]) {
    if (claim["claim"] != "c2.2") continue;
    for (const auto& cx : claim["counterexamples"]) {
      if (cx["formula"] == "[][]bot & ~[]bot") saw_mixed = true;
    }
  }
  EXPECT_TRUE(saw_mixed);
}

}  // namespace
}  // namespace gl::cli
