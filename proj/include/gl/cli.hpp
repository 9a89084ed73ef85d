#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

namespace gl::cli {

// Exit codes: 0 success or provable; 1 not provable, or a classification
// delivered whose sentence is not constructively true; 2 usage or parse
// error; 3 resource limit.
struct CommandResult {
  int exit_code = 0;
  std::string human_text;
  std::optional<nlohmann::ordered_json> machine_payload;
};

struct CliOptions {
  bool json = false;
  std::uint64_t budget = 1'000'000;  // prover node budget
  int max_iter = -1;                 // fixed point iteration bound
};

CommandResult cmd_prove(std::string_view formula_text, const CliOptions& opts);
CommandResult cmd_classify(std::string_view formula_text, const CliOptions& opts);
CommandResult cmd_nf(std::string_view formula_text, const CliOptions& opts);
CommandResult cmd_trace(std::string_view formula_text, const CliOptions& opts);
CommandResult cmd_liar(int n, const CliOptions& opts);
CommandResult cmd_fixedpoint(std::string_view template_text,
                             std::string_view atom, const CliOptions& opts);
CommandResult cmd_table(int max_n, const CliOptions& opts);
CommandResult cmd_audit(int max_depth, const CliOptions& opts);
CommandResult cmd_probe(std::string_view formula_text, int max_n,
                        const CliOptions& opts);

}  // namespace gl::cli
