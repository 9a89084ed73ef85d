#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "gl/cli.hpp"

namespace {

int emit(const gl::cli::CommandResult& result, bool json) {
  if (json && result.machine_payload) {
    std::cout << result.machine_payload->dump(2) << "\n";
  } else {
    std::cout << result.human_text;
  }
  return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"decision procedures for the provability logic GL"};
  app.require_subcommand(1);

  gl::cli::CliOptions opts;
  app.add_flag("--json", opts.json, "emit the machine-readable payload");
  app.add_option("--budget", opts.budget, "prover node budget")
      ->capture_default_str();
  app.add_option("--max-iter", opts.max_iter,
                 "fixed point iteration bound (default: modal depth + 2)");

  std::string formula_text;
  std::string atom_text;
  int n = 1;

  CLI::App* prove = app.add_subcommand("prove", "decide GL-provability");
  prove->add_option("formula", formula_text, "modal formula")->required();

  CLI::App* classify =
      app.add_subcommand("classify", "classify a letterless sentence");
  classify->add_option("formula", formula_text, "letterless sentence")
      ->required();

  CLI::App* nf =
      app.add_subcommand("nf", "normal form of a letterless sentence");
  nf->add_option("formula", formula_text, "letterless sentence")->required();

  CLI::App* trace =
      app.add_subcommand("trace", "rank trace of a letterless sentence");
  trace->add_option("formula", formula_text, "letterless sentence")->required();

  CLI::App* liar = app.add_subcommand("liar", "n-th liar fixed point");
  liar->add_option("n", n, "liar index (n >= 1)")->required();

  CLI::App* fixedpoint =
      app.add_subcommand("fixedpoint", "fixed point of a modalized template");
  fixedpoint->add_option("template", formula_text, "template formula")
      ->required();
  fixedpoint->add_option("atom", atom_text, "designated atom")->required();

  CLI::App* table =
      app.add_subcommand("table", "verified summary table up to max_n");
  table->add_option("max_n", n, "last row (1..8)")->required();

  CLI::App* audit =
      app.add_subcommand("audit", "machine-check the classification laws");
  audit->add_option("max_depth", n, "trace vector depth (1..8)")->required();

  CLI::App* probe =
      app.add_subcommand("probe", "independence probe up to N");
  probe->add_option("formula", formula_text, "modal formula")->required();
  probe->add_option("N", n, "probe bound (N >= 1)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  using gl::cli::CommandResult;
  CommandResult result;
  if (prove->parsed()) result = gl::cli::cmd_prove(formula_text, opts);
  else if (classify->parsed()) result = gl::cli::cmd_classify(formula_text, opts);
  else if (nf->parsed()) result = gl::cli::cmd_nf(formula_text, opts);
  else if (trace->parsed()) result = gl::cli::cmd_trace(formula_text, opts);
  else if (liar->parsed()) result = gl::cli::cmd_liar(n, opts);
  else if (fixedpoint->parsed())
    result = gl::cli::cmd_fixedpoint(formula_text, atom_text, opts);
  else if (table->parsed()) result = gl::cli::cmd_table(n, opts);
  else if (audit->parsed()) result = gl::cli::cmd_audit(n, opts);
  else result = gl::cli::cmd_probe(formula_text, n, opts);

  if (result.exit_code == 2 || result.exit_code == 3) {
    std::cerr << result.human_text;
    return result.exit_code;
  }
  return emit(result, opts.json);
}
