// catsolve: exact guess-and-certify solver for algebraic-functional
// equations with one catalytic variable.
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "catalytic/pipeline.hpp"

namespace {

using catalytic::PipelineConfig;
using catalytic::PipelineOutcome;

int write_document(const PipelineOutcome& out, const std::string& path) {
  if (path.empty()) return 0;
  std::ofstream f(path);
  if (!f) {
    std::cerr << "cannot write output file: " << path << "\n";
    return 4;
  }
  f << out.document.dump(2) << "\n";
  return 0;
}

void add_common_flags(CLI::App* cmd, PipelineConfig& cfg, std::string& out_path) {
  cmd->add_option("--order", cfg.order, "truncation order N (default: equation file)");
  cmd->add_option("--max-deg-q", cfg.max_deg_q, "guesser bound on deg_Q");
  cmd->add_option("--max-deg-x", cfg.max_deg_x, "guesser bound on deg_x");
  cmd->add_option("--margin", cfg.margin, "overfitting margin threshold (default 10)");
  cmd->add_option("--rec-order", cfg.rec_order, "max recurrence order (default 6)");
  cmd->add_option("--rec-deg", cfg.rec_deg, "max recurrence coefficient degree (default 6)");
  cmd->add_option("--cross-order", cfg.cross_check_order,
                  "order for the fixed-point cross-check (default min(N, 40))");
  cmd->add_option("--out", out_path, "write the JSON document to this file");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact solver/certifier for functional equations with a catalytic variable"};
  app.require_subcommand(1);

  PipelineConfig cfg;
  std::string out_path;
  std::vector<std::string> files;
  int jobs = 1;

  auto* solve = app.add_subcommand("solve", "compute the series only");
  solve->add_option("file", files, "equation file")->required()->expected(1);
  add_common_flags(solve, cfg, out_path);

  auto* guess = app.add_subcommand("guess", "series plus the guessed annihilator I(Q,x)");
  guess->add_option("file", files, "equation file")->required()->expected(1);
  add_common_flags(guess, cfg, out_path);

  auto* prove = app.add_subcommand("prove", "full solve -> guess -> certify -> holonomic chain");
  prove->add_option("files", files, "equation file(s)")->required()->expected(-1);
  add_common_flags(prove, cfg, out_path);
  prove->add_flag("--slow-path-3var", cfg.slow_path_3var,
                  "also guess the three-variable annihilator and cross-check it");
  prove->add_option("--jobs", jobs, "run this many equation files concurrently");

  auto* recheck = app.add_subcommand("recheck", "re-verify a JSON certificate");
  recheck->add_option("file", files, "certificate file")->required()->expected(1);

  auto* rec = app.add_subcommand("rec", "recurrence/closed form from a coefficient list file");
  rec->add_option("file", files, "whitespace-separated rationals")->required()->expected(1);
  add_common_flags(rec, cfg, out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 3;
  }

  PipelineOutcome out;
  if (solve->parsed()) {
    out = catalytic::run_solve(cfg, files[0]);
  } else if (guess->parsed()) {
    out = catalytic::run_guess_cmd(cfg, files[0]);
  } else if (recheck->parsed()) {
    out = catalytic::run_recheck(files[0]);
  } else if (rec->parsed()) {
    out = catalytic::run_rec(cfg, files[0]);
  } else if (prove->parsed()) {
    if (files.size() > 1) {
      if (!out_path.empty()) {
        std::cerr << "--out is only valid with a single equation file\n";
        return 3;
      }
      const auto results = catalytic::run_prove_batch(cfg, files, jobs);
      int worst = 0;
      for (const auto& r : results) {
        std::cout << r.report << "\n";
        worst = std::max(worst, r.exit_code);
      }
      return worst;
    }
    out = catalytic::run_prove(cfg, files[0]);
  }

  std::cout << out.report;
  const int werr = write_document(out, out_path);
  return werr != 0 ? werr : out.exit_code;
}
