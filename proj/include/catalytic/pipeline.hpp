// Command-line orchestration: load an equation file, run the
// solve -> guess -> certify -> holonomic chain, and emit the JSON
// certificate plus a human-readable report. Timings appear in the report
// only; the JSON certificate is byte-deterministic across runs.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "catalytic/certify.hpp"

namespace catalytic {

struct PipelineConfig {
  long order = -1;              // -1: use the equation file's value
  int max_deg_q = -1;           // -1: use the equation file's value
  int max_deg_x = -1;
  long margin = kDefaultMarginThreshold;
  int rec_order = 6;
  int rec_deg = 6;
  bool slow_path_3var = false;  // three-variable cross-check (slow)
  long cross_check_order = -1;  // -1: min(order, 40)
};

struct PipelineOutcome {
  int exit_code = 4;  // 0 certified, 1 refuted, 2 inconclusive, 3 parse, 4 internal
  std::string report;
  Json document;      // certificate (possibly partial) with holonomic section
  std::string error;
  std::string error_stage;
  std::optional<Certificate> certificate;
};

// Full chain on one equation file.
PipelineOutcome run_prove(const PipelineConfig& cfg, const std::string& equation_path);
// Series only.
PipelineOutcome run_solve(const PipelineConfig& cfg, const std::string& equation_path);
// Series plus the guessed annihilator.
PipelineOutcome run_guess_cmd(const PipelineConfig& cfg, const std::string& equation_path);
// Re-verify a serialized certificate without solver or guesser.
PipelineOutcome run_recheck(const std::string& certificate_path);
// Recurrence and closed form from a plain coefficient-list file.
PipelineOutcome run_rec(const PipelineConfig& cfg, const std::string& coeffs_path);

// Independent pipelines over several files, at most `jobs` in flight.
std::vector<PipelineOutcome> run_prove_batch(const PipelineConfig& cfg,
                                             const std::vector<std::string>& paths, int jobs);

}  // namespace catalytic
