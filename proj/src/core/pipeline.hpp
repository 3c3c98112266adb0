#pragma once

#include <optional>
#include <string>
#include <vector>

#include "core/continuation.hpp"
#include "core/detect.hpp"
#include "core/locate.hpp"
#include "core/luo_rudy.hpp"
#include "core/system.hpp"

namespace bifkit {

// Full description of one diagram run. Model-specific defaults (seed,
// window, step) are filled by `make_run_config`.
struct RunConfig {
  std::string model = "lr1";  // lr1 | fold_nf | hopf_nf | circle
  ParamSet params;            // lr1 only
  bool params_touched = false;
  double seed_lambda = 0.0;
  std::string seed_preset;          // named guess, e.g. "lr1-rest"
  std::vector<double> seed_guess;   // explicit guess; wins over the preset
  ContinuationSettings settings;
  double locate_tol = 1e-9;
  int locate_max_iter = 25;
};

// Defaults for a model by name; throws UnknownModel.
RunConfig make_run_config(const std::string& model);

// Instantiate the configured system (throws UnknownModel / BadConfig).
SystemDef make_system(const RunConfig& config);

// The seed guess vector the run will start from.
std::vector<double> resolve_seed_guess(const RunConfig& config);

struct LocatedEvent {
  BifurcationEvent event;
  std::optional<LPSolution> lp;      // kind == limit_point
  std::optional<HopfSolution> hopf;  // kind == hopf_candidate
};

struct DiagramResult {
  std::vector<CurvePoint> curve;
  std::vector<LocatedEvent> events;
  TraceStats stats;
  int count_limit_points = 0;
  int count_hopf = 0;
  int count_neutral_saddles = 0;
};

// seed -> trace -> scan -> locate. Throws with the error codes the CLI
// maps to exit codes (seed_failure / trace_abort / locate_failure).
DiagramResult run_diagram(const RunConfig& config);

// CSV with header s,lambda,u1..un,psi_lp,psi_h,stability,
// eig_re_1,eig_im_1,..,eig_re_n,eig_im_n; 17 significant digits.
void emit_curve_csv(const std::vector<CurvePoint>& points, const std::string& path);

// Structured event report (JSON): kind, bracket, located solution with
// eigenvalues, residuals, iteration counts. Neutral saddles carry no
// located solution.
void emit_events(const DiagramResult& result, const RunConfig& config,
                 const std::string& path);

struct RunSummary {
  int points = 0;
  int limit_points = 0;
  int hopf_points = 0;
  int neutral_saddles = 0;
  std::string curve_path;
  std::string events_path;
};

// Convenience driver used by the C API / CLI: run and write
// <prefix>_curve.csv and <prefix>_events.json.
RunSummary run_to_files(const RunConfig& config, const std::string& output_prefix);

}  // namespace bifkit
