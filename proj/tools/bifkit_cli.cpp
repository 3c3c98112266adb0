// Command-line driver: load a run configuration, trace the equilibrium
// curve, detect and locate bifurcation points, and write the diagram data
// (CSV curve + JSON event report). Exit codes: 0 ok, 2 bad config,
// 3 seed failure, 4 trace abort, 5 locate failure, 1 anything else.

#include <chrono>
#include <cstdio>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "bifkit/bifkit.h"

namespace {

struct ConfigDeleter {
  void operator()(bifkit_config* c) const { bifkit_config_destroy(c); }
};
struct DiagramDeleter {
  void operator()(bifkit_diagram* d) const { bifkit_diagram_destroy(d); }
};

int exit_code_for(bifkit_status status) {
  switch (status) {
    case BIFKIT_OK: return 0;
    case BIFKIT_ERR_BAD_CONFIG:
    case BIFKIT_ERR_INVALID_ARGUMENT:
    case BIFKIT_ERR_UNKNOWN_MODEL: return 2;
    case BIFKIT_ERR_SEED_FAILED: return 3;
    case BIFKIT_ERR_TRACE_ABORTED: return 4;
    case BIFKIT_ERR_LOCATE_FAILED: return 5;
    default: return 1;
  }
}

int report(bifkit_status status, const char* stage) {
  std::fprintf(stderr, "bifkit: %s: %s (%s)\n", stage, bifkit_status_str(status),
               bifkit_last_error());
  return exit_code_for(status);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bifkit — equilibrium-curve continuation and bifurcation analysis"};

  std::string model, config_path, out_prefix;
  double ds = 0.0, tol = 0.0, lambda_min = 0.0, lambda_max = 0.0;
  int steps = 0, direction = 0;

  auto* model_opt = app.add_option("--model", model, "Model: lr1, fold_nf, hopf_nf, circle");
  auto* config_opt = app.add_option("--config", config_path, "Configuration file (key = value lines)");
  auto* ds_opt = app.add_option("--ds", ds, "Arc-length step");
  auto* steps_opt = app.add_option("--steps", steps, "Maximum number of continuation steps");
  auto* dir_opt = app.add_option("--direction", direction, "Initial direction of d(lambda)/ds: +1 or -1");
  auto* lmin_opt = app.add_option("--lambda-min", lambda_min, "Stop when lambda falls below this bound");
  auto* lmax_opt = app.add_option("--lambda-max", lambda_max, "Stop when lambda rises above this bound");
  auto* tol_opt = app.add_option("--tol", tol, "Newton residual tolerance");
  app.add_option("--out", out_prefix, "Output prefix: writes <prefix>_curve.csv and <prefix>_events.json")
      ->required();

  CLI11_PARSE(app, argc, argv);

  std::unique_ptr<bifkit_config, ConfigDeleter> config;
  {
    bifkit_config* raw = nullptr;
    if (bifkit_status st = bifkit_config_create(&raw); st != BIFKIT_OK)
      return report(st, "config");
    config.reset(raw);
  }

  if (*config_opt) {
    if (bifkit_status st = bifkit_config_load_file(config.get(), config_path.c_str());
        st != BIFKIT_OK)
      return report(st, "config");
  }

  auto set = [&](const char* key, const std::string& value) {
    return bifkit_config_set(config.get(), key, value.c_str());
  };
  if (*model_opt) set("model", model);
  if (*ds_opt) set("ds", std::to_string(ds));
  if (*steps_opt) set("max_steps", std::to_string(steps));
  if (*dir_opt) set("direction", std::to_string(direction));
  if (*lmin_opt) set("lambda_min", std::to_string(lambda_min));
  if (*lmax_opt) set("lambda_max", std::to_string(lambda_max));
  if (*tol_opt) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", tol);
    set("newton_tol", buf);
  }

  const auto t0 = std::chrono::steady_clock::now();
  std::unique_ptr<bifkit_diagram, DiagramDeleter> diagram;
  {
    bifkit_diagram* raw = nullptr;
    if (bifkit_status st = bifkit_diagram_compute(config.get(), &raw); st != BIFKIT_OK)
      return report(st, "run");
    diagram.reset(raw);
  }
  const auto t1 = std::chrono::steady_clock::now();

  if (bifkit_status st = bifkit_diagram_write(diagram.get(), out_prefix.c_str());
      st != BIFKIT_OK)
    return report(st, "write");

  int lp = 0, hopf = 0, ns = 0;
  const int n_events = bifkit_diagram_event_count(diagram.get());
  for (int i = 0; i < n_events; ++i) {
    bifkit_event_info info;
    bifkit_diagram_event(diagram.get(), i, &info);
    if (info.kind == BIFKIT_EVENT_LIMIT_POINT) ++lp;
    else if (info.kind == BIFKIT_EVENT_HOPF) ++hopf;
    else ++ns;
    if (info.located)
      std::printf("event %d: %s at lambda=%.10g%s (residual %.3g, %d iterations)\n", i,
                  info.kind == BIFKIT_EVENT_LIMIT_POINT ? "limit point" : "Hopf point",
                  info.lambda,
                  info.kind == BIFKIT_EVENT_HOPF
                      ? (" beta=" + std::to_string(info.beta)).c_str()
                      : "",
                  info.residual, info.iterations);
    else
      std::printf("event %d: neutral saddle in lambda=[%.10g, %.10g]\n", i,
                  info.bracket_lambda_lo, info.bracket_lambda_hi);
  }

  const double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  std::printf("points=%d events=%d (limit_points=%d hopf=%d neutral_saddles=%d) "
              "time_ms=%.1f\n",
              bifkit_diagram_point_count(diagram.get()), n_events, lp, hopf, ns, ms);
  std::printf("wrote %s_curve.csv and %s_events.json\n", out_prefix.c_str(),
              out_prefix.c_str());
  return 0;
}
