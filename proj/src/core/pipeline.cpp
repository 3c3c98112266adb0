#include "core/pipeline.hpp"

#include <cstdio>
#include <fstream>

#include "core/errors.hpp"
#include "core/normal_forms.hpp"
#include "json.hpp"

namespace bifkit {

RunConfig make_run_config(const std::string& model) {
  RunConfig c;
  c.model = model;
  if (model == "lr1") {
    // Window wide enough to bracket both limit points and the Hopf point
    // of the default parameter set; the trace leaves it on the upper
    // branch past the Hopf point.
    c.seed_lambda = 0.0;
    c.seed_preset = "lr1-rest";
    c.settings.ds = 0.05;
    c.settings.max_steps = 4000;
    c.settings.direction = -1;
    c.settings.lambda_min = -2.5;
    c.settings.lambda_max = 0.5;
  } else if (model == "fold_nf") {
    c.seed_lambda = 1.0;
    c.seed_guess = {0.9};
    c.settings.ds = 0.05;
    c.settings.max_steps = 200;
    c.settings.direction = -1;  // initial motion toward decreasing u
    c.settings.lambda_min = -2.0;
    c.settings.lambda_max = 2.0;
  } else if (model == "hopf_nf") {
    c.seed_lambda = -1.0;
    c.seed_guess = {0.1, 0.1};
    c.settings.ds = 0.05;
    c.settings.max_steps = 200;
    c.settings.direction = +1;
    c.settings.lambda_min = -1.5;
    c.settings.lambda_max = 1.0;
  } else if (model == "circle") {
    c.seed_lambda = 0.0;
    c.seed_guess = {0.9};
    c.settings.ds = 0.02;
    c.settings.max_steps = 500;
    c.settings.direction = +1;
    c.settings.lambda_min = -2.0;
    c.settings.lambda_max = 2.0;
    c.settings.newton_tol = 1e-12;
  } else {
    fail(ErrorCode::unknown_model, "unknown model '" + model + "'");
  }
  return c;
}

SystemDef make_system(const RunConfig& config) {
  if (config.model == "lr1") return lr1_system(config.params);
  if (config.model == "fold_nf") return fold_normal_form();
  if (config.model == "hopf_nf") return hopf_normal_form();
  if (config.model == "circle") return circle_system();
  fail(ErrorCode::unknown_model, "unknown model '" + config.model + "'");
}

std::vector<double> resolve_seed_guess(const RunConfig& config) {
  if (!config.seed_guess.empty()) {
    const SystemDef sys = make_system(config);
    if (static_cast<int>(config.seed_guess.size()) != sys.dim)
      fail(ErrorCode::bad_config, "seed_guess length does not match model dimension");
    return config.seed_guess;
  }
  if (config.seed_preset == "lr1-rest") {
    if (config.model != "lr1")
      fail(ErrorCode::bad_config, "seed preset 'lr1-rest' requires model lr1");
    return lr1_rest_guess(config.params);
  }
  if (!config.seed_preset.empty())
    fail(ErrorCode::bad_config, "unknown seed preset '" + config.seed_preset + "'");
  fail(ErrorCode::bad_config, "no seed guess configured for model " + config.model);
}

DiagramResult run_diagram(const RunConfig& config) {
  config.settings.validate();
  const SystemDef sys = make_system(config);
  const std::vector<double> guess = resolve_seed_guess(config);

  std::vector<double> seed;
  try {
    seed = seed_equilibrium(sys, config.seed_lambda, guess, config.settings.newton_tol,
                            100);
  } catch (const Error& e) {
    fail(ErrorCode::seed_failure, std::string("seed solve failed: ") + e.what());
  }

  DiagramResult result;
  result.curve =
      trace_curve(sys, config.seed_lambda, seed, config.settings, &result.stats);

  for (BifurcationEvent& ev : scan_events(result.curve)) {
    LocatedEvent le;
    le.event = std::move(ev);
    switch (le.event.kind) {
      case EventKind::limit_point:
        le.lp = locate_lp(sys, le.event, config.locate_tol, config.locate_max_iter);
        ++result.count_limit_points;
        break;
      case EventKind::hopf_candidate:
        le.hopf = locate_hopf(sys, le.event, config.locate_tol, config.locate_max_iter);
        ++result.count_hopf;
        break;
      case EventKind::neutral_saddle:
        ++result.count_neutral_saddles;
        break;
    }
    result.events.push_back(std::move(le));
  }
  return result;
}

namespace {

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

const char* stability_name(Stability s) {
  switch (s) {
    case Stability::stable: return "stable";
    case Stability::unstable: return "unstable";
    case Stability::marginal: return "marginal";
  }
  return "?";
}

const char* kind_name(EventKind k) {
  switch (k) {
    case EventKind::limit_point: return "limit_point";
    case EventKind::hopf_candidate: return "hopf";
    case EventKind::neutral_saddle: return "neutral_saddle";
  }
  return "?";
}

nlohmann::ordered_json eigen_json(const EigenSet& eigen) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& ev : eigen.values)
    arr.push_back({{"re", ev.real()}, {"im", ev.imag()}});
  return arr;
}

}  // namespace

void emit_curve_csv(const std::vector<CurvePoint>& points, const std::string& path) {
  if (points.empty()) fail(ErrorCode::invalid_argument, "emit_curve_csv: empty curve");
  std::ofstream out(path);
  if (!out) fail(ErrorCode::io_error, "cannot open " + path + " for writing");

  const int n = static_cast<int>(points.front().u.size());
  out << "s,lambda";
  for (int i = 1; i <= n; ++i) out << ",u" << i;
  out << ",psi_lp,psi_h,stability";
  for (int i = 1; i <= n; ++i) out << ",eig_re_" << i << ",eig_im_" << i;
  out << "\n";

  for (const CurvePoint& p : points) {
    out << fmt17(p.s) << ',' << fmt17(p.lambda);
    for (double x : p.u) out << ',' << fmt17(x);
    out << ',' << fmt17(p.psi_lp) << ',' << fmt17(p.psi_h) << ','
        << stability_name(p.stability);
    for (const auto& ev : p.eigenvalues.values)
      out << ',' << fmt17(ev.real()) << ',' << fmt17(ev.imag());
    out << "\n";
  }
  if (!out) fail(ErrorCode::io_error, "write failed: " + path);
}

void emit_events(const DiagramResult& result, const RunConfig& config,
                 const std::string& path) {
  using json = nlohmann::ordered_json;
  const SystemDef sys = make_system(config);

  json root;
  root["model"] = config.model;
  root["seed_lambda"] = config.seed_lambda;
  root["settings"] = {{"ds", config.settings.ds},
                      {"max_steps", config.settings.max_steps},
                      {"newton_tol", config.settings.newton_tol},
                      {"newton_max_iter", config.settings.newton_max_iter},
                      {"direction", config.settings.direction},
                      {"lambda_min", config.settings.lambda_min},
                      {"lambda_max", config.settings.lambda_max}};

  json events = json::array();
  for (const LocatedEvent& le : result.events) {
    json e;
    e["kind"] = kind_name(le.event.kind);
    e["bracket_lambda"] = {le.event.left.lambda, le.event.right.lambda};
    e["bracket_indices"] = {le.event.left_index, le.event.left_index + 1};
    e["test_values"] = {le.event.psi_left, le.event.psi_right};
    if (le.event.ambiguous_pairing) e["ambiguous_pairing"] = true;

    if (le.lp) {
      const LPSolution& s = *le.lp;
      e["located"] = {{"lambda", s.lambda},
                      {"u", s.u},
                      {"h", s.h},
                      {"residual", s.residual},
                      {"iterations", s.iterations},
                      {"k_index", s.k_index},
                      {"eigenvalues", eigen_json(eigenvalues(
                                          sys.jacobian_u(s.lambda, s.u)))}};
    } else if (le.hopf) {
      const HopfSolution& s = *le.hopf;
      e["located"] = {{"lambda", s.lambda},
                      {"beta", s.beta},
                      {"u", s.u},
                      {"h", s.h},
                      {"g", s.g},
                      {"residual", s.residual},
                      {"iterations", s.iterations},
                      {"k_index", s.k_index},
                      {"eigenvalues", eigen_json(eigenvalues(
                                          sys.jacobian_u(s.lambda, s.u)))}};
    } else {
      e["located"] = nullptr;
    }
    events.push_back(std::move(e));
  }
  root["events"] = std::move(events);
  root["summary"] = {{"points", result.curve.size()},
                     {"limit_points", result.count_limit_points},
                     {"hopf_points", result.count_hopf},
                     {"neutral_saddles", result.count_neutral_saddles}};

  std::ofstream out(path);
  if (!out) fail(ErrorCode::io_error, "cannot open " + path + " for writing");
  out << root.dump(2) << "\n";
  if (!out) fail(ErrorCode::io_error, "write failed: " + path);
}

RunSummary run_to_files(const RunConfig& config, const std::string& output_prefix) {
  if (output_prefix.empty())
    fail(ErrorCode::bad_config, "output prefix must not be empty");
  const DiagramResult result = run_diagram(config);

  RunSummary summary;
  summary.points = static_cast<int>(result.curve.size());
  summary.limit_points = result.count_limit_points;
  summary.hopf_points = result.count_hopf;
  summary.neutral_saddles = result.count_neutral_saddles;
  summary.curve_path = output_prefix + "_curve.csv";
  summary.events_path = output_prefix + "_events.json";

  emit_curve_csv(result.curve, summary.curve_path);
  emit_events(result, config, summary.events_path);
  return summary;
}

}  // namespace bifkit
