#include "bifkit/bifkit.h"

#include <cstring>
#include <memory>
#include <string>

#include "core/config_file.hpp"
#include "core/errors.hpp"
#include "core/pipeline.hpp"

using namespace bifkit;

namespace {

thread_local std::string g_last_error;

bifkit_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return BIFKIT_ERR_INVALID_ARGUMENT;
    case ErrorCode::bad_config: return BIFKIT_ERR_BAD_CONFIG;
    case ErrorCode::singular_matrix:
    case ErrorCode::dimension_too_small:
    case ErrorCode::singular_jacobian:
    case ErrorCode::singular_bordered_system:
    case ErrorCode::singular_extended_jacobian: return BIFKIT_ERR_SINGULAR;
    case ErrorCode::no_convergence:
    case ErrorCode::newton_diverged: return BIFKIT_ERR_NO_CONVERGENCE;
    case ErrorCode::domain_violation: return BIFKIT_ERR_DOMAIN;
    case ErrorCode::blow_up: return BIFKIT_ERR_BLOW_UP;
    case ErrorCode::seed_failure: return BIFKIT_ERR_SEED_FAILED;
    case ErrorCode::trace_abort: return BIFKIT_ERR_TRACE_ABORTED;
    case ErrorCode::locate_failure: return BIFKIT_ERR_LOCATE_FAILED;
    case ErrorCode::io_error: return BIFKIT_ERR_IO;
    case ErrorCode::unknown_model: return BIFKIT_ERR_UNKNOWN_MODEL;
  }
  return BIFKIT_ERR_INTERNAL;
}

template <typename Fn>
bifkit_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return BIFKIT_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return BIFKIT_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return BIFKIT_ERR_INTERNAL;
  }
}

}  // namespace

struct bifkit_system {
  std::string model;
  ParamSet params;
  SystemDef sys;

  void rebuild() {
    RunConfig c = make_run_config(model);
    c.params = params;
    sys = make_system(c);
  }
};

struct bifkit_config {
  ConfigEntries entries;
};

struct bifkit_diagram {
  RunConfig config;
  DiagramResult result;
};

extern "C" {

const char* bifkit_status_str(bifkit_status status) {
  switch (status) {
    case BIFKIT_OK: return "ok";
    case BIFKIT_ERR_INVALID_ARGUMENT: return "invalid argument";
    case BIFKIT_ERR_BAD_CONFIG: return "bad configuration";
    case BIFKIT_ERR_SEED_FAILED: return "seed solve failed";
    case BIFKIT_ERR_TRACE_ABORTED: return "trace aborted";
    case BIFKIT_ERR_LOCATE_FAILED: return "locate failed";
    case BIFKIT_ERR_SINGULAR: return "singular matrix";
    case BIFKIT_ERR_NO_CONVERGENCE: return "no convergence";
    case BIFKIT_ERR_DOMAIN: return "domain violation";
    case BIFKIT_ERR_BLOW_UP: return "trajectory blow-up";
    case BIFKIT_ERR_IO: return "i/o error";
    case BIFKIT_ERR_UNKNOWN_MODEL: return "unknown model";
    case BIFKIT_ERR_INTERNAL: return "internal error";
  }
  return "?";
}

const char* bifkit_last_error(void) { return g_last_error.c_str(); }

const char* bifkit_version(void) { return "0.1.0"; }

bifkit_status bifkit_system_create(const char* model, bifkit_system** out) {
  if (!model || !out) {
    g_last_error = "null argument";
    return BIFKIT_ERR_INVALID_ARGUMENT;
  }
  *out = nullptr;
  return guarded([&] {
    auto handle = std::make_unique<bifkit_system>();
    handle->model = model;
    handle->rebuild();
    *out = handle.release();
  });
}

void bifkit_system_destroy(bifkit_system* sys) { delete sys; }

bifkit_status bifkit_system_set_param(bifkit_system* sys, const char* key, double value) {
  if (!sys || !key) {
    g_last_error = "null argument";
    return BIFKIT_ERR_INVALID_ARGUMENT;
  }
  return guarded([&] {
    if (sys->model != "lr1")
      fail(ErrorCode::bad_config, "parameters are only valid for model lr1");
    sys->params.set(key, value);
    sys->rebuild();
  });
}

int bifkit_system_dim(const bifkit_system* sys) { return sys ? sys->sys.dim : 0; }

bifkit_status bifkit_system_eval(const bifkit_system* sys, double lambda, const double* u,
                                 double* f) {
  if (!sys || !u || !f) {
    g_last_error = "null argument";
    return BIFKIT_ERR_INVALID_ARGUMENT;
  }
  return guarded([&] {
    const int n = sys->sys.dim;
    const auto out = sys->sys.eval(lambda, std::span<const double>(u, n));
    std::memcpy(f, out.data(), n * sizeof(double));
  });
}

bifkit_status bifkit_system_jacobian(const bifkit_system* sys, double lambda,
                                     const double* u, double* jac) {
  if (!sys || !u || !jac) {
    g_last_error = "null argument";
    return BIFKIT_ERR_INVALID_ARGUMENT;
  }
  return guarded([&] {
    const int n = sys->sys.dim;
    const DenseMatrix j = sys->sys.jacobian_u(lambda, std::span<const double>(u, n));
    std::memcpy(jac, j.data(), static_cast<size_t>(n) * n * sizeof(double));
  });
}

bifkit_status bifkit_config_create(bifkit_config** out) {
  if (!out) {
    g_last_error = "null argument";
    return BIFKIT_ERR_INVALID_ARGUMENT;
  }
  *out = new bifkit_config();
  return BIFKIT_OK;
}

void bifkit_config_destroy(bifkit_config* config) { delete config; }

bifkit_status bifkit_config_load_file(bifkit_config* config, const char* path) {
  if (!config || !path) {
    g_last_error = "null argument";
    return BIFKIT_ERR_INVALID_ARGUMENT;
  }
  return guarded([&] {
    ConfigEntries file_entries = read_config_entries(path);
    // File entries sort before anything set through the API.
    file_entries.insert(file_entries.end(), config->entries.begin(),
                        config->entries.end());
    config->entries = std::move(file_entries);
  });
}

bifkit_status bifkit_config_set(bifkit_config* config, const char* key,
                                const char* value) {
  if (!config || !key || !value) {
    g_last_error = "null argument";
    return BIFKIT_ERR_INVALID_ARGUMENT;
  }
  config->entries.emplace_back(key, value);
  return BIFKIT_OK;
}

bifkit_status bifkit_diagram_compute(const bifkit_config* config, bifkit_diagram** out) {
  if (!config || !out) {
    g_last_error = "null argument";
    return BIFKIT_ERR_INVALID_ARGUMENT;
  }
  *out = nullptr;
  return guarded([&] {
    auto diagram = std::make_unique<bifkit_diagram>();
    diagram->config = assemble_config(config->entries);
    diagram->result = run_diagram(diagram->config);
    *out = diagram.release();
  });
}

void bifkit_diagram_destroy(bifkit_diagram* diagram) { delete diagram; }

int bifkit_diagram_point_count(const bifkit_diagram* diagram) {
  return diagram ? static_cast<int>(diagram->result.curve.size()) : 0;
}

int bifkit_diagram_dim(const bifkit_diagram* diagram) {
  if (!diagram || diagram->result.curve.empty()) return 0;
  return static_cast<int>(diagram->result.curve.front().u.size());
}

bifkit_status bifkit_diagram_point(const bifkit_diagram* diagram, int index, double* s,
                                   double* lambda, double* u, double* psi_lp,
                                   double* psi_h, int* stability, double* eig_re,
                                   double* eig_im) {
  if (!diagram || index < 0 ||
      index >= static_cast<int>(diagram->result.curve.size())) {
    g_last_error = "point index out of range";
    return BIFKIT_ERR_INVALID_ARGUMENT;
  }
  const CurvePoint& p = diagram->result.curve[index];
  if (s) *s = p.s;
  if (lambda) *lambda = p.lambda;
  if (u) std::memcpy(u, p.u.data(), p.u.size() * sizeof(double));
  if (psi_lp) *psi_lp = p.psi_lp;
  if (psi_h) *psi_h = p.psi_h;
  if (stability) {
    switch (p.stability) {
      case Stability::stable: *stability = BIFKIT_STABLE; break;
      case Stability::unstable: *stability = BIFKIT_UNSTABLE; break;
      case Stability::marginal: *stability = BIFKIT_MARGINAL; break;
    }
  }
  if (eig_re || eig_im) {
    for (size_t i = 0; i < p.eigenvalues.values.size(); ++i) {
      if (eig_re) eig_re[i] = p.eigenvalues.values[i].real();
      if (eig_im) eig_im[i] = p.eigenvalues.values[i].imag();
    }
  }
  return BIFKIT_OK;
}

int bifkit_diagram_event_count(const bifkit_diagram* diagram) {
  return diagram ? static_cast<int>(diagram->result.events.size()) : 0;
}

bifkit_status bifkit_diagram_event(const bifkit_diagram* diagram, int index,
                                   bifkit_event_info* out) {
  if (!diagram || !out || index < 0 ||
      index >= static_cast<int>(diagram->result.events.size())) {
    g_last_error = "event index out of range";
    return BIFKIT_ERR_INVALID_ARGUMENT;
  }
  const LocatedEvent& le = diagram->result.events[index];
  *out = {};
  switch (le.event.kind) {
    case EventKind::limit_point: out->kind = BIFKIT_EVENT_LIMIT_POINT; break;
    case EventKind::hopf_candidate: out->kind = BIFKIT_EVENT_HOPF; break;
    case EventKind::neutral_saddle: out->kind = BIFKIT_EVENT_NEUTRAL_SADDLE; break;
  }
  out->bracket_lambda_lo = le.event.left.lambda;
  out->bracket_lambda_hi = le.event.right.lambda;
  if (le.lp) {
    out->located = 1;
    out->lambda = le.lp->lambda;
    out->residual = le.lp->residual;
    out->iterations = le.lp->iterations;
  } else if (le.hopf) {
    out->located = 1;
    out->lambda = le.hopf->lambda;
    out->beta = le.hopf->beta;
    out->residual = le.hopf->residual;
    out->iterations = le.hopf->iterations;
  }
  return BIFKIT_OK;
}

bifkit_status bifkit_diagram_event_state(const bifkit_diagram* diagram, int index,
                                         double* u) {
  if (!diagram || !u || index < 0 ||
      index >= static_cast<int>(diagram->result.events.size())) {
    g_last_error = "event index out of range";
    return BIFKIT_ERR_INVALID_ARGUMENT;
  }
  const LocatedEvent& le = diagram->result.events[index];
  const std::vector<double>* state = nullptr;
  if (le.lp) state = &le.lp->u;
  else if (le.hopf) state = &le.hopf->u;
  if (!state) {
    g_last_error = "event has no located solution";
    return BIFKIT_ERR_INVALID_ARGUMENT;
  }
  std::memcpy(u, state->data(), state->size() * sizeof(double));
  return BIFKIT_OK;
}

bifkit_status bifkit_diagram_write(const bifkit_diagram* diagram,
                                   const char* output_prefix) {
  if (!diagram || !output_prefix) {
    g_last_error = "null argument";
    return BIFKIT_ERR_INVALID_ARGUMENT;
  }
  return guarded([&] {
    const std::string prefix(output_prefix);
    if (prefix.empty()) fail(ErrorCode::bad_config, "output prefix must not be empty");
    emit_curve_csv(diagram->result.curve, prefix + "_curve.csv");
    emit_events(diagram->result, diagram->config, prefix + "_events.json");
  });
}

}  // extern "C"
