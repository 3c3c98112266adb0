// Regenerates tests/data/lr1_sweep_golden.json from the lambda-sweep
// oracle. Run manually after any deliberate change to the model or to the
// default window:  lr1_golden_gen <output-path>

#include <cstdio>

#include "core/luo_rudy.hpp"
#include "core/pipeline.hpp"
#include "support/lr1_sweep.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::fprintf(stderr, "usage: %s <output.json>\n", argv[0]);
    return 2;
  }
  using namespace bifkit;
  const RunConfig config = make_run_config("lr1");
  const SystemDef sys = lr1_system(config.params);
  const auto sweep = testing::lr1_lambda_sweep(sys, config.settings.lambda_min,
                                               config.settings.lambda_max, 2000);
  testing::write_sweep_golden(sweep, argv[1]);
  std::printf("%zu events -> %s\n", sweep.events.size(), argv[1]);
  for (const auto& e : sweep.events)
    std::printf("  %-5s lambda in [%.9f, %.9f]  V ~ %.3f\n", e.kind.c_str(),
                e.lambda_lo, e.lambda_hi, e.v_approx);
  return 0;
}
