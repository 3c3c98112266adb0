#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "core/config_file.hpp"
#include "core/errors.hpp"
#include "core/pipeline.hpp"
#include "doctest.h"

using namespace bifkit;

namespace {

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / name;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path);
  out << content;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("make_run_config: defaults per model, unknown rejected") {
  CHECK(make_run_config("lr1").settings.direction == -1);
  CHECK(make_run_config("circle").settings.ds == 0.02);
  CHECK_THROWS_AS((void)make_run_config("lorenz"), Error);
}

TEST_CASE("config file: parse, apply, unknown keys rejected") {
  const auto path = temp_file("bifkit_cfg_ok.cfg");
  write_file(path,
             "# comment\n"
             "model = fold_nf\n"
             "ds = 0.01   # trailing comment\n"
             "max_steps = 42\n"
             "seed_lambda = 0.5\n"
             "seed_guess = 0.7\n"
             "direction = -1\n");
  const RunConfig c = assemble_config(read_config_entries(path.string()));
  CHECK(c.model == "fold_nf");
  CHECK(c.settings.ds == 0.01);
  CHECK(c.settings.max_steps == 42);
  CHECK(c.seed_lambda == 0.5);
  CHECK(c.seed_guess == std::vector<double>{0.7});

  const auto bad = temp_file("bifkit_cfg_bad.cfg");
  write_file(bad, "model = lr1\nnosuchkey = 3\n");
  CHECK_THROWS_AS((void)assemble_config(read_config_entries(bad.string())), Error);

  const auto malformed = temp_file("bifkit_cfg_malformed.cfg");
  write_file(malformed, "model lr1\n");
  CHECK_THROWS_AS((void)read_config_entries(malformed.string()), Error);

  CHECK_THROWS_AS((void)read_config_entries("/nonexistent/path.cfg"), Error);
}

TEST_CASE("config file: model key applies regardless of position") {
  const auto path = temp_file("bifkit_cfg_order.cfg");
  write_file(path, "g_Na = 20\nmodel = lr1\nds = 0.1\n");
  const RunConfig c = assemble_config(read_config_entries(path.string()));
  CHECK(c.model == "lr1");
  CHECK(c.params.g_Na == 20.0);
  CHECK(c.settings.ds == 0.1);
}

TEST_CASE("config file: lr1 parameters rejected for other models") {
  const auto path = temp_file("bifkit_cfg_params.cfg");
  write_file(path, "model = circle\ng_Na = 20\n");
  CHECK_THROWS_AS((void)assemble_config(read_config_entries(path.string())), Error);
}

TEST_CASE("config file: numbers must parse fully") {
  const auto path = temp_file("bifkit_cfg_num.cfg");
  write_file(path, "model = circle\nds = 0.01x\n");
  CHECK_THROWS_AS((void)assemble_config(read_config_entries(path.string())), Error);
}

TEST_CASE("run_diagram: fold normal form finds one limit point at 0") {
  const DiagramResult r = run_diagram(make_run_config("fold_nf"));
  CHECK(r.count_limit_points == 1);
  CHECK(r.count_hopf == 0);
  REQUIRE(r.events.size() >= 1);
  const auto& lp = r.events.front();
  REQUIRE(lp.lp.has_value());
  CHECK(std::abs(lp.lp->lambda) < 1e-10);
}

TEST_CASE("run_diagram: hopf normal form finds one Hopf with beta 1") {
  const DiagramResult r = run_diagram(make_run_config("hopf_nf"));
  CHECK(r.count_hopf == 1);
  CHECK(r.count_limit_points == 0);
  bool found = false;
  for (const auto& ev : r.events) {
    if (!ev.hopf) continue;
    found = true;
    CHECK(std::abs(ev.hopf->lambda) < 1e-8);
    CHECK(std::abs(ev.hopf->beta - 1.0) < 1e-8);
  }
  CHECK(found);
}

TEST_CASE("run_diagram: unknown seed preset fails as bad config") {
  RunConfig c = make_run_config("circle");
  c.seed_guess.clear();
  c.seed_preset = "nonsense";
  CHECK_THROWS_AS((void)run_diagram(c), Error);
}

TEST_CASE("emit_curve_csv: header, row count, 17-digit round trip") {
  const RunConfig config = make_run_config("fold_nf");
  const DiagramResult r = run_diagram(config);
  const auto path = temp_file("bifkit_fold_curve.csv");
  emit_curve_csv(r.curve, path.string());

  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  CHECK(header == "s,lambda,u1,psi_lp,psi_h,stability,eig_re_1,eig_im_1");

  size_t rows = 0;
  std::string line;
  std::vector<std::string> first_fields;
  while (std::getline(in, line)) {
    if (rows == 0) {
      std::stringstream ss(line);
      std::string field;
      while (std::getline(ss, field, ',')) first_fields.push_back(field);
    }
    ++rows;
  }
  CHECK(rows == r.curve.size());

  // round trip: the parsed lambda reproduces the stored double bit-exactly
  REQUIRE(first_fields.size() == 8);
  CHECK(std::stod(first_fields[1]) == r.curve.front().lambda);
  CHECK(std::stod(first_fields[3]) == r.curve.front().psi_lp);
}

TEST_CASE("emit_curve_csv: single point gives header plus one row") {
  const RunConfig config = make_run_config("fold_nf");
  DiagramResult r = run_diagram(config);
  r.curve.resize(1);
  const auto path = temp_file("bifkit_one_row.csv");
  emit_curve_csv(r.curve, path.string());
  std::ifstream in(path);
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) ++lines;
  CHECK(lines == 2);
}

TEST_CASE("emit_events: empty event list still carries metadata") {
  RunConfig config = make_run_config("hopf_nf");
  config.settings.lambda_min = -1.5;
  config.settings.lambda_max = -0.5;  // window without the Hopf point
  config.settings.max_steps = 15;
  const DiagramResult r = run_diagram(config);
  REQUIRE(r.events.empty());

  const auto path = temp_file("bifkit_empty_events.json");
  emit_events(r, config, path.string());
  const std::string text = read_file(path);
  CHECK(text.find("\"events\": []") != std::string::npos);
  CHECK(text.find("\"model\": \"hopf_nf\"") != std::string::npos);
  CHECK(text.find("\"summary\"") != std::string::npos);
}

TEST_CASE("emit_events: fold record shape") {
  const RunConfig config = make_run_config("fold_nf");
  const DiagramResult r = run_diagram(config);
  const auto path = temp_file("bifkit_fold_events.json");
  emit_events(r, config, path.string());
  const std::string text = read_file(path);
  CHECK(text.find("\"kind\": \"limit_point\"") != std::string::npos);
  CHECK(text.find("\"located\"") != std::string::npos);
  CHECK(text.find("\"eigenvalues\"") != std::string::npos);
}

TEST_CASE("run_to_files: writes both outputs, reruns are byte-identical") {
  const RunConfig config = make_run_config("hopf_nf");
  const auto prefix1 = temp_file("bifkit_rr1").string();
  const auto prefix2 = temp_file("bifkit_rr2").string();
  const RunSummary s1 = run_to_files(config, prefix1);
  const RunSummary s2 = run_to_files(config, prefix2);
  CHECK(s1.points == s2.points);
  CHECK(s1.hopf_points == 1);
  CHECK(read_file(s1.curve_path) == read_file(s2.curve_path));
  CHECK(read_file(s1.events_path) == read_file(s2.events_path));
  CHECK(read_file(s1.curve_path).size() > 100);
}

TEST_CASE("run_to_files: unwritable prefix raises io_error") {
  const RunConfig config = make_run_config("fold_nf");
  CHECK_THROWS_AS((void)run_to_files(config, "/nonexistent_dir/run"), Error);
}

TEST_CASE("shipped lr1 config parses and matches the built-in defaults") {
  const RunConfig c =
      assemble_config(read_config_entries(BIFKIT_SOURCE_DIR "/configs/lr1_default.cfg"));
  const RunConfig d = make_run_config("lr1");
  CHECK(c.model == "lr1");
  CHECK(c.settings.ds == d.settings.ds);
  CHECK(c.settings.lambda_min == d.settings.lambda_min);
  CHECK(c.settings.lambda_max == d.settings.lambda_max);
  CHECK(c.settings.direction == d.settings.direction);
  CHECK(c.params.g_Na == d.params.g_Na);
  CHECK(c.seed_preset == "lr1-rest");
}
