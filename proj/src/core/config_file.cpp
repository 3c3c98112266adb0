#include "core/config_file.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "core/errors.hpp"

namespace bifkit {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

double parse_number(const std::string& key, const std::string& value) {
  double x = 0.0;
  const char* first = value.data();
  const char* last = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(first, last, x);
  if (ec != std::errc{} || ptr != last)
    fail(ErrorCode::bad_config,
         "config: key '" + key + "' expects a number, got '" + value + "'");
  return x;
}

int parse_int(const std::string& key, const std::string& value) {
  int x = 0;
  const char* first = value.data();
  const char* last = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(first, last, x);
  if (ec != std::errc{} || ptr != last)
    fail(ErrorCode::bad_config,
         "config: key '" + key + "' expects an integer, got '" + value + "'");
  return x;
}

std::vector<double> parse_vector(const std::string& key, const std::string& value) {
  std::vector<double> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_number(key, trim(item)));
  if (out.empty()) fail(ErrorCode::bad_config, "config: key '" + key + "' is empty");
  return out;
}

void apply_entry(RunConfig& config, const std::string& key, const std::string& value) {
  if (key == "seed_lambda") {
    config.seed_lambda = parse_number(key, value);
  } else if (key == "seed_guess") {
    if (value == "lr1-rest") {
      config.seed_preset = value;
      config.seed_guess.clear();
    } else {
      config.seed_guess = parse_vector(key, value);
      config.seed_preset.clear();
    }
  } else if (key == "ds") {
    config.settings.ds = parse_number(key, value);
  } else if (key == "max_steps") {
    config.settings.max_steps = parse_int(key, value);
  } else if (key == "newton_tol") {
    config.settings.newton_tol = parse_number(key, value);
  } else if (key == "newton_max_iter") {
    config.settings.newton_max_iter = parse_int(key, value);
  } else if (key == "direction") {
    config.settings.direction = parse_int(key, value);
  } else if (key == "lambda_min") {
    config.settings.lambda_min = parse_number(key, value);
  } else if (key == "lambda_max") {
    config.settings.lambda_max = parse_number(key, value);
  } else if (key == "locate_tol") {
    config.locate_tol = parse_number(key, value);
  } else if (key == "locate_max_iter") {
    config.locate_max_iter = parse_int(key, value);
  } else if (ParamSet::is_param_key(key)) {
    config.params.set(key, parse_number(key, value));
    config.params_touched = true;
  } else {
    fail(ErrorCode::bad_config, "config: unknown key '" + key + "'");
  }
}

}  // namespace

ConfigEntries read_config_entries(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::bad_config, "config: cannot open '" + path + "'");

  ConfigEntries entries;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string::npos)
      fail(ErrorCode::bad_config, "config: line " + std::to_string(lineno) +
                                      " is not a key = value assignment");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty())
      fail(ErrorCode::bad_config,
           "config: empty key or value on line " + std::to_string(lineno));
    entries.emplace_back(key, value);
  }
  return entries;
}

RunConfig assemble_config(const ConfigEntries& entries) {
  std::string model = "lr1";
  for (const auto& [key, value] : entries)
    if (key == "model") model = value;

  RunConfig config = make_run_config(model);
  for (const auto& [key, value] : entries) {
    if (key == "model") continue;
    apply_entry(config, key, value);
  }
  validate_config(config);
  return config;
}

void validate_config(const RunConfig& config) {
  if (config.params_touched && config.model != "lr1")
    fail(ErrorCode::bad_config, "config: model parameters are only valid for model lr1");
  config.settings.validate();
  if (config.model == "lr1") config.params.validate();
  if (!(config.locate_tol > 0.0))
    fail(ErrorCode::bad_config, "config: locate_tol must be positive");
  if (config.locate_max_iter < 1)
    fail(ErrorCode::bad_config, "config: locate_max_iter must be >= 1");
}

}  // namespace bifkit
