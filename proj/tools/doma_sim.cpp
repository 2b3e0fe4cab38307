// Copyright 2026 The D-OMA Simulator Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Batch front end: parses a scenario config, dispatches runs/sweeps across
// schemes, and writes plot-ready CSV/JSON reports plus a run manifest.
//
// Exit codes: 0 success, 2 config/usage error, 3 runtime error. Failures
// print a one-line JSON error document to stderr.

#include <chrono>
#include <cstdint>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "doma/outage.hpp"
#include "doma/report_io.hpp"
#include "doma/scenario.hpp"
#include "doma/security.hpp"
#include "doma/spectrum.hpp"
#include "json.hpp"

namespace {

constexpr const char* kToolVersion = "0.1.0";

using nlohmann::json;

// One --scheme argument: a scheme name optionally followed by per-scheme
// config overrides, e.g. "doma:delta=0.25,M=8". Supported keys: delta, M, K.
struct SchemeSpec {
  doma::Scheme scheme;
  std::optional<double> delta;
  std::optional<std::size_t> cluster_size;
  std::optional<std::size_t> ap_count;
  std::string raw;
};

std::size_t parse_positive_integer(const std::string& text, const std::string& what) {
  std::size_t pos = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(text, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument(what + ": \"" + text + "\" is not a positive integer");
  }
  if (pos != text.size() || value == 0) {
    throw std::invalid_argument(what + ": \"" + text + "\" is not a positive integer");
  }
  return static_cast<std::size_t>(value);
}

double parse_double(const std::string& text, const std::string& what) {
  std::size_t pos = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument(what + ": \"" + text + "\" is not a number");
  }
  if (pos != text.size()) {
    throw std::invalid_argument(what + ": \"" + text + "\" is not a number");
  }
  return value;
}

SchemeSpec parse_scheme_spec(const std::string& text) {
  SchemeSpec spec;
  spec.raw = text;
  const std::size_t colon = text.find(':');
  const std::string name = text.substr(0, colon);
  const auto scheme = doma::scheme_from_name(name);
  if (!scheme) {
    throw std::invalid_argument(
        "unknown scheme \"" + name +
        "\"; expected single_ap_noma, massive_inband_noma, or doma");
  }
  spec.scheme = *scheme;
  if (colon == std::string::npos) {
    return spec;
  }
  std::stringstream rest(text.substr(colon + 1));
  std::string item;
  while (std::getline(rest, item, ',')) {
    const std::size_t eq = item.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("scheme override \"" + item + "\" must look like key=value");
    }
    const std::string key = item.substr(0, eq);
    const std::string value = item.substr(eq + 1);
    if (key == "delta") {
      spec.delta = parse_double(value, "scheme override delta");
    } else if (key == "M") {
      spec.cluster_size = parse_positive_integer(value, "scheme override M");
    } else if (key == "K") {
      spec.ap_count = parse_positive_integer(value, "scheme override K");
    } else {
      throw std::invalid_argument("unknown scheme override \"" + key +
                                  "\"; supported: delta, M, K");
    }
  }
  return spec;
}

struct SweepSpec {
  doma::SweepAxis axis;
  std::vector<double> values;
};

SweepSpec parse_sweep_spec(const std::string& text) {
  const std::size_t eq = text.find('=');
  if (eq == std::string::npos || eq == 0 || eq + 1 >= text.size()) {
    throw std::invalid_argument("--sweep expects AXIS=v1,v2,... got \"" + text + "\"");
  }
  SweepSpec spec;
  spec.axis = doma::parse_sweep_axis(text.substr(0, eq));
  std::stringstream values(text.substr(eq + 1));
  std::string item;
  while (std::getline(values, item, ',')) {
    spec.values.push_back(parse_double(item, "sweep value"));
  }
  if (spec.values.empty()) {
    throw std::invalid_argument("--sweep needs at least one value");
  }
  return spec;
}

struct Options {
  std::string config_path;
  std::vector<std::string> scheme_args;
  std::string out_dir;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> trials;
  std::string sweep_arg;
  unsigned workers = 1;
};

std::string iso_utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void emit_error(const std::string& phase, const std::string& message) {
  json doc;
  doc["error"] = {{"phase", phase}, {"message", message}};
  std::cerr << doc.dump() << "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open config file: " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot write " + path.string());
  }
  out << content;
  if (!out.good()) {
    throw std::runtime_error("short write to " + path.string());
  }
}

doma::ScenarioConfig apply_overrides(doma::ScenarioConfig config, const Options& options,
                                     const SchemeSpec& spec) {
  if (options.seed) config.seed = *options.seed;
  if (options.trials) config.trials = *options.trials;
  if (spec.delta) config.overlap_fraction = *spec.delta;
  if (spec.cluster_size) config.cluster_size = *spec.cluster_size;
  if (spec.ap_count) config.ap_count = *spec.ap_count;
  return config;
}

int execute(const Options& options, const std::string& command) {
  std::string config_bytes;
  doma::ScenarioConfig base_config;
  std::vector<SchemeSpec> specs;
  std::optional<SweepSpec> sweep_spec;
  try {
    config_bytes = read_file(options.config_path);
    base_config = doma::parse_config_json(config_bytes);
    for (const std::string& arg : options.scheme_args) {
      specs.push_back(parse_scheme_spec(arg));
    }
    if (!options.sweep_arg.empty()) {
      sweep_spec = parse_sweep_spec(options.sweep_arg);
    }
    // Fail config problems now, before any output is produced.
    for (const SchemeSpec& spec : specs) {
      doma::validate(apply_overrides(base_config, options, spec));
    }
  } catch (const std::exception& e) {
    emit_error("config", e.what());
    return 2;
  }

  const std::string started = iso_utc_now();
  try {
    std::vector<doma::OutageReport> reports;
    for (const SchemeSpec& spec : specs) {
      const doma::ValidatedConfig config =
          doma::validate(apply_overrides(base_config, options, spec));
      if (sweep_spec) {
        const std::vector<doma::OutageReport> swept =
            doma::sweep(config, spec.scheme, sweep_spec->axis, sweep_spec->values,
                        options.workers);
        reports.insert(reports.end(), swept.begin(), swept.end());
      } else {
        reports.push_back(doma::run_scenario(config, spec.scheme, options.workers));
      }
    }

    const std::filesystem::path out_dir(options.out_dir);
    std::filesystem::create_directories(out_dir);
    const std::filesystem::path csv_path = out_dir / "results.csv";
    const std::filesystem::path json_path = out_dir / "report.json";
    const std::filesystem::path manifest_path = out_dir / "run_manifest.json";

    write_file(csv_path, doma::reports_to_csv(reports));

    if (specs.size() == 1 && !sweep_spec) {
      const doma::ScenarioConfig effective = apply_overrides(base_config, options, specs[0]);
      const doma::SpectrumLayout band_plan =
          doma::layout(effective.total_bandwidth_hz, effective.subband_bandwidth_hz,
                       effective.overlap_fraction);
      write_file(json_path, doma::reports_to_json(reports, band_plan));
    } else {
      write_file(json_path, doma::reports_to_json(reports));
    }

    const std::vector<std::uint8_t> raw(config_bytes.begin(), config_bytes.end());
    json manifest;
    manifest["schema_version"] = doma::kReportSchemaVersion;
    manifest["tool_version"] = kToolVersion;
    manifest["command"] = command;
    manifest["config_path"] = options.config_path;
    manifest["config_digest"] = "sha256:" + doma::hex_encode(doma::sha256(raw));
    manifest["schemes"] = options.scheme_args;
    manifest["sweep"] = options.sweep_arg;
    manifest["started_utc"] = started;
    manifest["finished_utc"] = iso_utc_now();
    manifest["outputs"] = {csv_path.string(), json_path.string()};
    write_file(manifest_path, manifest.dump(2) + "\n");

    std::cout << "wrote " << csv_path.string() << " (" << reports.size() << " report(s))\n";
    std::cout << "wrote " << json_path.string() << "\n";
    std::cout << "wrote " << manifest_path.string() << "\n";
    return 0;
  } catch (const std::exception& e) {
    emit_error("runtime", e.what());
    return 3;
  }
}

void add_common_options(CLI::App* cmd, Options& options, bool multi_scheme) {
  cmd->add_option("--config", options.config_path, "scenario config JSON file")->required();
  auto* scheme = cmd->add_option("--scheme", options.scheme_args,
                                 "scheme name, optionally with overrides "
                                 "(e.g. doma:delta=0.25,M=8)");
  scheme->required();
  if (!multi_scheme) {
    scheme->expected(1);
  }
  cmd->add_option("--out", options.out_dir, "output directory")->required();
  cmd->add_option("--seed", options.seed, "override the config seed");
  cmd->add_option("--trials", options.trials, "override the config trial count");
  cmd->add_option("--sweep", options.sweep_arg, "parameter sweep, AXIS=v1,v2,... "
                  "with AXIS one of K, M, delta, snr, alpha");
  cmd->add_option("--workers", options.workers, "worker threads (0 = all cores)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"epsilon-outage capacity simulator for overlapped NOMA downlinks"};
  app.require_subcommand(1);

  Options run_options;
  CLI::App* run_cmd = app.add_subcommand("run", "run one scheme and write reports");
  add_common_options(run_cmd, run_options, false);

  Options compare_options;
  CLI::App* compare_cmd =
      app.add_subcommand("compare", "run several schemes into one combined table");
  add_common_options(compare_cmd, compare_options, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    emit_error("usage", e.what());
    return 2;
  }

  if (run_cmd->parsed()) {
    return execute(run_options, "run");
  }
  if (compare_options.scheme_args.size() < 2) {
    emit_error("usage", "compare needs at least two --scheme arguments");
    return 2;
  }
  return execute(compare_options, "compare");
}
