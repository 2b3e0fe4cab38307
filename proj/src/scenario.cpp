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

#include "doma/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace doma {

namespace {

std::string join_problems(const std::vector<std::string>& problems) {
  std::string out = "invalid configuration: ";
  for (std::size_t i = 0; i < problems.size(); ++i) {
    if (i > 0) out += "; ";
    out += problems[i];
  }
  return out;
}

bool positive_finite(double x) { return std::isfinite(x) && x > 0.0; }

void check_entries_nonnegative(const std::vector<double>& values, std::size_t devices,
                               std::size_t aps, const char* what) {
  if (devices == 0 || aps == 0) {
    throw std::invalid_argument(std::string(what) + ": dimensions must be at least 1x1");
  }
  if (values.size() != devices * aps) {
    std::ostringstream msg;
    msg << what << ": expected " << devices << "x" << aps << " = " << devices * aps
        << " entries, got " << values.size();
    throw std::invalid_argument(msg.str());
  }
  for (double v : values) {
    if (!std::isfinite(v) || v < 0.0) {
      std::ostringstream msg;
      msg << what << ": entries must be finite and nonnegative, got " << v;
      throw std::invalid_argument(msg.str());
    }
  }
}

}  // namespace

ValidationError::ValidationError(std::vector<std::string> problems)
    : std::runtime_error(join_problems(problems)), problems_(std::move(problems)) {}

ValidatedConfig validate(const ScenarioConfig& c) {
  std::vector<std::string> problems;
  if (!positive_finite(c.total_bandwidth_hz)) {
    problems.push_back("total_bandwidth_hz must be a positive finite number");
  }
  if (!positive_finite(c.subband_bandwidth_hz)) {
    problems.push_back("subband_bandwidth_hz must be a positive finite number");
  }
  if (positive_finite(c.total_bandwidth_hz) && positive_finite(c.subband_bandwidth_hz) &&
      c.subband_bandwidth_hz > c.total_bandwidth_hz) {
    problems.push_back("subband_bandwidth_hz must not exceed total_bandwidth_hz");
  }
  if (!(c.overlap_fraction >= 0.0 && c.overlap_fraction < 1.0)) {
    problems.push_back("overlap_fraction must lie in [0, 1)");
  }
  if (c.cluster_size == 0) {
    problems.push_back("cluster_size must be at least 1");
  }
  if (c.ap_count == 0) {
    problems.push_back("ap_count must be at least 1");
  }
  if (!positive_finite(c.per_ap_cluster_power_budget)) {
    problems.push_back("per_ap_cluster_power_budget must be a positive finite number");
  }
  if (!positive_finite(c.noise_power)) {
    problems.push_back("noise_power must be a positive finite number");
  }
  if (!(c.ici_power_fraction >= 0.0 && c.ici_power_fraction <= 1.0)) {
    problems.push_back("ici_power_fraction must lie in [0, 1]");
  }
  if (!(std::isfinite(c.ftpa_decay) && c.ftpa_decay >= 0.0)) {
    problems.push_back("ftpa_decay must be a nonnegative finite number");
  }
  if (!(c.epsilon > 0.0 && c.epsilon < 1.0)) {
    problems.push_back("epsilon must lie in (0, 1)");
  }
  if (c.trials == 0) {
    problems.push_back("trials must be at least 1");
  }
  if (!problems.empty()) {
    throw ValidationError(std::move(problems));
  }
  return ValidatedConfig(c);
}

namespace {

using nlohmann::json;

constexpr const char* kFieldNames[] = {
    "total_bandwidth_hz", "subband_bandwidth_hz",         "overlap_fraction",
    "cluster_size",       "ap_count",                     "per_ap_cluster_power_budget",
    "noise_power",        "ici_power_fraction",           "ftpa_decay",
    "epsilon",            "trials",                       "seed",
};

bool known_field(const std::string& key) {
  return std::find_if(std::begin(kFieldNames), std::end(kFieldNames),
                      [&](const char* f) { return key == f; }) != std::end(kFieldNames);
}

double read_number(const json& j, const char* key, std::vector<std::string>& problems) {
  if (!j.at(key).is_number()) {
    problems.push_back(std::string(key) + " must be a number");
    return 0.0;
  }
  return j.at(key).get<double>();
}

std::uint64_t read_uint(const json& j, const char* key, std::vector<std::string>& problems) {
  const json& v = j.at(key);
  if (!v.is_number_integer() || (v.is_number_integer() && !v.is_number_unsigned() &&
                                 v.get<std::int64_t>() < 0)) {
    problems.push_back(std::string(key) + " must be a nonnegative integer");
    return 0;
  }
  return v.get<std::uint64_t>();
}

}  // namespace

ScenarioConfig parse_config_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError({std::string("config is not valid JSON: ") + e.what()});
  }
  std::vector<std::string> problems;
  if (!j.is_object()) {
    throw ValidationError({"config root must be a JSON object"});
  }
  for (const auto& item : j.items()) {
    if (!known_field(item.key())) {
      problems.push_back("unknown field \"" + item.key() + "\"");
    }
  }
  for (const char* field : kFieldNames) {
    if (!j.contains(field)) {
      problems.push_back(std::string("missing field \"") + field + "\"");
    }
  }
  if (!problems.empty()) {
    throw ValidationError(std::move(problems));
  }

  ScenarioConfig c;
  c.total_bandwidth_hz = read_number(j, "total_bandwidth_hz", problems);
  c.subband_bandwidth_hz = read_number(j, "subband_bandwidth_hz", problems);
  c.overlap_fraction = read_number(j, "overlap_fraction", problems);
  c.cluster_size = static_cast<std::size_t>(read_uint(j, "cluster_size", problems));
  c.ap_count = static_cast<std::size_t>(read_uint(j, "ap_count", problems));
  c.per_ap_cluster_power_budget = read_number(j, "per_ap_cluster_power_budget", problems);
  c.noise_power = read_number(j, "noise_power", problems);
  c.ici_power_fraction = read_number(j, "ici_power_fraction", problems);
  c.ftpa_decay = read_number(j, "ftpa_decay", problems);
  c.epsilon = read_number(j, "epsilon", problems);
  c.trials = static_cast<std::size_t>(read_uint(j, "trials", problems));
  c.seed = read_uint(j, "seed", problems);
  if (!problems.empty()) {
    throw ValidationError(std::move(problems));
  }
  return c;
}

std::string config_to_json(const ScenarioConfig& c, int indent) {
  json j;
  j["total_bandwidth_hz"] = c.total_bandwidth_hz;
  j["subband_bandwidth_hz"] = c.subband_bandwidth_hz;
  j["overlap_fraction"] = c.overlap_fraction;
  j["cluster_size"] = c.cluster_size;
  j["ap_count"] = c.ap_count;
  j["per_ap_cluster_power_budget"] = c.per_ap_cluster_power_budget;
  j["noise_power"] = c.noise_power;
  j["ici_power_fraction"] = c.ici_power_fraction;
  j["ftpa_decay"] = c.ftpa_decay;
  j["epsilon"] = c.epsilon;
  j["trials"] = c.trials;
  j["seed"] = c.seed;
  return j.dump(indent) + "\n";
}

ScenarioConfig load_config_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open config file: " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_json(buf.str());
}

ChannelRealization::ChannelRealization(std::size_t devices, std::size_t aps,
                                       std::vector<double> gains)
    : devices_(devices), aps_(aps), gains_(std::move(gains)) {
  check_entries_nonnegative(gains_, devices_, aps_, "ChannelRealization");
}

ChannelRealization ChannelRealization::first_ap() const {
  std::vector<double> column(devices_);
  for (std::size_t m = 0; m < devices_; ++m) {
    column[m] = gain(m, 0);
  }
  return ChannelRealization(devices_, 1, std::move(column));
}

PowerAllocation::PowerAllocation(std::size_t devices, std::size_t aps, std::vector<double> powers)
    : devices_(devices), aps_(aps), powers_(std::move(powers)) {
  check_entries_nonnegative(powers_, devices_, aps_, "PowerAllocation");
}

SicOrder::SicOrder(std::vector<std::size_t> rank_of_device, std::vector<double> metric_values)
    : rank_of_device_(std::move(rank_of_device)), metric_values_(std::move(metric_values)) {
  const std::size_t m = rank_of_device_.size();
  if (m == 0) {
    throw std::invalid_argument("SicOrder: empty order");
  }
  if (metric_values_.size() != m) {
    throw std::invalid_argument("SicOrder: metric size does not match device count");
  }
  device_of_rank_.assign(m, m);  // sentinel
  for (std::size_t device = 0; device < m; ++device) {
    const std::size_t rank = rank_of_device_[device];
    if (rank < 1 || rank > m || device_of_rank_[rank - 1] != m) {
      throw std::invalid_argument("SicOrder: ranks must form a permutation of 1..M");
    }
    device_of_rank_[rank - 1] = device;
  }
  for (std::size_t rank = 2; rank <= m; ++rank) {
    const std::size_t lo = device_of_rank_[rank - 2];
    const std::size_t hi = device_of_rank_[rank - 1];
    if (metric_values_[lo] > metric_values_[hi]) {
      throw std::invalid_argument("SicOrder: metric must be non-decreasing in rank");
    }
    if (metric_values_[lo] == metric_values_[hi] && lo > hi) {
      throw std::invalid_argument("SicOrder: ties must give the lower device the lower rank");
    }
  }
}

}  // namespace doma
