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

#ifndef DOMA_SCENARIO_HPP
#define DOMA_SCENARIO_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace doma {

/// Full experiment description shared by every module. Field names match the
/// on-disk JSON schema one to one (snake_case, all fields required, unknown
/// fields rejected).
struct ScenarioConfig {
  double total_bandwidth_hz = 8.0e6;          ///< total band B
  double subband_bandwidth_hz = 1.0e6;        ///< sub-band width W, W <= B
  double overlap_fraction = 0.0;              ///< delta in [0,1); 0 = plain NOMA
  std::size_t cluster_size = 8;               ///< devices per NOMA cluster
  std::size_t ap_count = 1;                   ///< cooperating APs per cluster
  double per_ap_cluster_power_budget = 10.0;  ///< P_t per AP per sub-band
  double noise_power = 1.0;                   ///< noise power, identical across devices
  double ici_power_fraction = 0.1;            ///< inter-cluster interference as a fraction of the per-AP budget
  double ftpa_decay = 1.0;                    ///< FTPA exponent alpha, >= 0
  double epsilon = 0.1;                       ///< outage probability target, in (0,1)
  std::size_t trials = 10000;                 ///< Monte Carlo trials
  std::uint64_t seed = 1;                     ///< master RNG seed

  friend bool operator==(const ScenarioConfig&, const ScenarioConfig&) = default;
};

/// Thrown by validate() and the config parser. Carries one entry per violated
/// invariant so callers can report them all at once.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(std::vector<std::string> problems);
  const std::vector<std::string>& problems() const noexcept { return problems_; }

 private:
  std::vector<std::string> problems_;
};

/// A ScenarioConfig that passed validate(). Immutable; safe to share across
/// threads.
class ValidatedConfig {
 public:
  const ScenarioConfig& get() const noexcept { return config_; }
  const ScenarioConfig* operator->() const noexcept { return &config_; }

 private:
  friend ValidatedConfig validate(const ScenarioConfig& config);
  explicit ValidatedConfig(const ScenarioConfig& config) : config_(config) {}
  ScenarioConfig config_;
};

/// Checks every config invariant and reports all violations together.
ValidatedConfig validate(const ScenarioConfig& config);

/// Idempotent overload: re-validating an already validated config is a no-op.
inline ValidatedConfig validate(const ValidatedConfig& config) { return config; }

/// Strict JSON codec for the external config file. parse_config_json rejects
/// unknown and missing fields by name; a serialized config re-parses to an
/// identical value.
ScenarioConfig parse_config_json(const std::string& text);
std::string config_to_json(const ScenarioConfig& config, int indent = 2);
ScenarioConfig load_config_file(const std::string& path);

/// One fading draw: M x K matrix of per-device per-AP power gains |h|^2.
/// Entries are validated finite and nonnegative at construction and the
/// matrix is immutable afterwards.
class ChannelRealization {
 public:
  ChannelRealization(std::size_t devices, std::size_t aps, std::vector<double> gains);

  std::size_t devices() const noexcept { return devices_; }
  std::size_t aps() const noexcept { return aps_; }
  double gain(std::size_t device, std::size_t ap) const { return gains_[device * aps_ + ap]; }
  const std::vector<double>& raw() const noexcept { return gains_; }

  /// M x 1 copy keeping only the first AP's column.
  ChannelRealization first_ap() const;

 private:
  std::size_t devices_;
  std::size_t aps_;
  std::vector<double> gains_;  // row-major [device][ap]
};

/// Per-device per-AP transmit powers (watts). Entries validated finite and
/// nonnegative; budget and rank-ordering invariants are enforced by the
/// allocator that produces them.
class PowerAllocation {
 public:
  PowerAllocation(std::size_t devices, std::size_t aps, std::vector<double> powers);

  std::size_t devices() const noexcept { return devices_; }
  std::size_t aps() const noexcept { return aps_; }
  double power(std::size_t device, std::size_t ap) const { return powers_[device * aps_ + ap]; }
  const std::vector<double>& raw() const noexcept { return powers_; }

 private:
  std::size_t devices_;
  std::size_t aps_;
  std::vector<double> powers_;  // row-major [device][ap]
};

/// Global SIC decode order. Rank 1 is the weakest device under the unified
/// channel metric, rank M the strongest. Ties are broken by lower device
/// position getting the lower rank. Construction validates the permutation
/// and the metric ordering.
class SicOrder {
 public:
  SicOrder(std::vector<std::size_t> rank_of_device, std::vector<double> metric_values);

  std::size_t device_count() const noexcept { return rank_of_device_.size(); }
  /// 1-based rank of the device at position `device`.
  std::size_t rank_of(std::size_t device) const { return rank_of_device_[device]; }
  /// 0-based device position holding 1-based rank `rank`.
  std::size_t device_with_rank(std::size_t rank) const { return device_of_rank_[rank - 1]; }
  const std::vector<std::size_t>& ranks() const noexcept { return rank_of_device_; }
  const std::vector<double>& metric_values() const noexcept { return metric_values_; }

 private:
  std::vector<std::size_t> rank_of_device_;  // 1-based ranks, indexed by device position
  std::vector<double> metric_values_;        // unified metric, indexed by device position
  std::vector<std::size_t> device_of_rank_;  // inverse permutation
};

}  // namespace doma

#endif  // DOMA_SCENARIO_HPP
