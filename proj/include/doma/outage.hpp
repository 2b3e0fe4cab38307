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

#ifndef DOMA_OUTAGE_HPP
#define DOMA_OUTAGE_HPP

#include <cstdint>
#include <string_view>
#include <vector>

#include "doma/mac_core.hpp"
#include "doma/scenario.hpp"

namespace doma {

/// Labeled parameter values a report was produced at.
struct SweepCoordinates {
  std::size_t ap_count;
  std::size_t cluster_size;
  double delta;
  double snr_db;  // 10*log10(per-AP budget / noise power)
};

/// Aggregated epsilon-outage capacities for one scenario point.
/// per_device_capacity[r-1] is the capacity of the device holding SIC rank r
/// (rank 1 = weakest unified channel), in bits/s/Hz.
struct OutageReport {
  Scheme scheme;
  std::vector<double> per_device_capacity;
  double cluster_min_capacity;
  double epsilon;
  std::size_t trials;
  SweepCoordinates coordinates;
  std::uint64_t seed;
};

/// Empirical lower epsilon-quantile: the order statistic at index
/// floor(epsilon*N) of the ascending-sorted samples, i.e. the largest rate
/// whose strictly-below fraction does not exceed epsilon. Requires at least
/// ceil(1/epsilon) samples.
double epsilon_outage_capacity(std::vector<double> samples, double epsilon);

/// Column-wise variant over a trials x devices rate table.
std::vector<double> epsilon_outage_capacity(const std::vector<std::vector<double>>& per_trial_rates,
                                            double epsilon);

/// Runs `trials` independent fading draws (channel -> order -> FTPA -> rate)
/// and reduces per SIC rank with epsilon_outage_capacity. The result depends
/// only on (config, scheme); worker count never changes it.
OutageReport run_scenario(const ValidatedConfig& config, Scheme scheme, unsigned workers = 1);

enum class SweepAxis {
  ApCount,    // "K"
  ClusterSize,// "M"
  Delta,      // "delta"
  SnrDb,      // "snr" (dB; sets the per-AP budget to noise * 10^(v/10))
  FtpaDecay,  // "alpha"
};

/// Accepts exactly "K", "M", "delta", "snr", "alpha"; throws otherwise.
SweepAxis parse_sweep_axis(std::string_view name);
std::string_view sweep_axis_name(SweepAxis axis);

/// One report per axis value; each point re-validates its modified config and
/// runs with the shared master seed, so every point reproduces on its own.
std::vector<OutageReport> sweep(const ValidatedConfig& config, Scheme scheme, SweepAxis axis,
                                const std::vector<double>& values, unsigned workers = 1);

}  // namespace doma

#endif  // DOMA_OUTAGE_HPP
