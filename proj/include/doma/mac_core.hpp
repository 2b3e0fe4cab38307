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

#ifndef DOMA_MAC_CORE_HPP
#define DOMA_MAC_CORE_HPP

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "doma/scenario.hpp"

namespace doma {

enum class Scheme {
  SingleApNoma,       // one AP, power-domain NOMA on one sub-band
  MassiveInbandNoma,  // K cooperating APs jointly serve one cluster
  Doma,               // overlapped sub-bands, reduced cluster size
};

std::string scheme_name(Scheme scheme);
std::optional<Scheme> scheme_from_name(std::string_view name);

/// Per-device downlink rates for one channel realization. bits/s for a
/// bandwidth in Hz, bits/s/Hz for bandwidth 1.
struct RateSample {
  Scheme scheme;
  std::vector<double> per_device_rate;
};

/// A device whose unified channel metric is exactly zero cannot receive an
/// FTPA share with alpha > 0.
class DegenerateChannelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// How per-AP link qualities collapse into the one scalar that fixes the
/// global SIC rank. Alternatives (max, harmonic) slot in here.
enum class OrderingMetric {
  NoiseNormalizedSum,  // mu_m = sum_k |h_{m,k}|^2 / N
};

/// Assigns one global SIC rank per device by ascending unified metric.
/// Ties go to the lower device position. For a single AP the default metric
/// is the classic sort by channel gain.
SicOrder unified_order(const ChannelRealization& gains, double noise_power,
                       OrderingMetric metric = OrderingMetric::NoiseNormalizedSum);

/// Fractional transmit power allocation on the unified metric, applied
/// identically at every AP: P_{m,k} = budget * mu_m^-alpha / sum_j mu_j^-alpha.
/// Column sums equal the budget; powers are non-increasing in SIC rank.
PowerAllocation ftpa_allocate(const SicOrder& order, const ChannelRealization& gains,
                              double budget_per_ap, double alpha);

/// Single-AP NOMA rate. gamma_m = |h_m|^2 / (I_m + N_m) is precomputed by the
/// caller; interference at a device comes from the devices it cannot cancel,
/// i.e. those of strictly higher rank:
///   R_m = B log2(1 + P_m gamma_m / (sum_{rank j > rank m} P_j gamma_m + 1))
RateSample noma_rate_single_ap(std::span<const double> powers, std::span<const double> sinr_gammas,
                               const SicOrder& order, double bandwidth);

/// Massive in-band NOMA rate with K cooperating APs and no inter-cluster
/// interference:
///   R_m = B log2(1 + sum_k P_{m,k} g_{m,k}/N / (sum_k Lambda_k g_{m,k}/N + 1))
/// where Lambda_k sums the per-AP powers of all devices ranked above m.
RateSample massive_noma_rate(const PowerAllocation& powers, const ChannelRealization& gains,
                             const SicOrder& order, double noise_power, double bandwidth);

/// D-OMA rate with sub-bands overlapping by fraction delta; the overlap leaks
/// a fixed inter-cluster interference power scaled by delta:
///   R_m = B log2(1 + sum_k P_{m,k} g_{m,k} / (sum_k Lambda_k g_{m,k} + delta*I_ici + N))
/// delta = 0 reduces exactly to massive_noma_rate.
RateSample doma_rate(const PowerAllocation& powers, const ChannelRealization& gains,
                     const SicOrder& order, double delta, double ici_power, double noise_power,
                     double bandwidth);

}  // namespace doma

#endif  // DOMA_MAC_CORE_HPP
