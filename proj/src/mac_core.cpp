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

#include "doma/mac_core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

namespace doma {

namespace {

constexpr double kLn2 = 0.69314718055994530942;

double shannon_rate(double bandwidth, double sinr) {
  return bandwidth * std::log1p(sinr) / kLn2;
}

void require_positive(double value, const char* what) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw std::invalid_argument(std::string(what) + " must be a positive finite number");
  }
}

// suffix[r] = sum over ranks j in [r, M] of the rank-j device's power at one
// AP; suffix[M+1] = 0. Interference seen by a rank-beta device is suffix[beta+1].
std::vector<double> rank_suffix_power(const PowerAllocation& powers, const SicOrder& order,
                                      std::size_t ap) {
  const std::size_t m = order.device_count();
  std::vector<double> suffix(m + 2, 0.0);
  for (std::size_t rank = m; rank >= 1; --rank) {
    suffix[rank] = suffix[rank + 1] + powers.power(order.device_with_rank(rank), ap);
  }
  return suffix;
}

}  // namespace

std::string scheme_name(Scheme scheme) {
  switch (scheme) {
    case Scheme::SingleApNoma:
      return "single_ap_noma";
    case Scheme::MassiveInbandNoma:
      return "massive_inband_noma";
    case Scheme::Doma:
      return "doma";
  }
  return "unknown";
}

std::optional<Scheme> scheme_from_name(std::string_view name) {
  if (name == "single_ap_noma") return Scheme::SingleApNoma;
  if (name == "massive_inband_noma") return Scheme::MassiveInbandNoma;
  if (name == "doma") return Scheme::Doma;
  return std::nullopt;
}

SicOrder unified_order(const ChannelRealization& gains, double noise_power,
                       OrderingMetric ordering_metric) {
  require_positive(noise_power, "noise_power");
  const std::size_t m = gains.devices();
  std::vector<double> metric(m, 0.0);
  for (std::size_t device = 0; device < m; ++device) {
    double value = 0.0;
    switch (ordering_metric) {
      case OrderingMetric::NoiseNormalizedSum:
        for (std::size_t ap = 0; ap < gains.aps(); ++ap) {
          value += gains.gain(device, ap);
        }
        value /= noise_power;
        break;
    }
    metric[device] = value;
  }
  std::vector<std::size_t> by_metric(m);
  std::iota(by_metric.begin(), by_metric.end(), std::size_t{0});
  std::stable_sort(by_metric.begin(), by_metric.end(),
                   [&](std::size_t a, std::size_t b) { return metric[a] < metric[b]; });
  std::vector<std::size_t> rank_of(m);
  for (std::size_t rank = 1; rank <= m; ++rank) {
    rank_of[by_metric[rank - 1]] = rank;
  }
  return SicOrder(std::move(rank_of), std::move(metric));
}

PowerAllocation ftpa_allocate(const SicOrder& order, const ChannelRealization& gains,
                              double budget_per_ap, double alpha) {
  require_positive(budget_per_ap, "budget_per_ap");
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) {
    throw std::invalid_argument("alpha must be a nonnegative finite number");
  }
  const std::size_t m = gains.devices();
  if (order.device_count() != m) {
    throw std::invalid_argument("ftpa_allocate: order does not match gains dimensions");
  }
  const std::vector<double>& mu = order.metric_values();

  std::vector<double> weights(m, 1.0);
  if (alpha > 0.0) {
    // mu^-alpha evaluated in log space so extreme metrics cannot overflow.
    std::vector<double> log_weights(m);
    double max_log = -std::numeric_limits<double>::infinity();
    for (std::size_t device = 0; device < m; ++device) {
      if (mu[device] <= 0.0) {
        std::ostringstream msg;
        msg << "degenerate channel: device " << device
            << " has zero unified metric, FTPA with alpha > 0 is undefined";
        throw DegenerateChannelError(msg.str());
      }
      log_weights[device] = -alpha * std::log(mu[device]);
      max_log = std::max(max_log, log_weights[device]);
    }
    for (std::size_t device = 0; device < m; ++device) {
      weights[device] = std::exp(log_weights[device] - max_log);
    }
  }
  const double weight_sum = std::accumulate(weights.begin(), weights.end(), 0.0);

  std::vector<double> powers(m * gains.aps());
  for (std::size_t device = 0; device < m; ++device) {
    const double share = budget_per_ap * (weights[device] / weight_sum);
    for (std::size_t ap = 0; ap < gains.aps(); ++ap) {
      powers[device * gains.aps() + ap] = share;
    }
  }
  return PowerAllocation(m, gains.aps(), std::move(powers));
}

RateSample noma_rate_single_ap(std::span<const double> powers, std::span<const double> sinr_gammas,
                               const SicOrder& order, double bandwidth) {
  require_positive(bandwidth, "bandwidth");
  const std::size_t m = order.device_count();
  if (powers.size() != m || sinr_gammas.size() != m) {
    throw std::invalid_argument("noma_rate_single_ap: powers/gammas do not match order size");
  }
  std::vector<double> suffix(m + 2, 0.0);
  for (std::size_t rank = m; rank >= 1; --rank) {
    suffix[rank] = suffix[rank + 1] + powers[order.device_with_rank(rank)];
  }
  RateSample sample{Scheme::SingleApNoma, std::vector<double>(m)};
  for (std::size_t device = 0; device < m; ++device) {
    const double gamma = sinr_gammas[device];
    const double residual = suffix[order.rank_of(device) + 1];
    const double sinr = powers[device] * gamma / (residual * gamma + 1.0);
    sample.per_device_rate[device] = shannon_rate(bandwidth, sinr);
  }
  return sample;
}

RateSample massive_noma_rate(const PowerAllocation& powers, const ChannelRealization& gains,
                             const SicOrder& order, double noise_power, double bandwidth) {
  require_positive(noise_power, "noise_power");
  require_positive(bandwidth, "bandwidth");
  const std::size_t m = gains.devices();
  const std::size_t k = gains.aps();
  if (powers.devices() != m || powers.aps() != k || order.device_count() != m) {
    throw std::invalid_argument("massive_noma_rate: inconsistent dimensions");
  }
  std::vector<std::vector<double>> suffix_by_ap(k);
  for (std::size_t ap = 0; ap < k; ++ap) {
    suffix_by_ap[ap] = rank_suffix_power(powers, order, ap);
  }
  RateSample sample{Scheme::MassiveInbandNoma, std::vector<double>(m)};
  for (std::size_t device = 0; device < m; ++device) {
    const std::size_t beta = order.rank_of(device);
    double signal = 0.0;
    double interference = 0.0;
    for (std::size_t ap = 0; ap < k; ++ap) {
      const double gamma = gains.gain(device, ap) / noise_power;
      signal += powers.power(device, ap) * gamma;
      interference += suffix_by_ap[ap][beta + 1] * gamma;
    }
    sample.per_device_rate[device] = shannon_rate(bandwidth, signal / (interference + 1.0));
  }
  return sample;
}

RateSample doma_rate(const PowerAllocation& powers, const ChannelRealization& gains,
                     const SicOrder& order, double delta, double ici_power, double noise_power,
                     double bandwidth) {
  require_positive(noise_power, "noise_power");
  require_positive(bandwidth, "bandwidth");
  if (!(delta >= 0.0 && delta < 1.0)) {
    throw std::invalid_argument("delta must lie in [0, 1)");
  }
  if (!(ici_power >= 0.0) || !std::isfinite(ici_power)) {
    throw std::invalid_argument("ici_power must be a nonnegative finite number");
  }
  const std::size_t m = gains.devices();
  const std::size_t k = gains.aps();
  if (powers.devices() != m || powers.aps() != k || order.device_count() != m) {
    throw std::invalid_argument("doma_rate: inconsistent dimensions");
  }
  std::vector<std::vector<double>> suffix_by_ap(k);
  for (std::size_t ap = 0; ap < k; ++ap) {
    suffix_by_ap[ap] = rank_suffix_power(powers, order, ap);
  }
  RateSample sample{Scheme::Doma, std::vector<double>(m)};
  for (std::size_t device = 0; device < m; ++device) {
    const std::size_t beta = order.rank_of(device);
    double signal = 0.0;
    double residual = 0.0;
    for (std::size_t ap = 0; ap < k; ++ap) {
      const double gain = gains.gain(device, ap);
      signal += powers.power(device, ap) * gain;
      residual += suffix_by_ap[ap][beta + 1] * gain;
    }
    const double sinr = signal / (residual + delta * ici_power + noise_power);
    sample.per_device_rate[device] = shannon_rate(bandwidth, sinr);
  }
  return sample;
}

}  // namespace doma
