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

#include "doma/outage.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <thread>

#include "doma/channel.hpp"

namespace doma {

double epsilon_outage_capacity(std::vector<double> samples, double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw std::invalid_argument("epsilon must lie in (0, 1)");
  }
  const std::size_t min_samples = static_cast<std::size_t>(std::ceil(1.0 / epsilon));
  if (samples.size() < min_samples) {
    std::ostringstream msg;
    msg << "epsilon_outage_capacity: got " << samples.size() << " samples, need at least "
        << min_samples << " to resolve epsilon = " << epsilon;
    throw std::invalid_argument(msg.str());
  }
  std::sort(samples.begin(), samples.end());
  std::size_t index =
      static_cast<std::size_t>(std::floor(epsilon * static_cast<double>(samples.size())));
  if (index >= samples.size()) {
    index = samples.size() - 1;
  }
  return samples[index];
}

std::vector<double> epsilon_outage_capacity(const std::vector<std::vector<double>>& per_trial_rates,
                                            double epsilon) {
  if (per_trial_rates.empty()) {
    throw std::invalid_argument("epsilon_outage_capacity: no rate samples");
  }
  const std::size_t devices = per_trial_rates.front().size();
  std::vector<double> capacities(devices);
  std::vector<double> column(per_trial_rates.size());
  for (std::size_t d = 0; d < devices; ++d) {
    for (std::size_t t = 0; t < per_trial_rates.size(); ++t) {
      if (per_trial_rates[t].size() != devices) {
        throw std::invalid_argument("epsilon_outage_capacity: ragged rate table");
      }
      column[t] = per_trial_rates[t][d];
    }
    capacities[d] = epsilon_outage_capacity(column, epsilon);
  }
  return capacities;
}

namespace {

// One fading draw -> order -> FTPA -> per-rank rates for the chosen scheme,
// written into rank_rates[rank-1]. Spectral efficiency: bandwidth fixed at 1.
void run_one_trial(const ScenarioConfig& c, Scheme scheme, std::uint64_t trial,
                   std::vector<std::vector<double>>& rank_rates) {
  TrialStream stream(c.seed, trial);
  const ChannelModel model{};
  const ChannelRealization full = draw(model, c.cluster_size, c.ap_count, stream);

  const ChannelRealization gains = (scheme == Scheme::SingleApNoma) ? full.first_ap() : full;
  const SicOrder order = unified_order(gains, c.noise_power);
  const PowerAllocation alloc =
      ftpa_allocate(order, gains, c.per_ap_cluster_power_budget, c.ftpa_decay);

  RateSample rates{scheme, {}};
  switch (scheme) {
    case Scheme::SingleApNoma: {
      // Orthogonal clusters: no inter-cluster interference at the baseline.
      std::vector<double> powers(c.cluster_size);
      std::vector<double> gammas(c.cluster_size);
      for (std::size_t m = 0; m < c.cluster_size; ++m) {
        powers[m] = alloc.power(m, 0);
        gammas[m] = gains.gain(m, 0) / c.noise_power;
      }
      rates = noma_rate_single_ap(powers, gammas, order, 1.0);
      break;
    }
    case Scheme::MassiveInbandNoma:
      rates = massive_noma_rate(alloc, gains, order, c.noise_power, 1.0);
      break;
    case Scheme::Doma: {
      const double ici_power = c.ici_power_fraction * c.per_ap_cluster_power_budget;
      rates = doma_rate(alloc, gains, order, c.overlap_fraction, ici_power, c.noise_power, 1.0);
      break;
    }
  }
  for (std::size_t rank = 1; rank <= c.cluster_size; ++rank) {
    rank_rates[rank - 1][trial] = rates.per_device_rate[order.device_with_rank(rank)];
  }
}

}  // namespace

OutageReport run_scenario(const ValidatedConfig& config, Scheme scheme, unsigned workers) {
  const ScenarioConfig& c = config.get();
  const std::size_t trials = c.trials;

  std::vector<std::vector<double>> rank_rates(c.cluster_size, std::vector<double>(trials));

  const unsigned worker_count =
      std::max(1u, std::min<unsigned>(workers == 0 ? std::thread::hardware_concurrency() : workers,
                                      static_cast<unsigned>(trials)));
  if (worker_count == 1) {
    for (std::size_t t = 0; t < trials; ++t) {
      try {
        run_one_trial(c, scheme, t, rank_rates);
      } catch (const DegenerateChannelError& e) {
        throw DegenerateChannelError("trial " + std::to_string(t) + ": " + e.what());
      }
    }
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(worker_count);
    std::vector<std::uint64_t> failed_trial(worker_count, 0);
    const std::size_t chunk = (trials + worker_count - 1) / worker_count;
    for (unsigned w = 0; w < worker_count; ++w) {
      const std::size_t lo = static_cast<std::size_t>(w) * chunk;
      const std::size_t hi = std::min(trials, lo + chunk);
      pool.emplace_back([&, w, lo, hi] {
        for (std::size_t t = lo; t < hi; ++t) {
          try {
            run_one_trial(c, scheme, t, rank_rates);
          } catch (...) {
            errors[w] = std::current_exception();
            failed_trial[w] = t;
            return;
          }
        }
      });
    }
    for (auto& thread : pool) {
      thread.join();
    }
    for (unsigned w = 0; w < worker_count; ++w) {
      if (errors[w]) {
        try {
          std::rethrow_exception(errors[w]);
        } catch (const DegenerateChannelError& e) {
          throw DegenerateChannelError("trial " + std::to_string(failed_trial[w]) + ": " +
                                       e.what());
        }
      }
    }
  }

  OutageReport report;
  report.scheme = scheme;
  report.per_device_capacity.resize(c.cluster_size);
  for (std::size_t rank = 1; rank <= c.cluster_size; ++rank) {
    report.per_device_capacity[rank - 1] = epsilon_outage_capacity(rank_rates[rank - 1], c.epsilon);
  }
  report.cluster_min_capacity =
      *std::min_element(report.per_device_capacity.begin(), report.per_device_capacity.end());
  report.epsilon = c.epsilon;
  report.trials = trials;
  report.coordinates = SweepCoordinates{
      c.ap_count,
      c.cluster_size,
      c.overlap_fraction,
      10.0 * std::log10(c.per_ap_cluster_power_budget / c.noise_power),
  };
  report.seed = c.seed;
  return report;
}

SweepAxis parse_sweep_axis(std::string_view name) {
  if (name == "K") return SweepAxis::ApCount;
  if (name == "M") return SweepAxis::ClusterSize;
  if (name == "delta") return SweepAxis::Delta;
  if (name == "snr") return SweepAxis::SnrDb;
  if (name == "alpha") return SweepAxis::FtpaDecay;
  throw std::invalid_argument("unknown sweep axis \"" + std::string(name) +
                              "\"; expected one of K, M, delta, snr, alpha");
}

std::string_view sweep_axis_name(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::ApCount:
      return "K";
    case SweepAxis::ClusterSize:
      return "M";
    case SweepAxis::Delta:
      return "delta";
    case SweepAxis::SnrDb:
      return "snr";
    case SweepAxis::FtpaDecay:
      return "alpha";
  }
  return "?";
}

namespace {

std::size_t integral_axis_value(double value, SweepAxis axis) {
  if (!(value >= 1.0) || value != std::floor(value)) {
    std::ostringstream msg;
    msg << "sweep axis " << sweep_axis_name(axis) << ": value " << value
        << " must be a positive integer";
    throw std::invalid_argument(msg.str());
  }
  return static_cast<std::size_t>(value);
}

}  // namespace

std::vector<OutageReport> sweep(const ValidatedConfig& config, Scheme scheme, SweepAxis axis,
                                const std::vector<double>& values, unsigned workers) {
  std::vector<OutageReport> reports;
  reports.reserve(values.size());
  for (double value : values) {
    ScenarioConfig c = config.get();
    switch (axis) {
      case SweepAxis::ApCount:
        c.ap_count = integral_axis_value(value, axis);
        break;
      case SweepAxis::ClusterSize:
        c.cluster_size = integral_axis_value(value, axis);
        break;
      case SweepAxis::Delta:
        c.overlap_fraction = value;
        break;
      case SweepAxis::SnrDb:
        c.per_ap_cluster_power_budget = c.noise_power * std::pow(10.0, value / 10.0);
        break;
      case SweepAxis::FtpaDecay:
        c.ftpa_decay = value;
        break;
    }
    reports.push_back(run_scenario(validate(c), scheme, workers));
  }
  return reports;
}

}  // namespace doma
