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

#ifndef DOMA_CHANNEL_HPP
#define DOMA_CHANNEL_HPP

#include <cstdint>
#include <random>

#include "doma/scenario.hpp"

namespace doma {

enum class FadingDistribution {
  RayleighPower,  // exponentially distributed power gain
};

struct ChannelModel {
  double mean_gain = 1.0;
  FadingDistribution distribution = FadingDistribution::RayleighPower;
};

/// Deterministic random stream for one Monte Carlo trial, derived from
/// (master seed, trial index). Trials therefore reproduce independently of
/// execution order and worker count.
class TrialStream {
 public:
  TrialStream(std::uint64_t master_seed, std::uint64_t trial_index);

  /// Uniform double in [0, 1) with 53 random bits.
  double next_unit();
  std::uint64_t next_raw();

 private:
  std::mt19937_64 engine_;
};

/// Draws an independent devices x aps gain matrix from the fading model,
/// filled row-major. Same (seed, trial) gives bitwise-identical output.
ChannelRealization draw(const ChannelModel& model, std::size_t devices, std::size_t aps,
                        TrialStream& stream);

}  // namespace doma

#endif  // DOMA_CHANNEL_HPP
