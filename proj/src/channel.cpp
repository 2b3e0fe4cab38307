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

#include "doma/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace doma {

TrialStream::TrialStream(std::uint64_t master_seed, std::uint64_t trial_index) {
  std::seed_seq seq{
      static_cast<std::uint32_t>(master_seed),
      static_cast<std::uint32_t>(master_seed >> 32),
      static_cast<std::uint32_t>(trial_index),
      static_cast<std::uint32_t>(trial_index >> 32),
  };
  engine_.seed(seq);
}

double TrialStream::next_unit() {
  // 53-bit mantissa; strictly below 1 so -log1p(-u) stays finite.
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::uint64_t TrialStream::next_raw() { return engine_(); }

ChannelRealization draw(const ChannelModel& model, std::size_t devices, std::size_t aps,
                        TrialStream& stream) {
  if (devices == 0 || aps == 0) {
    throw std::invalid_argument("draw: devices and aps must be at least 1");
  }
  if (!(model.mean_gain > 0.0) || !std::isfinite(model.mean_gain)) {
    throw std::invalid_argument("draw: mean_gain must be a positive finite number");
  }
  std::vector<double> gains(devices * aps);
  switch (model.distribution) {
    case FadingDistribution::RayleighPower:
      // Rayleigh amplitude <=> exponential power gain; inverse-CDF sampling
      // keeps the stream layout pinned to one uniform per matrix cell.
      for (double& g : gains) {
        g = -model.mean_gain * std::log1p(-stream.next_unit());
      }
      break;
  }
  return ChannelRealization(devices, aps, std::move(gains));
}

}  // namespace doma
