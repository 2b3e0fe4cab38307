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

#include "doma/spectrum.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace doma {

SpectrumLayout layout(double total_bandwidth, double subband_width, double delta) {
  if (!(total_bandwidth > 0.0) || !std::isfinite(total_bandwidth)) {
    throw std::invalid_argument("total_bandwidth must be a positive finite number");
  }
  if (!(subband_width > 0.0) || !std::isfinite(subband_width)) {
    throw std::invalid_argument("subband_width must be a positive finite number");
  }
  if (!(delta >= 0.0 && delta < 1.0)) {
    throw std::invalid_argument("delta must lie in [0, 1)");
  }
  if (subband_width > total_bandwidth) {
    std::ostringstream msg;
    msg << "no fit: subband_width " << subband_width << " exceeds total_bandwidth "
        << total_bandwidth;
    throw std::invalid_argument(msg.str());
  }

  const double spacing = subband_width * (1.0 - delta);
  // Small forward nudge so exact divisions are not lost to rounding.
  const double ratio = (total_bandwidth - subband_width) / spacing;
  const std::size_t count = static_cast<std::size_t>(std::floor(ratio + 1e-9)) + 1;

  SpectrumLayout out;
  out.overlap_fraction = delta;
  out.subbands.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double left = static_cast<double>(i) * spacing;
    out.subbands.push_back({left + subband_width / 2.0, subband_width});
  }
  return out;
}

double capacity_gain(const SpectrumLayout& layout_doma, const SpectrumLayout& layout_noma,
                     std::size_t cluster_size_doma, std::size_t cluster_size_noma) {
  if (layout_doma.subbands.empty() || layout_noma.subbands.empty()) {
    throw std::invalid_argument("capacity_gain: layouts must be nonempty");
  }
  if (cluster_size_doma == 0 || cluster_size_noma == 0) {
    throw std::invalid_argument("capacity_gain: cluster sizes must be at least 1");
  }
  const double served_doma =
      static_cast<double>(layout_doma.subbands.size()) * static_cast<double>(cluster_size_doma);
  const double served_noma =
      static_cast<double>(layout_noma.subbands.size()) * static_cast<double>(cluster_size_noma);
  return served_doma / served_noma;
}

}  // namespace doma
