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

#ifndef DOMA_SPECTRUM_HPP
#define DOMA_SPECTRUM_HPP

#include <cstddef>
#include <vector>

namespace doma {

struct Subband {
  double center_hz;
  double width_hz;
};

/// Positions of the overlapped sub-bands over the total band. Adjacent
/// sub-bands are spaced width*(1-delta) apart, so each pair overlaps by
/// delta*width.
struct SpectrumLayout {
  std::vector<Subband> subbands;
  double overlap_fraction;
};

/// Maximal packing of sub-bands of the given width into [0, total_bandwidth]:
/// count = floor((B - W) / (W*(1-delta))) + 1, left edges at i*W*(1-delta).
/// Throws if the sub-band does not fit at all (W > B).
SpectrumLayout layout(double total_bandwidth, double subband_width, double delta);

/// Ratio of simultaneously served devices between two layouts:
/// (clusters_a * devices_per_cluster_a) / (clusters_b * devices_per_cluster_b).
double capacity_gain(const SpectrumLayout& layout_doma, const SpectrumLayout& layout_noma,
                     std::size_t cluster_size_doma, std::size_t cluster_size_noma);

}  // namespace doma

#endif  // DOMA_SPECTRUM_HPP
