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

#include "doma/report_io.hpp"

#include <cstdio>

#include "json.hpp"

namespace doma {

namespace {

using nlohmann::json;

std::string fmt_double(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

json report_json(const OutageReport& r) {
  json j;
  j["scheme"] = scheme_name(r.scheme);
  j["epsilon"] = r.epsilon;
  j["trials"] = r.trials;
  j["seed"] = r.seed;
  j["coordinates"] = {
      {"ap_count", r.coordinates.ap_count},
      {"cluster_size", r.coordinates.cluster_size},
      {"delta", r.coordinates.delta},
      {"snr_db", r.coordinates.snr_db},
  };
  j["per_device_capacity_bps_hz"] = r.per_device_capacity;
  j["cluster_min_capacity_bps_hz"] = r.cluster_min_capacity;
  return j;
}

json layout_json(const SpectrumLayout& layout) {
  json bands = json::array();
  for (const Subband& b : layout.subbands) {
    bands.push_back({{"center_hz", b.center_hz}, {"width_hz", b.width_hz}});
  }
  return json{{"overlap_fraction", layout.overlap_fraction}, {"subbands", bands}};
}

}  // namespace

std::string reports_to_csv(std::span<const OutageReport> reports) {
  std::string out(kCsvHeader);
  out.push_back('\n');
  for (const OutageReport& r : reports) {
    for (std::size_t rank = 1; rank <= r.per_device_capacity.size(); ++rank) {
      out += std::to_string(kReportSchemaVersion);
      out += ',';
      out += scheme_name(r.scheme);
      out += ',';
      out += std::to_string(r.coordinates.ap_count);
      out += ',';
      out += std::to_string(r.coordinates.cluster_size);
      out += ',';
      out += fmt_double(r.coordinates.delta);
      out += ',';
      out += fmt_double(r.epsilon);
      out += ',';
      out += fmt_double(r.coordinates.snr_db);
      out += ',';
      out += std::to_string(rank);
      out += ',';
      out += fmt_double(r.per_device_capacity[rank - 1]);
      out += ',';
      out += std::to_string(r.trials);
      out += ',';
      out += std::to_string(r.seed);
      out.push_back('\n');
    }
  }
  return out;
}

std::string reports_to_json(std::span<const OutageReport> reports, int indent) {
  json j;
  j["schema_version"] = kReportSchemaVersion;
  j["reports"] = json::array();
  for (const OutageReport& r : reports) {
    j["reports"].push_back(report_json(r));
  }
  return j.dump(indent) + "\n";
}

std::string reports_to_json(std::span<const OutageReport> reports, const SpectrumLayout& layout,
                            int indent) {
  json j;
  j["schema_version"] = kReportSchemaVersion;
  j["spectrum_layout"] = layout_json(layout);
  j["reports"] = json::array();
  for (const OutageReport& r : reports) {
    j["reports"].push_back(report_json(r));
  }
  return j.dump(indent) + "\n";
}

}  // namespace doma
