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

#ifndef DOMA_REPORT_IO_HPP
#define DOMA_REPORT_IO_HPP

#include <span>
#include <string>

#include "doma/outage.hpp"
#include "doma/spectrum.hpp"

namespace doma {

inline constexpr int kReportSchemaVersion = 1;
inline constexpr const char* kCsvHeader =
    "schema_version,scheme,K,M,delta,epsilon,snr_db,device_rank,capacity_bps_hz,trials,seed";

/// Flat results table, one row per (report, device rank). A pure function of
/// the reports: identical inputs yield byte-identical output.
std::string reports_to_csv(std::span<const OutageReport> reports);

/// Results document: {"schema_version": 1, "reports": [...]}, optionally with
/// the sub-band layout attached for plotting.
std::string reports_to_json(std::span<const OutageReport> reports, int indent = 2);
std::string reports_to_json(std::span<const OutageReport> reports, const SpectrumLayout& layout,
                            int indent = 2);

}  // namespace doma

#endif  // DOMA_REPORT_IO_HPP
