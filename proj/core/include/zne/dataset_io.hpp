// Copyright 2026 The zne-mixed Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "zne/experiment.hpp"

namespace zne::io {

inline constexpr int kDatasetFormatVersion = 1;
inline constexpr int kReportFormatVersion = 1;
inline constexpr const char* kDatasetHeader = "state,regime,lambda,mean,variance,shots,seed";

/// "# zne-dataset format_version=1", then the header row, then one row per
/// record. Doubles use shortest round-trip formatting, so a written dataset
/// reads back bit-identically.
void write_dataset_csv(std::ostream& out, std::span<const experiment::EstimateRecord> records);

/// Accepts the output of write_dataset_csv. The version comment is optional;
/// any other '#' line before the header is ignored. Throws ParseError naming
/// the 1-based line of the first malformed row.
std::vector<experiment::EstimateRecord> read_dataset_csv(std::istream& in);

void save_dataset(const std::filesystem::path& path,
                  std::span<const experiment::EstimateRecord> records);
std::vector<experiment::EstimateRecord> load_dataset(const std::filesystem::path& path);

struct SubsetAnalysis {
  std::vector<int> regime_subset;
  std::vector<experiment::ExtrapolationReport> reports;
  experiment::Summary summary;
};

/// {"format_version": 1, "order": K, "subsets": [{"regime_subset", "summary", "reports"}]}.
std::string analysis_to_json(std::span<const SubsetAnalysis> analyses, std::size_t order);

/// Writes `contents` to `path`, throwing IoError on failure.
void write_text_file(const std::filesystem::path& path, const std::string& contents);

}  // namespace zne::io
