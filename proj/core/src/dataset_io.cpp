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

#include "zne/dataset_io.hpp"

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "zne/errors.hpp"

namespace zne::io {

using experiment::EstimateRecord;

void write_dataset_csv(std::ostream& out, std::span<const EstimateRecord> records) {
  out << fmt::format("# zne-dataset format_version={}\n", kDatasetFormatVersion);
  out << kDatasetHeader << '\n';
  for (const auto& r : records) {
    out << fmt::format("{},{},{},{},{},{},{}\n", r.state, r.regime, r.lambda, r.mean, r.variance,
                       r.shots, r.seed);
  }
}

namespace {

template <typename T>
T parse_field(std::string_view token, std::size_t line, const char* name) {
  T value{};
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (token.empty() || ec != std::errc() || ptr != end) {
    throw ParseError(line, fmt::format("invalid {} '{}'", name, token));
  }
  return value;
}

std::vector<std::string_view> split(std::string_view row, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = row.find(sep, start);
    out.push_back(row.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string_view trim_cr(std::string_view s) {
  if (!s.empty() && s.back() == '\r') s.remove_suffix(1);
  return s;
}

}  // namespace

std::vector<EstimateRecord> read_dataset_csv(std::istream& in) {
  std::vector<EstimateRecord> records;
  std::string raw;
  std::size_t line = 0;
  bool header_seen = false;
  while (std::getline(in, raw)) {
    ++line;
    const auto row = trim_cr(raw);
    if (!header_seen) {
      if (row.starts_with('#')) {
        constexpr std::string_view key = "format_version=";
        if (auto pos = row.find(key); pos != std::string_view::npos) {
          const auto version = parse_field<int>(row.substr(pos + key.size()), line, "format_version");
          if (version != kDatasetFormatVersion) {
            throw ParseError(line, fmt::format("unsupported dataset format_version {}", version));
          }
        }
        continue;
      }
      if (row != kDatasetHeader) {
        throw ParseError(line, fmt::format("expected header '{}'", kDatasetHeader));
      }
      header_seen = true;
      continue;
    }
    if (row.empty()) continue;
    const auto f = split(row, ',');
    if (f.size() != 7) {
      throw ParseError(line, fmt::format("expected 7 fields, got {}", f.size()));
    }
    EstimateRecord r;
    r.state = parse_field<std::size_t>(f[0], line, "state");
    r.regime = parse_field<int>(f[1], line, "regime");
    r.lambda = parse_field<double>(f[2], line, "lambda");
    r.mean = parse_field<double>(f[3], line, "mean");
    r.variance = parse_field<double>(f[4], line, "variance");
    r.shots = parse_field<std::uint64_t>(f[5], line, "shots");
    r.seed = parse_field<std::uint64_t>(f[6], line, "seed");
    if (!(r.lambda > 0.0)) throw ParseError(line, "lambda must be > 0");
    if (!(r.variance >= 0.0)) throw ParseError(line, "variance must be >= 0");
    if (r.regime < 1) throw ParseError(line, "regime must be >= 1");
    records.push_back(r);
  }
  if (!header_seen) throw ParseError(line + 1, "missing dataset header");
  return records;
}

void save_dataset(const std::filesystem::path& path, std::span<const EstimateRecord> records) {
  std::ostringstream out;
  write_dataset_csv(out, records);
  write_text_file(path, out.str());
}

std::vector<EstimateRecord> load_dataset(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(fmt::format("cannot open dataset '{}'", path.string()));
  return read_dataset_csv(in);
}

std::string analysis_to_json(std::span<const SubsetAnalysis> analyses, std::size_t order) {
  using nlohmann::json;
  json doc;
  doc["format_version"] = kReportFormatVersion;
  doc["order"] = order;
  doc["subsets"] = json::array();
  for (const auto& a : analyses) {
    const auto& s = a.summary;
    json summary = {
        {"count", s.count},
        {"mean_error", s.mean_error},
        {"error_variance", s.error_variance},
        {"mean_abs_error", s.mean_abs_error},
        {"variance",
         {{"min", s.variance.min},
          {"q25", s.variance.q25},
          {"median", s.variance.median},
          {"q75", s.variance.q75},
          {"max", s.variance.max},
          {"mean", s.variance.mean}}},
    };
    json reports = json::array();
    for (const auto& r : a.reports) {
      reports.push_back({{"state", r.state},
                         {"regime_subset", r.regime_subset},
                         {"theta0", r.theta0},
                         {"variance", r.variance},
                         {"error", r.error}});
    }
    doc["subsets"].push_back(
        {{"regime_subset", a.regime_subset}, {"summary", summary}, {"reports", reports}});
  }
  return doc.dump(2) + "\n";
}

void write_text_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(fmt::format("cannot open '{}' for writing", path.string()));
  out << contents;
  out.flush();
  if (!out) throw IoError(fmt::format("failed writing '{}'", path.string()));
}

}  // namespace zne::io
