// Copyright 2026 The qbcap Authors
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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qbcap/analysis.hpp"

namespace qbcap::cli {

/// Shortest decimal that parses back to the same double.
std::string format_double(double v);
std::string format_optional(const std::optional<double>& v);

/// Header plus rows of preformatted cells, LF terminated.
class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header);

  void add_row(std::vector<std::string> cells);
  std::size_t rows() const { return rows_.size(); }
  std::string str() const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

/// channel, sides, p, q, n, capacity_closed, capacity_general,
/// lambda0..lambda3, branch, deviation_flag.
std::string sweep_csv(std::span<const SweepRecord> records);

std::string sha256_hex(std::string_view data);

/// Creates parent directories as needed; throws IoError.
void write_file(const std::filesystem::path& path, std::string_view content);

struct Series {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

/// Minimal polyline chart.
std::string svg_lines(const std::string& title, const std::string& x_label,
                      const std::string& y_label, const std::vector<Series>& series);

/// Minimal heatmap; values[i * ys.size() + j] sits at (xs[i], ys[j]).
std::string svg_heatmap(const std::string& title, const std::vector<double>& xs,
                        const std::vector<double>& ys, const std::vector<double>& values);

}  // namespace qbcap::cli
