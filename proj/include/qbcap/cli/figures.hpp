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

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "qbcap/analysis.hpp"
#include "qbcap/cli/config.hpp"

namespace qbcap::cli {

struct OutputFile {
  std::string name;
  std::string content;
};

/// Files produced by a figure or sweep, before anything touches the disk.
struct Rendered {
  /// Figure id, or "sweep".
  std::string figure;
  /// Stem of the manifest file name.
  std::string name;
  nlohmann::json config;
  std::vector<OutputFile> files;
  std::vector<std::string> notes;
};

struct FileEntry {
  std::string path;
  std::string sha256;
};

struct FigureManifest {
  std::string figure;
  nlohmann::json config;
  std::vector<FileEntry> files;
  std::vector<std::string> notes;

  nlohmann::json to_json() const;
};

const std::vector<std::string>& figure_ids();
bool is_figure_id(std::string_view id);

/// Throws UsageError on an unknown id, Unphysical on bad coefficients.
Rendered render_figure(const std::string& id, const RunConfig& config);

/// Resolves defaults (99 interior p points, n = 1) and validates.
SweepConfig sweep_config(const RunConfig& config);
Rendered render_sweep(const RunConfig& config);

/// Sudden-death, frozen and deviation summaries of a sweep.
nlohmann::json phenomena_json(const SweepConfig& config, std::span<const SweepRecord> records);

/// Writes the files and <name>_manifest.json under config.out_dir.
FigureManifest write_rendered(const Rendered& rendered, const RunConfig& config);

FigureManifest run_figure(const std::string& id, const RunConfig& config);
FigureManifest run_sweep(const RunConfig& config);

}  // namespace qbcap::cli
