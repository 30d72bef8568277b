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

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "qbcap/channels.hpp"
#include "qbcap/errors.hpp"
#include "qbcap/model.hpp"

namespace qbcap::cli {

/// Bad command line or config document. Maps to exit code 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Unreadable input or unwritable output. Maps to exit code 3.
class IoError : public Error {
 public:
  using Error::Error;
};

enum class Command { Figure, Sweep, Verify };
enum class Format { Csv, Json, Svg };

std::string_view to_string(Command command);
std::string_view to_string(Format format);

/// Evenly spaced grid "start:stop:count" including both ends.
struct GridSpec {
  double start = 0.0;
  double stop = 1.0;
  unsigned count = 1;

  std::vector<double> values() const;
  std::string str() const;

  bool operator==(const GridSpec&) const = default;
};

GridSpec parse_grid(std::string_view text);
std::vector<unsigned> parse_n_list(std::string_view text);
std::set<Format> parse_formats(std::string_view text);

inline constexpr BellCoefficients kDefaultCoefficients{0.5, 0.3, 0.1};
inline constexpr BellCoefficients kFigure2Coefficients{0.1, 0.5, 0.3};
/// p in {0.01, ..., 0.99}.
inline constexpr GridSpec kInteriorGrid{0.01, 0.99, 99};
/// p in {0, 0.01, ..., 1}.
inline constexpr GridSpec kInclusiveGrid{0.0, 1.0, 101};

/// Unset optionals fall back to per-command (or per-figure) defaults.
struct RunConfig {
  Command command = Command::Sweep;
  std::string figure;
  ChannelKind channel = ChannelKind::BitFlip;
  Sides sides = Sides::One;
  std::optional<double> c1, c2, c3;
  double eps_a = 0.6;
  double eps_b = 0.3;
  std::optional<GridSpec> p_grid;
  std::optional<GridSpec> q_grid;
  std::optional<std::vector<unsigned>> n_list;
  std::uint64_t seed = 42;
  std::size_t trials = 1000;
  std::string out_dir = ".";
  std::set<Format> formats{Format::Csv, Format::Json};

  /// Coefficients with unset components taken from `defaults`.
  BellCoefficients coefficients(const BellCoefficients& defaults = kDefaultCoefficients) const;
};

/// Overlays the keys present in `doc` onto `config`. Unknown keys and
/// mistyped values throw UsageError.
void merge_json(RunConfig& config, const nlohmann::json& doc);

RunConfig load_config_file(const std::string& path, RunConfig base = {});

}  // namespace qbcap::cli
