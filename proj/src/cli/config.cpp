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

#include "qbcap/cli/config.hpp"

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace qbcap::cli {

std::string_view to_string(Command command) {
  switch (command) {
    case Command::Figure: return "figure";
    case Command::Sweep: return "sweep";
    case Command::Verify: return "verify";
  }
  return "?";
}

std::string_view to_string(Format format) {
  switch (format) {
    case Format::Csv: return "csv";
    case Format::Json: return "json";
    case Format::Svg: return "svg";
  }
  return "?";
}

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

template <typename T>
T parse_number(std::string_view text, std::string_view what) {
  T value{};
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end || text.empty())
    throw UsageError("invalid " + std::string(what) + ": '" + std::string(text) + "'");
  return value;
}

}  // namespace

std::vector<double> GridSpec::values() const {
  std::vector<double> v(count);
  if (count == 1) {
    v[0] = start;
    return v;
  }
  // Snapped to 15 significant digits so 0.07 prints as 0.07 in the CSVs.
  for (unsigned i = 0; i < count; ++i) {
    const double raw = start + (stop - start) * i / (count - 1);
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.15g", raw);
    v[i] = std::strtod(buf, nullptr);
  }
  return v;
}

std::string GridSpec::str() const {
  std::ostringstream out;
  out.precision(17);
  out << start << ':' << stop << ':' << count;
  return out.str();
}

GridSpec parse_grid(std::string_view text) {
  const auto parts = split(text, ':');
  if (parts.size() != 3) throw UsageError("grid must be start:stop:count, got '" + std::string(text) + "'");
  GridSpec g{parse_number<double>(parts[0], "grid start"), parse_number<double>(parts[1], "grid stop"),
             parse_number<unsigned>(parts[2], "grid count")};
  if (g.count == 0) throw UsageError("grid count must be positive");
  if (g.count > 1 && !(g.stop > g.start)) throw UsageError("grid stop must exceed start");
  return g;
}

std::vector<unsigned> parse_n_list(std::string_view text) {
  std::vector<unsigned> out;
  for (auto part : split(text, ',')) {
    const auto n = parse_number<unsigned>(part, "n");
    if (n == 0) throw UsageError("n must be at least 1");
    out.push_back(n);
  }
  return out;
}

std::set<Format> parse_formats(std::string_view text) {
  std::set<Format> out;
  for (auto part : split(text, ',')) {
    if (part == "csv") out.insert(Format::Csv);
    else if (part == "json") out.insert(Format::Json);
    else if (part == "svg") out.insert(Format::Svg);
    else throw UsageError("unknown format '" + std::string(part) + "'");
  }
  return out;
}

BellCoefficients RunConfig::coefficients(const BellCoefficients& defaults) const {
  return {c1.value_or(defaults.c1), c2.value_or(defaults.c2), c3.value_or(defaults.c3)};
}

namespace {

GridSpec grid_from_json(const nlohmann::json& v) {
  if (v.is_string()) return parse_grid(v.get<std::string>());
  if (v.is_object()) {
    GridSpec g{v.at("start").get<double>(), v.at("stop").get<double>(),
               v.at("count").get<unsigned>()};
    return parse_grid(g.str());
  }
  throw UsageError("grid must be a \"start:stop:count\" string or an object");
}

std::string joined(const nlohmann::json& v) {
  if (v.is_string()) return v.get<std::string>();
  std::string s;
  for (const auto& item : v) {
    if (!s.empty()) s += ',';
    s += item.is_string() ? item.get<std::string>() : item.dump();
  }
  return s;
}

}  // namespace

void merge_json(RunConfig& config, const nlohmann::json& doc) {
  if (!doc.is_object()) throw UsageError("config must be a JSON object");
  try {
    for (const auto& [key, v] : doc.items()) {
      if (key == "command") {
        const auto s = v.get<std::string>();
        if (s == "figure") config.command = Command::Figure;
        else if (s == "sweep") config.command = Command::Sweep;
        else if (s == "verify") config.command = Command::Verify;
        else throw UsageError("unknown command '" + s + "'");
      } else if (key == "figure") {
        config.figure = v.get<std::string>();
      } else if (key == "channel") {
        auto kind = parse_channel(v.get<std::string>());
        if (!kind) throw UsageError("unknown channel '" + v.get<std::string>() + "'");
        config.channel = *kind;
      } else if (key == "sides") {
        auto sides = parse_sides(v.get<std::string>());
        if (!sides) throw UsageError("sides must be one or two");
        config.sides = *sides;
      } else if (key == "c1") {
        config.c1 = v.get<double>();
      } else if (key == "c2") {
        config.c2 = v.get<double>();
      } else if (key == "c3") {
        config.c3 = v.get<double>();
      } else if (key == "epsA") {
        config.eps_a = v.get<double>();
      } else if (key == "epsB") {
        config.eps_b = v.get<double>();
      } else if (key == "p_grid") {
        config.p_grid = grid_from_json(v);
      } else if (key == "q_grid") {
        config.q_grid = grid_from_json(v);
      } else if (key == "n") {
        config.n_list = parse_n_list(joined(v));
      } else if (key == "seed") {
        config.seed = v.get<std::uint64_t>();
      } else if (key == "trials") {
        config.trials = v.get<std::size_t>();
      } else if (key == "out") {
        config.out_dir = v.get<std::string>();
      } else if (key == "formats") {
        config.formats = parse_formats(joined(v));
      } else {
        throw UsageError("unknown config key '" + key + "'");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("bad config value: ") + e.what());
  }
}

RunConfig load_config_file(const std::string& path, RunConfig base) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config file " + path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError("config file " + path + " is not valid JSON: " + e.what());
  }
  merge_json(base, doc);
  return base;
}

}  // namespace qbcap::cli
