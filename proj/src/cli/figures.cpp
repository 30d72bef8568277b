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

#include "qbcap/cli/figures.hpp"

#include <algorithm>
#include <filesystem>
#include <map>

#include "qbcap/capacity.hpp"
#include "qbcap/cli/output.hpp"

namespace qbcap::cli {

nlohmann::json FigureManifest::to_json() const {
  nlohmann::json doc;
  doc["figure"] = figure;
  doc["config"] = config;
  doc["files"] = nlohmann::json::array();
  for (const auto& f : files) doc["files"].push_back({{"path", f.path}, {"sha256", f.sha256}});
  if (!notes.empty()) doc["notes"] = notes;
  return doc;
}

namespace {

enum class Shape { Eigenvalues, Channels, Passes, Surface };

struct FigureSpec {
  std::string id;
  Shape shape;
  std::vector<ChannelKind> channels;
  BellCoefficients c;
  std::vector<unsigned> n;
  std::string title;
};

const std::vector<FigureSpec>& specs() {
  using enum ChannelKind;
  static const std::vector<FigureSpec> kSpecs = {
      {"1a", Shape::Eigenvalues, {AmplitudeDamping}, kDefaultCoefficients, {1},
       "adc output eigenvalues"},
      {"1b", Shape::Channels, {BitFlip, Depolarizing, AmplitudeDamping, GeneralizedAmplitudeDamping},
       kDefaultCoefficients, {1}, "Capacity under single channels"},
      {"2a", Shape::Eigenvalues, {AmplitudeDamping}, kFigure2Coefficients, {1},
       "adc output eigenvalues"},
      {"2b", Shape::Channels, {BitPhaseFlip, Depolarizing, AmplitudeDamping}, kFigure2Coefficients,
       {1}, "Capacity under single channels"},
      {"3a", Shape::Passes, {BitFlip}, kDefaultCoefficients, {1, 2, 3, 10, 100},
       "Capacity under bf applied n times"},
      {"3b", Shape::Passes, {Depolarizing}, kDefaultCoefficients, {1, 2, 3, 10, 100},
       "Capacity under dep applied n times"},
      {"3c", Shape::Passes, {GeneralizedAmplitudeDamping}, kDefaultCoefficients,
       {1, 2, 3, 10, 100}, "Capacity under gad applied n times"},
      {"4a", Shape::Eigenvalues, {AmplitudeDamping}, kDefaultCoefficients, {2},
       "adc output eigenvalues, n = 2"},
      {"4b", Shape::Eigenvalues, {AmplitudeDamping}, kDefaultCoefficients, {3},
       "adc output eigenvalues, n = 3"},
      {"4c", Shape::Eigenvalues, {AmplitudeDamping}, kDefaultCoefficients, {4},
       "adc output eigenvalues, n = 4"},
      {"4d", Shape::Eigenvalues, {AmplitudeDamping}, kDefaultCoefficients, {10},
       "adc output eigenvalues, n = 10"},
      {"4e", Shape::Eigenvalues, {AmplitudeDamping}, kDefaultCoefficients, {100},
       "adc output eigenvalues, n = 100"},
      {"4f", Shape::Passes, {AmplitudeDamping}, kDefaultCoefficients, {1, 2, 3, 4, 10, 100},
       "Capacity under adc applied n times"},
      {"5", Shape::Surface, {BitFlip}, kDefaultCoefficients, {1},
       "Capacity under bf on both qubits"},
      {"6", Shape::Surface, {BitFlip}, kDefaultCoefficients, {2, 10, 100},
       "Capacity under bf on both qubits"},
  };
  return kSpecs;
}

const FigureSpec& find_spec(const std::string& id) {
  for (const auto& s : specs())
    if (s.id == id) return s;
  throw UsageError("unknown figure id '" + id + "'");
}

std::string suffix(unsigned n, bool many) { return many ? "_n" + std::to_string(n) : ""; }

double plotted(const SweepRecord& r) {
  return r.capacity_closed ? *r.capacity_closed : r.capacity_general;
}

nlohmann::json echo(const SweepConfig& s, const std::vector<ChannelKind>& channels,
                    const GridSpec& p_grid, const std::optional<GridSpec>& q_grid,
                    std::uint64_t seed) {
  nlohmann::json j;
  std::vector<std::string> names;
  for (auto k : channels) names.emplace_back(short_name(k));
  j["channels"] = names;
  j["sides"] = std::string(to_string(s.sides));
  j["c"] = {s.c.c1, s.c.c2, s.c.c3};
  j["epsA"] = s.h.eps_a();
  j["epsB"] = s.h.eps_b();
  j["p_grid"] = p_grid.str();
  if (q_grid) j["q_grid"] = q_grid->str();
  j["n"] = s.n_list;
  j["seed"] = seed;
  return j;
}

std::string ordering(const AdcSpectrum& s) {
  if (s.ordered_0231(true)) return "u0<u2<u3<u1";
  if (s.ordered_0213(true)) return "u0<u2<u1<u3";
  return "";
}

void eigenvalue_files(const FigureSpec& spec, const SweepConfig& s, Rendered& out, bool csv,
                      bool svg) {
  const bool many = s.n_list.size() > 1;
  for (unsigned n : s.n_list) {
    CsvTable table({"p", "u0", "u1", "u2", "u3", "ordering", "lambda0", "lambda1", "lambda2",
                    "lambda3", "capacity_closed", "capacity_general", "branch", "deviation_flag"});
    std::vector<Series> series(4);
    for (int k = 0; k < 4; ++k) series[k].label = "u" + std::to_string(k);
    for (double p : s.p_grid) {
      const AdcSpectrum u = adc_spectrum(s.c, p, n);
      const SweepRecord r = evaluate_point(s, p, std::nullopt, n);
      std::optional<double> closed;
      if (r.capacity_closed) closed = *r.capacity_closed;
      table.add_row({format_double(p), format_double(u.u[0]), format_double(u.u[1]),
                     format_double(u.u[2]), format_double(u.u[3]), ordering(u),
                     format_double(r.spectrum[0]), format_double(r.spectrum[1]),
                     format_double(r.spectrum[2]), format_double(r.spectrum[3]),
                     format_optional(closed), format_double(r.capacity_general),
                     r.branch_used ? std::string(to_string(*r.branch_used)) : "",
                     r.deviation_flag ? "true" : "false"});
      for (int k = 0; k < 4; ++k) {
        series[k].x.push_back(p);
        series[k].y.push_back(u.u[k]);
      }
    }
    const std::string stem = "fig" + spec.id + suffix(n, many);
    if (csv) out.files.push_back({stem + ".csv", table.str()});
    if (svg) out.files.push_back({stem + ".svg", svg_lines(spec.title, "p", "eigenvalue", series)});
  }
}

void channel_files(const FigureSpec& spec, SweepConfig s, Rendered& out, bool csv, bool svg) {
  const bool many = s.n_list.size() > 1;
  std::map<ChannelKind, std::vector<SweepRecord>> curves;
  for (ChannelKind kind : spec.channels) {
    s.kind = kind;
    curves[kind] = sweep(s);
    if (csv)
      out.files.push_back({"fig" + spec.id + "_" + std::string(short_name(kind)) + ".csv",
                           sweep_csv(curves[kind])});
  }
  for (std::size_t ni = 0; ni < s.n_list.size(); ++ni) {
    std::vector<std::string> header{"p"};
    for (auto k : spec.channels) header.push_back("C_" + std::string(short_name(k)));
    for (auto k : spec.channels) header.push_back("C_" + std::string(short_name(k)) + "_general");
    CsvTable table(header);
    std::vector<Series> series;
    for (auto k : spec.channels) series.push_back({"C_" + std::string(short_name(k)), {}, {}});
    for (std::size_t pi = 0; pi < s.p_grid.size(); ++pi) {
      std::vector<std::string> row{format_double(s.p_grid[pi])};
      std::vector<std::string> general;
      for (std::size_t ci = 0; ci < spec.channels.size(); ++ci) {
        const SweepRecord& r = curves[spec.channels[ci]][pi * s.n_list.size() + ni];
        std::optional<double> closed;
        if (r.capacity_closed) closed = *r.capacity_closed;
        row.push_back(format_optional(closed));
        general.push_back(format_double(r.capacity_general));
        series[ci].x.push_back(r.p);
        series[ci].y.push_back(plotted(r));
      }
      row.insert(row.end(), general.begin(), general.end());
      table.add_row(std::move(row));
    }
    const std::string stem = "fig" + spec.id + suffix(s.n_list[ni], many);
    if (csv) out.files.push_back({stem + ".csv", table.str()});
    if (svg) out.files.push_back({stem + ".svg", svg_lines(spec.title, "p", "capacity", series)});
  }
}

void pass_files(const FigureSpec& spec, SweepConfig s, Rendered& out, bool csv, bool svg) {
  s.kind = spec.channels.front();
  const auto records = sweep(s);
  const std::size_t nn = s.n_list.size();
  std::vector<std::string> header{"p"};
  for (unsigned n : s.n_list) header.push_back("C_n" + std::to_string(n));
  for (unsigned n : s.n_list) header.push_back("C_n" + std::to_string(n) + "_general");
  CsvTable wide(header);
  std::vector<Series> series;
  for (unsigned n : s.n_list) series.push_back({"n = " + std::to_string(n), {}, {}});
  for (std::size_t pi = 0; pi < s.p_grid.size(); ++pi) {
    std::vector<std::string> row{format_double(s.p_grid[pi])};
    std::vector<std::string> general;
    for (std::size_t ni = 0; ni < nn; ++ni) {
      const SweepRecord& r = records[pi * nn + ni];
      std::optional<double> closed;
      if (r.capacity_closed) closed = *r.capacity_closed;
      row.push_back(format_optional(closed));
      general.push_back(format_double(r.capacity_general));
      series[ni].x.push_back(r.p);
      series[ni].y.push_back(plotted(r));
    }
    row.insert(row.end(), general.begin(), general.end());
    wide.add_row(std::move(row));
  }
  if (csv) {
    out.files.push_back({"fig" + spec.id + ".csv", wide.str()});
    for (std::size_t ni = 0; ni < nn; ++ni) {
      std::vector<SweepRecord> slice;
      for (std::size_t pi = 0; pi < s.p_grid.size(); ++pi) slice.push_back(records[pi * nn + ni]);
      out.files.push_back(
          {"fig" + spec.id + "_n" + std::to_string(s.n_list[ni]) + ".csv", sweep_csv(slice)});
    }
  }
  if (svg)
    out.files.push_back({"fig" + spec.id + ".svg", svg_lines(spec.title, "p", "capacity", series)});
}

void surface_files(const FigureSpec& spec, SweepConfig s, Rendered& out, bool csv, bool svg) {
  s.kind = spec.channels.front();
  const bool many = s.n_list.size() > 1;
  for (unsigned n : s.n_list) {
    SweepConfig one = s;
    one.n_list = {n};
    const auto records = sweep(one);
    const std::string stem = "fig" + spec.id + suffix(n, many);
    if (csv) out.files.push_back({stem + ".csv", sweep_csv(records)});
    if (svg) {
      std::vector<double> values;
      for (const auto& r : records) values.push_back(r.capacity_general);
      out.files.push_back({stem + ".svg", svg_heatmap(spec.title + ", n = " + std::to_string(n),
                                                      s.p_grid, s.q_grid, values)});
    }
  }
}

}  // namespace

const std::vector<std::string>& figure_ids() {
  static const std::vector<std::string> kIds = [] {
    std::vector<std::string> ids;
    for (const auto& s : specs()) ids.push_back(s.id);
    return ids;
  }();
  return kIds;
}

bool is_figure_id(std::string_view id) {
  const auto& ids = figure_ids();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

Rendered render_figure(const std::string& id, const RunConfig& config) {
  const FigureSpec& spec = find_spec(id);
  SweepConfig s;
  s.kind = spec.channels.front();
  s.sides = spec.shape == Shape::Surface ? Sides::Two : Sides::One;
  s.c = config.coefficients(spec.c);
  s.h = BatteryHamiltonian(config.eps_a, config.eps_b);
  const GridSpec p_grid = config.p_grid.value_or(kInclusiveGrid);
  std::optional<GridSpec> q_grid;
  s.p_grid = p_grid.values();
  if (s.sides == Sides::Two) {
    q_grid = config.q_grid.value_or(kInclusiveGrid);
    s.q_grid = q_grid->values();
  }
  s.n_list = config.n_list.value_or(spec.n);
  validate(s);

  Rendered out;
  out.figure = spec.id;
  out.name = "fig" + spec.id;
  out.config = echo(s, spec.channels, p_grid, q_grid, config.seed);
  const bool csv = config.formats.count(Format::Csv) > 0;
  const bool svg = config.formats.count(Format::Svg) > 0;
  switch (spec.shape) {
    case Shape::Eigenvalues: eigenvalue_files(spec, s, out, csv, svg); break;
    case Shape::Channels: channel_files(spec, s, out, csv, svg); break;
    case Shape::Passes: pass_files(spec, s, out, csv, svg); break;
    case Shape::Surface: surface_files(spec, s, out, csv, svg); break;
  }
  if (spec.id == "6") {
    out.notes.push_back(
        "capacity is nonincreasing in n at every (p, q); it does not increase with n");
  }
  if (spec.id == "1b" || spec.id == "3b") {
    out.notes.push_back(
        "dep: the closed form changes sign at p = 0.75 while capacity_general = "
        "C(0)|1 - 4p/3|^n stays positive beyond it (deviation_flag marks those rows)");
  }
  if (spec.id == "1b" || spec.id == "4f") {
    out.notes.push_back(
        "adc: capacity dips below its p = 0 value before rising to 2 epsA at p = 1");
  }
  return out;
}

SweepConfig sweep_config(const RunConfig& config) {
  SweepConfig s;
  s.kind = config.channel;
  s.sides = config.sides;
  s.c = config.coefficients();
  s.h = BatteryHamiltonian(config.eps_a, config.eps_b);
  s.p_grid = config.p_grid.value_or(kInteriorGrid).values();
  if (s.sides == Sides::Two) s.q_grid = config.q_grid.value_or(kInteriorGrid).values();
  s.n_list = config.n_list.value_or(std::vector<unsigned>{1});
  validate(s);
  return s;
}

nlohmann::json phenomena_json(const SweepConfig& config, std::span<const SweepRecord> records) {
  nlohmann::json doc;
  doc["channel"] = std::string(short_name(config.kind));
  doc["sides"] = std::string(to_string(config.sides));
  doc["sudden_death"] = nlohmann::json::array();
  doc["frozen"] = nlohmann::json::array();
  doc["errors"] = nlohmann::json::array();

  auto q_json = [](const std::optional<double>& q) {
    return q ? nlohmann::json(*q) : nlohmann::json(nullptr);
  };

  std::vector<std::optional<double>> qs;
  if (config.sides == Sides::Two)
    qs.assign(config.q_grid.begin(), config.q_grid.end());
  else
    qs.push_back(std::nullopt);

  // p-slices at fixed (q, n).
  if (config.p_grid.size() >= 2) {
    for (const auto& q : qs) {
      for (unsigned n : config.n_list) {
        std::vector<SweepRecord> slice;
        for (const auto& r : records)
          if (r.q == q && r.n == n) slice.push_back(r);
        auto found = detect_sudden_death(slice, kSuddenDeathTolerance, capacity_of_p(config, q, n));
        if (!found) continue;
        nlohmann::json e{{"q", q_json(q)},
                         {"n", n},
                         {"root", found->location},
                         {"capacity_at_root", found->value},
                         {"general_stays_below", found->general_stays_below},
                         {"max_general_beyond", found->max_general_beyond}};
        if (!found->general_stays_below) {
          e["deviation"] =
              "capacity_general does not stay at zero beyond the root; the zero-capacity "
              "claim holds only for the closed form";
        }
        e["evidence"] = nlohmann::json::array();
        for (const auto& [p, cap] : found->evidence) e["evidence"].push_back({{"p", p}, {"capacity", cap}});
        doc["sudden_death"].push_back(std::move(e));
      }
    }
  }

  // n-slices at fixed (p, q).
  if (config.n_list.size() >= 2) {
    for (double p : config.p_grid) {
      for (const auto& q : qs) {
        std::vector<SweepRecord> slice;
        for (const auto& r : records)
          if (r.p == p && r.q == q) slice.push_back(r);
        auto found = detect_frozen(slice, kFrozenTolerance);
        if (!found) continue;
        nlohmann::json e{{"p", p},
                         {"q", q_json(q)},
                         {"n_max", static_cast<unsigned>(found->location)},
                         {"value", found->value},
                         {"limit", found->value > kSuddenDeathTolerance ? "nonzero" : "zero"}};
        e["evidence"] = nlohmann::json::array();
        for (const auto& [n, cap] : found->evidence)
          e["evidence"].push_back({{"n", static_cast<unsigned>(n)}, {"capacity", cap}});
        doc["frozen"].push_back(std::move(e));
      }
    }
  }

  std::size_t flagged = 0;
  std::optional<double> p_min, p_max;
  for (const auto& r : records) {
    if (r.error) {
      doc["errors"].push_back({{"p", r.p}, {"q", q_json(r.q)}, {"n", r.n}, {"message", *r.error}});
    }
    if (!r.deviation_flag) continue;
    ++flagged;
    p_min = std::min(p_min.value_or(r.p), r.p);
    p_max = std::max(p_max.value_or(r.p), r.p);
  }
  doc["deviations"] = {{"flagged", flagged},
                       {"p_min", p_min ? nlohmann::json(*p_min) : nlohmann::json(nullptr)},
                       {"p_max", p_max ? nlohmann::json(*p_max) : nlohmann::json(nullptr)}};
  return doc;
}

Rendered render_sweep(const RunConfig& config) {
  const SweepConfig s = sweep_config(config);
  const auto records = sweep(s);

  Rendered out;
  out.figure = "sweep";
  out.name = "sweep";
  std::optional<GridSpec> q_grid;
  if (s.sides == Sides::Two) q_grid = config.q_grid.value_or(kInteriorGrid);
  out.config = echo(s, {s.kind}, config.p_grid.value_or(kInteriorGrid), q_grid, config.seed);
  if (config.formats.count(Format::Csv)) out.files.push_back({"sweep.csv", sweep_csv(records)});
  if (config.formats.count(Format::Json))
    out.files.push_back({"sweep_phenomena.json", phenomena_json(s, records).dump(2) + "\n"});
  if (config.formats.count(Format::Svg)) {
    const std::string title = "Capacity under " + std::string(short_name(s.kind));
    if (s.sides == Sides::One) {
      std::vector<Series> series;
      for (unsigned n : s.n_list) {
        Series line{"n = " + std::to_string(n), {}, {}};
        for (const auto& r : records) {
          if (r.n != n) continue;
          line.x.push_back(r.p);
          line.y.push_back(plotted(r));
        }
        series.push_back(std::move(line));
      }
      out.files.push_back({"sweep.svg", svg_lines(title, "p", "capacity", series)});
    } else {
      for (unsigned n : s.n_list) {
        std::vector<double> values;
        for (const auto& r : records)
          if (r.n == n) values.push_back(r.capacity_general);
        out.files.push_back({"sweep_n" + std::to_string(n) + ".svg",
                             svg_heatmap(title + ", n = " + std::to_string(n), s.p_grid, s.q_grid,
                                         values)});
      }
    }
  }
  return out;
}

FigureManifest write_rendered(const Rendered& rendered, const RunConfig& config) {
  const std::filesystem::path dir(config.out_dir);
  FigureManifest manifest;
  manifest.figure = rendered.figure;
  manifest.config = rendered.config;
  manifest.notes = rendered.notes;
  for (const auto& f : rendered.files) {
    write_file(dir / f.name, f.content);
    manifest.files.push_back({f.name, sha256_hex(f.content)});
  }
  if (config.formats.count(Format::Json))
    write_file(dir / (rendered.name + "_manifest.json"), manifest.to_json().dump(2) + "\n");
  return manifest;
}

FigureManifest run_figure(const std::string& id, const RunConfig& config) {
  return write_rendered(render_figure(id, config), config);
}

FigureManifest run_sweep(const RunConfig& config) {
  return write_rendered(render_sweep(config), config);
}

}  // namespace qbcap::cli
