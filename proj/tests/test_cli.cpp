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

#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "qbcap/cli/app.hpp"
#include "qbcap/cli/config.hpp"
#include "qbcap/cli/figures.hpp"
#include "qbcap/cli/output.hpp"

using namespace qbcap;
using namespace qbcap::cli;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "qbcap");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("qbcap_test_" + name);
  fs::remove_all(dir);
  return dir;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

struct Csv {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::size_t col(const std::string& name) const {
    for (std::size_t i = 0; i < header.size(); ++i)
      if (header[i] == name) return i;
    FAIL("missing column " << name);
    return 0;
  }
  double num(std::size_t row, const std::string& name) const {
    return std::stod(rows[row][col(name)]);
  }
};

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> cells;
  std::stringstream s(line);
  std::string cell;
  while (std::getline(s, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

Csv parse_csv(const std::string& text) {
  Csv csv;
  std::stringstream s(text);
  std::string line;
  std::getline(s, line);
  csv.header = split(line);
  while (std::getline(s, line)) csv.rows.push_back(split(line));
  return csv;
}

const std::string* find_file(const Rendered& r, const std::string& name) {
  for (const auto& f : r.files)
    if (f.name == name) return &f.content;
  return nullptr;
}

}  // namespace

TEST_CASE("doubles are written as shortest round-trip decimals") {
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(0.78) == "0.78");
  CHECK(format_double(0.0) == "0");
  CHECK(format_double(1.0) == "1");
  for (double v : {0.7799999999999998, 1e-201, 2.0 / 3.0, -0.0104}) CHECK(std::stod(format_double(v)) == v);
  CHECK(format_optional(std::nullopt).empty());
}

TEST_CASE("grid specs") {
  const auto g = parse_grid("0:1:101").values();
  REQUIRE(g.size() == 101);
  CHECK(g.front() == 0.0);
  CHECK(g.back() == 1.0);
  CHECK(format_double(g[7]) == "0.07");
  const auto interior = kInteriorGrid.values();
  CHECK(interior.size() == 99);
  CHECK(interior.front() == 0.01);
  CHECK(interior.back() == 0.99);
  CHECK(format_double(interior[28]) == "0.29");
  CHECK(parse_grid("0.5:0.5:1").values() == std::vector<double>{0.5});
  for (const char* bad : {"0:1", "1:0:5", "0:1:0", "a:1:3", "0:1:2:3"})
    CHECK_THROWS_AS(parse_grid(bad), UsageError);
}

TEST_CASE("n lists and formats") {
  CHECK(parse_n_list("1,2,10,100") == std::vector<unsigned>{1, 2, 10, 100});
  CHECK_THROWS_AS(parse_n_list("1,,2"), UsageError);
  CHECK_THROWS_AS(parse_n_list("0"), UsageError);
  CHECK(parse_formats("csv,svg") == std::set<Format>{Format::Csv, Format::Svg});
  CHECK_THROWS_AS(parse_formats("png"), UsageError);
}

TEST_CASE("config documents") {
  RunConfig c;
  merge_json(c, nlohmann::json::parse(R"({"channel": "dep", "c1": 0.4, "p_grid": "0:1:5",
                                           "n": [1, 3], "formats": ["csv"], "sides": "one"})"));
  CHECK(c.channel == ChannelKind::Depolarizing);
  CHECK(c.coefficients() == BellCoefficients{0.4, 0.3, 0.1});
  CHECK(c.p_grid->count == 5);
  CHECK(*c.n_list == std::vector<unsigned>{1, 3});
  CHECK(c.formats == std::set<Format>{Format::Csv});
  CHECK_THROWS_AS(merge_json(c, nlohmann::json::parse(R"({"colour": 1})")), UsageError);
  CHECK_THROWS_AS(merge_json(c, nlohmann::json::parse(R"({"c1": "high"})")), UsageError);
}

TEST_CASE("flags override the config file") {
  const fs::path dir = scratch("config");
  fs::create_directories(dir);
  const fs::path file = dir / "run.json";
  std::ofstream(file) << R"({"channel": "bf", "c1": 0.6, "p_grid": "0.5:0.5:1", "out": ")"
                      << (dir / "ignored").string() << R"("})";
  const Run r = run({"sweep", "--config", file.string(), "--channel", "pf", "--out",
                     (dir / "out").string(), "--format", "csv"});
  REQUIRE(r.code == 0);
  const Csv csv = parse_csv(slurp(dir / "out" / "sweep.csv"));
  REQUIRE(csv.rows.size() == 1);
  CHECK(csv.rows[0][csv.col("channel")] == "pf");
  // c = (0.6, 0.3, 0.1) under pf at p = 0.5: c' = (0.15, 0.075, 0.1), branch 132.
  CHECK(std::abs(csv.num(0, "capacity_general") - 0.24) <= 1e-12);
  CHECK_FALSE(fs::exists(dir / "ignored"));
}

TEST_CASE("sha256") {
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}

TEST_CASE("figure 1b") {
  const fs::path dir = scratch("fig1b");
  const Run r = run({"figure", "1b", "--out", dir.string()});
  REQUIRE(r.code == 0);
  const std::string text = slurp(dir / "fig1b.csv");
  CHECK(text.find('\r') == std::string::npos);
  CHECK(text.back() == '\n');
  const Csv csv = parse_csv(text);
  CHECK(csv.header == std::vector<std::string>{"p", "C_bf", "C_dep", "C_adc", "C_gad",
                                               "C_bf_general", "C_dep_general", "C_adc_general",
                                               "C_gad_general"});
  REQUIRE(csv.rows.size() == 101);
  CHECK(csv.rows[0][0] == "0");
  for (const char* col : {"C_bf", "C_dep", "C_adc", "C_gad", "C_bf_general", "C_dep_general",
                          "C_adc_general", "C_gad_general"})
    CHECK(std::abs(csv.num(0, col) - 0.78) <= 1e-12);
  for (const char* curve : {"bf", "dep", "adc", "gad"})
    CHECK(fs::exists(dir / (std::string("fig1b_") + curve + ".csv")));

  // Manifest checksums match the files on disk.
  const auto manifest = nlohmann::json::parse(slurp(dir / "fig1b_manifest.json"));
  CHECK(manifest.at("figure") == "1b");
  CHECK(manifest.at("config").at("c") == nlohmann::json{0.5, 0.3, 0.1});
  CHECK(manifest.at("files").size() == 5);
  for (const auto& f : manifest.at("files")) {
    const fs::path path = dir / f.at("path").get<std::string>();
    REQUIRE(fs::exists(path));
    CHECK(sha256_hex(slurp(path)) == f.at("sha256").get<std::string>());
  }
  CHECK_FALSE(fs::exists(dir / "fig1b.svg"));
}

TEST_CASE("figure 3b writes one record file per n") {
  const Rendered r = render_figure("3b", RunConfig{});
  for (unsigned n : {1U, 2U, 3U, 10U, 100U}) {
    CAPTURE(n);
    const std::string* text = find_file(r, "fig3b_n" + std::to_string(n) + ".csv");
    REQUIRE(text != nullptr);
    const Csv csv = parse_csv(*text);
    REQUIRE(csv.rows.size() == 101);
    for (std::size_t i = 0; i < csv.rows.size(); ++i) {
      const double p = csv.num(i, "p");
      const double t = 1 - 4 * p / 3;
      CHECK(std::abs(csv.num(i, "capacity_closed") - 0.78 * std::pow(t, n)) <= 1e-12);
      CHECK(std::abs(csv.num(i, "capacity_general") - 0.78 * std::pow(std::abs(t), n)) <= 1e-12);
    }
  }
}

TEST_CASE("figure 5 surface") {
  const Rendered r = render_figure("5", RunConfig{});
  const std::string* text = find_file(r, "fig5.csv");
  REQUIRE(text != nullptr);
  const Csv csv = parse_csv(*text);
  REQUIRE(csv.rows.size() == 101 * 101);
  const std::size_t last = csv.rows.size() - 1;
  CHECK(csv.num(last, "p") == 1.0);
  CHECK(csv.num(last, "q") == 1.0);
  CHECK(std::abs(csv.num(last, "capacity_general") - 0.6) <= 1e-12);
  CHECK(std::abs(csv.num(last, "capacity_closed") - 0.6) <= 1e-12);
}

TEST_CASE("figure 6 carries a note on its n dependence") {
  RunConfig c;
  c.p_grid = parse_grid("0:1:11");
  c.q_grid = parse_grid("0:1:11");
  const Rendered r = render_figure("6", c);
  CHECK(find_file(r, "fig6_n2.csv") != nullptr);
  CHECK(find_file(r, "fig6_n100.csv") != nullptr);
  REQUIRE(r.notes.size() == 1);
}

TEST_CASE("every figure pairs closed and general capacities") {
  for (const auto& id : figure_ids()) {
    CAPTURE(id);
    RunConfig c;
    c.q_grid = parse_grid("0:1:21");
    if (id == "5" || id == "6") c.p_grid = parse_grid("0:1:21");
    const Rendered r = render_figure(id, c);
    REQUIRE_FALSE(r.files.empty());
    for (const auto& f : r.files) {
      CAPTURE(f.name);
      const Csv csv = parse_csv(f.content);
      const bool records = std::find(csv.header.begin(), csv.header.end(), "branch") != csv.header.end();
      if (!records) {
        // Wide tables carry C_x next to C_x_general.
        for (const auto& h : csv.header)
          if (h.rfind("C_", 0) == 0 && h.find("_general") == std::string::npos)
            CHECK(csv.col(h + "_general") > 0);
        continue;
      }
      csv.col("capacity_closed");
      csv.col("capacity_general");
      for (std::size_t i = 0; i < csv.rows.size(); ++i) {
        if (csv.rows[i][csv.col("branch")].empty()) continue;
        CHECK(std::abs(csv.num(i, "capacity_closed") - csv.num(i, "capacity_general")) <= 1e-12);
      }
    }
  }
}

TEST_CASE("figure output is reproducible") {
  const Rendered a = render_figure("1b", RunConfig{});
  const Rendered b = render_figure("1b", RunConfig{});
  REQUIRE(a.files.size() == b.files.size());
  for (std::size_t i = 0; i < a.files.size(); ++i) CHECK(a.files[i].content == b.files[i].content);
}

TEST_CASE("svg output") {
  const fs::path dir = scratch("svg");
  REQUIRE(run({"figure", "5", "--out", dir.string(), "--format", "svg", "--p-grid", "0:1:11",
               "--q-grid", "0:1:11"})
              .code == 0);
  const std::string svg = slurp(dir / "fig5.svg");
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK_FALSE(fs::exists(dir / "fig5.csv"));
}

TEST_CASE("sweep dep reports sudden death at 0.75") {
  const fs::path dir = scratch("sweep_dep");
  REQUIRE(run({"sweep", "--channel", "dep", "--out", dir.string()}).code == 0);
  const Csv csv = parse_csv(slurp(dir / "sweep.csv"));
  CHECK(csv.header == std::vector<std::string>{"channel", "sides", "p", "q", "n", "capacity_closed",
                                               "capacity_general", "lambda0", "lambda1", "lambda2",
                                               "lambda3", "branch", "deviation_flag"});
  REQUIRE(csv.rows.size() == 99);
  for (std::size_t i = 0; i < csv.rows.size(); ++i)
    CHECK((csv.rows[i][csv.col("deviation_flag")] == "true") == (csv.num(i, "p") > 0.75));

  const auto report = nlohmann::json::parse(slurp(dir / "sweep_phenomena.json"));
  REQUIRE(report.at("sudden_death").size() == 1);
  const auto& death = report.at("sudden_death")[0];
  CHECK(std::abs(death.at("root").get<double>() - 0.75) <= 1e-6);
  CHECK(death.at("general_stays_below") == false);
  CHECK(death.contains("deviation"));
  CHECK(report.at("deviations").at("flagged") == 24);
}

TEST_CASE("sweep over n reports the frozen bf capacity") {
  const fs::path dir = scratch("sweep_bf");
  REQUIRE(run({"sweep", "--channel", "bf", "--p-grid", "0.5:0.5:1", "--n", "1,2,3,4,5,10,50,100",
               "--out", dir.string()})
              .code == 0);
  const auto report = nlohmann::json::parse(slurp(dir / "sweep_phenomena.json"));
  REQUIRE(report.at("frozen").size() == 1);
  CHECK(std::abs(report.at("frozen")[0].at("value").get<double>() - 0.6) <= 1e-8);
  CHECK(report.at("frozen")[0].at("limit") == "nonzero");
}

TEST_CASE("exit codes") {
  const fs::path dir = scratch("exit");
  const Run unphysical = run({"sweep", "--c1", "0.9", "--c2", "0.9", "--c3", "0.9", "--out", dir.string()});
  CHECK(unphysical.code == kExitUnphysical);
  CHECK(unphysical.err.find("lambda0 = -0.425") != std::string::npos);

  CHECK(run({"figure", "7", "--out", dir.string()}).code == kExitBadArguments);
  CHECK(run({"figure", "1b", "--p-grid", "0:1"}).code == kExitBadArguments);
  CHECK(run({"sweep", "--channel", "dep", "--sides", "two"}).code == kExitBadArguments);
  CHECK(run({"sweep", "--epsA", "0.1", "--epsB", "0.3"}).code == kExitBadArguments);
  CHECK(run({"sweep", "--bogus"}).code == kExitBadArguments);
  CHECK(run({}).code == kExitBadArguments);

  fs::create_directories(dir);
  std::ofstream(dir / "plain") << "x";
  CHECK(run({"figure", "1b", "--out", (dir / "plain" / "sub").string()}).code == kExitIoError);
  CHECK(run({"sweep", "--config", (dir / "missing.json").string()}).code == kExitIoError);
}

TEST_CASE("verify self-test names the planted failure") {
  const Run r = run({"verify", "--self-test", "--trials", "20", "--criteria", "2"});
  CHECK(r.code == kExitVerificationFailed);
  CHECK(r.out.find("table2.bf") != std::string::npos);
  CHECK(r.out.find("FAILED: C02") != std::string::npos);
}

TEST_CASE("verify smoke on the attainable criteria") {
  const Run r = run({"verify", "--trials", "1", "--criteria", "1,2,3,4,5,7,8,9,10"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("9/9 criteria passed") != std::string::npos);
}
