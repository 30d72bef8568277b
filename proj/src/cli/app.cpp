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

#include "qbcap/cli/app.hpp"

#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "qbcap/cli/config.hpp"
#include "qbcap/cli/figures.hpp"
#include "qbcap/cli/verification.hpp"

namespace qbcap::cli {

namespace {

// Raw flag values; applied on top of the config file.
struct Flags {
  std::optional<double> c1, c2, c3, eps_a, eps_b;
  std::optional<std::string> channel, sides, p_grid, q_grid, n_list, out, formats, criteria;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> trials;
  std::string config_file;
  bool self_test = false;
};

void add_common(CLI::App* cmd, Flags& f) {
  cmd->add_option("--c1", f.c1, "Bell coefficient c1");
  cmd->add_option("--c2", f.c2, "Bell coefficient c2");
  cmd->add_option("--c3", f.c3, "Bell coefficient c3");
  cmd->add_option("--epsA", f.eps_a, "Level splitting of qubit A");
  cmd->add_option("--epsB", f.eps_b, "Level splitting of qubit B");
  cmd->add_option("--p-grid", f.p_grid, "p grid as start:stop:count");
  cmd->add_option("--q-grid", f.q_grid, "q grid as start:stop:count");
  cmd->add_option("--n", f.n_list, "Comma-separated pass counts");
  cmd->add_option("--seed", f.seed, "Random seed");
  cmd->add_option("--out", f.out, "Output directory");
  cmd->add_option("--format", f.formats, "Comma-separated subset of csv,json,svg");
  cmd->add_option("--config", f.config_file, "JSON config file; flags override it");
}

RunConfig resolve(const Flags& f, Command command) {
  RunConfig c;
  if (!f.config_file.empty()) c = load_config_file(f.config_file, c);
  c.command = command;
  if (f.c1) c.c1 = f.c1;
  if (f.c2) c.c2 = f.c2;
  if (f.c3) c.c3 = f.c3;
  if (f.eps_a) c.eps_a = *f.eps_a;
  if (f.eps_b) c.eps_b = *f.eps_b;
  if (f.channel) {
    auto kind = parse_channel(*f.channel);
    if (!kind) throw UsageError("unknown channel '" + *f.channel + "' (bf, pf, bpf, dep, gad, adc)");
    c.channel = *kind;
  }
  if (f.sides) {
    auto sides = parse_sides(*f.sides);
    if (!sides) throw UsageError("--sides must be one or two");
    c.sides = *sides;
  }
  if (f.p_grid) c.p_grid = parse_grid(*f.p_grid);
  if (f.q_grid) c.q_grid = parse_grid(*f.q_grid);
  if (f.n_list) c.n_list = parse_n_list(*f.n_list);
  if (f.seed) c.seed = *f.seed;
  if (f.trials) c.trials = *f.trials;
  if (f.out) c.out_dir = *f.out;
  if (f.formats) c.formats = parse_formats(*f.formats);
  return c;
}

std::set<int> parse_criteria(const std::string& text) {
  std::set<int> out;
  for (unsigned id : parse_n_list(text)) {
    if (id > static_cast<unsigned>(kCriterionCount)) throw UsageError("criteria range over 1..10");
    out.insert(static_cast<int>(id));
  }
  return out;
}

void summarize(const FigureManifest& m, const RunConfig& c, std::ostream& out) {
  for (const auto& f : m.files) out << f.path << "  " << f.sha256 << "\n";
  if (c.formats.count(Format::Json))
    out << (m.figure == "sweep" ? "sweep" : "fig" + m.figure) << "_manifest.json\n";
  for (const auto& note : m.notes) out << "note: " << note << "\n";
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum battery capacity of Bell-diagonal states under Markovian noise", "qbcap"};
  app.require_subcommand(1);
  Flags f;
  std::string figure_id;

  auto* figure = app.add_subcommand("figure", "Write the data behind one figure");
  figure->add_option("id", figure_id, "Figure id (1a, 1b, 2a, 2b, 3a-3c, 4a-4f, 5, 6)")->required();
  add_common(figure, f);

  auto* sweep_cmd = app.add_subcommand("sweep", "Sweep one channel over p (and q) and n");
  add_common(sweep_cmd, f);
  sweep_cmd->add_option("--channel", f.channel, "bf, pf, bpf, dep, gad or adc");
  sweep_cmd->add_option("--sides", f.sides, "one or two");

  auto* verify_cmd = app.add_subcommand("verify", "Run the acceptance criteria");
  verify_cmd->add_option("--seed", f.seed, "Random seed");
  verify_cmd->add_option("--trials", f.trials, "Random tuples for the oracle crosscheck");
  verify_cmd->add_option("--criteria", f.criteria, "Comma-separated criterion ids");
  verify_cmd->add_option("--config", f.config_file, "JSON config file; flags override it");
  verify_cmd->add_flag("--self-test", f.self_test, "Plant a wrong coefficient map; must fail");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "qbcap: " << e.what() << "\n";
    return kExitBadArguments;
  }

  try {
    if (figure->parsed()) {
      const RunConfig c = resolve(f, Command::Figure);
      if (!is_figure_id(figure_id)) throw UsageError("unknown figure id '" + figure_id + "'");
      summarize(run_figure(figure_id, c), c, out);
      return kExitOk;
    }
    if (sweep_cmd->parsed()) {
      const RunConfig c = resolve(f, Command::Sweep);
      summarize(run_sweep(c), c, out);
      return kExitOk;
    }
    const RunConfig c = resolve(f, Command::Verify);
    VerifyOptions options;
    options.seed = c.seed;
    options.trials = c.trials;
    options.self_test = f.self_test;
    if (f.criteria) options.criteria = parse_criteria(*f.criteria);
    return run_verify(options, out);
  } catch (const Unphysical& e) {
    err << "qbcap: " << e.what() << "\n";
    return kExitUnphysical;
  } catch (const IoError& e) {
    err << "qbcap: " << e.what() << "\n";
    return kExitIoError;
  } catch (const Error& e) {
    err << "qbcap: " << e.what() << "\n";
    return kExitBadArguments;
  }
}

}  // namespace qbcap::cli
