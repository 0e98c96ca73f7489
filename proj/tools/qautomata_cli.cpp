// Copyright 2026 The qautomata Authors
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


// qautomata: command-line front end.
//
//   qautomata analyze  CHANNEL.json [--seed N] [--decomposition]
//   qautomata sweep    AUTOMATON.json [--grid a:b:n] [--format csv|json]
//   qautomata equiv    A.json B.json [--format text|json]
//   qautomata simulate AUTOMATON.json --p P --steps T [--runs R] [--seed N]
//   qautomata random   --dim D --kraus R [--seed N]
//   qautomata mix      A.json B.json --p P
//
// Global flags: --tol (rank cutoff, default 1e-9) and --out (default stdout).
// Exit codes: 0 success, 1 invalid input, 2 numerical failure.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "qautomata/automaton.hpp"
#include "qautomata/channel.hpp"
#include "qautomata/enclosures.hpp"
#include "qautomata/errors.hpp"
#include "qautomata/experiments.hpp"
#include "qautomata/io.hpp"
#include "qautomata/random.hpp"

namespace {

using namespace qautomata;

constexpr int kExitInvalidInput = 1;
constexpr int kExitNumerical = 2;

struct Options {
  double tol = 1e-9;
  std::string out;
  std::uint64_t seed = 0;
  std::string format;  // empty means the subcommand default

  std::string file_a;
  std::string file_b;
  std::string grid = "0.05:0.95:19";
  bool with_decomposition = false;
  double p = 0.5;
  std::int64_t steps = 1000;
  int runs = 200;
  Index dim = 2;
  Index num_kraus = 2;
};

Tolerances tolerances(const Options& o) {
  if (!(o.tol > 0.0 && o.tol < 1.0)) throw InvalidInput("--tol must lie in (0, 1)");
  Tolerances t;
  t.rank = o.tol;
  return t;
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(o.out);
  if (!file) throw InvalidInput("cannot write " + o.out);
  file << text;
}

KrausChannel load_channel(const std::string& path) {
  return channel_from_json(read_json_file(path));
}

QuantumCoinAutomaton load_quantum(const std::string& path) {
  const CoinAutomaton a = automaton_from_json(read_json_file(path));
  if (const auto* q = std::get_if<QuantumCoinAutomaton>(&a)) return *q;
  return embed_classical(std::get<ClassicalCoinAutomaton>(a));
}

void run_analyze(const Options& o) {
  const AnalysisResult r = analyze(load_channel(o.file_a), o.seed, tolerances(o));
  emit(o, dump(analysis_to_json(r, o.with_decomposition)));
}

void run_sweep(const Options& o) {
  const SweepResult r =
      sweep(automaton_from_json(read_json_file(o.file_a)), GridSpec::parse(o.grid), tolerances(o));
  if (o.format == "json") {
    emit(o, dump(sweep_to_json(r)));
  } else {
    std::ostringstream csv;
    write_sweep_csv(csv, r);
    emit(o, csv.str());
  }
}

void run_equiv(const Options& o) {
  const EquivalenceReport report =
      equivalence_report(load_channel(o.file_a), load_channel(o.file_b));
  emit(o, o.format == "json" ? dump(equivalence_to_json(report)) : format_equivalence(report));
}

void run_simulate(const Options& o) {
  const SimulationSummary s = simulate_many(load_quantum(o.file_a), o.p, o.steps, o.runs, o.seed);
  emit(o, dump(simulation_to_json(s)));
}

void run_random(const Options& o) {
  if (o.dim < 1 || o.num_kraus < 1) throw InvalidInput("--dim and --kraus must be at least 1");
  emit(o, dump(channel_to_json(random_channel(o.dim, o.num_kraus, o.seed))));
}

void run_mix(const Options& o) {
  emit(o, dump(channel_to_json(mix(load_channel(o.file_a), load_channel(o.file_b), o.p))));
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Fixed points of quantum channels and coin automata"};
  app.require_subcommand(1);
  app.fallthrough();
  app.option_defaults()->always_capture_default();
  app.add_option("--tol", o.tol, "Rank tolerance for eigenvalue-1 decisions");
  app.add_option("--out", o.out, "Write the result here instead of stdout");

  auto* analyze_cmd = app.add_subcommand("analyze", "Fixed-point and enclosure structure of a channel");
  analyze_cmd->add_option("channel", o.file_a, "Channel JSON")->required()->check(CLI::ExistingFile);
  analyze_cmd->add_option("--seed", o.seed, "Seed for the randomised decomposition");
  analyze_cmd->add_flag("--decomposition", o.with_decomposition, "Include the enclosure bases");

  auto* sweep_cmd = app.add_subcommand("sweep", "dim Fix and f over a grid of p");
  sweep_cmd->add_option("automaton", o.file_a, "Automaton JSON")->required()->check(CLI::ExistingFile);
  sweep_cmd->add_option("--grid", o.grid, "start:end:steps");
  sweep_cmd->add_option("--format", o.format, "csv or json")
      ->default_str("csv")
      ->check(CLI::IsMember({"csv", "json"}));

  auto* equiv_cmd = app.add_subcommand("equiv", "Combinatorial equivalence of two Kraus lists");
  equiv_cmd->add_option("a", o.file_a, "Channel JSON")->required()->check(CLI::ExistingFile);
  equiv_cmd->add_option("b", o.file_b, "Channel JSON")->required()->check(CLI::ExistingFile);
  equiv_cmd->add_option("--format", o.format, "text or json")
      ->default_str("text")
      ->check(CLI::IsMember({"text", "json"}));

  auto* simulate_cmd = app.add_subcommand("simulate", "Monte Carlo trajectories against f_T");
  simulate_cmd->add_option("automaton", o.file_a, "Automaton JSON")->required()->check(CLI::ExistingFile);
  simulate_cmd->add_option("--p", o.p, "Coin bias");
  simulate_cmd->add_option("--steps", o.steps, "Trajectory length T");
  simulate_cmd->add_option("--runs", o.runs, "Number of trajectories");
  simulate_cmd->add_option("--seed", o.seed, "Seed of the first trajectory");

  auto* random_cmd = app.add_subcommand("random", "Random channel in Kraus form");
  random_cmd->add_option("--dim", o.dim, "Hilbert space dimension");
  random_cmd->add_option("--kraus", o.num_kraus, "Number of Kraus operators");
  random_cmd->add_option("--seed", o.seed, "RNG seed");

  auto* mix_cmd = app.add_subcommand("mix", "Kraus form of (1-p) A + p B");
  mix_cmd->add_option("a", o.file_a, "Channel JSON")->required()->check(CLI::ExistingFile);
  mix_cmd->add_option("b", o.file_b, "Channel JSON")->required()->check(CLI::ExistingFile);
  mix_cmd->add_option("--p", o.p, "Weight of B");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalidInput;
  }

  try {
    if (*analyze_cmd) run_analyze(o);
    if (*sweep_cmd) run_sweep(o);
    if (*equiv_cmd) run_equiv(o);
    if (*simulate_cmd) run_simulate(o);
    if (*random_cmd) run_random(o);
    if (*mix_cmd) run_mix(o);
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: malformed JSON: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const NumericalFailure& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  }
  return 0;
}
