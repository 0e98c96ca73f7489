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

#pragma once

// Drivers behind the command-line subcommands. Each returns plain data so
// the CLI stays a thin formatting layer and tests can call them directly.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "qautomata/io.hpp"
#include "qautomata/tolerances.hpp"

namespace qautomata {

struct AnalysisResult {
  ValidationReport validation;
  Index m = 0;
  Index dim_recurrent = 0;
  Index dim_decaying = 0;
  std::vector<std::pair<Index, Index>> blocks;  // (m_i, d_i)
  Index sum_mi_squared = 0;
  bool check_bn = false;
  EnclosureDecomposition decomposition;
};

AnalysisResult analyze(const KrausChannel& ch, std::uint64_t seed, const Tolerances& tol = {});

/// {m, dim_R, dim_D, blocks: [{m_i, d_i}], sum_mi_squared, check_bn, ...}
json analysis_to_json(const AnalysisResult& r, bool include_decomposition);

/// `steps` evenly spaced points from start to end inclusive.
struct GridSpec {
  double start = 0.05;
  double end = 0.95;
  int steps = 19;

  std::vector<double> points() const;
  /// "start:end:steps"; throws InvalidInput.
  static GridSpec parse(const std::string& text);
};

struct SweepResult {
  std::vector<double> p_grid;
  std::vector<Index> fix_dims;
  std::vector<double> f_values;
  double max_adjacent_jump = 0.0;
  /// fix_dims agree at every grid point strictly inside (0,1).
  bool constant_dim = true;
  // Endpoints, evaluated separately from the grid.
  double f_at_zero = 0.0;
  double f_at_one = 0.0;
  Index fix_dim_at_zero = 0;
  Index fix_dim_at_one = 0;
};

/// Classical automata are swept through their diagonal quantum embedding.
/// A failure at a grid point is rethrown with the offending p in the message.
SweepResult sweep(const CoinAutomaton& a, const GridSpec& grid, const Tolerances& tol = {});

/// Header "p,fix_dim,f", one row per grid point (17 significant digits),
/// then a single '#'-prefixed summary line.
void write_sweep_csv(std::ostream& out, const SweepResult& r);
json sweep_to_json(const SweepResult& r);

std::string format_equivalence(const EquivalenceReport& report);
json equivalence_to_json(const EquivalenceReport& report);

struct SimulationSummary {
  int runs = 0;
  std::int64_t steps = 0;
  double p = 0.0;
  double mean = 0.0;
  double standard_error = 0.0;
  double f_T = 0.0;  // averaged-channel value at the same T
};

/// `runs` trajectories with seeds seed, seed+1, ...
SimulationSummary simulate_many(const QuantumCoinAutomaton& a, double p, std::int64_t steps,
                                int runs, std::uint64_t seed);
json simulation_to_json(const SimulationSummary& s);

std::string format_double(double x);

}  // namespace qautomata
