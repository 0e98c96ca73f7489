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

#include "qautomata/experiments.hpp"

#include <cmath>
#include <optional>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "qautomata/errors.hpp"
#include "qautomata/fixed_points.hpp"

namespace qautomata {

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

AnalysisResult analyze(const KrausChannel& ch, std::uint64_t seed, const Tolerances& tol) {
  AnalysisResult r{validate(ch), 0, 0, 0, {}, 0, false,
                   minimal_enclosure_decomposition(ch, seed, tol)};
  r.m = fix_space(ch, tol.rank).m();
  r.dim_decaying = r.decomposition.decaying.dim();
  r.dim_recurrent = ch.dim() - r.dim_decaying;
  for (const EnclosureBlock& b : r.decomposition.blocks) {
    r.blocks.emplace_back(b.multiplicity(), b.block_dim());
  }
  r.sum_mi_squared = r.decomposition.sum_squared_multiplicities();
  r.check_bn = r.sum_mi_squared == r.m;
  return r;
}

json analysis_to_json(const AnalysisResult& r, bool include_decomposition) {
  json blocks = json::array();
  for (const auto& [m, d] : r.blocks) blocks.push_back(json{{"m_i", m}, {"d_i", d}});
  json out{{"m", r.m},
           {"dim_R", r.dim_recurrent},
           {"dim_D", r.dim_decaying},
           {"blocks", std::move(blocks)},
           {"sum_mi_squared", r.sum_mi_squared},
           {"check_bn", r.check_bn},
           {"tp_residual", r.validation.tp_residual},
           {"cp_min_choi_eigenvalue", r.validation.cp_min_choi_eigenvalue}};
  if (include_decomposition) out["decomposition"] = decomposition_to_json(r.decomposition);
  return out;
}

std::vector<double> GridSpec::points() const {
  if (steps < 2) throw InvalidInput("grid needs at least 2 points");
  if (!(start >= 0.0 && end <= 1.0 && start < end)) {
    throw InvalidInput("grid must satisfy 0 <= start < end <= 1");
  }
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(steps));
  for (int k = 0; k < steps; ++k) {
    out.push_back(start + (end - start) * k / static_cast<double>(steps - 1));
  }
  out.back() = end;
  return out;
}

GridSpec GridSpec::parse(const std::string& text) {
  GridSpec g;
  std::istringstream in(text);
  char c1 = 0, c2 = 0;
  if (!(in >> g.start >> c1 >> g.end >> c2 >> g.steps) || c1 != ':' || c2 != ':' ||
      !(in >> std::ws).eof()) {
    throw InvalidInput("grid must look like start:end:steps, got \"" + text + "\"");
  }
  g.points();
  return g;
}

namespace {

struct PointValue {
  Index fix_dim = 0;
  double f = 0.0;
};

PointValue evaluate(const QuantumCoinAutomaton& a, double p, const Tolerances& tol) {
  try {
    const KrausChannel ch = averaged_channel(a, p);
    return {fix_space(ch, tol.rank).m(), f_limit(a, p, tol).f_value};
  } catch (const NumericalFailure& e) {
    throw NumericalFailure("sweep failed at p = " + format_double(p) + ": " + e.what());
  } catch (const InvalidInput& e) {
    throw InvalidInput("sweep failed at p = " + format_double(p) + ": " + e.what());
  }
}

}  // namespace

SweepResult sweep(const CoinAutomaton& automaton, const GridSpec& grid, const Tolerances& tol) {
  const QuantumCoinAutomaton a =
      std::holds_alternative<QuantumCoinAutomaton>(automaton)
          ? std::get<QuantumCoinAutomaton>(automaton)
          : embed_classical(std::get<ClassicalCoinAutomaton>(automaton));
  SweepResult r;
  r.p_grid = grid.points();
  std::optional<Index> interior_dim;
  for (double p : r.p_grid) {
    const PointValue v = evaluate(a, p, tol);
    r.fix_dims.push_back(v.fix_dim);
    r.f_values.push_back(v.f);
    if (p > 0.0 && p < 1.0) {
      if (interior_dim && *interior_dim != v.fix_dim) r.constant_dim = false;
      interior_dim = v.fix_dim;
    }
  }
  for (std::size_t k = 1; k < r.f_values.size(); ++k) {
    r.max_adjacent_jump = std::max(r.max_adjacent_jump, std::abs(r.f_values[k] - r.f_values[k - 1]));
  }
  const PointValue zero = evaluate(a, 0.0, tol);
  const PointValue one = evaluate(a, 1.0, tol);
  r.f_at_zero = zero.f;
  r.fix_dim_at_zero = zero.fix_dim;
  r.f_at_one = one.f;
  r.fix_dim_at_one = one.fix_dim;
  return r;
}

void write_sweep_csv(std::ostream& out, const SweepResult& r) {
  out << "p,fix_dim,f\n";
  for (std::size_t k = 0; k < r.p_grid.size(); ++k) {
    out << format_double(r.p_grid[k]) << ',' << r.fix_dims[k] << ','
        << format_double(r.f_values[k]) << '\n';
  }
  out << "# max_adjacent_jump=" << format_double(r.max_adjacent_jump)
      << ",constant_dim=" << (r.constant_dim ? "true" : "false")
      << ",f_at_0=" << format_double(r.f_at_zero) << ",f_at_1=" << format_double(r.f_at_one)
      << ",fix_dim_at_0=" << r.fix_dim_at_zero << ",fix_dim_at_1=" << r.fix_dim_at_one << '\n';
}

json sweep_to_json(const SweepResult& r) {
  return json{{"p_grid", r.p_grid},
              {"fix_dims", r.fix_dims},
              {"f_values", r.f_values},
              {"max_adjacent_jump", r.max_adjacent_jump},
              {"constant_dim", r.constant_dim},
              {"f_at_0", r.f_at_zero},
              {"f_at_1", r.f_at_one},
              {"fix_dim_at_0", r.fix_dim_at_zero},
              {"fix_dim_at_1", r.fix_dim_at_one}};
}

namespace {

std::string format_complex(Complex z) {
  return "(" + format_double(z.real()) + ", " + format_double(z.imag()) + ")";
}

json matches_to_json(const std::vector<ProportionalMatch>& matches) {
  json out = json::array();
  for (const ProportionalMatch& m : matches) {
    out.push_back(json{{"from", m.from}, {"to", m.to}, {"factor", {m.factor.real(), m.factor.imag()}}});
  }
  return out;
}

}  // namespace

std::string format_equivalence(const EquivalenceReport& report) {
  std::ostringstream out;
  out << "equivalent: " << (report.equivalent ? "true" : "false") << '\n';
  for (const ProportionalMatch& m : report.forward) {
    out << "  a[" << m.from << "] = " << format_complex(m.factor) << " * b[" << m.to << "]\n";
  }
  for (const ProportionalMatch& m : report.backward) {
    out << "  b[" << m.from << "] = " << format_complex(m.factor) << " * a[" << m.to << "]\n";
  }
  if (report.unmatched) {
    out << "  unmatched: " << (report.unmatched->first == 0 ? "a[" : "b[")
        << report.unmatched->second << "] has no proportional partner\n";
  }
  return out.str();
}

json equivalence_to_json(const EquivalenceReport& report) {
  json out{{"equivalent", report.equivalent},
           {"forward", matches_to_json(report.forward)},
           {"backward", matches_to_json(report.backward)}};
  if (report.unmatched) {
    out["unmatched"] = json{{"side", report.unmatched->first == 0 ? "a" : "b"},
                            {"index", report.unmatched->second}};
  }
  return out;
}

SimulationSummary simulate_many(const QuantumCoinAutomaton& a, double p, std::int64_t steps,
                                int runs, std::uint64_t seed) {
  if (runs < 2) throw InvalidInput("simulate: need at least 2 runs for a standard error");
  SimulationSummary s;
  s.runs = runs;
  s.steps = steps;
  s.p = p;
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(runs));
  for (int k = 0; k < runs; ++k) {
    values.push_back(simulate_trajectory(a, p, steps, seed + static_cast<std::uint64_t>(k)));
  }
  double sum = 0.0;
  for (double v : values) sum += v;
  s.mean = sum / runs;
  double ss = 0.0;
  for (double v : values) ss += (v - s.mean) * (v - s.mean);
  s.standard_error = std::sqrt(ss / (runs - 1)) / std::sqrt(static_cast<double>(runs));
  s.f_T = f_T(a, p, steps);
  return s;
}

json simulation_to_json(const SimulationSummary& s) {
  return json{{"p", s.p},   {"steps", s.steps}, {"runs", s.runs}, {"mean", s.mean},
              {"standard_error", s.standard_error}, {"f_T", s.f_T}};
}

}  // namespace qautomata
