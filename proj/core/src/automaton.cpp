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

#include "qautomata/automaton.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "qautomata/errors.hpp"
#include "qautomata/fixed_points.hpp"
#include "qautomata/random.hpp"

namespace qautomata {

namespace {

constexpr double kEffectTol = 1e-9;
constexpr double kStochasticTol = 1e-9;
constexpr double kNegativeEntryTol = 1e-12;

void require_probability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw InvalidProbability(std::string(what) + ": p = " + std::to_string(p) +
                             " is outside [0,1]");
  }
}

void require_stochastic(const RealMatrix& s, const char* name) {
  if (s.rows() != s.cols() || s.rows() == 0) {
    throw InvalidAutomaton(std::string(name) + " must be a nonempty square matrix");
  }
  if (!s.allFinite()) throw InvalidAutomaton(std::string(name) + " has a non-finite entry");
  if (s.minCoeff() < -kNegativeEntryTol) {
    throw InvalidAutomaton(std::string(name) + " has a negative entry");
  }
  const RealVector sums = s.colwise().sum().transpose();
  if ((sums.array() - 1.0).abs().maxCoeff() > kStochasticTol) {
    throw InvalidAutomaton(std::string(name) + " columns do not sum to 1");
  }
}

double fair_probability(const ComplexMatrix& e_fair, const ComplexMatrix& rho) {
  return (e_fair.adjoint() * rho).trace().real();
}

double clamp01(double x) { return std::clamp(x, 0.0, 1.0); }

}  // namespace

QuantumCoinAutomaton::QuantumCoinAutomaton(KrausChannel phi0, KrausChannel phi1,
                                           DensityOperator rho0, ComplexMatrix e_fair)
    : phi0_(std::move(phi0)),
      phi1_(std::move(phi1)),
      rho0_(std::move(rho0)),
      e_fair_(std::move(e_fair)) {
  const Index d = phi0_.dim();
  if (phi1_.dim() != d || rho0_.dim() != d || e_fair_.rows() != d || e_fair_.cols() != d) {
    throw DimensionMismatch("automaton components act on different dimensions");
  }
  if (max_abs(e_fair_ - e_fair_.adjoint()) > kEffectTol) {
    throw InvalidAutomaton("E_fair is not Hermitian");
  }
  const RealVector eig = hermitian_eig(e_fair_).values;
  if (eig(0) < -kEffectTol || eig(d - 1) > 1.0 + kEffectTol) {
    throw InvalidAutomaton("E_fair eigenvalues leave [0,1]");
  }
}

ClassicalCoinAutomaton::ClassicalCoinAutomaton(RealMatrix s0, RealMatrix s1, RealVector pi0,
                                               RealVector e_fair)
    : s0_(std::move(s0)), s1_(std::move(s1)), pi0_(std::move(pi0)), e_fair_(std::move(e_fair)) {
  require_stochastic(s0_, "S_0");
  require_stochastic(s1_, "S_1");
  const Index d = s0_.rows();
  if (s1_.rows() != d || pi0_.size() != d || e_fair_.size() != d) {
    throw DimensionMismatch("automaton components act on different dimensions");
  }
  if (pi0_.minCoeff() < -kNegativeEntryTol || std::abs(pi0_.sum() - 1.0) > kStochasticTol) {
    throw InvalidAutomaton("pi_0 is not a probability vector");
  }
  for (Index i = 0; i < d; ++i) {
    if (e_fair_(i) != 0.0 && e_fair_(i) != 1.0) {
      throw InvalidAutomaton("e_fair must be a 0-1 indicator");
    }
  }
}

const char* to_string(Decision decision) {
  switch (decision) {
    case Decision::kFair:
      return "Fair";
    case Decision::kBiased:
      return "Biased";
    case Decision::kIndecisive:
      return "Indecisive";
  }
  return "unknown";
}

Verdict make_verdict(double f, const VerdictThresholds& thresholds) {
  Verdict v;
  v.f_value = f;
  if (f >= thresholds.fair) {
    v.value = Decision::kFair;
  } else if (f <= thresholds.biased) {
    v.value = Decision::kBiased;
  } else {
    v.value = Decision::kIndecisive;
  }
  return v;
}

KrausChannel averaged_channel(const QuantumCoinAutomaton& a, double p) {
  require_probability(p, "averaged_channel");
  return mix(a.phi0(), a.phi1(), p);
}

double f_T(const QuantumCoinAutomaton& a, double p, std::int64_t steps) {
  const DensityOperator avg = cesaro_finite(averaged_channel(a, p), a.rho0(), steps);
  return clamp01(fair_probability(a.e_fair(), avg.matrix()));
}

Verdict f_limit(const QuantumCoinAutomaton& a, double p, const Tolerances& tol,
                const VerdictThresholds& thresholds) {
  const Superoperator limit = cesaro_limit(averaged_channel(a, p), tol);
  const ComplexMatrix rho_inf = limit.apply(a.rho0().matrix());
  return make_verdict(clamp01(fair_probability(a.e_fair(), rho_inf)), thresholds);
}

double simulate_trajectory(const QuantumCoinAutomaton& a, double p, std::int64_t steps,
                           std::uint64_t seed) {
  require_probability(p, "simulate_trajectory");
  if (steps < 1) throw InvalidInput("simulate_trajectory: T must be at least 1");
  Rng rng(seed);
  std::bernoulli_distribution coin(p);
  ComplexMatrix rho = a.rho0().matrix();
  double total = 0.0;
  for (std::int64_t t = 0; t < steps; ++t) {
    rho = qautomata::apply(coin(rng) ? a.phi1() : a.phi0(), rho);
    total += fair_probability(a.e_fair(), rho);
  }
  return clamp01(total / static_cast<double>(steps));
}

RealMatrix classical_mix(const RealMatrix& s0, const RealMatrix& s1, double p) {
  require_probability(p, "classical_mix");
  if (s0.rows() != s1.rows() || s0.cols() != s1.cols()) {
    throw DimensionMismatch("classical_mix: shapes differ");
  }
  return p * s1 + (1.0 - p) * s0;
}

Verdict classical_f_limit(const ClassicalCoinAutomaton& a, double p, const Tolerances& tol,
                          const VerdictThresholds& thresholds) {
  const RealMatrix sp = classical_mix(a.s0(), a.s1(), p);
  const ComplexMatrix limit = cesaro_projector(sp.cast<Complex>(), tol);
  const ComplexVector pi_inf = limit * a.pi0().cast<Complex>();
  const double f = a.e_fair().dot(pi_inf.real());
  return make_verdict(clamp01(f), thresholds);
}

CommunicationStructure communication_structure(const RealMatrix& s, double tol) {
  const Index d = s.rows();
  if (s.cols() != d) throw DimensionMismatch("communication_structure: S not square");
  std::vector<std::vector<Index>> succ(static_cast<std::size_t>(d));
  for (Index i = 0; i < d; ++i) {
    for (Index j = 0; j < d; ++j) {
      if (s(j, i) > tol) succ[static_cast<std::size_t>(i)].push_back(j);
    }
  }

  // Iterative Tarjan.
  const auto n = static_cast<std::size_t>(d);
  std::vector<Index> number(n, -1), low(n, 0), comp(n, -1);
  std::vector<bool> on_stack(n, false);
  std::vector<Index> stack;
  std::vector<std::vector<Index>> classes;
  Index counter = 0;
  for (Index root = 0; root < d; ++root) {
    if (number[static_cast<std::size_t>(root)] != -1) continue;
    std::vector<std::pair<Index, std::size_t>> frames{{root, 0}};
    number[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = counter++;
    stack.push_back(root);
    on_stack[static_cast<std::size_t>(root)] = true;
    while (!frames.empty()) {
      auto& [v, next] = frames.back();
      const auto vi = static_cast<std::size_t>(v);
      if (next < succ[vi].size()) {
        const Index w = succ[vi][next++];
        const auto wi = static_cast<std::size_t>(w);
        if (number[wi] == -1) {
          number[wi] = low[wi] = counter++;
          stack.push_back(w);
          on_stack[wi] = true;
          frames.emplace_back(w, 0);
        } else if (on_stack[wi]) {
          low[vi] = std::min(low[vi], number[wi]);
        }
        continue;
      }
      if (low[vi] == number[vi]) {
        std::vector<Index> cls;
        Index w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[static_cast<std::size_t>(w)] = false;
          comp[static_cast<std::size_t>(w)] = static_cast<Index>(classes.size());
          cls.push_back(w);
        } while (w != v);
        classes.push_back(std::move(cls));
      }
      const Index finished = v;
      frames.pop_back();
      if (!frames.empty()) {
        const auto parent = static_cast<std::size_t>(frames.back().first);
        low[parent] = std::min(low[parent], low[static_cast<std::size_t>(finished)]);
      }
    }
  }

  for (auto& cls : classes) std::sort(cls.begin(), cls.end());
  std::sort(classes.begin(), classes.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  for (std::size_t c = 0; c < classes.size(); ++c) {
    for (Index v : classes[c]) comp[static_cast<std::size_t>(v)] = static_cast<Index>(c);
  }

  CommunicationStructure out;
  out.closed.assign(classes.size(), true);
  for (Index i = 0; i < d; ++i) {
    for (Index j : succ[static_cast<std::size_t>(i)]) {
      if (comp[static_cast<std::size_t>(i)] != comp[static_cast<std::size_t>(j)]) {
        out.closed[static_cast<std::size_t>(comp[static_cast<std::size_t>(i)])] = false;
      }
    }
  }
  out.closed_classes = std::count(out.closed.begin(), out.closed.end(), true);
  out.classes = std::move(classes);
  return out;
}

Index classical_fix_dim(const RealMatrix& s, double tol) {
  return eigenspace_one(s.cast<Complex>(), tol).dim();
}

KrausChannel embed_stochastic(const RealMatrix& s) {
  const Index d = s.rows();
  std::vector<ComplexMatrix> ops;
  for (Index i = 0; i < d; ++i) {
    for (Index j = 0; j < d; ++j) {
      if (s(j, i) <= 0.0) continue;
      ComplexMatrix k = ComplexMatrix::Zero(d, d);
      k(j, i) = std::sqrt(s(j, i));
      ops.push_back(std::move(k));
    }
  }
  return KrausChannel(std::move(ops));
}

QuantumCoinAutomaton embed_classical(const ClassicalCoinAutomaton& a) {
  const ComplexMatrix rho0 = a.pi0().cast<Complex>().asDiagonal();
  const ComplexMatrix e_fair = a.e_fair().cast<Complex>().asDiagonal();
  return QuantumCoinAutomaton(embed_stochastic(a.s0()), embed_stochastic(a.s1()),
                              DensityOperator(rho0), e_fair);
}

}  // namespace qautomata
