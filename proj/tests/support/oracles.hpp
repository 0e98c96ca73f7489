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

// Test-only reference computations. Nothing here calls into the library's
// numerical routines: each oracle works from Kraus lists or raw matrices with
// plain loops or a different Eigen solver than the one under test.

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

namespace oracle {

using C = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using RMat = Eigen::MatrixXd;
using RVec = Eigen::VectorXd;
using Kraus = std::vector<Mat>;

inline Mat apply(const Kraus& ks, const Mat& x) {
  Mat out = Mat::Zero(x.rows(), x.cols());
  for (const Mat& k : ks) out += k * x * k.adjoint();
  return out;
}

// Superoperator assembled column by column from the action on matrix units,
// with vec = column stacking written out by hand.
inline Mat superoperator_by_action(const Kraus& ks) {
  const Eigen::Index d = ks.front().rows();
  Mat s(d * d, d * d);
  for (Eigen::Index j = 0; j < d; ++j) {
    for (Eigen::Index i = 0; i < d; ++i) {
      Mat e = Mat::Zero(d, d);
      e(i, j) = 1.0;
      const Mat out = oracle::apply(ks, e);
      for (Eigen::Index c = 0; c < d; ++c) {
        for (Eigen::Index r = 0; r < d; ++r) s(c * d + r, j * d + i) = out(r, c);
      }
    }
  }
  return s;
}

inline std::vector<Mat> paulis() {
  Mat i = Mat::Identity(2, 2);
  Mat x(2, 2), y(2, 2), z(2, 2);
  x << 0, 1, 1, 0;
  y << 0, C(0, -1), C(0, 1), 0;
  z << 1, 0, 0, -1;
  return {i, x, y, z};
}

// Pauli transfer matrix R_ab = tr(P_a Φ(P_b)) / 2 of a qubit channel.
inline RMat pauli_transfer(const Kraus& ks) {
  const auto p = paulis();
  RMat r(4, 4);
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) r(a, b) = (p[a] * oracle::apply(ks, p[b])).trace().real() / 2.0;
  }
  return r;
}

// Number of eigenvalues within tol of 1, by the general (non-Hermitian)
// complex eigensolver.
inline int eigenvalue_one_multiplicity(const Mat& m, double tol) {
  Eigen::ComplexEigenSolver<Mat> es(m, false);
  int count = 0;
  for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
    if (std::abs(es.eigenvalues()(k) - C(1.0, 0.0)) <= tol) ++count;
  }
  return count;
}

inline RVec eigenvalue_moduli(const Mat& m) {
  Eigen::ComplexEigenSolver<Mat> es(m, false);
  return es.eigenvalues().cwiseAbs();
}

// (1/T) Σ_{t=1}^T M^t by straight accumulation.
inline Mat brute_cesaro(const Mat& m, std::int64_t steps) {
  Mat power = Mat::Identity(m.rows(), m.cols());
  Mat sum = Mat::Zero(m.rows(), m.cols());
  for (std::int64_t t = 0; t < steps; ++t) {
    power = m * power;
    sum += power;
  }
  return sum / static_cast<double>(steps);
}

// (1/T) Σ_{t=1}^T Φ^t(ρ) by iterating the Kraus action.
inline Mat brute_cesaro_state(const Kraus& ks, const Mat& rho, std::int64_t steps) {
  Mat cur = rho;
  Mat sum = Mat::Zero(rho.rows(), rho.cols());
  for (std::int64_t t = 0; t < steps; ++t) {
    cur = oracle::apply(ks, cur);
    sum += cur;
  }
  return sum / static_cast<double>(steps);
}

// Power iteration ρ ← Φ(ρ); converges for channels without peripheral
// phases, e.g. amplitude damping.
inline Mat power_iteration(const Kraus& ks, Mat rho, int iterations) {
  for (int k = 0; k < iterations; ++k) rho = oracle::apply(ks, rho);
  return rho;
}

// Amplitude damping from |1⟩⟨1|: the excited population after t steps is
// (1−γ)^t, so the time average of |0⟩⟨0| population over t = 1..T is
// 1 − (1/T) Σ (1−γ)^t = 1 − (1−γ)(1 − (1−γ)^T) / (γT).
inline double damping_ground_average(double gamma, std::int64_t steps) {
  const double q = 1.0 - gamma;
  return 1.0 - q * (1.0 - std::pow(q, static_cast<double>(steps))) /
                   (gamma * static_cast<double>(steps));
}

// Stationary distribution of a column-stochastic matrix by lazy power
// iteration, started from the uniform distribution.
inline RVec stationary(const RMat& s, int iterations) {
  const Eigen::Index n = s.rows();
  const RMat lazy = 0.5 * (s + RMat::Identity(n, n));
  RVec pi = RVec::Constant(n, 1.0 / n);
  for (int k = 0; k < iterations; ++k) pi = lazy * pi;
  return pi;
}

// Reachability by transitive closure; edge i→j iff S(j,i) > tol.
inline std::vector<std::vector<bool>> reachability(const RMat& s, double tol) {
  const auto n = static_cast<std::size_t>(s.rows());
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    reach[i][i] = true;
    for (std::size_t j = 0; j < n; ++j) {
      if (s(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) > tol) reach[i][j] = true;
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!reach[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (reach[k][j]) reach[i][j] = true;
      }
    }
  }
  return reach;
}

// Closed classes: a class is closed when everything reachable from it can
// reach back.
inline int closed_class_count(const RMat& s, double tol) {
  const auto reach = reachability(s, tol);
  const std::size_t n = reach.size();
  std::vector<bool> seen(n, false);
  int closed = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    bool is_closed = true;
    for (std::size_t j = 0; j < n; ++j) {
      if (reach[i][j] && reach[j][i]) seen[j] = true;
      if (reach[i][j] && !reach[j][i]) is_closed = false;
    }
    if (is_closed) ++closed;
  }
  return closed;
}

// Weight a positive operator puts outside the span of the orthonormal
// columns of b: tr((I − BB†) X). Zero iff supp X ⊆ span B.
inline double weight_outside(const Mat& x, const Mat& b) {
  const Mat p = b * b.adjoint();
  const Mat q = Mat::Identity(p.rows(), p.cols()) - p;
  return (q * x).trace().real();
}

inline double max_abs(const Mat& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

}  // namespace oracle
