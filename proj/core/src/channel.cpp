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

#include "qautomata/channel.hpp"

#include <cmath>
#include <string>

#include "qautomata/errors.hpp"

namespace qautomata {

namespace {

constexpr double kStateTol = 1e-9;
constexpr double kTpFailure = 1e-6;
constexpr double kChoiFailure = -1e-7;

}  // namespace

KrausChannel::KrausChannel(std::vector<ComplexMatrix> kraus)
    : kraus_(std::move(kraus)) {
  if (kraus_.empty()) throw InvalidChannel("channel needs at least one Kraus operator");
  dim_ = kraus_.front().rows();
  for (std::size_t i = 0; i < kraus_.size(); ++i) {
    const ComplexMatrix& k = kraus_[i];
    if (k.rows() != dim_ || k.cols() != dim_) {
      throw DimensionMismatch("Kraus operator " + std::to_string(i) + " is " +
                              std::to_string(k.rows()) + "x" +
                              std::to_string(k.cols()) + ", expected " +
                              std::to_string(dim_) + "x" + std::to_string(dim_));
    }
    if (!all_finite(k)) {
      throw InvalidChannel("Kraus operator " + std::to_string(i) +
                           " has a non-finite entry");
    }
  }
  if (dim_ == 0) throw InvalidChannel("channel dimension must be positive");
}

DensityOperator::DensityOperator(ComplexMatrix matrix) : matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols() || matrix_.rows() == 0) {
    throw InvalidState("density operator must be a nonempty square matrix");
  }
  if (!all_finite(matrix_)) throw InvalidState("density operator has a non-finite entry");
  if (max_abs(matrix_ - matrix_.adjoint()) > kStateTol) {
    throw InvalidState("density operator is not Hermitian");
  }
  const Complex tr = matrix_.trace();
  if (std::abs(tr - 1.0) > kStateTol) {
    throw InvalidState("density operator trace is " + std::to_string(tr.real()));
  }
  const double min_eig = hermitian_eig(matrix_).values(0);
  if (min_eig < -kStateTol) {
    throw InvalidState("density operator has eigenvalue " + std::to_string(min_eig));
  }
}

DensityOperator DensityOperator::basis_state(Index dim, Index i) {
  ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
  if (i < 0 || i >= dim) throw InvalidState("basis index out of range");
  m(i, i) = 1.0;
  return DensityOperator(std::move(m));
}

DensityOperator DensityOperator::pure(const ComplexVector& psi) {
  const double norm = psi.norm();
  if (!(norm > 0)) throw InvalidState("pure state from the zero vector");
  const ComplexVector unit = psi / norm;
  return DensityOperator(unit * unit.adjoint());
}

DensityOperator DensityOperator::maximally_mixed(Index dim) {
  return DensityOperator(ComplexMatrix::Identity(dim, dim) / static_cast<double>(dim));
}

ComplexMatrix Superoperator::apply(const ComplexMatrix& x) const {
  if (x.rows() != dim || x.cols() != dim) {
    throw DimensionMismatch("superoperator applied to a matrix of the wrong size");
  }
  return unvec(matrix * vec(x), dim);
}

ComplexMatrix choi_matrix(const KrausChannel& ch) {
  const Index n = ch.dim() * ch.dim();
  ComplexMatrix choi = ComplexMatrix::Zero(n, n);
  for (const ComplexMatrix& k : ch.kraus()) {
    const ComplexVector v = vec(k);
    choi += v * v.adjoint();
  }
  return choi;
}

ValidationReport validate(const KrausChannel& ch) {
  const Index d = ch.dim();
  ComplexMatrix sum = ComplexMatrix::Zero(d, d);
  for (const ComplexMatrix& k : ch.kraus()) sum += k.adjoint() * k;
  ValidationReport report;
  report.tp_residual = max_abs(sum - ComplexMatrix::Identity(d, d));
  report.cp_min_choi_eigenvalue = hermitian_eig(choi_matrix(ch)).values(0);
  if (!(report.tp_residual <= kTpFailure)) {
    throw InvalidChannel("channel is not trace preserving: ‖ΣK†K − I‖_max = " +
                         std::to_string(report.tp_residual));
  }
  return report;
}

ValidationReport validate_loaded(const KrausChannel& ch) {
  ValidationReport report = validate(ch);
  if (report.cp_min_choi_eigenvalue < kChoiFailure) {
    throw InvalidChannel("Choi matrix has eigenvalue " +
                         std::to_string(report.cp_min_choi_eigenvalue));
  }
  return report;
}

ComplexMatrix apply(const KrausChannel& ch, const ComplexMatrix& x) {
  const Index d = ch.dim();
  if (x.rows() != d || x.cols() != d) {
    throw DimensionMismatch("apply: operator is " + std::to_string(x.rows()) +
                            "x" + std::to_string(x.cols()) + ", channel acts on " +
                            std::to_string(d) + "x" + std::to_string(d));
  }
  ComplexMatrix out = ComplexMatrix::Zero(d, d);
  for (const ComplexMatrix& k : ch.kraus()) out.noalias() += k * x * k.adjoint();
  return out;
}

Superoperator superoperator(const KrausChannel& ch) {
  const Index n = ch.dim() * ch.dim();
  Superoperator s{ch.dim(), ComplexMatrix::Zero(n, n)};
  for (const ComplexMatrix& k : ch.kraus()) s.matrix += kron(k.conjugate(), k);
  return s;
}

KrausChannel mix(const KrausChannel& ch0, const KrausChannel& ch1, double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw InvalidProbability("mix: p = " + std::to_string(p) + " is outside [0,1]");
  }
  if (ch0.dim() != ch1.dim()) {
    throw DimensionMismatch("mix: channels act on different dimensions");
  }
  std::vector<ComplexMatrix> ops;
  ops.reserve(ch0.num_kraus() + ch1.num_kraus());
  if (p < 1.0) {
    const double w = std::sqrt(1.0 - p);
    for (const ComplexMatrix& k : ch0.kraus()) ops.push_back(w * k);
  }
  if (p > 0.0) {
    const double w = std::sqrt(p);
    for (const ComplexMatrix& k : ch1.kraus()) ops.push_back(w * k);
  }
  return KrausChannel(std::move(ops));
}

KrausChannel identity_channel(Index dim) {
  return KrausChannel({ComplexMatrix::Identity(dim, dim)});
}

KrausChannel depolarizing_channel(Index dim) {
  std::vector<ComplexMatrix> ops;
  const double w = 1.0 / std::sqrt(static_cast<double>(dim));
  for (Index i = 0; i < dim; ++i) {
    for (Index j = 0; j < dim; ++j) {
      ComplexMatrix k = ComplexMatrix::Zero(dim, dim);
      k(i, j) = w;
      ops.push_back(std::move(k));
    }
  }
  return KrausChannel(std::move(ops));
}

KrausChannel amplitude_damping_channel(double gamma) {
  if (!(gamma >= 0.0 && gamma <= 1.0)) {
    throw InvalidProbability("amplitude damping: gamma outside [0,1]");
  }
  ComplexMatrix k0 = ComplexMatrix::Zero(2, 2);
  ComplexMatrix k1 = ComplexMatrix::Zero(2, 2);
  k0(0, 0) = 1.0;
  k0(1, 1) = std::sqrt(1.0 - gamma);
  k1(0, 1) = std::sqrt(gamma);
  return KrausChannel({k0, k1});
}

KrausChannel unitary_channel(const ComplexMatrix& u) { return KrausChannel({u}); }

}  // namespace qautomata
