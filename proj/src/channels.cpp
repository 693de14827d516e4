// Copyright 2026 The qswitch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qswitch/channels.hpp"

#include <cmath>
#include <numeric>
#include <string>

namespace qswitch {

double check_probability(double x, const char* what) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw std::out_of_range(std::string(what) + ": probability " + std::to_string(x) +
                            " outside [0, 1]");
  }
  return x;
}

ErrorProbs ErrorProbs::checked(double p, double q) {
  return ErrorProbs{check_probability(p, "p"), check_probability(q, "q")};
}

KrausChannel::KrausChannel(std::vector<ComplexMatrix> ops) : ops_(std::move(ops)) {
  if (ops_.empty()) throw std::invalid_argument("KrausChannel: no operators");
  dim_ = ops_.front().dim();
  for (const auto& k : ops_) {
    if (k.dim() != dim_) throw DimensionError("KrausChannel: operators of unequal dimension");
  }
  const double err = completeness_error();
  if (err > kCompletenessTol) {
    throw std::invalid_argument("KrausChannel: completeness violated by " + std::to_string(err));
  }
}

KrausChannel KrausChannel::identity(std::size_t dim) {
  return KrausChannel({ComplexMatrix::identity(dim)});
}

double KrausChannel::completeness_error() const {
  ComplexMatrix sum(dim_);
  for (const auto& k : ops_) sum += k.adjoint() * k;
  return max_abs_diff(sum, ComplexMatrix::identity(dim_));
}

namespace {

KrausChannel two_outcome_pauli(double prob, const ComplexMatrix& flip) {
  std::vector<ComplexMatrix> ops;
  if (prob < 1.0) ops.push_back(pauli::I() * std::sqrt(1.0 - prob));
  if (prob > 0.0) ops.push_back(flip * std::sqrt(prob));
  return KrausChannel(std::move(ops));
}

}  // namespace

KrausChannel bit_flip(double p) { return two_outcome_pauli(check_probability(p, "bit_flip"), pauli::X()); }

KrausChannel phase_flip(double q) {
  return two_outcome_pauli(check_probability(q, "phase_flip"), pauli::Z());
}

KrausChannel pauli_mixture(std::span<const double> weights, std::span<const ComplexMatrix> paulis) {
  if (weights.size() != paulis.size()) throw DimensionError("pauli_mixture: weight count mismatch");
  std::vector<ComplexMatrix> ops;
  for (std::size_t k = 0; k < weights.size(); ++k) {
    if (weights[k] < 0.0) throw std::invalid_argument("pauli_mixture: negative weight");
    if (weights[k] > 0.0) ops.push_back(paulis[k] * std::sqrt(weights[k]));
  }
  return KrausChannel(std::move(ops));
}

ComplexMatrix apply(const KrausChannel& ch, const ComplexMatrix& rho) {
  if (rho.dim() != ch.dim()) throw DimensionError("apply: channel and state dimensions differ");
  ComplexMatrix out(rho.dim());
  for (const auto& k : ch.ops()) out += conjugate(k, rho);
  return out;
}

DensityMatrix apply(const KrausChannel& ch, const DensityMatrix& rho) {
  return DensityMatrix(apply(ch, rho.matrix()));
}

KrausChannel compose(const KrausChannel& first, const KrausChannel& second) {
  if (first.dim() != second.dim()) throw DimensionError("compose: channel dimensions differ");
  std::vector<ComplexMatrix> ops;
  ops.reserve(first.ops().size() * second.ops().size());
  for (const auto& k : first.ops())
    for (const auto& l : second.ops()) ops.push_back(l * k);
  return KrausChannel(std::move(ops));
}

DensityMatrix choi_matrix(const KrausChannel& ch) {
  if (ch.dim() != 2) throw DimensionError("choi_matrix: qubit channels only");
  const ComplexMatrix phi = bell_phi_plus().density().matrix();
  ComplexMatrix out(4);
  for (const auto& k : ch.ops()) out += conjugate(kron(pauli::I(), k), phi);
  return DensityMatrix(std::move(out));
}

double flip_channel_capacity(double prob) {
  return 1.0 - binary_entropy(check_probability(prob, "flip_channel_capacity"));
}

}  // namespace qswitch
