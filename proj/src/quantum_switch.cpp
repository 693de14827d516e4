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

#include "qswitch/quantum_switch.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qswitch {

namespace {

ComplexMatrix basis_projector(int bit) {
  ComplexMatrix m(2);
  m(bit, bit) = 1.0;
  return m;
}

/// |a b><c d| on two qubits.
ComplexMatrix ketbra(int a, int b, int c, int d) {
  ComplexMatrix m(4);
  m(2 * a + b, 2 * c + d) = 1.0;
  return m;
}

void require_non_degenerate(const ErrorProbs& params, const char* what) {
  if (params.herald() >= 1.0) {
    throw DegenerateBranchError(std::string(what) + ": |+> branch is absent at p*q = 1");
  }
}

}  // namespace

const char* to_string(Outcome outcome) { return outcome == Outcome::Minus ? "minus" : "plus"; }

double SwitchKrausSet::completeness_error() const {
  ComplexMatrix sum(4);
  for (const auto& w : ops) sum += w.adjoint() * w;
  return max_abs_diff(sum, ComplexMatrix::identity(4));
}

DensityMatrix control_state(Outcome outcome) {
  const double r = 1.0 / std::sqrt(2.0);
  const double sign = outcome == Outcome::Plus ? 1.0 : -1.0;
  const Complex amps[] = {r, sign * r};
  return DensityMatrix::pure(amps);
}

DensityMatrix control_basis_state(int bit) {
  if (bit != 0 && bit != 1) throw std::invalid_argument("control_basis_state: bit must be 0 or 1");
  return DensityMatrix(basis_projector(bit));
}

SwitchKrausSet switch_kraus(const ErrorProbs& params) {
  const auto p = check_probability(params.p, "switch_kraus p");
  const auto q = check_probability(params.q, "switch_kraus q");
  const std::array<ComplexMatrix, 2> d = {pauli::I() * std::sqrt(1.0 - p), pauli::X() * std::sqrt(p)};
  const std::array<ComplexMatrix, 2> e = {pauli::I() * std::sqrt(1.0 - q), pauli::Z() * std::sqrt(q)};
  const ComplexMatrix c0 = basis_projector(0);
  const ComplexMatrix c1 = basis_projector(1);

  SwitchKrausSet set{params, {}};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) set.ops[2 * i + j] = kron(d[i] * e[j], c0) + kron(e[j] * d[i], c1);
  return set;
}

DensityMatrix switch_output(const ErrorProbs& params, const DensityMatrix& rho,
                            const DensityMatrix& control) {
  if (rho.dim() != 2 || control.dim() != 2) {
    throw DimensionError("switch_output: message and control must be qubits");
  }
  const ComplexMatrix joint = kron(rho.matrix(), control.matrix());
  ComplexMatrix out(4);
  for (const auto& w : switch_kraus(params).ops) out += conjugate(w, joint);
  return DensityMatrix(std::move(out));
}

DensityMatrix switch_output_closed_form(const ErrorProbs& params, const DensityMatrix& rho) {
  if (rho.dim() != 2) throw DimensionError("switch_output_closed_form: message must be a qubit");
  const double p = check_probability(params.p, "p");
  const double q = check_probability(params.q, "q");
  const ComplexMatrix& r = rho.matrix();

  const ComplexMatrix plus_part = (1 - p) * (1 - q) * r + p * (1 - q) * conjugate(pauli::X(), r) +
                                  (1 - p) * q * conjugate(pauli::Z(), r);
  const ComplexMatrix minus_part = p * q * conjugate(pauli::Y(), r);
  return DensityMatrix(kron(plus_part, control_state(Outcome::Plus).matrix()) +
                       kron(minus_part, control_state(Outcome::Minus).matrix()));
}

const KrausChannel& HeraldedBranch::channel() const {
  if (!channel_) throw DegenerateBranchError("heralded branch is absent (probability zero)");
  return *channel_;
}

std::array<double, 3> plus_branch_weights(const ErrorProbs& params) {
  require_non_degenerate(params, "plus_branch_weights");
  const double p = params.p, q = params.q;
  const double norm = 1.0 - p * q;
  return {(1 - p) * (1 - q) / norm, p * (1 - q) / norm, (1 - p) * q / norm};
}

HeraldedBranches heralded_branches(const ErrorProbs& params) {
  const auto checked = ErrorProbs::checked(params.p, params.q);
  const double herald = checked.herald();

  std::optional<KrausChannel> plus;
  if (herald < 1.0) {
    const auto w = plus_branch_weights(checked);
    const ComplexMatrix paulis[] = {pauli::I(), pauli::X(), pauli::Z()};
    plus = pauli_mixture(w, paulis);
  }
  return {HeraldedBranch(Outcome::Minus, herald, KrausChannel::identity(2)),
          HeraldedBranch(Outcome::Plus, 1.0 - herald, std::move(plus))};
}

DensityMatrix branch_choi(const ErrorProbs& params, Outcome outcome) {
  const ComplexMatrix phi = bell_phi_plus().density().matrix();
  if (outcome == Outcome::Minus) return DensityMatrix(phi);

  require_non_degenerate(params, "branch_choi");
  const double p = params.p, q = params.q;

  // sum_ij |ij><i j+1|  and  sum_i (|i0><i0| - |i+1 1><i+1 1|)
  ComplexMatrix flip(4), phase(4);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) flip += ketbra(i, j, i, j ^ 1);
    phase += ketbra(i, 0, i, 0) - ketbra(i ^ 1, 1, i ^ 1, 1);
  }

  ComplexMatrix out = (1 - p) * (1 - q) * phi + p * (1 - q) * conjugate(flip, phi) +
                      (1 - p) * q * conjugate(phase, phi);
  out *= 1.0 / (1.0 - p * q);
  return DensityMatrix(std::move(out));
}

DensityMatrix branch_choi_from_kraus(const ErrorProbs& params, Outcome outcome) {
  const auto branches = heralded_branches(params);
  const auto& branch = outcome == Outcome::Minus ? branches.minus : branches.plus;
  return choi_matrix(branch.channel());
}

std::array<double, 4> plus_branch_eigenvalues(const ErrorProbs& params) {
  const auto w = plus_branch_weights(params);
  std::array<double, 4> eigs = {0.0, w[0], w[1], w[2]};
  std::sort(eigs.begin(), eigs.end());
  return eigs;
}

}  // namespace qswitch
