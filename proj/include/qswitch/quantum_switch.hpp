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

// Quantum switch over a bit-flip channel D and a phase-flip channel E.
//
// The joint space is message (x) control, with the message qubit as the most
// significant factor. A control in |0> routes the message D then E, |1> routes
// it E then D, and |+> superposes both orders. The control is read out in the
// Hadamard basis; the |-> outcome heralds a noiseless transmission (after a Y
// correction) and occurs with probability p*q independently of the input.

#ifndef QSWITCH_QUANTUM_SWITCH_HPP
#define QSWITCH_QUANTUM_SWITCH_HPP

#include <array>
#include <optional>
#include <stdexcept>

#include "qswitch/channels.hpp"
#include "qswitch/linalg.hpp"

namespace qswitch {

enum class Outcome { Minus, Plus };

const char* to_string(Outcome outcome);

/// Raised when the |+> branch is requested at p*q = 1, where it has probability zero.
class DegenerateBranchError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// W_ij = D_i E_j (x) |0><0| + E_j D_i (x) |1><1|, indexed ops[2*i + j].
struct SwitchKrausSet {
  ErrorProbs params;
  std::array<ComplexMatrix, 4> ops;

  double completeness_error() const;
};

/// Hadamard-basis control states.
DensityMatrix control_state(Outcome outcome);
/// Computational-basis control state |bit><bit|.
DensityMatrix control_basis_state(int bit);

SwitchKrausSet switch_kraus(const ErrorProbs& params);

/// sum_ij W_ij (rho (x) control) W_ij^dagger on message (x) control.
DensityMatrix switch_output(const ErrorProbs& params, const DensityMatrix& rho,
                            const DensityMatrix& control);

/// Reduced form of switch_output for a |+> control:
/// ((1-p)(1-q) rho + p(1-q) X rho X + (1-p) q Z rho Z) (x) |+><+| + pq Y rho Y (x) |-><-|.
DensityMatrix switch_output_closed_form(const ErrorProbs& params, const DensityMatrix& rho);

class HeraldedBranch {
 public:
  HeraldedBranch(Outcome outcome, double probability, std::optional<KrausChannel> channel)
      : outcome_(outcome), probability_(probability), channel_(std::move(channel)) {}

  Outcome outcome() const { return outcome_; }
  double probability() const { return probability_; }
  bool present() const { return channel_.has_value(); }
  /// Throws DegenerateBranchError when the branch is absent.
  const KrausChannel& channel() const;

 private:
  Outcome outcome_;
  double probability_;
  std::optional<KrausChannel> channel_;
};

struct HeraldedBranches {
  HeraldedBranch minus;
  HeraldedBranch plus;
};

/// Equivalent heralded channels. The |-> branch is given after the Y correction,
/// so it is the identity channel.
HeraldedBranches heralded_branches(const ErrorProbs& params);

/// Weights of I, X, Z in the |+> branch: {(1-p)(1-q), p(1-q), (1-p)q} / (1 - pq).
std::array<double, 3> plus_branch_weights(const ErrorProbs& params);

/// Choi matrix of a heralded branch, the |+> case written with the explicit
/// bra-ket operators sum_ij |ij><i j+1| and sum_i (|i0><i0| - |i+1 1><i+1 1|).
DensityMatrix branch_choi(const ErrorProbs& params, Outcome outcome);

/// Same matrix built by sending |Phi> through the branch Kraus channel.
DensityMatrix branch_choi_from_kraus(const ErrorProbs& params, Outcome outcome);

/// Spectrum of the |+> branch Choi matrix in closed form, ascending, with the null eigenvalue.
std::array<double, 4> plus_branch_eigenvalues(const ErrorProbs& params);

}  // namespace qswitch

#endif  // QSWITCH_QUANTUM_SWITCH_HPP
