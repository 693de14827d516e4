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

// Brute-force verification layer.
//
// Everything here is recomputed by simulating reference (x) message (x) control
// on an 8-dimensional space: the switch is applied as I_R (x) W_ij with W_ij
// assembled locally from the bit-flip and phase-flip Kraus operators, the control
// is projected onto the Hadamard basis, and the result is normalized. The closed
// forms in bounds.hpp and quantum_switch.hpp are only ever compared against,
// never used to produce oracle values.

#ifndef QSWITCH_ORACLE_HPP
#define QSWITCH_ORACLE_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qswitch/channels.hpp"
#include "qswitch/linalg.hpp"
#include "qswitch/quantum_switch.hpp"
#include "qswitch/surface.hpp"

namespace qswitch::oracle {

/// Density matrix over reference (x) message (x) control.
struct ExtendedState {
  static constexpr std::array<std::size_t, 3> kDims = {2, 2, 2};
  DensityMatrix rho;
};

ExtendedState prepare(const PurifiedState& reference_message, const DensityMatrix& control);

/// sum_ij (I_R (x) W_ij) rho (I_R (x) W_ij)^dagger.
ExtendedState apply_switch(const ErrorProbs& params, const ExtendedState& state);

struct BranchResult {
  Outcome outcome;
  double probability = 0.0;
  /// Normalized reference (x) message state; absent for a zero-probability outcome.
  std::optional<DensityMatrix> state;
};

/// Projects the control onto |+> or |->, traces it out and normalizes. For the
/// |-> outcome the Y correction is applied to the message when `correct` is set.
BranchResult measure_control(const ExtendedState& state, Outcome outcome, bool correct = true);

/// Branch Choi matrix and herald probability from |Phi> (x) |+>.
BranchResult simulate_choi(const ErrorProbs& params, Outcome outcome);

/// Reference (x) message state after the switch with the control fixed to |bit>,
/// control traced out.
DensityMatrix simulate_trajectory_choi(const ErrorProbs& params, int control_bit);

/// |+> branch output for an arbitrary reference (x) message input.
BranchResult simulate_plus_branch(const ErrorProbs& params, const PurifiedState& input);

/// (1/2) sum_i |i><i| (x) N+(|i><i|) with N+ obtained by simulation.
std::optional<DensityMatrix> simulate_zeta_s(const ErrorProbs& params);

/// S(Tr_R choi) - S(choi).
double numeric_coherent_info(const DensityMatrix& choi);

/// Standard-normal real and imaginary parts, normalized.
PurifiedState random_purification(std::mt19937_64& rng);
/// Random qubit density matrix G G^dagger / Tr with G a complex Ginibre matrix.
DensityMatrix random_qubit_state(std::mt19937_64& rng);

/// Largest |+> branch coherent information over n_samples random purifications.
/// With include_phi the maximally entangled input is evaluated first.
/// Returns nullopt at pq = 1.
std::optional<double> sweep_input_states(const ErrorProbs& params, std::size_t n_samples,
                                         std::uint64_t seed, bool include_phi = false);

/// Closed forms under test. Defaults bind the library implementations; tests may
/// substitute perturbed versions to check that the harness notices.
struct ClosedForms {
  std::function<double(const ErrorProbs&)> ub_classical;
  std::function<double(const ErrorProbs&)> lb_qs;
  std::function<double(const ErrorProbs&)> ub_qs;
  std::function<double(double)> lb_qs_diagonal;
  std::function<double(const ErrorProbs&)> plus_coherent_info;
  std::function<double(const ErrorProbs&)> plus_ree_bound;
  std::function<std::array<double, 4>(const ErrorProbs&)> plus_eigenvalues;
  std::function<DensityMatrix(const ErrorProbs&)> plus_choi;
  std::function<DensityMatrix(const ErrorProbs&)> zeta_s;
  std::function<DensityMatrix(const ErrorProbs&, const DensityMatrix&)> switch_closed_form;

  static ClosedForms library();
};

struct CheckResult {
  std::string name;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  bool passed = true;
  ErrorProbs worst_point;
  std::size_t evaluations = 0;
};

struct VerifyOptions {
  double tol = 1e-10;
  std::uint64_t seed = 42;
  std::size_t states_per_point = 10;
  std::size_t sweep_samples = 8;
  Execution exec = Execution::Parallel;
};

struct VerificationReport {
  GridSpec grid;
  double tol = 0.0;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;

  bool all_passed() const;
  const CheckResult& check(const std::string& name) const;
  std::vector<std::string> failed() const;
};

/// Names of every cross-check, in report order.
const std::vector<std::string>& check_names();

VerificationReport verify_all(const GridSpec& grid, const VerifyOptions& options = {},
                              const ClosedForms& forms = ClosedForms::library());

}  // namespace qswitch::oracle

#endif  // QSWITCH_ORACLE_HPP
