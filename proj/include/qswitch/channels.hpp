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

#ifndef QSWITCH_CHANNELS_HPP
#define QSWITCH_CHANNELS_HPP

#include <vector>

#include "qswitch/linalg.hpp"

namespace qswitch {

inline constexpr double kCompletenessTol = 1e-12;

/// Flip probabilities of the bit-flip (p) and phase-flip (q) channels.
struct ErrorProbs {
  double p = 0.0;
  double q = 0.0;

  /// Throws std::out_of_range unless both lie in [0, 1].
  static ErrorProbs checked(double p, double q);

  double herald() const { return p * q; }
  friend bool operator==(const ErrorProbs&, const ErrorProbs&) = default;
};

double check_probability(double x, const char* what);

/// CPTP map given by Kraus operators sum_k K_k rho K_k^dagger.
class KrausChannel {
 public:
  /// Throws DimensionError for mismatched operator sizes and
  /// std::invalid_argument if sum K^dagger K differs from I by more than 1e-12.
  explicit KrausChannel(std::vector<ComplexMatrix> ops);

  static KrausChannel identity(std::size_t dim = 2);

  const std::vector<ComplexMatrix>& ops() const { return ops_; }
  std::size_t dim() const { return dim_; }

  /// max |sum K^dagger K - I|.
  double completeness_error() const;

 private:
  std::vector<ComplexMatrix> ops_;
  std::size_t dim_;
};

/// {sqrt(1-p) I, sqrt(p) X}; zero-weight operators are dropped.
KrausChannel bit_flip(double p);
/// {sqrt(1-q) I, sqrt(q) Z}; zero-weight operators are dropped.
KrausChannel phase_flip(double q);
/// Weighted Pauli channel sum_k w_k P_k rho P_k. Weights must be nonnegative and sum to 1.
KrausChannel pauli_mixture(std::span<const double> weights, std::span<const ComplexMatrix> paulis);

ComplexMatrix apply(const KrausChannel& ch, const ComplexMatrix& rho);
DensityMatrix apply(const KrausChannel& ch, const DensityMatrix& rho);

/// Serial cascade: `first` is traversed first. Operators are {L_j K_i}.
KrausChannel compose(const KrausChannel& first, const KrausChannel& second);

/// (I_R (x) ch)(|Phi><Phi|) with |Phi> = (|00> + |11>)/sqrt(2). Qubit channels only.
DensityMatrix choi_matrix(const KrausChannel& ch);

/// 1 - H2(prob), the quantum capacity of a bit-flip or phase-flip channel.
double flip_channel_capacity(double prob);

}  // namespace qswitch

#endif  // QSWITCH_CHANNELS_HPP
