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

// Closed-form capacity quantities for the bit-flip / phase-flip pair, in
// qubits per channel use. All functions accept the closed square [0, 1]^2.

#ifndef QSWITCH_BOUNDS_HPP
#define QSWITCH_BOUNDS_HPP

#include <functional>
#include <optional>
#include <string>
#include <utility>

#include "qswitch/channels.hpp"
#include "qswitch/linalg.hpp"

namespace qswitch {

/// 1 - max{H2(p), H2(q)}: upper bound for either fixed-order cascade.
double ub_classical(const ErrorProbs& params);

/// 1 + [H2(pq) - H2(p) - H2(q)] / (1 - pq). Negative values are returned as is.
/// Throws DegenerateBranchError at pq = 1.
double plus_branch_coherent_info(const ErrorProbs& params);

/// pq + max{0, 1 - pq + H2(pq) - H2(p) - H2(q)}.
double lb_qs(const ErrorProbs& params);

/// 1 - (1 - p) H2(q). Not symmetric in (p, q).
double ub_qs(const ErrorProbs& params);

/// min of ub_qs(p, q) and ub_qs with the roles of p and q exchanged.
/// Never used by the reproduction outputs.
double ub_qs_symmetrized(const ErrorProbs& params);

/// Upper bound on the |+> branch capacity from the relative entropy to the
/// separable state zeta_s: 1 - (1 - p) H2(q) / (1 - pq).
double plus_branch_ree_bound(const ErrorProbs& params);

/// diag((a+c)/2, b/2, b/2, (a+c)/2) with {a, b, c} the |+> branch weights of I, X, Z.
DensityMatrix zeta_s_diagonal(const ErrorProbs& params);
/// (1/2) sum_i |i><i| (x) N+(|i><i|), built by applying the |+> branch channel.
DensityMatrix zeta_s_from_channel(const ErrorProbs& params);

double gain(const ErrorProbs& params);
double uncertainty(const ErrorProbs& params);

/// Lower bound on the diagonal p = q in its piecewise form:
/// 1 + H2(p^2) - 2 H2(p) below p0, p^2 from p0 on.
double lb_qs_diagonal(double p);

/// 1 - p^2 + H2(p^2) - 2 H2(p); its root is p0.
double diagonal_residual(double p);
/// p^2 - (1 - H2(p)); its root is p1.
double advantage_residual(double p);

struct Threshold {
  std::string name;
  double value = 0.0;
  std::pair<double, double> bracket;
  double residual = 0.0;
  int iterations = 0;
};

class NoSignChangeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bisection of a residual with a sign change on [lo, hi]. Stops when the
/// bracket no longer shrinks or after max_iter halvings; throws
/// NoSignChangeError if the endpoints share a sign, and std::runtime_error if
/// the final residual exceeds residual_tol.
Threshold bisect(std::string name, const std::function<double(double)>& f, double lo, double hi,
                 double residual_tol = 1e-10, int max_iter = 200);

/// Where the diagonal lower bound changes branch (about 0.128).
Threshold threshold_p0();
/// Beyond which p^2 exceeds the classical-trajectory bound on the diagonal (about 0.3161).
Threshold threshold_p1();

struct BoundsReport {
  ErrorProbs params;
  double q_d = 0.0;
  double q_e = 0.0;
  double ub_classical = 0.0;
  double lb_qs = 0.0;
  double ub_qs = 0.0;
  double gain = 0.0;
  double uncertainty = 0.0;
  double herald_prob = 0.0;
  /// Absent when the |+> branch is degenerate (pq = 1).
  std::optional<double> plus_coherent_info;
};

BoundsReport bounds_report(const ErrorProbs& params);

}  // namespace qswitch

#endif  // QSWITCH_BOUNDS_HPP
