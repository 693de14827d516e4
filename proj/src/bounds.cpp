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

#include "qswitch/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qswitch/quantum_switch.hpp"

namespace qswitch {

namespace {

ErrorProbs checked(const ErrorProbs& params) { return ErrorProbs::checked(params.p, params.q); }

/// 1 - pq + H2(pq) - H2(p) - H2(q), i.e. (1 - pq) times the |+> branch coherent information.
double weighted_plus_coherent_info(double p, double q) {
  const double pq = p * q;
  return 1.0 - pq + binary_entropy(pq) - binary_entropy(p) - binary_entropy(q);
}

}  // namespace

double ub_classical(const ErrorProbs& params) {
  const auto [p, q] = checked(params);
  return 1.0 - std::max(binary_entropy(p), binary_entropy(q));
}

double plus_branch_coherent_info(const ErrorProbs& params) {
  const auto [p, q] = checked(params);
  if (p * q >= 1.0) throw DegenerateBranchError("plus_branch_coherent_info: pq = 1");
  return 1.0 + (binary_entropy(p * q) - binary_entropy(p) - binary_entropy(q)) / (1.0 - p * q);
}

double lb_qs(const ErrorProbs& params) {
  const auto [p, q] = checked(params);
  return p * q + std::max(0.0, weighted_plus_coherent_info(p, q));
}

double ub_qs(const ErrorProbs& params) {
  const auto [p, q] = checked(params);
  return 1.0 - (1.0 - p) * binary_entropy(q);
}

double ub_qs_symmetrized(const ErrorProbs& params) {
  return std::min(ub_qs(params), ub_qs(ErrorProbs{params.q, params.p}));
}

double plus_branch_ree_bound(const ErrorProbs& params) {
  const auto [p, q] = checked(params);
  if (p * q >= 1.0) throw DegenerateBranchError("plus_branch_ree_bound: pq = 1");
  return 1.0 - (1.0 - p) * binary_entropy(q) / (1.0 - p * q);
}

DensityMatrix zeta_s_diagonal(const ErrorProbs& params) {
  const auto [p, q] = checked(params);
  if (p * q >= 1.0) throw DegenerateBranchError("zeta_s_diagonal: pq = 1");
  const double norm = 2.0 * (1.0 - p * q);
  const double same = ((1 - p) * (1 - q) + q * (1 - p)) / norm;
  const double flipped = p * (1 - q) / norm;
  const double diag[] = {same, flipped, flipped, same};
  return DensityMatrix(ComplexMatrix::diagonal(diag));
}

DensityMatrix zeta_s_from_channel(const ErrorProbs& params) {
  const auto branches = heralded_branches(params);
  const KrausChannel& plus = branches.plus.channel();
  ComplexMatrix out(4);
  for (int i = 0; i < 2; ++i) {
    ComplexMatrix basis(2);
    basis(i, i) = 1.0;
    out += kron(basis, apply(plus, basis)) * 0.5;
  }
  return DensityMatrix(std::move(out));
}

double gain(const ErrorProbs& params) { return lb_qs(params) - ub_classical(params); }

double uncertainty(const ErrorProbs& params) { return ub_qs(params) - lb_qs(params); }

double diagonal_residual(double p) {
  check_probability(p, "diagonal_residual");
  return 1.0 - p * p + binary_entropy(p * p) - 2.0 * binary_entropy(p);
}

double advantage_residual(double p) {
  check_probability(p, "advantage_residual");
  return p * p - (1.0 - binary_entropy(p));
}

double lb_qs_diagonal(double p) {
  check_probability(p, "lb_qs_diagonal");
  static const double p0 = threshold_p0().value;
  if (p < p0) return 1.0 + binary_entropy(p * p) - 2.0 * binary_entropy(p);
  return p * p;
}

Threshold bisect(std::string name, const std::function<double(double)>& f, double lo, double hi,
                 double residual_tol, int max_iter) {
  const std::pair<double, double> bracket{lo, hi};
  double f_lo = f(lo);
  const double f_hi = f(hi);
  if (f_lo == 0.0 || f_hi == 0.0 || std::signbit(f_lo) == std::signbit(f_hi)) {
    throw NoSignChangeError(name + ": residual has no strict sign change on [" + std::to_string(lo) +
                            ", " + std::to_string(hi) + "]");
  }

  int iter = 0;
  double mid = 0.5 * (lo + hi);
  for (; iter < max_iter; ++iter) {
    mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double f_mid = f(mid);
    if (f_mid == 0.0) break;
    if (std::signbit(f_mid) == std::signbit(f_lo)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }

  Threshold t{std::move(name), mid, bracket, std::abs(f(mid)), iter};
  if (t.residual > residual_tol) {
    throw std::runtime_error(t.name + ": bisection residual " + std::to_string(t.residual) +
                             " above tolerance");
  }
  return t;
}

Threshold threshold_p0() { return bisect("p0", diagonal_residual, 0.01, 0.5); }

Threshold threshold_p1() { return bisect("p1", advantage_residual, 0.2, 0.5); }

BoundsReport bounds_report(const ErrorProbs& params) {
  const auto pr = checked(params);
  BoundsReport r;
  r.params = pr;
  r.q_d = flip_channel_capacity(pr.p);
  r.q_e = flip_channel_capacity(pr.q);
  r.ub_classical = ub_classical(pr);
  r.lb_qs = lb_qs(pr);
  r.ub_qs = ub_qs(pr);
  r.gain = r.lb_qs - r.ub_classical;
  r.uncertainty = r.ub_qs - r.lb_qs;
  r.herald_prob = pr.herald();
  if (pr.herald() < 1.0) r.plus_coherent_info = plus_branch_coherent_info(pr);
  return r;
}

}  // namespace qswitch
