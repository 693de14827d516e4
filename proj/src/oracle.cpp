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

#include "qswitch/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "qswitch/bounds.hpp"

namespace qswitch::oracle {

namespace {

constexpr double kZeroProbability = 1e-14;
constexpr double kInf = std::numeric_limits<double>::infinity();

ComplexMatrix projector(const DensityMatrix& state) { return state.matrix(); }

ComplexMatrix computational_projector(int bit) {
  ComplexMatrix m(2);
  m(bit, bit) = 1.0;
  return m;
}

/// I_R (x) W_ij on reference (x) message (x) control.
std::vector<ComplexMatrix> extended_switch_operators(const ErrorProbs& params) {
  const KrausChannel d = bit_flip(params.p);
  const KrausChannel e = phase_flip(params.q);
  const ComplexMatrix c0 = computational_projector(0);
  const ComplexMatrix c1 = computational_projector(1);
  std::vector<ComplexMatrix> ops;
  for (const auto& di : d.ops())
    for (const auto& ej : e.ops())
      ops.push_back(kron(pauli::I(), kron(di * ej, c0) + kron(ej * di, c1)));
  return ops;
}

/// <c| rho |c> over the control factor, an unnormalized 4x4 block.
ComplexMatrix project_control(const ComplexMatrix& rho8, const DensityMatrix& control_proj) {
  const ComplexMatrix pi = kron(ComplexMatrix::identity(4), projector(control_proj));
  const std::size_t dims[] = {2, 2, 2};
  const std::size_t keep[] = {0, 1};
  return partial_trace(pi * rho8 * pi, dims, keep);
}

double spectrum_distance(std::vector<double> a, std::array<double, 4> b) {
  std::sort(b.begin(), b.end());
  double worst = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) worst = std::max(worst, std::abs(a[k] - b[k]));
  return worst;
}

std::mt19937_64 point_rng(std::uint64_t seed, std::size_t flat, std::size_t check) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(flat), static_cast<std::uint32_t>(check)};
  return std::mt19937_64(seq);
}

}  // namespace

ExtendedState prepare(const PurifiedState& reference_message, const DensityMatrix& control) {
  if (reference_message.dim_ref() != 2 || reference_message.dim_sys() != 2 || control.dim() != 2) {
    throw DimensionError("oracle::prepare: expected qubit reference, message and control");
  }
  return ExtendedState{kron(reference_message.density(), control)};
}

ExtendedState apply_switch(const ErrorProbs& params, const ExtendedState& state) {
  ComplexMatrix out(8);
  for (const auto& w : extended_switch_operators(params)) out += conjugate(w, state.rho.matrix());
  return ExtendedState{DensityMatrix(std::move(out))};
}

BranchResult measure_control(const ExtendedState& state, Outcome outcome, bool correct) {
  ComplexMatrix block = project_control(state.rho.matrix(), control_state(outcome));
  const double prob = block.trace().real();
  BranchResult result{outcome, std::max(prob, 0.0), std::nullopt};
  if (prob <= kZeroProbability) return result;

  block *= 1.0 / prob;
  if (outcome == Outcome::Minus && correct) block = conjugate(kron(pauli::I(), pauli::Y()), block);
  result.state = DensityMatrix(std::move(block));
  return result;
}

BranchResult simulate_choi(const ErrorProbs& params, Outcome outcome) {
  const auto checked = ErrorProbs::checked(params.p, params.q);
  const auto out = apply_switch(checked, prepare(bell_phi_plus(), control_state(Outcome::Plus)));
  return measure_control(out, outcome);
}

DensityMatrix simulate_trajectory_choi(const ErrorProbs& params, int control_bit) {
  const auto checked = ErrorProbs::checked(params.p, params.q);
  const auto out = apply_switch(checked, prepare(bell_phi_plus(), control_basis_state(control_bit)));
  const std::size_t keep[] = {0, 1};
  return partial_trace(out.rho, ExtendedState::kDims, keep);
}

BranchResult simulate_plus_branch(const ErrorProbs& params, const PurifiedState& input) {
  const auto checked = ErrorProbs::checked(params.p, params.q);
  const auto out = apply_switch(checked, prepare(input, control_state(Outcome::Plus)));
  return measure_control(out, Outcome::Plus);
}

std::optional<DensityMatrix> simulate_zeta_s(const ErrorProbs& params) {
  ComplexMatrix zeta(4);
  for (int i = 0; i < 2; ++i) {
    std::vector<Complex> amps(4, 0.0);
    amps[3 * i] = 1.0;  // |i>_R |i>_A
    const auto branch = simulate_plus_branch(params, PurifiedState(std::move(amps), 2, 2));
    if (!branch.state) return std::nullopt;
    zeta += branch.state->matrix() * 0.5;
  }
  return DensityMatrix(std::move(zeta));
}

double numeric_coherent_info(const DensityMatrix& choi) {
  if (choi.dim() != 4) throw DimensionError("numeric_coherent_info: expected a two-qubit state");
  const std::size_t dims[] = {2, 2};
  const std::size_t keep[] = {1};
  return von_neumann_entropy(partial_trace(choi, dims, keep)) - von_neumann_entropy(choi);
}

PurifiedState random_purification(std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<Complex> amps(4);
  double norm2 = 0.0;
  for (auto& a : amps) {
    const double re = normal(rng);
    const double im = normal(rng);
    a = Complex{re, im};
    norm2 += std::norm(a);
  }
  const double inv = 1.0 / std::sqrt(norm2);
  for (auto& a : amps) a *= inv;
  return PurifiedState(std::move(amps), 2, 2);
}

DensityMatrix random_qubit_state(std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix g(2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) g(i, j) = Complex{normal(rng), normal(rng)};
  ComplexMatrix rho = g * g.adjoint();
  rho *= 1.0 / rho.trace().real();
  // Exact Hermitian symmetry before validation.
  for (std::size_t i = 0; i < 2; ++i) rho(i, i) = rho(i, i).real();
  rho(1, 0) = std::conj(rho(0, 1));
  return DensityMatrix(std::move(rho));
}

std::optional<double> sweep_input_states(const ErrorProbs& params, std::size_t n_samples,
                                         std::uint64_t seed, bool include_phi) {
  if (n_samples == 0) throw std::invalid_argument("sweep_input_states: n_samples must be >= 1");
  std::mt19937_64 rng(seed);
  double best = -kInf;
  auto consider = [&](const PurifiedState& input) -> bool {
    const auto branch = simulate_plus_branch(params, input);
    if (!branch.state) return false;
    best = std::max(best, numeric_coherent_info(*branch.state));
    return true;
  };
  if (include_phi && !consider(bell_phi_plus())) return std::nullopt;
  for (std::size_t k = 0; k < n_samples; ++k)
    if (!consider(random_purification(rng))) return std::nullopt;
  return best;
}

ClosedForms ClosedForms::library() {
  ClosedForms f;
  f.ub_classical = [](const ErrorProbs& e) { return qswitch::ub_classical(e); };
  f.lb_qs = [](const ErrorProbs& e) { return qswitch::lb_qs(e); };
  f.ub_qs = [](const ErrorProbs& e) { return qswitch::ub_qs(e); };
  f.lb_qs_diagonal = [](double p) { return qswitch::lb_qs_diagonal(p); };
  f.plus_coherent_info = [](const ErrorProbs& e) { return qswitch::plus_branch_coherent_info(e); };
  f.plus_ree_bound = [](const ErrorProbs& e) { return qswitch::plus_branch_ree_bound(e); };
  f.plus_eigenvalues = [](const ErrorProbs& e) { return qswitch::plus_branch_eigenvalues(e); };
  f.plus_choi = [](const ErrorProbs& e) { return qswitch::branch_choi(e, Outcome::Plus); };
  f.zeta_s = [](const ErrorProbs& e) { return qswitch::zeta_s_diagonal(e); };
  f.switch_closed_form = [](const ErrorProbs& e, const DensityMatrix& rho) {
    return qswitch::switch_output_closed_form(e, rho);
  };
  return f;
}

bool VerificationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult& VerificationReport::check(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return c;
  throw std::out_of_range("VerificationReport: no check named " + name);
}

std::vector<std::string> VerificationReport::failed() const {
  std::vector<std::string> out;
  for (const auto& c : checks)
    if (!c.passed) out.push_back(c.name);
  return out;
}

namespace {

struct PointContext {
  ErrorProbs params;
  std::size_t flat;
  bool first_in_row;
  const VerifyOptions& options;
  const ClosedForms& forms;
  std::mt19937_64& rng;
};

/// nullopt means the check does not apply at this point.
using CheckFn = std::function<std::optional<double>(const PointContext&)>;

struct CheckDef {
  std::string name;
  CheckFn fn;
};

bool plus_present(const ErrorProbs& e) { return e.herald() < 1.0; }

const std::vector<CheckDef>& check_table() {
  static const std::vector<CheckDef> table = {
      {"switch_closed_form",
       [](const PointContext& c) -> std::optional<double> {
         double worst = 0.0;
         const auto plus = control_state(Outcome::Plus);
         for (std::size_t k = 0; k < c.options.states_per_point; ++k) {
           const auto rho = random_qubit_state(c.rng);
           worst = std::max(worst, max_abs_diff(switch_output(c.params, rho, plus).matrix(),
                                                c.forms.switch_closed_form(c.params, rho).matrix()));
         }
         return worst;
       }},
      {"herald_probability",
       [](const PointContext& c) -> std::optional<double> {
         const double pq = c.params.herald();
         const auto plus = control_state(Outcome::Plus);
         const ComplexMatrix minus_proj = kron(pauli::I(), control_state(Outcome::Minus).matrix());
         double worst = 0.0;
         for (std::size_t k = 0; k < c.options.states_per_point; ++k) {
           const auto rho = random_qubit_state(c.rng);
           const auto out = switch_output(c.params, rho, plus);
           worst = std::max(worst, std::abs((minus_proj * out.matrix()).trace().real() - pq));
           const auto ext = apply_switch(c.params, prepare(random_purification(c.rng), plus));
           worst = std::max(worst, std::abs(measure_control(ext, Outcome::Minus).probability - pq));
         }
         return worst;
       }},
      {"outcome_probability_sum",
       [](const PointContext& c) -> std::optional<double> {
         const auto m = simulate_choi(c.params, Outcome::Minus);
         const auto p = simulate_choi(c.params, Outcome::Plus);
         return std::abs(m.probability + p.probability - 1.0);
       }},
      {"minus_choi",
       [](const PointContext& c) -> std::optional<double> {
         const auto m = simulate_choi(c.params, Outcome::Minus);
         if (!m.state) return c.params.herald() > kZeroProbability ? std::optional(kInf) : std::nullopt;
         return max_abs_diff(m.state->matrix(), bell_phi_plus().density().matrix());
       }},
      {"plus_choi_simulated",
       [](const PointContext& c) -> std::optional<double> {
         if (!plus_present(c.params)) return std::nullopt;
         const auto p = simulate_choi(c.params, Outcome::Plus);
         if (!p.state) return kInf;
         return max_abs_diff(p.state->matrix(), c.forms.plus_choi(c.params).matrix());
       }},
      {"plus_choi_kraus",
       [](const PointContext& c) -> std::optional<double> {
         if (!plus_present(c.params)) return std::nullopt;
         return max_abs_diff(c.forms.plus_choi(c.params).matrix(),
                             branch_choi_from_kraus(c.params, Outcome::Plus).matrix());
       }},
      {"plus_spectrum",
       [](const PointContext& c) -> std::optional<double> {
         if (!plus_present(c.params)) return std::nullopt;
         const auto p = simulate_choi(c.params, Outcome::Plus);
         if (!p.state) return kInf;
         return spectrum_distance(hermitian_eigenvalues(p.state->matrix()),
                                  c.forms.plus_eigenvalues(c.params));
       }},
      {"plus_marginal",
       [](const PointContext& c) -> std::optional<double> {
         if (!plus_present(c.params)) return std::nullopt;
         const auto p = simulate_choi(c.params, Outcome::Plus);
         if (!p.state) return kInf;
         const std::size_t dims[] = {2, 2};
         const std::size_t keep[] = {1};
         return max_abs_diff(partial_trace(*p.state, dims, keep).matrix(),
                             DensityMatrix::maximally_mixed(2).matrix());
       }},
      {"coherent_info",
       [](const PointContext& c) -> std::optional<double> {
         if (!plus_present(c.params)) return std::nullopt;
         const auto p = simulate_choi(c.params, Outcome::Plus);
         if (!p.state) return kInf;
         return std::abs(numeric_coherent_info(*p.state) - c.forms.plus_coherent_info(c.params));
       }},
      {"zeta_s_diagonal",
       [](const PointContext& c) -> std::optional<double> {
         if (!plus_present(c.params)) return std::nullopt;
         const auto zeta = simulate_zeta_s(c.params);
         if (!zeta) return kInf;
         return max_abs_diff(zeta->matrix(), c.forms.zeta_s(c.params).matrix());
       }},
      {"ree_closed_form",
       [](const PointContext& c) -> std::optional<double> {
         if (!plus_present(c.params)) return std::nullopt;
         const auto p = simulate_choi(c.params, Outcome::Plus);
         const auto zeta = simulate_zeta_s(c.params);
         if (!p.state || !zeta) return kInf;
         return std::abs(relative_entropy(*p.state, *zeta) - c.forms.plus_ree_bound(c.params));
       }},
      {"classical_trajectory",
       [](const PointContext& c) -> std::optional<double> {
         const auto d = bit_flip(c.params.p);
         const auto e = phase_flip(c.params.q);
         const double de = max_abs_diff(simulate_trajectory_choi(c.params, 0).matrix(),
                                        choi_matrix(compose(d, e)).matrix());
         const double ed = max_abs_diff(simulate_trajectory_choi(c.params, 1).matrix(),
                                        choi_matrix(compose(e, d)).matrix());
         return std::max(de, ed);
       }},
      {"ub_decomposition",
       [](const PointContext& c) -> std::optional<double> {
         const double pq = c.params.herald();
         const double plus_term = plus_present(c.params) ? (1.0 - pq) * c.forms.plus_ree_bound(c.params) : 0.0;
         return std::abs(c.forms.ub_qs(c.params) - (pq * 1.0 + plus_term));
       }},
      {"diagonal_lower_bound",
       [](const PointContext& c) -> std::optional<double> {
         if (!c.first_in_row) return std::nullopt;
         const double p = c.params.p;
         return std::abs(c.forms.lb_qs_diagonal(p) - c.forms.lb_qs(ErrorProbs{p, p}));
       }},
      {"lb_le_ub",
       [](const PointContext& c) -> std::optional<double> {
         return std::max(0.0, c.forms.lb_qs(c.params) - c.forms.ub_qs(c.params));
       }},
      {"bound_ranges",
       [](const PointContext& c) -> std::optional<double> {
         const double lb = c.forms.lb_qs(c.params);
         const double ub = c.forms.ub_qs(c.params);
         const double ubc = c.forms.ub_classical(c.params);
         auto outside = [](double x, double lo, double hi) {
           return std::max({0.0, lo - x, x - hi});
         };
         return std::max({outside(lb, 0.0, 1.0), outside(ub, 0.0, 1.0), outside(ubc, 0.0, 1.0),
                          outside(lb - ubc, -1.0, 1.0), std::max(0.0, c.params.herald() - lb)});
       }},
      {"symmetry",
       [](const PointContext& c) -> std::optional<double> {
         const ErrorProbs swapped{c.params.q, c.params.p};
         return std::max(std::abs(c.forms.lb_qs(c.params) - c.forms.lb_qs(swapped)),
                         std::abs(c.forms.ub_classical(c.params) - c.forms.ub_classical(swapped)));
       }},
      {"kraus_completeness",
       [](const PointContext& c) -> std::optional<double> {
         double worst = switch_kraus(c.params).completeness_error();
         worst = std::max(worst, bit_flip(c.params.p).completeness_error());
         worst = std::max(worst, phase_flip(c.params.q).completeness_error());
         const auto branches = heralded_branches(c.params);
         if (branches.plus.present()) worst = std::max(worst, branches.plus.channel().completeness_error());
         return worst;
       }},
      {"input_sweep",
       [](const PointContext& c) -> std::optional<double> {
         if (!plus_present(c.params)) return std::nullopt;
         const auto best = sweep_input_states(c.params, c.options.sweep_samples, c.rng(), true);
         if (!best) return kInf;
         // Pure product inputs reach zero, so the optimum is max{0, I_c(Phi)}.
         return std::max(0.0, *best - std::max(0.0, c.forms.plus_coherent_info(c.params)));
       }},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& def : check_table()) out.push_back(def.name);
    return out;
  }();
  return names;
}

VerificationReport verify_all(const GridSpec& grid, const VerifyOptions& options,
                              const ClosedForms& forms) {
  grid.validate();
  const auto& table = check_table();
  const std::size_t n_checks = table.size();
  const std::size_t n_points = grid.size();

  // deviations[point * n_checks + check]; NaN marks "not applicable".
  std::vector<double> deviations(n_points * n_checks, std::numeric_limits<double>::quiet_NaN());

  auto run_point = [&](std::size_t flat) {
    const ErrorProbs params = grid.point(flat);
    for (std::size_t k = 0; k < n_checks; ++k) {
      auto rng = point_rng(options.seed, flat, k);
      const PointContext ctx{params, flat, flat % grid.resolution == 0, options, forms, rng};
      double dev;
      try {
        const auto result = table[k].fn(ctx);
        if (!result) continue;
        dev = std::isnan(*result) ? kInf : *result;
      } catch (const std::exception&) {
        dev = kInf;
      }
      deviations[flat * n_checks + k] = dev;
    }
  };

  const auto n = static_cast<std::ptrdiff_t>(n_points);
  if (options.exec == Execution::Serial) {
    for (std::ptrdiff_t f = 0; f < n; ++f) run_point(static_cast<std::size_t>(f));
  } else {
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t f = 0; f < n; ++f) run_point(static_cast<std::size_t>(f));
  }

  VerificationReport report{grid, options.tol, options.seed, {}};
  for (std::size_t k = 0; k < n_checks; ++k) {
    CheckResult r;
    r.name = table[k].name;
    r.tolerance = options.tol;
    for (std::size_t f = 0; f < n_points; ++f) {
      const double dev = deviations[f * n_checks + k];
      if (std::isnan(dev)) continue;
      ++r.evaluations;
      if (r.evaluations == 1 || dev > r.max_deviation) {
        r.max_deviation = dev;
        r.worst_point = grid.point(f);
      }
    }
    r.passed = r.max_deviation <= r.tolerance;
    report.checks.push_back(std::move(r));
  }
  return report;
}

}  // namespace qswitch::oracle
