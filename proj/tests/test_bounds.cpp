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

#include <cmath>

#include "gtest/gtest.h"
#include "qswitch/quantum_switch.hpp"
#include "test_support.hpp"

using namespace qswitch;

namespace {

// Reference values computed with 50-digit arithmetic.
constexpr double kP0 = 0.12809024508042288;
constexpr double kP1 = 0.3160948259760667;
constexpr double kLog2Of3 = 1.5849625007211562;
constexpr double kLbDiag005 = 0.45241795166102252;
constexpr double kRee0303 = 0.32208392366869799;
constexpr double kIc0303 = -0.4572659136233871;
// Largest q with lb_qs(1/2, q) = q/2.
constexpr double kQStar = 0.8719097549195771;

}  // namespace

TEST(ub_classical, examples) {
  EXPECT_DOUBLE_EQ(ub_classical({0.0, 0.0}), 1.0);
  EXPECT_NEAR(ub_classical({0.1, 0.2}), 0.27807190511263765, 1e-15);
  EXPECT_DOUBLE_EQ(ub_classical({0.5, 0.0}), 0.0);
  EXPECT_DOUBLE_EQ(ub_classical({0.5, 0.3}), 0.0);
  EXPECT_DOUBLE_EQ(ub_classical({1.0, 1.0}), 1.0);
}

TEST(lb_qs, examples) {
  EXPECT_DOUBLE_EQ(lb_qs({0.0, 0.0}), 1.0);
  EXPECT_NEAR(lb_qs({0.5, 0.5}), 0.25, 1e-12);
  EXPECT_NEAR(lb_qs({0.5, 1.0}), 1.0, 1e-12);
  EXPECT_NEAR(lb_qs({1.0, 1.0}), 1.0, 1e-12);
  EXPECT_NEAR(lb_qs({0.05, 0.05}), kLbDiag005, 1e-12);
}

TEST(lb_qs, half_row_below_crossover) {
  for (double q : support::unit_lattice(101)) {
    EXPECT_GE(lb_qs({0.5, q}), q / 2 - 1e-12);
    if (q <= kQStar) EXPECT_NEAR(lb_qs({0.5, q}), q / 2, 1e-12) << q;
    else EXPECT_GT(lb_qs({0.5, q}), q / 2) << q;
  }
}

TEST(ub_qs, examples) {
  EXPECT_NEAR(ub_qs({0.5, 0.5}), 0.5, 1e-12);
  EXPECT_NEAR(ub_qs({0.0, 0.0}), 1.0, 1e-12);
  EXPECT_NEAR(ub_qs({1.0, 1.0}), 1.0, 1e-12);
  for (double x : support::unit_lattice(41)) {
    EXPECT_NEAR(ub_qs({0.5, x}), 1.0 - binary_entropy(x) / 2, 1e-12);
    EXPECT_NEAR(ub_qs({x, 0.5}), x, 1e-12);
  }
}

TEST(ub_qs, symmetrized_is_tighter) {
  for (double p : support::unit_lattice(21))
    for (double q : support::unit_lattice(21)) {
      const ErrorProbs e{p, q};
      EXPECT_LE(ub_qs_symmetrized(e), ub_qs(e));
      EXPECT_DOUBLE_EQ(ub_qs_symmetrized(e), ub_qs_symmetrized({q, p}));
      EXPECT_LE(lb_qs(e), ub_qs_symmetrized(e) + 1e-12);
    }
}

TEST(plus_branch_coherent_info, examples) {
  EXPECT_NEAR(plus_branch_coherent_info({0.5, 0.5}), -kLog2Of3 + 1.0, 1e-12);
  EXPECT_NEAR(plus_branch_coherent_info({0.3, 0.3}), kIc0303, 1e-12);
  EXPECT_NEAR(plus_branch_coherent_info({0.0, 0.0}), 1.0, 1e-15);
  EXPECT_THROW(plus_branch_coherent_info({1.0, 1.0}), DegenerateBranchError);
}

TEST(plus_branch_ree_bound, examples) {
  EXPECT_NEAR(plus_branch_ree_bound({0.5, 0.5}), 1.0 / 3.0, 1e-12);
  EXPECT_NEAR(plus_branch_ree_bound({0.3, 0.3}), kRee0303, 1e-12);
  EXPECT_NEAR(plus_branch_ree_bound({0.0, 0.0}), 1.0, 1e-15);
}

TEST(zeta_s, closed_form_and_channel_route_agree) {
  for (double p : support::unit_lattice(11))
    for (double q : support::unit_lattice(11)) {
      if (p * q >= 1.0) continue;
      const ErrorProbs e{p, q};
      EXPECT_LE(max_abs_diff(zeta_s_diagonal(e).matrix(), zeta_s_from_channel(e).matrix()), 1e-12);
    }
}

TEST(zeta_s, relative_entropy_matches_ree) {
  for (double p : {0.0, 0.1, 0.3, 0.5, 0.9})
    for (double q : {0.0, 0.2, 0.5, 0.8}) {
      const ErrorProbs e{p, q};
      const double numeric =
          relative_entropy(branch_choi(e, Outcome::Plus), zeta_s_diagonal(e));
      EXPECT_NEAR(numeric, plus_branch_ree_bound(e), 1e-10) << p << "," << q;
    }
}

TEST(gain_and_uncertainty, examples) {
  EXPECT_NEAR(gain({0.5, 0.5}), 0.25, 1e-12);
  EXPECT_NEAR(gain({0.5, 1.0}), 1.0, 1e-12);
  EXPECT_NEAR(gain({0.0, 0.0}), 0.0, 1e-12);
  EXPECT_NEAR(uncertainty({0.5, 0.5}), 0.25, 1e-12);
  EXPECT_NEAR(uncertainty({0.5, 0.0}), 1.0, 1e-12);
}

TEST(lb_qs_diagonal, agrees_with_general_form) {
  for (double p : support::unit_lattice(1001))
    EXPECT_NEAR(lb_qs_diagonal(p), lb_qs({p, p}), 1e-12) << p;
  EXPECT_NEAR(lb_qs_diagonal(0.05), kLbDiag005, 1e-12);
  EXPECT_DOUBLE_EQ(lb_qs_diagonal(0.5), 0.25);
  EXPECT_THROW(lb_qs_diagonal(1.5), std::out_of_range);
}

TEST(thresholds, p0) {
  const auto t = threshold_p0();
  EXPECT_EQ(t.name, "p0");
  EXPECT_NEAR(t.value, kP0, 1e-9);
  EXPECT_NEAR(t.value, 0.128, 1e-3);
  EXPECT_LE(std::abs(t.residual), 1e-10);
  EXPECT_LE(t.bracket.first, t.value);
  EXPECT_GE(t.bracket.second, t.value);
}

TEST(thresholds, p1) {
  const auto t = threshold_p1();
  EXPECT_NEAR(t.value, kP1, 1e-9);
  EXPECT_NEAR(t.value, 0.3161, 1e-3);
  EXPECT_LE(std::abs(t.residual), 1e-10);
  EXPECT_GT(t.iterations, 0);
}

TEST(thresholds, advantage_above_p1) {
  for (double p : support::unit_lattice(1001)) {
    if (p < 0.32) continue;
    const ErrorProbs e{p, p};
    if (p < 1.0) EXPECT_GT(lb_qs(e), ub_classical(e)) << p;
    else EXPECT_NEAR(lb_qs(e), ub_classical(e), 1e-12);
  }
}

TEST(bisect, rejects_missing_sign_change) {
  EXPECT_THROW(bisect("none", [](double x) { return x * x + 1.0; }, -1.0, 1.0), NoSignChangeError);
  const auto t = bisect("sqrt2", [](double x) { return x * x - 2.0; }, 0.0, 2.0);
  EXPECT_NEAR(t.value, std::sqrt(2.0), 1e-14);
}

TEST(bounds_report, half_half) {
  const auto r = bounds_report({0.5, 0.5});
  EXPECT_NEAR(r.q_d, 0.0, 1e-15);
  EXPECT_NEAR(r.q_e, 0.0, 1e-15);
  EXPECT_NEAR(r.ub_classical, 0.0, 1e-12);
  EXPECT_NEAR(r.lb_qs, 0.25, 1e-12);
  EXPECT_NEAR(r.ub_qs, 0.5, 1e-12);
  EXPECT_NEAR(r.gain, 0.25, 1e-12);
  EXPECT_NEAR(r.uncertainty, 0.25, 1e-12);
  EXPECT_NEAR(r.herald_prob, 0.25, 1e-15);
  ASSERT_TRUE(r.plus_coherent_info.has_value());
  EXPECT_NEAR(*r.plus_coherent_info, 1.0 - kLog2Of3, 1e-12);
}

TEST(bounds_report, degenerate_point) {
  const auto r = bounds_report({1.0, 1.0});
  EXPECT_FALSE(r.plus_coherent_info.has_value());
  EXPECT_NEAR(r.lb_qs, 1.0, 1e-12);
  EXPECT_DOUBLE_EQ(r.herald_prob, 1.0);
}

TEST(properties, ordering_symmetry_and_ranges) {
  for (double p : support::unit_lattice(101))
    for (double q : support::unit_lattice(101)) {
      const ErrorProbs e{p, q};
      const double lb = lb_qs(e);
      const double ub = ub_qs(e);
      EXPECT_LE(lb, ub + 1e-12);
      EXPECT_GE(lb, 0.0);
      EXPECT_LE(ub, 1.0 + 1e-12);
      EXPECT_GE(lb, e.herald() - 1e-15);
      EXPECT_NEAR(lb, lb_qs({q, p}), 1e-12);
      EXPECT_DOUBLE_EQ(ub_classical(e), ub_classical({q, p}));
    }
}
