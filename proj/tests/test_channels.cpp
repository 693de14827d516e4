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

#include <random>

#include "gtest/gtest.h"
#include "test_support.hpp"

using namespace qswitch;

TEST(error_probs, checked_rejects_out_of_range) {
  EXPECT_THROW(ErrorProbs::checked(-0.1, 0.5), std::out_of_range);
  EXPECT_THROW(ErrorProbs::checked(0.5, 1.5), std::out_of_range);
  EXPECT_NO_THROW(ErrorProbs::checked(0.0, 1.0));
  EXPECT_DOUBLE_EQ(ErrorProbs::checked(0.3, 0.5).herald(), 0.15);
}

TEST(kraus_channel, rejects_incomplete_set) {
  std::vector<ComplexMatrix> ops{pauli::X() * 0.5};
  EXPECT_THROW(KrausChannel{ops}, std::invalid_argument);
}

TEST(kraus_channel, rejects_mixed_dimensions) {
  std::vector<ComplexMatrix> ops{ComplexMatrix::identity(2), ComplexMatrix::identity(4)};
  EXPECT_THROW(KrausChannel{ops}, DimensionError);
}

TEST(flip_channels, extremes_are_unitary) {
  EXPECT_LE(max_abs_diff(apply(bit_flip(0.0), pauli::Z()), pauli::Z()), 0.0);
  EXPECT_LE(max_abs_diff(apply(bit_flip(1.0), pauli::Z()), pauli::Z() * -1.0), 1e-15);
  EXPECT_LE(max_abs_diff(apply(phase_flip(1.0), pauli::X()), pauli::X() * -1.0), 1e-15);
  EXPECT_EQ(bit_flip(0.0).ops().size(), 1u);
  EXPECT_EQ(bit_flip(1.0).ops().size(), 1u);
  EXPECT_EQ(phase_flip(0.3).ops().size(), 2u);
}

TEST(flip_channels, completeness_on_grid) {
  for (double p : support::unit_lattice(21)) {
    EXPECT_LE(bit_flip(p).completeness_error(), 1e-15);
    EXPECT_LE(phase_flip(p).completeness_error(), 1e-15);
  }
  EXPECT_THROW(bit_flip(1.2), std::out_of_range);
}

TEST(flip_channels, trace_preserving_on_random_states) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 50; ++t) {
    const auto rho = support::random_density(rng, 2);
    const auto out = apply(compose(bit_flip(0.3), phase_flip(0.7)), rho);
    EXPECT_NEAR(out.matrix().trace().real(), 1.0, 1e-14);
  }
}

TEST(compose, order_matters_only_by_phase) {
  // Bit and phase flips commute up to a global phase per Kraus pair, so the maps agree.
  std::mt19937_64 rng(12);
  const auto a = compose(bit_flip(0.2), phase_flip(0.4));
  const auto b = compose(phase_flip(0.4), bit_flip(0.2));
  for (int t = 0; t < 10; ++t) {
    const auto rho = support::random_density(rng, 2);
    EXPECT_LE(max_abs_diff(apply(a, rho).matrix(), apply(b, rho).matrix()), 1e-15);
  }
}

TEST(choi_matrix, identity_channel_gives_bell_state) {
  const auto choi = choi_matrix(KrausChannel::identity());
  EXPECT_LE(max_abs_diff(choi.matrix(), bell_phi_plus().density().matrix()), 1e-15);
}

TEST(choi_matrix, bit_flip_marginal_is_maximally_mixed) {
  const auto choi = choi_matrix(bit_flip(0.37));
  const std::size_t dims[] = {2, 2};
  const std::size_t keep[] = {0};
  EXPECT_LE(max_abs_diff(partial_trace(choi, dims, keep).matrix(),
                         DensityMatrix::maximally_mixed(2).matrix()),
            1e-15);
}

TEST(pauli_mixture, matches_explicit_sum) {
  const double w[] = {0.5, 0.3, 0.2};
  const ComplexMatrix ops[] = {pauli::I(), pauli::X(), pauli::Z()};
  const auto ch = pauli_mixture(w, ops);
  std::mt19937_64 rng(13);
  const auto rho = support::random_density(rng, 2);
  const ComplexMatrix expected = rho.matrix() * 0.5 + conjugate(pauli::X(), rho.matrix()) * 0.3 +
                                 conjugate(pauli::Z(), rho.matrix()) * 0.2;
  EXPECT_LE(max_abs_diff(apply(ch, rho).matrix(), expected), 1e-15);
}

TEST(flip_channel_capacity, examples) {
  EXPECT_NEAR(flip_channel_capacity(0.1), 0.53100440641071878, 1e-15);
  EXPECT_NEAR(flip_channel_capacity(0.2), 0.27807190511263765, 1e-15);
  EXPECT_DOUBLE_EQ(flip_channel_capacity(0.5), 0.0);
  EXPECT_DOUBLE_EQ(flip_channel_capacity(0.0), 1.0);
}
