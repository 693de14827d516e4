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

// Grid sweeps of the bound functions. Each kernel has a serial reference and an
// OpenMP version; both write into preallocated row-major storage, so results are
// identical bit for bit regardless of thread count.

#ifndef QSWITCH_SURFACE_HPP
#define QSWITCH_SURFACE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qswitch/channels.hpp"

namespace qswitch {

enum class Execution { Serial, Parallel };

struct AxisRange {
  double lo = 0.0;
  double hi = 1.0;
};

/// Uniform lattice over [p.lo, p.hi] x [q.lo, q.hi] with endpoints included.
struct GridSpec {
  std::size_t resolution = 21;
  AxisRange p_range;
  AxisRange q_range;

  /// Throws std::invalid_argument unless resolution >= 2 and 0 <= lo < hi <= 1 on both axes.
  void validate() const;
  std::size_t size() const { return resolution * resolution; }
  double p_at(std::size_t i) const;
  double q_at(std::size_t j) const;
  /// Row-major: p outer, q inner.
  ErrorProbs point(std::size_t flat) const;
};

/// Evenly spaced points lo + (hi - lo) * k / (steps - 1), endpoints exact.
double lattice_point(const AxisRange& range, std::size_t k, std::size_t steps);

enum class SurfaceQuantity { UbClassical, LbQs, UbQs, Gain, Uncertainty };

std::string_view to_string(SurfaceQuantity quantity);
std::optional<SurfaceQuantity> parse_surface_quantity(std::string_view name);
std::vector<SurfaceQuantity> all_surface_quantities();

double evaluate(SurfaceQuantity quantity, const ErrorProbs& params);

struct SurfacePoint {
  double p;
  double q;
  double value;
};

std::vector<SurfacePoint> evaluate_surface(SurfaceQuantity quantity, const GridSpec& grid,
                                           Execution exec = Execution::Parallel);

struct SlicePoint {
  double p;
  double ub_classical;
  double lb_qs;
  double ub_qs;
};

/// Bounds along p = q on `steps` evenly spaced points of [0, 1].
std::vector<SlicePoint> evaluate_diagonal_slice(std::size_t steps,
                                                Execution exec = Execution::Parallel);

}  // namespace qswitch

#endif  // QSWITCH_SURFACE_HPP
