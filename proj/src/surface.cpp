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

#include "qswitch/surface.hpp"

#include <array>
#include <stdexcept>
#include <utility>

#include "qswitch/bounds.hpp"

namespace qswitch {

namespace {

constexpr std::array<std::pair<SurfaceQuantity, std::string_view>, 5> kQuantityNames = {{
    {SurfaceQuantity::UbClassical, "ub-classical"},
    {SurfaceQuantity::LbQs, "lb-qs"},
    {SurfaceQuantity::UbQs, "ub-qs"},
    {SurfaceQuantity::Gain, "gain"},
    {SurfaceQuantity::Uncertainty, "uncertainty"},
}};

void validate_axis(const AxisRange& r, const char* axis) {
  if (!(r.lo >= 0.0 && r.hi <= 1.0 && r.lo < r.hi)) {
    throw std::invalid_argument(std::string("grid: ") + axis + " range must satisfy 0 <= lo < hi <= 1");
  }
}

}  // namespace

double lattice_point(const AxisRange& range, std::size_t k, std::size_t steps) {
  if (k + 1 == steps) return range.hi;
  return range.lo + (range.hi - range.lo) * (static_cast<double>(k) / static_cast<double>(steps - 1));
}

void GridSpec::validate() const {
  if (resolution < 2) throw std::invalid_argument("grid: resolution must be at least 2");
  validate_axis(p_range, "p");
  validate_axis(q_range, "q");
}

double GridSpec::p_at(std::size_t i) const { return lattice_point(p_range, i, resolution); }
double GridSpec::q_at(std::size_t j) const { return lattice_point(q_range, j, resolution); }

ErrorProbs GridSpec::point(std::size_t flat) const {
  return ErrorProbs{p_at(flat / resolution), q_at(flat % resolution)};
}

std::string_view to_string(SurfaceQuantity quantity) {
  for (const auto& [q, name] : kQuantityNames)
    if (q == quantity) return name;
  return "unknown";
}

std::optional<SurfaceQuantity> parse_surface_quantity(std::string_view name) {
  for (const auto& [q, n] : kQuantityNames)
    if (n == name) return q;
  return std::nullopt;
}

std::vector<SurfaceQuantity> all_surface_quantities() {
  std::vector<SurfaceQuantity> out;
  for (const auto& entry : kQuantityNames) out.push_back(entry.first);
  return out;
}

double evaluate(SurfaceQuantity quantity, const ErrorProbs& params) {
  switch (quantity) {
    case SurfaceQuantity::UbClassical: return ub_classical(params);
    case SurfaceQuantity::LbQs: return lb_qs(params);
    case SurfaceQuantity::UbQs: return ub_qs(params);
    case SurfaceQuantity::Gain: return gain(params);
    case SurfaceQuantity::Uncertainty: return uncertainty(params);
  }
  throw std::invalid_argument("evaluate: unknown surface quantity");
}

std::vector<SurfacePoint> evaluate_surface(SurfaceQuantity quantity, const GridSpec& grid,
                                           Execution exec) {
  grid.validate();
  const auto n = static_cast<std::ptrdiff_t>(grid.size());
  std::vector<SurfacePoint> out(grid.size());

  if (exec == Execution::Serial) {
    for (std::ptrdiff_t k = 0; k < n; ++k) {
      const auto pt = grid.point(static_cast<std::size_t>(k));
      out[k] = {pt.p, pt.q, evaluate(quantity, pt)};
    }
    return out;
  }

#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t k = 0; k < n; ++k) {
    const auto pt = grid.point(static_cast<std::size_t>(k));
    out[k] = {pt.p, pt.q, evaluate(quantity, pt)};
  }
  return out;
}

std::vector<SlicePoint> evaluate_diagonal_slice(std::size_t steps, Execution exec) {
  if (steps < 2) throw std::invalid_argument("slice: steps must be at least 2");
  const AxisRange unit;
  const auto n = static_cast<std::ptrdiff_t>(steps);
  std::vector<SlicePoint> out(steps);

  auto fill = [&](std::ptrdiff_t k) {
    const double p = lattice_point(unit, static_cast<std::size_t>(k), steps);
    const ErrorProbs diag{p, p};
    out[k] = {p, ub_classical(diag), lb_qs(diag), ub_qs(diag)};
  };

  if (exec == Execution::Serial) {
    for (std::ptrdiff_t k = 0; k < n; ++k) fill(k);
    return out;
  }

#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t k = 0; k < n; ++k) fill(k);
  return out;
}

}  // namespace qswitch
