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

#include "qswitch/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace qswitch {

namespace {

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
  if (a.dim() != b.dim()) {
    throw DimensionError(std::string(what) + ": dimension mismatch (" + std::to_string(a.dim()) +
                         " vs " + std::to_string(b.dim()) + ")");
  }
}

double neg_xlog2x(double x) { return x > 0.0 ? -x * std::log2(x) : 0.0; }

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim, Complex{0.0, 0.0}) {}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (entries_.size() != dim_ * dim_) {
    throw DimensionError("ComplexMatrix: entries length " + std::to_string(entries_.size()) +
                         " does not equal dim^2 = " + std::to_string(dim_ * dim_));
  }
  if (!all_finite()) throw std::invalid_argument("ComplexMatrix: non-finite entry");
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : dim_(rows.size()) {
  entries_.reserve(dim_ * dim_);
  for (const auto& row : rows) {
    if (row.size() != dim_) throw DimensionError("ComplexMatrix: literal is not square");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
  if (!all_finite()) throw std::invalid_argument("ComplexMatrix: non-finite entry");
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix m(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

ComplexMatrix ComplexMatrix::outer(std::span<const Complex> v) {
  ComplexMatrix m(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = v[i] * std::conj(v[j]);
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

Complex ComplexMatrix::trace() const {
  Complex t{0.0, 0.0};
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

bool ComplexMatrix::all_finite() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Complex& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
  });
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  require_same_dim(*this, rhs, "operator+");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += rhs.entries_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
  require_same_dim(*this, rhs, "operator-");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= rhs.entries_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
  for (auto& z : entries_) z *= scale;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "operator*");
  const std::size_t n = a.dim();
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{0.0, 0.0}) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "max_abs_diff");
  double worst = 0.0;
  for (std::size_t k = 0; k < a.entries().size(); ++k)
    worst = std::max(worst, std::abs(a.entries()[k] - b.entries()[k]));
  return worst;
}

ComplexMatrix conjugate(const ComplexMatrix& u, const ComplexMatrix& rho) {
  return u * rho * u.adjoint();
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t n = a.dim() * b.dim();
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (std::size_t k = 0; k < b.dim(); ++k)
        for (std::size_t l = 0; l < b.dim(); ++l)
          out(i * b.dim() + k, j * b.dim() + l) = a(i, j) * b(k, l);
  return out;
}

std::vector<Complex> kron(std::span<const Complex> a, std::span<const Complex> b) {
  std::vector<Complex> out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) out.push_back(x * y);
  return out;
}

namespace pauli {
ComplexMatrix I() { return ComplexMatrix::identity(2); }
ComplexMatrix X() { return {{0.0, 1.0}, {1.0, 0.0}}; }
ComplexMatrix Y() { return {{0.0, Complex{0.0, -1.0}}, {Complex{0.0, 1.0}, 0.0}}; }
ComplexMatrix Z() { return {{1.0, 0.0}, {0.0, -1.0}}; }
ComplexMatrix H() {
  const double r = 1.0 / std::sqrt(2.0);
  return {{r, r}, {r, -r}};
}
}  // namespace pauli

DensityMatrix::DensityMatrix(ComplexMatrix mat) : mat_(std::move(mat)) {
  if (mat_.dim() == 0) throw InvalidStateError("DensityMatrix: empty matrix");
  if (!mat_.all_finite()) throw InvalidStateError("DensityMatrix: non-finite entry");
  const double herm = max_abs_diff(mat_, mat_.adjoint());
  if (herm > tol::kHermitian) {
    throw InvalidStateError("DensityMatrix: not Hermitian (deviation " + std::to_string(herm) + ")");
  }
  const Complex tr = mat_.trace();
  if (std::abs(tr - Complex{1.0, 0.0}) > tol::kTrace) {
    throw InvalidStateError("DensityMatrix: trace " + std::to_string(tr.real()) + " is not 1");
  }
  const auto eigs = hermitian_eigenvalues(mat_);
  if (eigs.front() < -tol::kPsdSlack) {
    throw InvalidStateError("DensityMatrix: negative eigenvalue " + std::to_string(eigs.front()));
  }
}

DensityMatrix DensityMatrix::pure(std::span<const Complex> amplitudes) {
  return DensityMatrix(ComplexMatrix::outer(amplitudes));
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
  return DensityMatrix(ComplexMatrix::identity(dim) * Complex{1.0 / static_cast<double>(dim), 0.0});
}

DensityMatrix kron(const DensityMatrix& a, const DensityMatrix& b) {
  return DensityMatrix(kron(a.matrix(), b.matrix()));
}

PurifiedState::PurifiedState(std::vector<Complex> amplitudes, std::size_t dim_ref, std::size_t dim_sys)
    : amplitudes_(std::move(amplitudes)), dim_ref_(dim_ref), dim_sys_(dim_sys) {
  if (amplitudes_.size() != dim_ref_ * dim_sys_) {
    throw DimensionError("PurifiedState: amplitude count does not match dim_R * dim_A");
  }
  double norm2 = 0.0;
  for (const auto& a : amplitudes_) norm2 += std::norm(a);
  if (std::abs(std::sqrt(norm2) - 1.0) > tol::kUnitNorm) {
    throw InvalidStateError("PurifiedState: amplitudes are not unit norm");
  }
}

DensityMatrix PurifiedState::density() const { return DensityMatrix::pure(amplitudes_); }

DensityMatrix PurifiedState::system_marginal() const {
  const std::size_t dims[] = {dim_ref_, dim_sys_};
  const std::size_t keep[] = {1};
  return partial_trace(density(), dims, keep);
}

PurifiedState bell_phi_plus() {
  const double r = 1.0 / std::sqrt(2.0);
  return PurifiedState({r, 0.0, 0.0, r}, 2, 2);
}

ComplexMatrix partial_trace(const ComplexMatrix& m, std::span<const std::size_t> dims,
                            std::span<const std::size_t> keep) {
  const std::size_t n = dims.size();
  if (n == 0) throw DimensionError("partial_trace: no subsystems given");
  const std::size_t total =
      std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
  if (total != m.dim()) throw DimensionError("partial_trace: product of dims does not equal matrix dim");
  if (keep.empty()) throw DimensionError("partial_trace: keep set is empty");

  std::vector<bool> kept(n, false);
  for (std::size_t k : keep) {
    if (k >= n) throw DimensionError("partial_trace: keep index out of range");
    if (kept[k]) throw DimensionError("partial_trace: duplicate keep index");
    kept[k] = true;
  }

  // Big-endian digits: subsystem 0 is the most significant.
  std::vector<std::size_t> stride(n, 1);
  for (std::size_t s = n - 1; s > 0; --s) stride[s - 1] = stride[s] * dims[s];

  std::size_t out_dim = 1;
  for (std::size_t s = 0; s < n; ++s)
    if (kept[s]) out_dim *= dims[s];

  // kept_index[i] is the reduced index of full index i; traced_index[i] packs the rest.
  std::vector<std::size_t> kept_index(total), traced_index(total);
  for (std::size_t i = 0; i < total; ++i) {
    std::size_t ki = 0, ti = 0;
    for (std::size_t s = 0; s < n; ++s) {
      const std::size_t digit = (i / stride[s]) % dims[s];
      if (kept[s]) ki = ki * dims[s] + digit;
      else ti = ti * dims[s] + digit;
    }
    kept_index[i] = ki;
    traced_index[i] = ti;
  }

  ComplexMatrix out(out_dim);
  for (std::size_t r = 0; r < total; ++r)
    for (std::size_t c = 0; c < total; ++c)
      if (traced_index[r] == traced_index[c]) out(kept_index[r], kept_index[c]) += m(r, c);
  return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const std::size_t> dims,
                            std::span<const std::size_t> keep) {
  return DensityMatrix(partial_trace(rho.matrix(), dims, keep));
}

EigenSystem hermitian_eigensystem(const ComplexMatrix& m) {
  const std::size_t n = m.dim();
  if (n == 0) throw DimensionError("hermitian_eigensystem: empty matrix");
  if (!m.all_finite()) throw InvalidStateError("hermitian_eigensystem: non-finite entry");
  if (max_abs_diff(m, m.adjoint()) > tol::kEigenInputHermitian) {
    throw InvalidStateError("hermitian_eigensystem: matrix is not Hermitian");
  }

  ComplexMatrix a = m;
  ComplexMatrix v = ComplexMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i) a(i, i) = a(i, i).real();

  double frob = 0.0;
  for (const auto& z : a.entries()) frob += std::norm(z);
  const double threshold = std::max(frob, 1e-300) * 1e-32;

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += std::norm(a(p, q));
    if (off <= threshold) break;

    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double mag = std::abs(a(p, q));
        if (mag == 0.0) continue;
        // Rotation J = diag(1, e^{-i phi}) * [[c, s], [-s, c]] acting on (p, q).
        const Complex phase = a(p, q) / mag;
        const Complex phase_conj = std::conj(phase);
        const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * mag);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        for (std::size_t k = 0; k < n; ++k) {  // A <- A J
          const Complex akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * phase_conj * akq;
          a(k, q) = s * akp + c * phase_conj * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {  // A <- J^dagger A
          const Complex apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * phase * aqk;
          a(q, k) = s * apk + c * phase * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {  // V <- V J
          const Complex vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - s * phase_conj * vkq;
          v(k, q) = s * vkp + c * phase_conj * vkq;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });

  EigenSystem out;
  out.values.reserve(n);
  out.vectors.reserve(n);
  for (std::size_t k : order) {
    out.values.push_back(a(k, k).real());
    std::vector<Complex> col(n);
    for (std::size_t r = 0; r < n; ++r) col[r] = v(r, k);
    out.vectors.push_back(std::move(col));
  }
  return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
  return hermitian_eigensystem(m).values;
}

double binary_entropy(double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw std::out_of_range("binary_entropy: argument outside [0, 1]");
  return neg_xlog2x(x) + neg_xlog2x(1.0 - x);
}

double shannon_entropy(std::span<const double> probabilities) {
  double h = 0.0;
  for (double x : probabilities) h += neg_xlog2x(std::clamp(x, 0.0, 1.0));
  return h;
}

double von_neumann_entropy(const DensityMatrix& rho) {
  const auto eigs = hermitian_eigenvalues(rho.matrix());
  if (eigs.front() < -tol::kEntropyInvalid) {
    throw InvalidStateError("von_neumann_entropy: eigenvalue below -1e-9");
  }
  return shannon_entropy(eigs);
}

double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) throw DimensionError("relative_entropy: dimension mismatch");
  const auto sys = hermitian_eigensystem(sigma.matrix());
  const ComplexMatrix& r = rho.matrix();
  const std::size_t n = rho.dim();

  double cross = 0.0;  // Tr[rho log2 sigma]
  for (std::size_t k = 0; k < n; ++k) {
    const auto& vec = sys.vectors[k];
    Complex weight{0.0, 0.0};
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) weight += std::conj(vec[i]) * r(i, j) * vec[j];
    const double w = weight.real();
    const double lambda = sys.values[k];
    if (lambda <= tol::kSupport) {
      if (w > tol::kSupport) return std::numeric_limits<double>::infinity();
      continue;
    }
    cross += w * std::log2(std::min(lambda, 1.0));
  }
  return -von_neumann_entropy(rho) - cross;
}

}  // namespace qswitch
