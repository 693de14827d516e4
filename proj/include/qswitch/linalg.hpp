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

#ifndef QSWITCH_LINALG_HPP
#define QSWITCH_LINALG_HPP

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

namespace qswitch {

using Complex = std::complex<double>;

/// Numerical slack used throughout. All matrices here are at most 8x8.
namespace tol {
inline constexpr double kHermitian = 1e-12;
inline constexpr double kTrace = 1e-12;
inline constexpr double kPsdSlack = 1e-10;
inline constexpr double kSupport = 1e-10;
inline constexpr double kEigenInputHermitian = 1e-10;
inline constexpr double kEntropyInvalid = 1e-9;
inline constexpr double kUnitNorm = 1e-12;
}  // namespace tol

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InvalidStateError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Dense square complex matrix, row-major.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t dim);
  ComplexMatrix(std::size_t dim, std::vector<Complex> entries);
  /// Row-major literal, e.g. {{0, 1}, {1, 0}}.
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix zero(std::size_t dim) { return ComplexMatrix(dim); }
  static ComplexMatrix diagonal(std::span<const double> values);
  /// |v><v| for a column vector v.
  static ComplexMatrix outer(std::span<const Complex> v);

  std::size_t dim() const { return dim_; }
  std::span<const Complex> entries() const { return entries_; }

  Complex& operator()(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }
  const Complex& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * dim_ + col];
  }

  ComplexMatrix adjoint() const;
  Complex trace() const;
  bool all_finite() const;

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(Complex scale);

  friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
  friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }
  friend ComplexMatrix operator*(ComplexMatrix m, Complex s) { return m *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix m) { return m *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> entries_;
};

/// Largest entrywise modulus of a - b. Throws DimensionError on size mismatch.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// U rho U^dagger.
ComplexMatrix conjugate(const ComplexMatrix& u, const ComplexMatrix& rho);

/// Tensor product with the leftmost factor most significant:
/// kron(a, b)[i*b.dim + k, j*b.dim + l] = a[i, j] * b[k, l].
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
std::vector<Complex> kron(std::span<const Complex> a, std::span<const Complex> b);

namespace pauli {
ComplexMatrix I();
ComplexMatrix X();
ComplexMatrix Y();
ComplexMatrix Z();
ComplexMatrix H();
}  // namespace pauli

/// Hermitian, unit-trace, positive-semidefinite matrix. Validated on construction.
class DensityMatrix {
 public:
  /// Throws InvalidStateError if any invariant fails.
  explicit DensityMatrix(ComplexMatrix mat);

  static DensityMatrix pure(std::span<const Complex> amplitudes);
  static DensityMatrix maximally_mixed(std::size_t dim);

  const ComplexMatrix& matrix() const { return mat_; }
  std::size_t dim() const { return mat_.dim(); }

 private:
  ComplexMatrix mat_;
};

DensityMatrix kron(const DensityMatrix& a, const DensityMatrix& b);

/// Pure state over a bipartite space H_R (x) H_A.
class PurifiedState {
 public:
  PurifiedState(std::vector<Complex> amplitudes, std::size_t dim_ref, std::size_t dim_sys);

  std::span<const Complex> amplitudes() const { return amplitudes_; }
  std::size_t dim_ref() const { return dim_ref_; }
  std::size_t dim_sys() const { return dim_sys_; }

  DensityMatrix density() const;
  /// Tr_R |psi><psi|.
  DensityMatrix system_marginal() const;

 private:
  std::vector<Complex> amplitudes_;
  std::size_t dim_ref_;
  std::size_t dim_sys_;
};

/// (|00> + |11>)/sqrt(2).
PurifiedState bell_phi_plus();

/// Partial trace keeping the subsystems listed in `keep` (in ascending order).
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const std::size_t> dims,
                            std::span<const std::size_t> keep);
ComplexMatrix partial_trace(const ComplexMatrix& m, std::span<const std::size_t> dims,
                            std::span<const std::size_t> keep);

struct EigenSystem {
  std::vector<double> values;          ///< ascending
  std::vector<std::vector<Complex>> vectors;  ///< vectors[k] pairs with values[k]
};

/// Cyclic Jacobi. Throws InvalidStateError if m is not Hermitian within 1e-10.
EigenSystem hermitian_eigensystem(const ComplexMatrix& m);
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

/// Entropies in bits.
/// -x log2 x - (1-x) log2(1-x), zero at both endpoints. Throws std::out_of_range outside [0, 1].
double binary_entropy(double x);
double shannon_entropy(std::span<const double> probabilities);
double von_neumann_entropy(const DensityMatrix& rho);
/// S(rho || sigma); +infinity when supp(rho) is not inside supp(sigma).
double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma);

}  // namespace qswitch

#endif  // QSWITCH_LINALG_HPP
