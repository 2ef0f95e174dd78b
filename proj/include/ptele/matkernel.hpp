// Copyright 2026 The ptele Authors
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

#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ptele {

using Complex = std::complex<double>;

/// Raised for any argument that violates an operation's precondition
/// (wrong dimension, non-Hermitian input, parameter out of range, ...).
class InvalidInput : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Tolerance used for Hermiticity, unitarity and density-matrix validity.
inline constexpr double kHermitianTol = 1e-10;

/// Dense row-major complex square matrix of dimension 2, 4 or 16.
///
/// Every operator in the library (states, projectors, unitaries) is carried by
/// this type. Dimensions other than 2, 4 and 16 are rejected at construction,
/// as are non-finite entries.
class ComplexMatrix {
   public:
    /// Zero matrix.
    explicit ComplexMatrix(std::size_t dim);
    ComplexMatrix(std::size_t dim, std::vector<Complex> entries);
    ComplexMatrix(std::size_t dim, std::initializer_list<Complex> entries);

    static ComplexMatrix identity(std::size_t dim);
    static ComplexMatrix diagonal(std::span<const double> values);

    std::size_t dim() const noexcept { return dim_; }
    std::span<const Complex> entries() const noexcept { return entries_; }

    Complex& operator()(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }
    const Complex& operator()(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }

    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;
    Complex trace() const;

    /// Largest entrywise modulus of (this - other).
    double max_abs_diff(const ComplexMatrix& other) const;
    bool is_hermitian(double tol = kHermitianTol) const;
    bool is_unitary(double tol = kHermitianTol) const;

    ComplexMatrix& operator+=(const ComplexMatrix& rhs);
    ComplexMatrix& operator-=(const ComplexMatrix& rhs);
    ComplexMatrix& operator*=(Complex scale);

    friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
    friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }
    friend ComplexMatrix operator*(ComplexMatrix lhs, Complex scale) { return lhs *= scale; }
    friend ComplexMatrix operator*(Complex scale, ComplexMatrix rhs) { return rhs *= scale; }
    friend ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);

    bool operator==(const ComplexMatrix&) const = default;

   private:
    void check_dim_and_entries() const;

    std::size_t dim_;
    std::vector<Complex> entries_;
};

enum class Subsystem { first, second };

/// Kronecker product. The product dimension must be 4 or 16.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

/// Reduced 2x2 matrix of a two-qubit operator, keeping `keep`.
ComplexMatrix partial_trace(const ComplexMatrix& m, Subsystem keep);

/// Transposition of the second tensor factor of a 4x4 operator.
ComplexMatrix partial_transpose(const ComplexMatrix& m);

/// Eigenvalues of a Hermitian matrix, ascending. The input is symmetrized
/// before solving; inputs further than kHermitianTol from Hermitian throw.
std::vector<double> herm_eigvals(const ComplexMatrix& m);

/// u * m * u^dagger
ComplexMatrix conjugate(const ComplexMatrix& u, const ComplexMatrix& m);

/// Re Tr(m^2).
double purity(const ComplexMatrix& m);

/// Re Tr(a * b) without forming the product.
double trace_product(const ComplexMatrix& a, const ComplexMatrix& b);

/// Four-qubit helpers, qubit order (1,2,3,4) with qubit 1 most significant.
/// 1 (x) op (x) 1 with `op` a 4x4 operator on the middle pair (qubits 2,3).
ComplexMatrix embed_middle_pair(const ComplexMatrix& op);
/// Trace over qubits 2 and 3 of a 16x16 operator; the result acts on (1,4).
ComplexMatrix trace_middle_pair(const ComplexMatrix& m);

/// Throws InvalidInput unless `m` is a density matrix of dimension `dim`:
/// Hermitian, unit trace and no eigenvalue below -kHermitianTol.
void require_density_matrix(const ComplexMatrix& m, std::size_t dim, const std::string& what);

namespace pauli {
const ComplexMatrix& identity();
const ComplexMatrix& x();
const ComplexMatrix& y();
const ComplexMatrix& z();
/// sigma_x, sigma_y, sigma_z in index order 1,2,3.
const std::array<ComplexMatrix, 3>& all();
}  // namespace pauli

}  // namespace ptele
