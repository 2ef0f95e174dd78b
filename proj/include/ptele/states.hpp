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
#include <cstdint>
#include <random>

#include "ptele/matkernel.hpp"

namespace ptele {

// Pauli index convention throughout: 0 -> x, 1 -> y, 2 -> z.
using Vec3 = std::array<double, 3>;
using Mat3 = std::array<Vec3, 3>;

Mat3 mat3_identity();
Mat3 mat3_diagonal(double x, double y, double z);
Mat3 mat3_transpose(const Mat3& m);
Mat3 operator*(const Mat3& a, const Mat3& b);
Mat3 operator*(double s, const Mat3& m);
Vec3 operator*(const Mat3& m, const Vec3& v);
Vec3 operator*(double s, const Vec3& v);
double dot(const Vec3& u, const Vec3& v);
double determinant(const Mat3& m);

/// Pauli-basis coordinates of a two-qubit operator:
///   rho = 1/4 (1(x)1 + a.sigma (x) 1 + 1 (x) b.sigma + sum_nm c[n][m] sigma_n (x) sigma_m)
struct HilbertSchmidtForm {
    Vec3 a{};
    Vec3 b{};
    Mat3 c{};
};

ComplexMatrix hs_compose(const HilbertSchmidtForm& form);

/// Inverse of hs_compose: a_n = Tr[rho (sigma_n (x) 1)], b_m = Tr[rho (1 (x) sigma_m)],
/// c_nm = Tr[rho (sigma_n (x) sigma_m)]. Requires a Hermitian unit-trace 4x4 input.
HilbertSchmidtForm hs_decompose(const ComplexMatrix& rho);

/// Parameters of the canonical pure state with Bloch vectors (0,0,a0) on both
/// qubits and correlations diag(c0, -c0, 1); a0 = +sqrt(1 - c0^2).
struct SeedParams {
    double c0;
    double a0;

    static SeedParams from_correlation(double c0);
    double entanglement() const { return c0 < 0 ? -c0 : c0; }
};

HilbertSchmidtForm seed_form(double c0);
ComplexMatrix seed_state(double c0);

/// (u1 (x) u2) seed_state(c0) (u1 (x) u2)^dagger
ComplexMatrix rotated_pure_state(double c0, const ComplexMatrix& u1, const ComplexMatrix& u2);

/// Haar-random SU(2) element drawn from a caller-owned generator.
ComplexMatrix random_local_unitary(std::mt19937_64& rng);
/// Haar-random SU(2) element, deterministic in `seed`.
ComplexMatrix random_local_unitary(std::uint64_t seed);

/// Werner state with isotropic correlations -f * identity, f = (2 phi + 1) / 3.
class WernerChannel {
   public:
    explicit WernerChannel(double phi);

    double phi() const noexcept { return phi_; }
    /// f = (2 phi + 1) / 3, the scale applied to transferred Bloch vectors and correlations.
    double f() const noexcept { return (2.0 * phi_ + 1.0) / 3.0; }
    /// Negativity of the channel state, max(0, phi).
    double ew() const noexcept { return phi_ > 0.0 ? phi_ : 0.0; }

    ComplexMatrix state() const;

   private:
    double phi_;
};

ComplexMatrix werner_state(double phi);

/// Rank-1 Bell projector with correlation matrix P_alpha:
///   P_0 = diag(-1,-1,-1) (singlet), P_1 = diag(-1,1,1), P_2 = diag(1,-1,1), P_3 = diag(1,1,-1).
ComplexMatrix bell_projector(int alpha);
Mat3 bell_correlation(int alpha);

/// Bloch-space rotation O of a single-qubit unitary, defined by
///   u (a.sigma) u^dagger = (O^T a).sigma.
Mat3 rotation_from_unitary(const ComplexMatrix& u);

struct BellOutcome {
    int alpha;
    Mat3 p_matrix;
    /// Bob's correction: 1, sigma_x, sigma_y, sigma_z for alpha = 0..3. Each
    /// satisfies rotation_from_unitary(correction) == -p_matrix.
    ComplexMatrix correction;

    static BellOutcome make(int alpha);
};

}  // namespace ptele
