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

#include "ptele/states.hpp"

#include <cmath>

namespace ptele {

Mat3 mat3_identity() { return mat3_diagonal(1.0, 1.0, 1.0); }

Mat3 mat3_diagonal(double x, double y, double z) {
    Mat3 m{};
    m[0][0] = x;
    m[1][1] = y;
    m[2][2] = z;
    return m;
}

Mat3 mat3_transpose(const Mat3& m) {
    Mat3 r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r[j][i] = m[i][j];
    return r;
}

Mat3 operator*(const Mat3& a, const Mat3& b) {
    Mat3 r{};
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k)
            for (int j = 0; j < 3; ++j) r[i][j] += a[i][k] * b[k][j];
    return r;
}

Mat3 operator*(double s, const Mat3& m) {
    Mat3 r = m;
    for (auto& row : r)
        for (double& v : row) v *= s;
    return r;
}

Vec3 operator*(const Mat3& m, const Vec3& v) {
    Vec3 r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r[i] += m[i][j] * v[j];
    return r;
}

Vec3 operator*(double s, const Vec3& v) { return {s * v[0], s * v[1], s * v[2]}; }

double dot(const Vec3& u, const Vec3& v) { return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]; }

double determinant(const Mat3& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

ComplexMatrix hs_compose(const HilbertSchmidtForm& form) {
    const auto& sigma = pauli::all();
    const ComplexMatrix& one = pauli::identity();
    ComplexMatrix rho = ComplexMatrix::identity(4);
    for (int n = 0; n < 3; ++n) {
        if (form.a[n] != 0.0) rho += form.a[n] * tensor(sigma[n], one);
        if (form.b[n] != 0.0) rho += form.b[n] * tensor(one, sigma[n]);
        for (int m = 0; m < 3; ++m) {
            if (form.c[n][m] != 0.0) rho += form.c[n][m] * tensor(sigma[n], sigma[m]);
        }
    }
    rho *= 0.25;
    return rho;
}

HilbertSchmidtForm hs_decompose(const ComplexMatrix& rho) {
    if (rho.dim() != 4) throw InvalidInput("hs_decompose: expected a 4x4 matrix");
    if (!rho.is_hermitian()) throw InvalidInput("hs_decompose: matrix is not Hermitian");
    if (std::abs(rho.trace() - 1.0) > kHermitianTol) throw InvalidInput("hs_decompose: matrix does not have unit trace");

    const auto& sigma = pauli::all();
    const ComplexMatrix& one = pauli::identity();
    HilbertSchmidtForm form;
    for (int n = 0; n < 3; ++n) {
        form.a[n] = trace_product(rho, tensor(sigma[n], one));
        form.b[n] = trace_product(rho, tensor(one, sigma[n]));
        for (int m = 0; m < 3; ++m) form.c[n][m] = trace_product(rho, tensor(sigma[n], sigma[m]));
    }
    return form;
}

SeedParams SeedParams::from_correlation(double c0) {
    if (!(std::abs(c0) <= 1.0)) throw InvalidInput("seed state: |c0| must not exceed 1");
    return {c0, std::sqrt(1.0 - c0 * c0)};
}

HilbertSchmidtForm seed_form(double c0) {
    const SeedParams p = SeedParams::from_correlation(c0);
    HilbertSchmidtForm form;
    form.a = {0.0, 0.0, p.a0};
    form.b = {0.0, 0.0, p.a0};
    form.c = mat3_diagonal(p.c0, -p.c0, 1.0);
    return form;
}

ComplexMatrix seed_state(double c0) { return hs_compose(seed_form(c0)); }

ComplexMatrix rotated_pure_state(double c0, const ComplexMatrix& u1, const ComplexMatrix& u2) {
    if (u1.dim() != 2 || u2.dim() != 2) throw InvalidInput("rotated_pure_state: local unitaries must be 2x2");
    if (!u1.is_unitary() || !u2.is_unitary()) throw InvalidInput("rotated_pure_state: local operator is not unitary");
    return conjugate(tensor(u1, u2), seed_state(c0));
}

ComplexMatrix random_local_unitary(std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Complex a;
    Complex b;
    double norm = 0.0;
    do {
        a = {gauss(rng), gauss(rng)};
        b = {gauss(rng), gauss(rng)};
        norm = std::sqrt(std::norm(a) + std::norm(b));
    } while (norm < 1e-12);
    a /= norm;
    b /= norm;
    return ComplexMatrix(2, {a, -std::conj(b), b, std::conj(a)});
}

ComplexMatrix random_local_unitary(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return random_local_unitary(rng);
}

WernerChannel::WernerChannel(double phi) : phi_(phi) {
    if (!(phi >= -1.0 && phi <= 1.0)) throw InvalidInput("Werner channel: phi must lie in [-1, 1]");
}

ComplexMatrix WernerChannel::state() const {
    HilbertSchmidtForm form;
    form.c = -f() * mat3_identity();
    return hs_compose(form);
}

ComplexMatrix werner_state(double phi) { return WernerChannel(phi).state(); }

Mat3 bell_correlation(int alpha) {
    switch (alpha) {
        case 0:
            return mat3_diagonal(-1.0, -1.0, -1.0);
        case 1:
            return mat3_diagonal(-1.0, 1.0, 1.0);
        case 2:
            return mat3_diagonal(1.0, -1.0, 1.0);
        case 3:
            return mat3_diagonal(1.0, 1.0, -1.0);
        default:
            throw InvalidInput("Bell outcome index must be 0, 1, 2 or 3, got " + std::to_string(alpha));
    }
}

ComplexMatrix bell_projector(int alpha) {
    HilbertSchmidtForm form;
    form.c = bell_correlation(alpha);
    return hs_compose(form);
}

Mat3 rotation_from_unitary(const ComplexMatrix& u) {
    if (u.dim() != 2) throw InvalidInput("rotation_from_unitary: expected a 2x2 matrix");
    if (!u.is_unitary()) throw InvalidInput("rotation_from_unitary: matrix is not unitary");
    const auto& sigma = pauli::all();
    // (O^T)[n][m] = Tr(sigma_n u sigma_m u^dagger) / 2
    Mat3 o{};
    for (int m = 0; m < 3; ++m) {
        const ComplexMatrix rotated = conjugate(u, sigma[m]);
        for (int n = 0; n < 3; ++n) o[m][n] = 0.5 * trace_product(sigma[n], rotated);
    }
    return o;
}

BellOutcome BellOutcome::make(int alpha) {
    const Mat3 p = bell_correlation(alpha);
    const ComplexMatrix& correction = alpha == 0 ? pauli::identity() : pauli::all()[alpha - 1];
    const Mat3 o = rotation_from_unitary(correction);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (std::abs(o[i][j] + p[i][j]) > 1e-12) throw std::logic_error("Bell correction does not realize O = -P");
    return {alpha, p, correction};
}

}  // namespace ptele
