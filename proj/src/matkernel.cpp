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

#include "ptele/matkernel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace ptele {

namespace {

bool valid_dim(std::size_t dim) { return dim == 2 || dim == 4 || dim == 16; }

void require_dim(const ComplexMatrix& m, std::size_t dim, const char* op) {
    if (m.dim() != dim) {
        throw InvalidInput(std::string(op) + ": expected a " + std::to_string(dim) + "x" + std::to_string(dim) +
                           " matrix, got " + std::to_string(m.dim()) + "x" + std::to_string(m.dim()));
    }
}

// Cyclic Jacobi on a dense real symmetric n x n matrix (row-major, destroyed).
// Returns the eigenvalues in ascending order.
std::vector<double> symmetric_jacobi_eigvals(std::vector<double> a, std::size_t n) {
    auto at = [&](std::size_t r, std::size_t c) -> double& { return a[r * n + c]; };

    double scale = 0.0;
    for (double v : a) scale += v * v;
    const double stop = 1e-32 * std::max(scale, 1e-300);

    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off += at(p, q) * at(p, q);
        if (off <= stop) break;

        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = at(p, q);
                if (apq == 0.0) continue;
                const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
                const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = at(k, p);
                    const double akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = at(p, k);
                    const double aqk = at(q, k);
                    at(p, k) = c * apk - s * aqk;
                    at(q, k) = s * apk + c * aqk;
                }
            }
        }
    }

    std::vector<double> eig(n);
    for (std::size_t i = 0; i < n; ++i) eig[i] = at(i, i);
    std::sort(eig.begin(), eig.end());
    return eig;
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) { check_dim_and_entries(); }

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> entries) : dim_(dim), entries_(std::move(entries)) {
    check_dim_and_entries();
}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::initializer_list<Complex> entries) : dim_(dim), entries_(entries) {
    check_dim_and_entries();
}

void ComplexMatrix::check_dim_and_entries() const {
    if (!valid_dim(dim_)) {
        throw InvalidInput("ComplexMatrix: dimension must be 2, 4 or 16, got " + std::to_string(dim_));
    }
    if (entries_.size() != dim_ * dim_) {
        throw InvalidInput("ComplexMatrix: expected " + std::to_string(dim_ * dim_) + " entries, got " +
                           std::to_string(entries_.size()));
    }
    for (const Complex& z : entries_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw InvalidInput("ComplexMatrix: non-finite entry");
        }
    }
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

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix r(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) r(j, i) = std::conj((*this)(i, j));
    return r;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix r(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

Complex ComplexMatrix::trace() const {
    Complex t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& other) const {
    require_dim(other, dim_, "max_abs_diff");
    double worst = 0.0;
    for (std::size_t k = 0; k < entries_.size(); ++k) worst = std::max(worst, std::abs(entries_[k] - other.entries_[k]));
    return worst;
}

bool ComplexMatrix::is_hermitian(double tol) const {
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i; j < dim_; ++j)
            if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol) return false;
    return true;
}

bool ComplexMatrix::is_unitary(double tol) const {
    return ((*this) * adjoint()).max_abs_diff(identity(dim_)) <= tol;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
    require_dim(rhs, dim_, "operator+");
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += rhs.entries_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
    require_dim(rhs, dim_, "operator-");
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= rhs.entries_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
    for (Complex& z : entries_) z *= scale;
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
    require_dim(rhs, lhs.dim(), "operator*");
    const std::size_t n = lhs.dim();
    ComplexMatrix r(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const Complex lik = lhs(i, k);
            if (lik == Complex{}) continue;
            for (std::size_t j = 0; j < n; ++j) r(i, j) += lik * rhs(k, j);
        }
    }
    return r;
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
    const std::size_t n = a.dim() * b.dim();
    if (n != 4 && n != 16) {
        throw InvalidInput("tensor: product dimension " + std::to_string(n) + " is not supported (must be 4 or 16)");
    }
    ComplexMatrix r(n);
    const std::size_t nb = b.dim();
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            for (std::size_t k = 0; k < nb; ++k)
                for (std::size_t l = 0; l < nb; ++l) r(i * nb + k, j * nb + l) = a(i, j) * b(k, l);
    return r;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, Subsystem keep) {
    require_dim(m, 4, "partial_trace");
    ComplexMatrix r(2);
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            Complex s = 0.0;
            for (std::size_t k = 0; k < 2; ++k) {
                s += keep == Subsystem::first ? m(2 * i + k, 2 * j + k) : m(2 * k + i, 2 * k + j);
            }
            r(i, j) = s;
        }
    }
    return r;
}

ComplexMatrix partial_transpose(const ComplexMatrix& m) {
    require_dim(m, 4, "partial_transpose");
    ComplexMatrix r(4);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t k = 0; k < 2; ++k)
            for (std::size_t j = 0; j < 2; ++j)
                for (std::size_t l = 0; l < 2; ++l) r(2 * i + l, 2 * j + k) = m(2 * i + k, 2 * j + l);
    return r;
}

std::vector<double> herm_eigvals(const ComplexMatrix& m) {
    if (!m.is_hermitian(kHermitianTol)) throw InvalidInput("herm_eigvals: matrix is not Hermitian");

    // H = A + iB is Hermitian iff [[A, -B], [B, A]] is real symmetric; every
    // eigenvalue of H then appears exactly twice in the embedding.
    const std::size_t n = m.dim();
    const std::size_t n2 = 2 * n;
    std::vector<double> emb(n2 * n2);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const Complex h = 0.5 * (m(i, j) + std::conj(m(j, i)));
            emb[i * n2 + j] = h.real();
            emb[(i + n) * n2 + (j + n)] = h.real();
            emb[i * n2 + (j + n)] = -h.imag();
            emb[(i + n) * n2 + j] = h.imag();
        }
    }
    const std::vector<double> doubled = symmetric_jacobi_eigvals(std::move(emb), n2);
    std::vector<double> eig(n);
    for (std::size_t i = 0; i < n; ++i) eig[i] = 0.5 * (doubled[2 * i] + doubled[2 * i + 1]);
    return eig;
}

ComplexMatrix conjugate(const ComplexMatrix& u, const ComplexMatrix& m) { return u * m * u.adjoint(); }

double trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_dim(b, a.dim(), "trace_product");
    double t = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t k = 0; k < a.dim(); ++k) t += (a(i, k) * b(k, i)).real();
    return t;
}

double purity(const ComplexMatrix& m) { return trace_product(m, m); }

ComplexMatrix embed_middle_pair(const ComplexMatrix& op) {
    require_dim(op, 4, "embed_middle_pair");
    ComplexMatrix r(16);
    for (std::size_t outer_a = 0; outer_a < 2; ++outer_a)
        for (std::size_t outer_d = 0; outer_d < 2; ++outer_d)
            for (std::size_t s = 0; s < 4; ++s)
                for (std::size_t t = 0; t < 4; ++t) r(8 * outer_a + 2 * s + outer_d, 8 * outer_a + 2 * t + outer_d) = op(s, t);
    return r;
}

ComplexMatrix trace_middle_pair(const ComplexMatrix& m) {
    require_dim(m, 16, "trace_middle_pair");
    ComplexMatrix r(4);
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t d = 0; d < 2; ++d)
            for (std::size_t ap = 0; ap < 2; ++ap)
                for (std::size_t dp = 0; dp < 2; ++dp) {
                    Complex s = 0.0;
                    for (std::size_t mid = 0; mid < 4; ++mid) s += m(8 * a + 2 * mid + d, 8 * ap + 2 * mid + dp);
                    r(2 * a + d, 2 * ap + dp) = s;
                }
    return r;
}

void require_density_matrix(const ComplexMatrix& m, std::size_t dim, const std::string& what) {
    if (m.dim() != dim) {
        throw InvalidInput(what + ": expected a " + std::to_string(dim) + "x" + std::to_string(dim) + " density matrix");
    }
    if (!m.is_hermitian()) throw InvalidInput(what + ": density matrix is not Hermitian");
    if (std::abs(m.trace() - 1.0) > kHermitianTol) throw InvalidInput(what + ": density matrix does not have unit trace");
    const std::vector<double> eig = herm_eigvals(m);
    if (eig.front() < -kHermitianTol) throw InvalidInput(what + ": density matrix is not positive semidefinite");
}

namespace pauli {

const ComplexMatrix& identity() {
    static const ComplexMatrix m = ComplexMatrix::identity(2);
    return m;
}

const ComplexMatrix& x() {
    static const ComplexMatrix m(2, {0.0, 1.0, 1.0, 0.0});
    return m;
}

const ComplexMatrix& y() {
    static const ComplexMatrix m(2, {0.0, Complex{0.0, -1.0}, Complex{0.0, 1.0}, 0.0});
    return m;
}

const ComplexMatrix& z() {
    static const ComplexMatrix m(2, {1.0, 0.0, 0.0, -1.0});
    return m;
}

const std::array<ComplexMatrix, 3>& all() {
    static const std::array<ComplexMatrix, 3> ms{x(), y(), z()};
    return ms;
}

}  // namespace pauli

}  // namespace ptele
