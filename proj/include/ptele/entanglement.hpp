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

#include <cstddef>
#include <vector>

#include "ptele/matkernel.hpp"

namespace ptele {

/// Eigenvalues of the partial transpose below this are counted as negative.
inline constexpr double kNegativeEigTol = 1e-10;

struct EntanglementReport {
    /// E = -2 * sum(negative_eigs), clamped to [0, 1].
    double value;
    std::vector<double> negative_eigs;
};

/// Negativity-based entanglement of a two-qubit density matrix: twice the
/// magnitude of the negative spectrum of its partial transpose.
EntanglementReport negativity(const ComplexMatrix& rho);

/// Entropy of entanglement S = -Tr(r log2 r) of the reduced state r on
/// `side`. Only defined for pure states (Tr rho^2 = 1 within 1e-8).
double entropy_of_entanglement(const ComplexMatrix& rho, Subsystem side = Subsystem::first);

struct CurvePoint {
    double e;
    double s;
};

/// S against E for the seed pure states, E sampled uniformly on [0, 1].
std::vector<CurvePoint> entropy_vs_negativity_curve(std::size_t points);

}  // namespace ptele
