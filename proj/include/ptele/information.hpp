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

#include <span>

#include "ptele/matkernel.hpp"

namespace ptele {

/// Information content of a two-qubit state split into the parts carried by
/// each qubit and by their correlations.
struct InformationReport {
    double total;
    double individual_a;
    double individual_b;
    /// total - 2/3 (I_a + I_b + I_a I_b); zero for product states.
    double correlation;
};

/// Information of one observable with 2^k outcomes:
///   I = N * sum_i (p_i - 2^-k)^2,  N = 2^k k / (2^k - 1).
double observable_information(std::span<const double> probs, int k);

/// Total information over a complete set of complementary observables:
/// 2 Tr rho^2 - 1 for one qubit, 2/3 (4 Tr rho^2 - 1) for two.
double total_information(const ComplexMatrix& rho);

InformationReport information_decomposition(const ComplexMatrix& rho);

/// I_c from total and individual terms, with roundoff-scale values snapped to 0.
double correlation_information(double total, double individual_a, double individual_b);

}  // namespace ptele
