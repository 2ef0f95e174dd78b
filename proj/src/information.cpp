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

#include "ptele/information.hpp"

#include <cmath>
#include <numeric>

namespace ptele {

double observable_information(std::span<const double> probs, int k) {
    if (k < 1 || k > 30) throw InvalidInput("observable_information: k must be a positive number of bits");
    const std::size_t n = std::size_t{1} << k;
    if (probs.size() != n) {
        throw InvalidInput("observable_information: expected " + std::to_string(n) + " probabilities");
    }
    double total = 0.0;
    for (double p : probs) {
        if (!(p >= 0.0)) throw InvalidInput("observable_information: negative probability");
        total += p;
    }
    if (std::abs(total - 1.0) > 1e-10) throw InvalidInput("observable_information: probabilities do not sum to 1");

    const double uniform = 1.0 / static_cast<double>(n);
    double deviation = 0.0;
    for (double p : probs) deviation += (p - uniform) * (p - uniform);
    const double norm = static_cast<double>(n) * k / static_cast<double>(n - 1);
    return norm * deviation;
}

double total_information(const ComplexMatrix& rho) {
    if (rho.dim() == 2) {
        require_density_matrix(rho, 2, "total_information");
        return 2.0 * purity(rho) - 1.0;
    }
    require_density_matrix(rho, 4, "total_information");
    return 2.0 / 3.0 * (4.0 * purity(rho) - 1.0);
}

double correlation_information(double total, double individual_a, double individual_b) {
    const double ic = total - 2.0 / 3.0 * (individual_a + individual_b + individual_a * individual_b);
    return std::abs(ic) < 1e-12 ? 0.0 : ic;
}

InformationReport information_decomposition(const ComplexMatrix& rho) {
    const double total = total_information(rho);
    const double ia = total_information(partial_trace(rho, Subsystem::first));
    const double ib = total_information(partial_trace(rho, Subsystem::second));
    return {total, ia, ib, correlation_information(total, ia, ib)};
}

}  // namespace ptele
