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

#include "ptele/entanglement.hpp"

#include <algorithm>
#include <cmath>

#include "ptele/states.hpp"

namespace ptele {

EntanglementReport negativity(const ComplexMatrix& rho) {
    require_density_matrix(rho, 4, "negativity");
    EntanglementReport report{0.0, {}};
    double sum = 0.0;
    for (double lambda : herm_eigvals(partial_transpose(rho))) {
        if (lambda < -kNegativeEigTol) {
            report.negative_eigs.push_back(lambda);
            sum += lambda;
        }
    }
    report.value = std::clamp(-2.0 * sum, 0.0, 1.0);
    return report;
}

double entropy_of_entanglement(const ComplexMatrix& rho, Subsystem side) {
    require_density_matrix(rho, 4, "entropy_of_entanglement");
    if (std::abs(purity(rho) - 1.0) > 1e-8) {
        throw InvalidInput("entropy_of_entanglement: state is not pure");
    }
    double s = 0.0;
    for (double p : herm_eigvals(partial_trace(rho, side))) {
        if (p > 0.0) s -= p * std::log2(p);
    }
    return std::clamp(s, 0.0, 1.0);
}

std::vector<CurvePoint> entropy_vs_negativity_curve(std::size_t points) {
    if (points < 2) throw InvalidInput("entropy_vs_negativity_curve: need at least 2 points");
    std::vector<CurvePoint> curve;
    curve.reserve(points);
    for (std::size_t i = 0; i < points; ++i) {
        const double e = i + 1 == points ? 1.0 : static_cast<double>(i) / static_cast<double>(points - 1);
        curve.push_back({e, entropy_of_entanglement(seed_state(e))});
    }
    return curve;
}

}  // namespace ptele
