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
#include <optional>

#include "ptele/information.hpp"
#include "ptele/matkernel.hpp"
#include "ptele/states.hpp"

namespace ptele {

/// Outcomes less likely than this are reported without a final state.
inline constexpr double kNegligibleProbability = 1e-14;

/// Bob's correction unitary on particle 4 for each Bell outcome alpha.
class BobStrategy {
   public:
    explicit BobStrategy(std::array<ComplexMatrix, 4> corrections);

    /// 1, sigma_x, sigma_y, sigma_z: the choice O_alpha = -P_alpha.
    static BobStrategy optimal();
    /// No correction for any outcome.
    static BobStrategy identity();

    const ComplexMatrix& correction(int alpha) const { return corrections_.at(static_cast<std::size_t>(alpha)); }
    const std::array<ComplexMatrix, 4>& corrections() const { return corrections_; }

   private:
    std::array<ComplexMatrix, 4> corrections_;
};

struct OutcomeResult {
    double probability = 0.0;
    /// State of particles (1,4) after the correction; empty when the outcome
    /// probability is below kNegligibleProbability.
    std::optional<ComplexMatrix> final_state;
};

struct TeleportationReport {
    std::array<OutcomeResult, 4> outcomes;
    /// sum_alpha p_alpha Tr(rho12 rho14_alpha)
    double averaged_fidelity = 0.0;
    /// Outcome-weighted negativity of the final states.
    double final_entanglement = 0.0;
    /// Outcome-weighted information decomposition of the final states.
    InformationReport final_information{};

    std::array<double, 4> probabilities() const;
    /// Largest entrywise difference between any two defined final states.
    double outcome_spread() const;
};

/// Brute-force protocol on the 16-dimensional state rho12 (x) w34 (particle
/// order 1,2,3,4): Bell measurement on (2,3), correction on 4, trace over (2,3).
TeleportationReport simulate(const ComplexMatrix& rho12, const WernerChannel& channel, const BobStrategy& strategy);

/// Hilbert-Schmidt form of the corrected final state for outcome alpha:
///   a -> a,  b -> -f M b,  C -> -f C M^T,  with M = O^T P_alpha
/// and O the Bloch rotation of `correction`.
HilbertSchmidtForm transfer_form(const HilbertSchmidtForm& form0, const WernerChannel& channel, int alpha,
                                 const ComplexMatrix& correction);

/// Final-state form under the optimal strategy: b and C scaled by f, a unchanged.
HilbertSchmidtForm final_state_closed_form(const HilbertSchmidtForm& form0, const WernerChannel& channel);

/// Averaged fidelity for an arbitrary strategy from the Pauli coordinates of
/// rho12 alone (each outcome has probability 1/4 through a Werner channel).
double fidelity_general(const ComplexMatrix& rho12, const WernerChannel& channel, const BobStrategy& strategy);

// Closed forms for a seed pure state with entanglement e0. The (e0, ew)
// overloads take the channel entanglement ew = max(0, phi) in [0, 1]; the
// channel overloads evaluate the same expressions with phi itself, which
// stays exact for phi < 0.

double fidelity_closed_form(double e0, double ew);
double fidelity_closed_form(double e0, const WernerChannel& channel);

double final_entanglement_closed_form(double e0, double ew);
double final_entanglement_closed_form(double e0, const WernerChannel& channel);

InformationReport final_information_closed_form(double e0, double ew);
InformationReport final_information_closed_form(double e0, const WernerChannel& channel);

/// Correlation information of the final state written in terms of its own
/// entanglement e; requires ew > 0.
double correlation_info_from_entanglement(double e, double ew);

}  // namespace ptele
