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
#include <cstdint>
#include <random>
#include <string_view>
#include <utility>
#include <vector>

#include "ptele/matkernel.hpp"

namespace ptele {

/// Product operators V_i = A_i (x) B_i of a local measurement whose branches
/// are coordinated by classical communication. Completeness:
///   sum_i V_i^dagger V_i = 1.
struct LgmCcFamily {
    std::vector<std::pair<ComplexMatrix, ComplexMatrix>> operators;

    /// max |sum_i V_i^dagger V_i - 1| entrywise.
    double completeness_residual() const;
};

/// One side measures with a random complete Kraus set of `branches` elements,
/// announces the outcome, and the other side measures with a fresh random
/// complete set conditioned on it. Produces branches^2 operator pairs; the
/// measuring-first side is random. With branches == 1 both operators are
/// unitaries.
LgmCcFamily sample_lgm_cc(std::mt19937_64& rng, int branches);
LgmCcFamily sample_lgm_cc(std::uint64_t seed, int branches);

/// Branches with probability below this are dropped from the average.
inline constexpr double kNegligibleBranch = 1e-12;

struct LgmCcAverage {
    /// sum_i p_i E(rho_i) over the retained branches.
    double average_entanglement = 0.0;
    std::size_t skipped = 0;
    std::size_t branches = 0;
};

LgmCcAverage lgm_cc_average_entanglement(const ComplexMatrix& rho, const LgmCcFamily& family);

enum class AxiomCondition { c1, c2, c3 };
std::string_view to_string(AxiomCondition condition);

inline constexpr double kAxiomTol = 1e-9;

struct AxiomReport {
    AxiomCondition condition;
    int trials;
    double max_violation;
    bool passed;
    // Only populated by check_c3.
    std::size_t skipped_branches = 0;
    std::size_t total_branches = 0;

    double skip_rate() const {
        return total_branches == 0 ? 0.0 : static_cast<double>(skipped_branches) / static_cast<double>(total_branches);
    }
};

/// Generator for trial `trial` under `root_seed`; independent of trial order.
std::mt19937_64 trial_rng(std::uint64_t root_seed, std::uint64_t trial);

/// Half the draws are locally rotated pure states, half are mixtures
/// lambda * pure + (1 - lambda) * Werner(phi), lambda and phi uniform.
ComplexMatrix sample_axiom_state(std::mt19937_64& rng);

/// Separable states must have zero entanglement; rotated pure states must
/// keep entanglement |c0|.
AxiomReport check_c1(int trials, std::uint64_t seed);
/// Local unitaries must not change entanglement.
AxiomReport check_c2(int trials, std::uint64_t seed);
/// LGM+CC must not increase average entanglement.
AxiomReport check_c3(int trials, int branches, std::uint64_t seed);

}  // namespace ptele
