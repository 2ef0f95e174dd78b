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

#include "ptele/axioms.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "ptele/entanglement.hpp"
#include "ptele/states.hpp"
#include "test_util.hpp"

using namespace ptele;

TEST(axioms, sampled_families_are_complete) {
    for (int branches = 1; branches <= 4; ++branches) {
        for (std::uint64_t seed = 0; seed < 1000; ++seed) {
            const LgmCcFamily family = sample_lgm_cc(seed, branches);
            ASSERT_EQ(family.operators.size(), static_cast<std::size_t>(branches * branches));
            ASSERT_LT(family.completeness_residual(), 1e-10) << "branches=" << branches << " seed=" << seed;
        }
    }
}

TEST(axioms, single_branch_family_is_local_unitary) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const LgmCcFamily family = sample_lgm_cc(seed, 1);
        ASSERT_EQ(family.operators.size(), 1u);
        EXPECT_TRUE(family.operators[0].first.is_unitary(1e-10));
        EXPECT_TRUE(family.operators[0].second.is_unitary(1e-10));
    }
}

TEST(axioms, sampling_is_seeded) {
    const LgmCcFamily a = sample_lgm_cc(std::uint64_t{7}, 3);
    const LgmCcFamily b = sample_lgm_cc(std::uint64_t{7}, 3);
    const LgmCcFamily c = sample_lgm_cc(std::uint64_t{8}, 3);
    EXPECT_EQ(a.operators, b.operators);
    EXPECT_NE(a.operators, c.operators);
    EXPECT_THROW(sample_lgm_cc(std::uint64_t{1}, 0), InvalidInput);
}

TEST(axioms, unitary_family_preserves_entanglement) {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 200; ++trial) {
        const ComplexMatrix rho = sample_axiom_state(rng);
        const LgmCcAverage avg = lgm_cc_average_entanglement(rho, sample_lgm_cc(rng, 1));
        ASSERT_NEAR(avg.average_entanglement, negativity(rho).value, 1e-9);
        ASSERT_EQ(avg.skipped, 0u);
    }
}

TEST(axioms, local_filtering_concentrates_but_does_not_increase_average) {
    // Seed state with E = 0.6 has Schmidt weights cos^2 t = 0.9, sin^2 t = 0.1.
    const double t = 0.5 * std::asin(0.6);
    const double ratio = std::tan(t);
    const ComplexMatrix& one = pauli::identity();
    const ComplexMatrix keep(2, {ratio, 0.0, 0.0, 1.0});
    const ComplexMatrix drop(2, {std::sqrt(1 - ratio * ratio), 0.0, 0.0, 0.0});
    const LgmCcFamily family{{{keep, one}, {drop, one}}};
    ASSERT_LT(family.completeness_residual(), 1e-15);

    const ComplexMatrix rho = seed_state(0.6);
    const ComplexMatrix filtered = conjugate(tensor(keep, one), rho);
    const double p = filtered.trace().real();
    EXPECT_NEAR(p, 0.2, 1e-12);
    EXPECT_NEAR(negativity(filtered * Complex{1.0 / p}).value, 1.0, 1e-10);

    const LgmCcAverage avg = lgm_cc_average_entanglement(rho, family);
    EXPECT_NEAR(avg.average_entanglement, 0.2, 1e-10);
    EXPECT_EQ(avg.branches, 2u);
}

TEST(axioms, local_projective_measurement_destroys_entanglement) {
    const ComplexMatrix up(2, {1.0, 0.0, 0.0, 0.0});
    const ComplexMatrix down(2, {0.0, 0.0, 0.0, 1.0});
    const ComplexMatrix& one = pauli::identity();
    const LgmCcFamily family{{{up, one}, {down, one}}};
    for (int alpha = 0; alpha < 4; ++alpha) {
        EXPECT_NEAR(lgm_cc_average_entanglement(bell_projector(alpha), family).average_entanglement, 0.0, 1e-12);
    }
    // Measuring |00><00| in the same basis leaves one branch empty.
    const LgmCcAverage avg = lgm_cc_average_entanglement(tensor(up, up), family);
    EXPECT_EQ(avg.skipped, 1u);
}

TEST(axioms, sampled_states_are_valid) {
    std::mt19937_64 rng(62);
    for (int trial = 0; trial < 1000; ++trial) ASSERT_NO_THROW(require_density_matrix(sample_axiom_state(rng), 4, "s"));
}

TEST(axioms, trial_generators_are_order_independent) {
    std::mt19937_64 later = trial_rng(5, 17);
    for (std::uint64_t t = 0; t < 17; ++t) trial_rng(5, t)();
    std::mt19937_64 again = trial_rng(5, 17);
    EXPECT_EQ(later(), again());
    EXPECT_NE(trial_rng(5, 17)(), trial_rng(5, 18)());
    EXPECT_NE(trial_rng(5, 17)(), trial_rng(6, 17)());
    EXPECT_NE(trial_rng(std::uint64_t{1} << 32, 0)(), trial_rng(0, 0)());
}

TEST(axioms, c1_holds) {
    const AxiomReport r = check_c1(1000, 20240601);
    EXPECT_EQ(r.condition, AxiomCondition::c1);
    EXPECT_EQ(r.trials, 1000);
    EXPECT_TRUE(r.passed) << r.max_violation;
    EXPECT_LE(r.max_violation, kAxiomTol);
}

TEST(axioms, c2_holds) {
    const AxiomReport r = check_c2(1000, 20240601);
    EXPECT_TRUE(r.passed) << r.max_violation;
    EXPECT_LE(r.max_violation, kAxiomTol);
}

TEST(axioms, c3_holds) {
    for (int branches : {1, 2, 3}) {
        const AxiomReport r = check_c3(1000, branches, 20240601);
        EXPECT_TRUE(r.passed) << r.max_violation;
        EXPECT_EQ(r.total_branches, static_cast<std::size_t>(1000 * branches * branches));
        EXPECT_LT(r.skip_rate(), 0.05);
    }
}

TEST(axioms, reports_are_deterministic) {
    EXPECT_EQ(check_c1(200, 3).max_violation, check_c1(200, 3).max_violation);
    EXPECT_EQ(check_c2(200, 3).max_violation, check_c2(200, 3).max_violation);
    EXPECT_EQ(check_c3(200, 2, 3).max_violation, check_c3(200, 2, 3).max_violation);
}

TEST(axioms, rejects_bad_arguments) {
    EXPECT_THROW(check_c1(0, 1), InvalidInput);
    EXPECT_THROW(check_c2(-1, 1), InvalidInput);
    EXPECT_THROW(check_c3(10, 0, 1), InvalidInput);
    EXPECT_EQ(to_string(AxiomCondition::c3), "C3");
}
