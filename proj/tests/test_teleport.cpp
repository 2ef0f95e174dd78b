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

#include "ptele/teleport.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "ptele/entanglement.hpp"
#include "ptele/information.hpp"
#include "test_util.hpp"

using namespace ptele;
using ptele::testing::random_density;

namespace {

std::vector<double> unit_grid(int steps) {
    std::vector<double> v;
    for (int i = 0; i <= steps; ++i) v.push_back(static_cast<double>(i) / steps);
    return v;
}

std::vector<double> phi_grid(int steps) {
    std::vector<double> v;
    for (int i = 0; i <= steps; ++i) v.push_back(-1.0 + 2.0 * i / steps);
    return v;
}

BobStrategy random_strategy(std::mt19937_64& rng) {
    return BobStrategy({random_local_unitary(rng), random_local_unitary(rng), random_local_unitary(rng),
                        random_local_unitary(rng)});
}

double form_diff(const HilbertSchmidtForm& x, const HilbertSchmidtForm& y) {
    double worst = 0.0;
    for (int i = 0; i < 3; ++i) {
        worst = std::max({worst, std::abs(x.a[i] - y.a[i]), std::abs(x.b[i] - y.b[i])});
        for (int j = 0; j < 3; ++j) worst = std::max(worst, std::abs(x.c[i][j] - y.c[i][j]));
    }
    return worst;
}

}  // namespace

TEST(teleport, outcomes_are_equiprobable) {
    std::mt19937_64 rng(41);
    for (double phi : phi_grid(8)) {
        const WernerChannel channel(phi);
        for (int trial = 0; trial < 10; ++trial) {
            const TeleportationReport r = simulate(random_density(rng, 4), channel, random_strategy(rng));
            for (double p : r.probabilities()) ASSERT_NEAR(p, 0.25, 1e-12);
        }
    }
}

TEST(teleport, perfect_channel_returns_the_input) {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 50; ++trial) {
        const ComplexMatrix rho = random_density(rng, 4);
        const TeleportationReport r = simulate(rho, WernerChannel(1.0), BobStrategy::optimal());
        for (const OutcomeResult& out : r.outcomes) {
            ASSERT_TRUE(out.final_state.has_value());
            ASSERT_LT(out.final_state->max_abs_diff(rho), 1e-12);
        }
        EXPECT_NEAR(r.averaged_fidelity, purity(rho), 1e-12);
    }
}

TEST(teleport, optimal_strategy_is_measurement_independent) {
    std::mt19937_64 rng(43);
    for (double phi : phi_grid(8)) {
        for (int trial = 0; trial < 20; ++trial) {
            const TeleportationReport r = simulate(random_density(rng, 4), WernerChannel(phi), BobStrategy::optimal());
            ASSERT_LE(r.outcome_spread(), 1e-10);
        }
    }
}

TEST(teleport, identity_strategy_depends_on_outcome) {
    const TeleportationReport r = simulate(seed_state(0.6), WernerChannel(1.0), BobStrategy::identity());
    EXPECT_GT(r.outcome_spread(), 0.1);
    EXPECT_LT(r.averaged_fidelity, simulate(seed_state(0.6), WernerChannel(1.0), BobStrategy::optimal()).averaged_fidelity);
}

TEST(teleport, closed_final_form_matches_simulation) {
    std::mt19937_64 rng(44);
    for (double phi : phi_grid(8)) {
        const WernerChannel channel(phi);
        for (int trial = 0; trial < 20; ++trial) {
            const ComplexMatrix rho = random_density(rng, 4);
            const TeleportationReport r = simulate(rho, channel, BobStrategy::optimal());
            const HilbertSchmidtForm expect = final_state_closed_form(hs_decompose(rho), channel);
            ASSERT_LT(form_diff(hs_decompose(*r.outcomes[0].final_state), expect), 1e-12);
        }
    }
}

TEST(teleport, closed_final_form_examples) {
    const HilbertSchmidtForm seed = seed_form(0.6);
    EXPECT_LT(form_diff(final_state_closed_form(seed, WernerChannel(1.0)), seed), 1e-15);

    const HilbertSchmidtForm dead = final_state_closed_form(seed, WernerChannel(-0.5));
    EXPECT_LT(form_diff(dead, HilbertSchmidtForm{seed.a, {}, {}}), 1e-15);

    const HilbertSchmidtForm half = final_state_closed_form(seed, WernerChannel(0.5));
    EXPECT_LT(form_diff(half, HilbertSchmidtForm{seed.a, (2.0 / 3.0) * seed.b, mat3_diagonal(0.4, -0.4, 2.0 / 3.0)}),
              1e-15);
}

TEST(teleport, transfer_form_matches_simulation_for_any_strategy) {
    std::mt19937_64 rng(45);
    for (double phi : phi_grid(4)) {
        const WernerChannel channel(phi);
        for (int trial = 0; trial < 20; ++trial) {
            const ComplexMatrix rho = random_density(rng, 4);
            const BobStrategy strategy = random_strategy(rng);
            const TeleportationReport r = simulate(rho, channel, strategy);
            for (int alpha = 0; alpha < 4; ++alpha) {
                const HilbertSchmidtForm expect = transfer_form(hs_decompose(rho), channel, alpha, strategy.correction(alpha));
                ASSERT_LT(form_diff(hs_decompose(*r.outcomes[static_cast<std::size_t>(alpha)].final_state), expect), 1e-12);
            }
        }
    }
}

TEST(teleport, fidelity_general_matches_simulation) {
    std::mt19937_64 rng(46);
    for (double phi : phi_grid(8)) {
        const WernerChannel channel(phi);
        for (int trial = 0; trial < 20; ++trial) {
            const ComplexMatrix rho = random_density(rng, 4);
            for (const BobStrategy& strategy : {BobStrategy::optimal(), BobStrategy::identity(), random_strategy(rng)}) {
                ASSERT_NEAR(fidelity_general(rho, channel, strategy), simulate(rho, channel, strategy).averaged_fidelity,
                            1e-10);
            }
        }
    }
}

TEST(teleport, optimal_strategy_maximizes_fidelity) {
    std::mt19937_64 rng(47);
    std::uniform_real_distribution<double> u(-0.5, 1.0);
    for (int trial = 0; trial < 1000; ++trial) {
        // f >= 0 exactly when phi >= -1/2.
        const WernerChannel channel(u(rng));
        const ComplexMatrix rho = random_density(rng, 4);
        ASSERT_LE(fidelity_general(rho, channel, random_strategy(rng)),
                  fidelity_general(rho, channel, BobStrategy::optimal()) + 1e-12);
    }
}

TEST(teleport, fidelity_is_local_unitary_invariant) {
    std::mt19937_64 rng(48);
    for (int trial = 0; trial < 200; ++trial) {
        const WernerChannel channel(-1.0 + 2.0 * (trial % 21) / 20.0);
        const ComplexMatrix rho = random_density(rng, 4);
        const ComplexMatrix rotated = conjugate(tensor(random_local_unitary(rng), random_local_unitary(rng)), rho);
        ASSERT_NEAR(simulate(rotated, channel, BobStrategy::optimal()).averaged_fidelity,
                    simulate(rho, channel, BobStrategy::optimal()).averaged_fidelity, 1e-12);
    }
}

TEST(teleport, fidelity_closed_form_examples) {
    for (double ew : unit_grid(10)) EXPECT_NEAR(fidelity_closed_form(0.0, ew), (ew + 2) / 3, 1e-15);
    for (double e0 : unit_grid(10)) EXPECT_NEAR(fidelity_closed_form(e0, 1.0), 1.0, 1e-15);
    EXPECT_NEAR(fidelity_closed_form(0.0, 0.0), 2.0 / 3.0, 1e-15);
    EXPECT_NEAR(fidelity_closed_form(1.0, 0.0), 0.5, 1e-15);
    EXPECT_THROW(fidelity_closed_form(1.1, 0.5), InvalidInput);
    EXPECT_THROW(fidelity_closed_form(0.5, -0.1), InvalidInput);
    EXPECT_THROW(fidelity_closed_form(-0.1, WernerChannel(0.5)), InvalidInput);
}

TEST(teleport, fidelity_closed_form_matches_simulation) {
    std::mt19937_64 rng(49);
    for (double e0 : unit_grid(10)) {
        for (double phi : phi_grid(40)) {
            const WernerChannel channel(phi);
            const ComplexMatrix rho = rotated_pure_state(e0, random_local_unitary(rng), random_local_unitary(rng));
            const double sim = simulate(rho, channel, BobStrategy::optimal()).averaged_fidelity;
            ASSERT_NEAR(fidelity_closed_form(e0, channel), sim, 1e-10) << e0 << " " << phi;
            if (phi >= 0.0) ASSERT_NEAR(fidelity_closed_form(e0, channel.ew()), sim, 1e-10);
        }
    }
}

TEST(teleport, clipped_channel_entanglement_misses_negative_phi) {
    // Below phi = 0 the channel carries no entanglement yet still degrades
    // differently with phi; only the phi-form tracks the simulation there.
    const WernerChannel channel(-1.0);
    const double sim = simulate(seed_state(0.0), channel, BobStrategy::optimal()).averaged_fidelity;
    EXPECT_NEAR(sim, 1.0 / 3.0, 1e-12);
    EXPECT_NEAR(fidelity_closed_form(0.0, channel), sim, 1e-12);
    EXPECT_GT(fidelity_closed_form(0.0, channel.ew()) - sim, 0.3);
}

TEST(teleport, fidelity_monotonicity) {
    for (double e0 : unit_grid(20)) {
        for (double ew : unit_grid(20)) {
            if (ew < 1.0) EXPECT_LE(fidelity_closed_form(e0, ew), fidelity_closed_form(e0, std::min(1.0, ew + 0.05)) + 1e-15);
            if (e0 < 1.0) EXPECT_GE(fidelity_closed_form(e0, ew), fidelity_closed_form(std::min(1.0, e0 + 0.05), ew) - 1e-15);
        }
    }
}

TEST(teleport, final_entanglement_examples) {
    for (double e0 : unit_grid(10)) {
        EXPECT_NEAR(final_entanglement_closed_form(e0, 0.0), 0.0, 1e-15);
        EXPECT_NEAR(final_entanglement_closed_form(e0, 1.0), e0, 1e-15);
    }
    for (double ew : unit_grid(10)) EXPECT_NEAR(final_entanglement_closed_form(1.0, ew), ew, 1e-15);
    EXPECT_NEAR(final_entanglement_closed_form(1.0, 0.5), 0.5, 1e-15);
    EXPECT_GT(final_entanglement_closed_form(0.1, 0.1), 0.0);
}

TEST(teleport, final_entanglement_bounds) {
    for (double e0 : unit_grid(25)) {
        for (double ew : unit_grid(25)) {
            const double e = final_entanglement_closed_form(e0, ew);
            EXPECT_LE(e, std::min(e0, ew) + 1e-12);
            if (e0 > 0.0 && ew > 0.0) EXPECT_GT(e, 0.0);
        }
    }
}

TEST(teleport, final_entanglement_matches_simulation) {
    std::mt19937_64 rng(50);
    for (double e0 : unit_grid(10)) {
        for (double phi : phi_grid(40)) {
            const WernerChannel channel(phi);
            const ComplexMatrix rho = rotated_pure_state(e0, random_local_unitary(rng), random_local_unitary(rng));
            const double sim = simulate(rho, channel, BobStrategy::optimal()).final_entanglement;
            ASSERT_NEAR(final_entanglement_closed_form(e0, channel.ew()), sim, 1e-10) << e0 << " " << phi;
            ASSERT_NEAR(final_entanglement_closed_form(e0, channel), sim, 1e-10);
        }
    }
}

TEST(teleport, final_information_examples) {
    const InformationReport full = final_information_closed_form(0.6, 1.0);
    EXPECT_NEAR(full.total, 2.0, 1e-15);
    EXPECT_NEAR(full.individual_a, 0.64, 1e-15);
    EXPECT_NEAR(full.individual_b, 0.64, 1e-15);
    EXPECT_NEAR(full.correlation, 2 * (4 - 0.36) * 0.36 / 3, 1e-15);

    const InformationReport bell_dead = final_information_closed_form(1.0, 0.0);
    EXPECT_NEAR(bell_dead.total, 2.0 / 9.0, 1e-15);
    EXPECT_NEAR(bell_dead.correlation, 2.0 / 9.0, 1e-15);
    EXPECT_NEAR(bell_dead.individual_a, 0.0, 1e-15);
}

TEST(teleport, final_information_matches_simulation) {
    std::mt19937_64 rng(51);
    for (double e0 : unit_grid(10)) {
        for (double phi : phi_grid(40)) {
            const WernerChannel channel(phi);
            const ComplexMatrix rho = rotated_pure_state(e0, random_local_unitary(rng), random_local_unitary(rng));
            const InformationReport sim = simulate(rho, channel, BobStrategy::optimal()).final_information;
            const InformationReport phi_form = final_information_closed_form(e0, channel);
            ASSERT_NEAR(phi_form.total, sim.total, 1e-10) << e0 << " " << phi;
            ASSERT_NEAR(phi_form.individual_a, sim.individual_a, 1e-10);
            ASSERT_NEAR(phi_form.individual_b, sim.individual_b, 1e-10);
            ASSERT_NEAR(phi_form.correlation, sim.correlation, 1e-10);
            if (phi < 0.0) continue;
            const InformationReport ew_form = final_information_closed_form(e0, channel.ew());
            ASSERT_NEAR(ew_form.total, sim.total, 1e-10) << e0 << " " << phi;
            ASSERT_NEAR(ew_form.individual_b, sim.individual_b, 1e-10);
            ASSERT_NEAR(ew_form.correlation, sim.correlation, 1e-10);
        }
    }
}

TEST(teleport, correlation_info_from_own_entanglement) {
    for (double e0 : unit_grid(20)) {
        for (int i = 1; i <= 20; ++i) {
            const double ew = i / 20.0;
            const double e = final_entanglement_closed_form(e0, ew);
            ASSERT_NEAR(correlation_info_from_entanglement(e, ew), final_information_closed_form(e0, ew).correlation,
                        1e-12)
                << e0 << " " << ew;
        }
    }
    EXPECT_EQ(correlation_info_from_entanglement(0.0, 0.5), 0.0);
    EXPECT_THROW(correlation_info_from_entanglement(0.5, 0.0), InvalidInput);
    EXPECT_THROW(correlation_info_from_entanglement(1.5, 0.5), InvalidInput);
}

TEST(teleport, rejects_invalid_arguments) {
    EXPECT_THROW(BobStrategy({pauli::identity(), pauli::identity(), pauli::identity(), 2.0 * pauli::x()}), InvalidInput);
    EXPECT_THROW(BobStrategy({pauli::identity(), pauli::identity(), pauli::identity(), ComplexMatrix::identity(4)}),
                 InvalidInput);
    EXPECT_THROW(simulate(ComplexMatrix::identity(4), WernerChannel(0.5), BobStrategy::optimal()), InvalidInput);
    EXPECT_THROW(transfer_form(seed_form(0.5), WernerChannel(0.5), 4, pauli::identity()), InvalidInput);
}
