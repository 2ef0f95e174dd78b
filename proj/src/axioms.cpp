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

#include <algorithm>
#include <cmath>

#include "ptele/entanglement.hpp"
#include "ptele/states.hpp"

namespace ptele {

namespace {

// Random 2n x 2 isometry split into n stacked 2x2 Kraus operators.
std::vector<ComplexMatrix> random_kraus_set(std::mt19937_64& rng, int branches) {
    const std::size_t rows = 2 * static_cast<std::size_t>(branches);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<Complex> col0(rows);
    std::vector<Complex> col1(rows);

    auto norm_of = [](const std::vector<Complex>& v) {
        double s = 0.0;
        for (const Complex& z : v) s += std::norm(z);
        return std::sqrt(s);
    };

    double n0 = 0.0;
    double n1 = 0.0;
    do {
        for (auto& z : col0) z = {gauss(rng), gauss(rng)};
        for (auto& z : col1) z = {gauss(rng), gauss(rng)};
        n0 = norm_of(col0);
        for (auto& z : col0) z /= n0;
        Complex overlap = 0.0;
        for (std::size_t r = 0; r < rows; ++r) overlap += std::conj(col0[r]) * col1[r];
        for (std::size_t r = 0; r < rows; ++r) col1[r] -= overlap * col0[r];
        n1 = norm_of(col1);
    } while (n0 < 1e-8 || n1 < 1e-8);
    for (auto& z : col1) z /= n1;

    std::vector<ComplexMatrix> kraus;
    kraus.reserve(static_cast<std::size_t>(branches));
    for (std::size_t j = 0; j < rows; j += 2) {
        kraus.emplace_back(2, std::initializer_list<Complex>{col0[j], col1[j], col0[j + 1], col1[j + 1]});
    }
    return kraus;
}

ComplexMatrix random_qubit_state(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double r = unit(rng);
    const std::array<double, 2> diag{(1.0 + r) / 2.0, (1.0 - r) / 2.0};
    return conjugate(random_local_unitary(rng), ComplexMatrix::diagonal(diag));
}

ComplexMatrix random_product_state(std::mt19937_64& rng) {
    const ComplexMatrix rho_a = random_qubit_state(rng);
    return tensor(rho_a, random_qubit_state(rng));
}

ComplexMatrix random_separable_mixture(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> terms_dist(1, 4);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const int terms = terms_dist(rng);
    std::vector<double> weights(static_cast<std::size_t>(terms));
    double total = 0.0;
    for (double& w : weights) total += (w = unit(rng) + 1e-3);
    ComplexMatrix rho(4);
    for (double w : weights) rho += (w / total) * random_product_state(rng);
    return rho;
}

ComplexMatrix classically_correlated_state() {
    const ComplexMatrix& z = pauli::z();
    return 0.25 * (ComplexMatrix::identity(4) - tensor(z, z));
}

}  // namespace

double LgmCcFamily::completeness_residual() const {
    ComplexMatrix sum(4);
    for (const auto& [a, b] : operators) {
        const ComplexMatrix v = tensor(a, b);
        sum += v.adjoint() * v;
    }
    return sum.max_abs_diff(ComplexMatrix::identity(4));
}

LgmCcFamily sample_lgm_cc(std::mt19937_64& rng, int branches) {
    if (branches < 1) throw InvalidInput("sample_lgm_cc: branches must be at least 1");
    const bool alice_first = std::bernoulli_distribution(0.5)(rng);
    const std::vector<ComplexMatrix> first = random_kraus_set(rng, branches);

    LgmCcFamily family;
    family.operators.reserve(first.size() * first.size());
    for (const ComplexMatrix& announced : first) {
        for (ComplexMatrix& reply : random_kraus_set(rng, branches)) {
            if (alice_first) {
                family.operators.emplace_back(announced, std::move(reply));
            } else {
                family.operators.emplace_back(std::move(reply), announced);
            }
        }
    }
    return family;
}

LgmCcFamily sample_lgm_cc(std::uint64_t seed, int branches) {
    std::mt19937_64 rng(seed);
    return sample_lgm_cc(rng, branches);
}

LgmCcAverage lgm_cc_average_entanglement(const ComplexMatrix& rho, const LgmCcFamily& family) {
    require_density_matrix(rho, 4, "lgm_cc_average_entanglement");
    LgmCcAverage avg;
    avg.branches = family.operators.size();
    for (const auto& [a, b] : family.operators) {
        const ComplexMatrix branch = conjugate(tensor(a, b), rho);
        const double p = branch.trace().real();
        if (p < kNegligibleBranch) {
            ++avg.skipped;
            continue;
        }
        ComplexMatrix normalized = branch * Complex{1.0 / p};
        normalized = 0.5 * (normalized + normalized.adjoint());
        avg.average_entanglement += p * negativity(normalized).value;
    }
    return avg;
}

std::string_view to_string(AxiomCondition condition) {
    switch (condition) {
        case AxiomCondition::c1:
            return "C1";
        case AxiomCondition::c2:
            return "C2";
        case AxiomCondition::c3:
            return "C3";
    }
    return "?";
}

std::mt19937_64 trial_rng(std::uint64_t root_seed, std::uint64_t trial) {
    std::seed_seq seq{static_cast<std::uint32_t>(root_seed), static_cast<std::uint32_t>(root_seed >> 32),
                      static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
    return std::mt19937_64(seq);
}

ComplexMatrix sample_axiom_state(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_real_distribution<double> signed_unit(-1.0, 1.0);
    const bool pure = std::bernoulli_distribution(0.5)(rng);
    const double c0 = signed_unit(rng);
    const ComplexMatrix u1 = random_local_unitary(rng);
    const ComplexMatrix u2 = random_local_unitary(rng);
    ComplexMatrix state = rotated_pure_state(c0, u1, u2);
    if (pure) return state;
    const double lambda = unit(rng);
    const double phi = signed_unit(rng);
    return lambda * state + (1.0 - lambda) * werner_state(phi);
}

AxiomReport check_c1(int trials, std::uint64_t seed) {
    if (trials < 1) throw InvalidInput("check_c1: trials must be at least 1");
    double worst = negativity(classically_correlated_state()).value;
    for (int t = 0; t < trials; ++t) {
        std::mt19937_64 rng = trial_rng(seed, static_cast<std::uint64_t>(t));
        worst = std::max(worst, negativity(random_product_state(rng)).value);
        worst = std::max(worst, negativity(random_separable_mixture(rng)).value);

        const double c0 = std::uniform_real_distribution<double>(-1.0, 1.0)(rng);
        const ComplexMatrix u1 = random_local_unitary(rng);
        const ComplexMatrix u2 = random_local_unitary(rng);
        const double e = negativity(rotated_pure_state(c0, u1, u2)).value;
        worst = std::max(worst, std::abs(e - std::abs(c0)));
    }
    return {AxiomCondition::c1, trials, worst, worst <= kAxiomTol};
}

AxiomReport check_c2(int trials, std::uint64_t seed) {
    if (trials < 1) throw InvalidInput("check_c2: trials must be at least 1");
    double worst = 0.0;
    for (int t = 0; t < trials; ++t) {
        std::mt19937_64 rng = trial_rng(seed, static_cast<std::uint64_t>(t));
        const ComplexMatrix rho = sample_axiom_state(rng);
        const ComplexMatrix u1 = random_local_unitary(rng);
        const ComplexMatrix u2 = random_local_unitary(rng);
        const double before = negativity(rho).value;
        const double after = negativity(conjugate(tensor(u1, u2), rho)).value;
        worst = std::max(worst, std::abs(before - after));
    }
    return {AxiomCondition::c2, trials, worst, worst <= kAxiomTol};
}

AxiomReport check_c3(int trials, int branches, std::uint64_t seed) {
    if (trials < 1) throw InvalidInput("check_c3: trials must be at least 1");
    if (branches < 1) throw InvalidInput("check_c3: branches must be at least 1");
    AxiomReport report{AxiomCondition::c3, trials, 0.0, false};
    for (int t = 0; t < trials; ++t) {
        std::mt19937_64 rng = trial_rng(seed, static_cast<std::uint64_t>(t));
        const ComplexMatrix rho = sample_axiom_state(rng);
        const LgmCcFamily family = sample_lgm_cc(rng, branches);
        const LgmCcAverage avg = lgm_cc_average_entanglement(rho, family);
        report.skipped_branches += avg.skipped;
        report.total_branches += avg.branches;
        report.max_violation = std::max(report.max_violation, avg.average_entanglement - negativity(rho).value);
    }
    report.passed = report.max_violation <= kAxiomTol;
    return report;
}

}  // namespace ptele
