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

#include <algorithm>
#include <cmath>
#include <string>

#include "ptele/entanglement.hpp"

namespace ptele {

namespace {

void require_unit_interval(double v, const char* what) {
    if (!(v >= 0.0 && v <= 1.0)) throw InvalidInput(std::string(what) + " must lie in [0, 1]");
}

// Initial-state quantities of a seed state with entanglement e0, in terms of
// the scale g applied to particle 2's Bloch vector and correlations.
InformationReport transferred_information(double e0, double g) {
    const double e0sq = e0 * e0;
    const double g2 = g * g;
    InformationReport r;
    r.total = 2.0 / 3.0 * (1.0 + 2.0 * g2 + (g2 - 1.0) * e0sq);
    r.individual_a = 1.0 - e0sq;
    r.individual_b = g2 * (1.0 - e0sq);
    r.correlation = g2 * 2.0 * (4.0 - e0sq) * e0sq / 3.0;
    return r;
}

double transferred_entanglement(double e0, double w) {
    const double loss = 1.0 - w;
    const double e = (std::sqrt(loss * loss + 3.0 * w * (2.0 + w) * e0 * e0) - loss) / 3.0;
    return std::clamp(e, 0.0, 1.0);
}

}  // namespace

BobStrategy::BobStrategy(std::array<ComplexMatrix, 4> corrections) : corrections_(std::move(corrections)) {
    for (const ComplexMatrix& u : corrections_) {
        if (u.dim() != 2 || !u.is_unitary()) throw InvalidInput("BobStrategy: corrections must be 2x2 unitaries");
    }
}

BobStrategy BobStrategy::optimal() {
    return BobStrategy({BellOutcome::make(0).correction, BellOutcome::make(1).correction,
                        BellOutcome::make(2).correction, BellOutcome::make(3).correction});
}

BobStrategy BobStrategy::identity() {
    const ComplexMatrix& one = pauli::identity();
    return BobStrategy({one, one, one, one});
}

std::array<double, 4> TeleportationReport::probabilities() const {
    std::array<double, 4> p{};
    for (std::size_t i = 0; i < 4; ++i) p[i] = outcomes[i].probability;
    return p;
}

double TeleportationReport::outcome_spread() const {
    double worst = 0.0;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
            if (outcomes[i].final_state && outcomes[j].final_state)
                worst = std::max(worst, outcomes[i].final_state->max_abs_diff(*outcomes[j].final_state));
    return worst;
}

TeleportationReport simulate(const ComplexMatrix& rho12, const WernerChannel& channel, const BobStrategy& strategy) {
    require_density_matrix(rho12, 4, "simulate");
    const ComplexMatrix joint = tensor(rho12, channel.state());

    TeleportationReport report;
    for (int alpha = 0; alpha < 4; ++alpha) {
        const ComplexMatrix measure = embed_middle_pair(bell_projector(alpha));
        const ComplexMatrix collapsed = measure * joint * measure;
        OutcomeResult& out = report.outcomes[static_cast<std::size_t>(alpha)];
        out.probability = collapsed.trace().real();
        if (out.probability < kNegligibleProbability) continue;

        // The correction acts on particle 4 only, so it commutes with the
        // trace over (2,3).
        ComplexMatrix reduced = trace_middle_pair(collapsed) * Complex{1.0 / out.probability};
        ComplexMatrix corrected = conjugate(tensor(pauli::identity(), strategy.correction(alpha)), reduced);
        corrected = 0.5 * (corrected + corrected.adjoint());
        out.final_state = std::move(corrected);
    }

    for (const OutcomeResult& out : report.outcomes) {
        if (!out.final_state) continue;
        const double p = out.probability;
        report.averaged_fidelity += p * trace_product(rho12, *out.final_state);
        report.final_entanglement += p * negativity(*out.final_state).value;
        const InformationReport info = information_decomposition(*out.final_state);
        report.final_information.total += p * info.total;
        report.final_information.individual_a += p * info.individual_a;
        report.final_information.individual_b += p * info.individual_b;
        report.final_information.correlation += p * info.correlation;
    }
    return report;
}

HilbertSchmidtForm transfer_form(const HilbertSchmidtForm& form0, const WernerChannel& channel, int alpha,
                                 const ComplexMatrix& correction) {
    const Mat3 m = mat3_transpose(rotation_from_unitary(correction)) * bell_correlation(alpha);
    const Mat3 particle4 = (-channel.f()) * m;
    HilbertSchmidtForm out;
    out.a = form0.a;
    out.b = particle4 * form0.b;
    out.c = form0.c * mat3_transpose(particle4);
    return out;
}

HilbertSchmidtForm final_state_closed_form(const HilbertSchmidtForm& form0, const WernerChannel& channel) {
    const double f = channel.f();
    HilbertSchmidtForm out;
    out.a = form0.a;
    out.b = f * form0.b;
    out.c = f * form0.c;
    return out;
}

double fidelity_general(const ComplexMatrix& rho12, const WernerChannel& channel, const BobStrategy& strategy) {
    const HilbertSchmidtForm form0 = hs_decompose(rho12);
    double transferred = 0.0;
    for (int alpha = 0; alpha < 4; ++alpha) {
        const HilbertSchmidtForm fin = transfer_form(form0, channel, alpha, strategy.correction(alpha));
        double corr = 0.0;
        for (int n = 0; n < 3; ++n)
            for (int k = 0; k < 3; ++k) corr += form0.c[n][k] * fin.c[n][k];
        transferred += 0.25 * (dot(form0.b, fin.b) + corr);
    }
    return 0.25 * (1.0 + dot(form0.a, form0.a) + transferred);
}

double fidelity_closed_form(double e0, double ew) {
    require_unit_interval(e0, "fidelity_closed_form: e0");
    require_unit_interval(ew, "fidelity_closed_form: ew");
    return (ew + 2.0) / 3.0 + (ew - 1.0) / 6.0 * e0 * e0;
}

double fidelity_closed_form(double e0, const WernerChannel& channel) {
    require_unit_interval(e0, "fidelity_closed_form: e0");
    const double phi = channel.phi();
    return (phi + 2.0) / 3.0 + (phi - 1.0) / 6.0 * e0 * e0;
}

double final_entanglement_closed_form(double e0, double ew) {
    require_unit_interval(e0, "final_entanglement_closed_form: e0");
    require_unit_interval(ew, "final_entanglement_closed_form: ew");
    return transferred_entanglement(e0, ew);
}

double final_entanglement_closed_form(double e0, const WernerChannel& channel) {
    require_unit_interval(e0, "final_entanglement_closed_form: e0");
    return transferred_entanglement(e0, channel.phi());
}

InformationReport final_information_closed_form(double e0, double ew) {
    require_unit_interval(e0, "final_information_closed_form: e0");
    require_unit_interval(ew, "final_information_closed_form: ew");
    return transferred_information(e0, (2.0 * ew + 1.0) / 3.0);
}

InformationReport final_information_closed_form(double e0, const WernerChannel& channel) {
    require_unit_interval(e0, "final_information_closed_form: e0");
    return transferred_information(e0, channel.f());
}

double correlation_info_from_entanglement(double e, double ew) {
    if (!(ew > 0.0 && ew <= 1.0)) throw InvalidInput("correlation_info_from_entanglement: ew must lie in (0, 1]");
    require_unit_interval(e, "correlation_info_from_entanglement: e");
    // Inverting the entanglement transfer gives e0^2 = 3x with
    // x = e (e + 2(1 - ew)/3) / (ew (2 + ew)).
    const double g = (2.0 * ew + 1.0) / 3.0;
    const double x = e * (e + 2.0 * (1.0 - ew) / 3.0) / (ew * (2.0 + ew));
    return 2.0 * g * g * (4.0 - 3.0 * x) * x;
}

}  // namespace ptele
