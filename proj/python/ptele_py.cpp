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

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ptele/axioms.hpp"
#include "ptele/entanglement.hpp"
#include "ptele/information.hpp"
#include "ptele/matkernel.hpp"
#include "ptele/states.hpp"
#include "ptele/teleport.hpp"

#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)

namespace py = pybind11;
using namespace ptele;

namespace {

using ComplexArray = py::array_t<Complex, py::array::c_style | py::array::forcecast>;

ComplexMatrix to_matrix(const ComplexArray& arr) {
    if (arr.ndim() != 2 || arr.shape(0) != arr.shape(1)) throw InvalidInput("expected a square 2-d array");
    const auto n = static_cast<std::size_t>(arr.shape(0));
    return ComplexMatrix(n, std::vector<Complex>(arr.data(), arr.data() + n * n));
}

ComplexArray to_array(const ComplexMatrix& m) {
    const auto n = static_cast<py::ssize_t>(m.dim());
    ComplexArray arr({n, n});
    std::copy(m.entries().begin(), m.entries().end(), arr.mutable_data());
    return arr;
}

py::array_t<double> to_array(const Mat3& m) {
    py::array_t<double> arr({3, 3});
    auto view = arr.mutable_unchecked<2>();
    for (py::ssize_t i = 0; i < 3; ++i)
        for (py::ssize_t j = 0; j < 3; ++j) view(i, j) = m[i][j];
    return arr;
}

py::dict to_dict(const InformationReport& r) {
    py::dict d;
    d["total"] = r.total;
    d["individual_a"] = r.individual_a;
    d["individual_b"] = r.individual_b;
    d["correlation"] = r.correlation;
    return d;
}

py::dict to_dict(const HilbertSchmidtForm& f) {
    py::dict d;
    d["a"] = f.a;
    d["b"] = f.b;
    d["c"] = to_array(f.c);
    return d;
}

using RealArray = py::array_t<double, py::array::c_style | py::array::forcecast>;

HilbertSchmidtForm form_from(const Vec3& a, const Vec3& b, const RealArray& c) {
    if (c.ndim() != 2 || c.shape(0) != 3 || c.shape(1) != 3) throw InvalidInput("correlation matrix must be 3x3");
    HilbertSchmidtForm f;
    f.a = a;
    f.b = b;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) f.c[i][j] = c.at(i, j);
    return f;
}

BobStrategy strategy_from(const std::string& name) {
    if (name == "optimal") return BobStrategy::optimal();
    if (name == "identity") return BobStrategy::identity();
    throw InvalidInput("strategy must be 'optimal' or 'identity'");
}

py::dict axiom_dict(const AxiomReport& r) {
    py::dict d;
    d["condition"] = std::string(to_string(r.condition));
    d["trials"] = r.trials;
    d["max_violation"] = r.max_violation;
    d["passed"] = r.passed;
    d["skip_rate"] = r.skip_rate();
    return d;
}

}  // namespace

PYBIND11_MODULE(_ptele, m) {
    m.doc() = "Partial teleportation of entanglement through a Werner channel";

    m.def("tensor", [](const ComplexArray& a, const ComplexArray& b) { return to_array(tensor(to_matrix(a), to_matrix(b))); });
    m.def(
        "partial_trace",
        [](const ComplexArray& rho, const std::string& keep) {
            if (keep != "first" && keep != "second") throw InvalidInput("keep must be 'first' or 'second'");
            return to_array(partial_trace(to_matrix(rho), keep == "first" ? Subsystem::first : Subsystem::second));
        },
        py::arg("rho"), py::arg("keep") = "first");
    m.def("partial_transpose", [](const ComplexArray& rho) { return to_array(partial_transpose(to_matrix(rho))); });
    m.def("herm_eigvals", [](const ComplexArray& rho) { return herm_eigvals(to_matrix(rho)); });

    m.def("hs_compose", [](const Vec3& a, const Vec3& b, const RealArray& c) { return to_array(hs_compose(form_from(a, b, c))); },
          py::arg("a"), py::arg("b"), py::arg("c"));
    m.def("hs_decompose", [](const ComplexArray& rho) { return to_dict(hs_decompose(to_matrix(rho))); });
    m.def("seed_state", [](double c0) { return to_array(seed_state(c0)); }, py::arg("c0"));
    m.def("werner_state", [](double phi) { return to_array(werner_state(phi)); }, py::arg("phi"));
    m.def("bell_projector", [](int alpha) { return to_array(bell_projector(alpha)); }, py::arg("alpha"));
    m.def("random_local_unitary", [](std::uint64_t seed) { return to_array(random_local_unitary(seed)); }, py::arg("seed"));
    m.def("rotation_from_unitary", [](const ComplexArray& u) { return to_array(rotation_from_unitary(to_matrix(u))); });

    m.def("negativity", [](const ComplexArray& rho) { return negativity(to_matrix(rho)).value; });
    m.def("entropy_of_entanglement", [](const ComplexArray& rho) { return entropy_of_entanglement(to_matrix(rho)); });
    m.def("entropy_vs_negativity_curve", [](std::size_t points) {
        std::vector<std::pair<double, double>> out;
        for (const CurvePoint& p : entropy_vs_negativity_curve(points)) out.emplace_back(p.e, p.s);
        return out;
    });

    m.def("observable_information", [](const std::vector<double>& probs, int k) { return observable_information(probs, k); });
    m.def("total_information", [](const ComplexArray& rho) { return total_information(to_matrix(rho)); });
    m.def("information_decomposition", [](const ComplexArray& rho) { return to_dict(information_decomposition(to_matrix(rho))); });

    m.def(
        "simulate",
        [](const ComplexArray& rho12, double phi, const std::string& strategy) {
            const TeleportationReport r = simulate(to_matrix(rho12), WernerChannel(phi), strategy_from(strategy));
            py::list states;
            for (const OutcomeResult& o : r.outcomes) {
                if (o.final_state) {
                    states.append(to_array(*o.final_state));
                } else {
                    states.append(py::none());
                }
            }
            py::dict d;
            d["probabilities"] = r.probabilities();
            d["final_states"] = states;
            d["averaged_fidelity"] = r.averaged_fidelity;
            d["final_entanglement"] = r.final_entanglement;
            d["final_information"] = to_dict(r.final_information);
            return d;
        },
        py::arg("rho12"), py::arg("phi"), py::arg("strategy") = "optimal");
    m.def(
        "fidelity_general",
        [](const ComplexArray& rho12, double phi, const std::string& strategy) {
            return fidelity_general(to_matrix(rho12), WernerChannel(phi), strategy_from(strategy));
        },
        py::arg("rho12"), py::arg("phi"), py::arg("strategy") = "optimal");
    m.def("fidelity_closed_form", py::overload_cast<double, double>(&fidelity_closed_form), py::arg("e0"), py::arg("ew"));
    m.def("final_entanglement_closed_form", py::overload_cast<double, double>(&final_entanglement_closed_form),
          py::arg("e0"), py::arg("ew"));
    m.def(
        "final_information_closed_form", [](double e0, double ew) { return to_dict(final_information_closed_form(e0, ew)); },
        py::arg("e0"), py::arg("ew"));
    m.def("correlation_info_from_entanglement", &correlation_info_from_entanglement, py::arg("e"), py::arg("ew"));

    m.def("check_c1", [](int trials, std::uint64_t seed) { return axiom_dict(check_c1(trials, seed)); });
    m.def("check_c2", [](int trials, std::uint64_t seed) { return axiom_dict(check_c2(trials, seed)); });
    m.def("check_c3", [](int trials, int branches, std::uint64_t seed) { return axiom_dict(check_c3(trials, branches, seed)); });

#ifdef VERSION_INFO
    m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
    m.attr("__version__") = "dev";
#endif
}
