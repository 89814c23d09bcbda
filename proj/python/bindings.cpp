// Copyright 2026 The qsemigroup Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <optional>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qsemigroup/error.hpp"
#include "qsemigroup/io.hpp"
#include "qsemigroup/quantum_sim.hpp"
#include "qsemigroup/register_layout.hpp"
#include "qsemigroup/semigroup.hpp"
#include "qsemigroup/solver.hpp"

namespace py = pybind11;
using namespace qsemigroup;

namespace {

SimMode parse_mode(const std::string &mode) {
    if (mode == "analytic") {
        return SimMode::Analytic;
    }
    if (mode == "dense") {
        return SimMode::Dense;
    }
    throw Error(ErrorKind::InvalidArgument, "mode must be 'analytic' or 'dense'");
}

SolverOptions solver_options(const std::string &mode, std::optional<unsigned> p,
                             unsigned repetitions) {
    SolverOptions opt;
    opt.mode = parse_mode(mode);
    opt.counting_bits = p;
    opt.repetitions = repetitions;
    return opt;
}

py::dict counting_dict(const CountingResult &c) {
    py::dict d;
    d["p"] = c.p;
    d["y"] = c.y;
    d["m_estimate"] = c.m_estimate;
    d["m_rounded"] = c.m_rounded;
    d["error_bound"] = c.error_bound;
    return d;
}

std::vector<std::vector<Integer>> lambdas_of(const std::vector<Factorization> &fs) {
    std::vector<std::vector<Integer>> out;
    out.reserve(fs.size());
    for (const auto &f : fs) {
        out.push_back(f.lambdas);
    }
    return out;
}

} // namespace

PYBIND11_MODULE(_qsemigroup, m) {
    m.doc() = "Numerical semigroup invariants and simulated Grover search / counting.";

    PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> error_type;
    error_type.call_once_and_store_result(
        [&]() { return py::exception<Error>(m, "QSemigroupError"); });
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) {
                std::rethrow_exception(p);
            }
        } catch (const Error &e) {
            const py::object &type = error_type.get_stored();
            py::object inst = type(e.what());
            inst.attr("kind") = to_string(e.kind());
            PyErr_SetObject(type.ptr(), inst.ptr());
        }
    });

    py::class_<NumericalSemigroup>(m, "NumericalSemigroup")
        .def(py::init([](const std::vector<Integer> &gens) { return make_semigroup(gens); }),
             py::arg("generators"))
        .def_property_readonly("generators",
                               [](const NumericalSemigroup &s) {
                                   return std::vector<Integer>(s.generators().begin(),
                                                               s.generators().end());
                               })
        .def_property_readonly("multiplicity", &NumericalSemigroup::multiplicity)
        .def_property_readonly("embedding_dimension",
                               &NumericalSemigroup::embedding_dimension)
        .def("__contains__", [](const NumericalSemigroup &s, Integer t) { return contains(s, t); })
        .def("__eq__", [](const NumericalSemigroup &a, const NumericalSemigroup &b) {
            return a == b;
        })
        .def("__repr__", [](const NumericalSemigroup &s) {
            return "NumericalSemigroup(" + format_generators(s.generators()) + ")";
        });

    m.def("frobenius", &frobenius);
    m.def("gaps", &gaps);
    m.def("genus", &genus);
    m.def("apery_set", &apery_set, py::arg("s"), py::arg("element"));
    m.def("contains", &contains, py::arg("s"), py::arg("t"));
    m.def("denumerant", &denumerant, py::arg("s"), py::arg("t"));
    m.def(
        "factorizations",
        [](const NumericalSemigroup &s, Integer t) {
            return lambdas_of(enumerate_factorizations(s, t));
        },
        py::arg("s"), py::arg("t"));
    m.def("invariant_json", [](const NumericalSemigroup &s) {
        return format_json(invariant_report(s));
    });

    py::class_<RegisterLayout>(m, "RegisterLayout")
        .def(py::init([](const NumericalSemigroup &s, Integer t) { return build_layout(s, t); }),
             py::arg("s"), py::arg("t"))
        .def_property_readonly("widths",
                               [](const RegisterLayout &l) {
                                   return std::vector<unsigned>(l.widths().begin(),
                                                                l.widths().end());
                               })
        .def_property_readonly("total_bits", &RegisterLayout::total_bits)
        .def_property_readonly("dimension", &RegisterLayout::dimension)
        .def("decode", &RegisterLayout::decode)
        .def("encode", [](const RegisterLayout &l, const std::vector<Integer> &lambdas) {
            return l.encode(lambdas);
        })
        .def("oracle", &RegisterLayout::oracle)
        .def("marked", [](const RegisterLayout &l) { return sweep_marked(l); });

    m.def("counting_distribution", &counting_distribution, py::arg("dimension"),
          py::arg("marked"), py::arg("p"));
    m.def("default_counting_bits", &default_counting_bits);

    m.def(
        "solve_sdp",
        [](const NumericalSemigroup &s, Integer t, std::uint64_t seed, std::optional<unsigned> p,
           const std::string &mode, unsigned repetitions) {
            const auto a = solve_sdp(s, t, seed, solver_options(mode, p, repetitions));
            py::dict d;
            d["estimate"] = a.denumerant_estimate;
            d["counting"] = counting_dict(a.counting);
            d["grover_applications"] = a.grover_applications;
            return d;
        },
        py::arg("s"), py::arg("t"), py::arg("seed") = 0, py::arg("p") = py::none(),
        py::arg("mode") = "analytic", py::arg("repetitions") = kDefaultRepetitions);
    m.def(
        "solve_nsmp",
        [](const NumericalSemigroup &s, Integer t, std::uint64_t seed, const std::string &mode) {
            const auto a = solve_nsmp(s, t, seed, solver_options(mode, std::nullopt, 1));
            py::dict d;
            d["member"] = a.member;
            d["witness"] = a.witness ? py::cast(a.witness->lambdas) : py::none();
            d["grover_runs"] = a.grover_runs;
            d["total_iterations"] = a.total_iterations;
            return d;
        },
        py::arg("s"), py::arg("t"), py::arg("seed") = 0, py::arg("mode") = "analytic");
    m.def(
        "collect_all_solutions",
        [](const NumericalSemigroup &s, Integer t, std::uint64_t seed) {
            const auto r = collect_all_solutions(s, t, seed);
            py::dict d;
            d["solutions"] = lambdas_of(r.solutions);
            d["trials_used"] = r.trials_used;
            d["expected_trials"] = r.expected_trials;
            return d;
        },
        py::arg("s"), py::arg("t"), py::arg("seed") = 0);
    m.def("expected_coupon_trials", &expected_coupon_trials);
    m.def(
        "iteration_csv",
        [](const NumericalSemigroup &s, Integer from, Integer to) {
            return format_csv(iteration_report(s, from, to));
        },
        py::arg("s"), py::arg("first"), py::arg("last"));
}
