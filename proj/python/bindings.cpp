// Copyright 2026 The qssr Authors
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

#include <limits>
#include <optional>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qssr/analysis.hpp"
#include "qssr/error.hpp"
#include "qssr/problem.hpp"
#include "qssr/search.hpp"

namespace py = pybind11;
using namespace qssr;

namespace {

SearchOptions options(const std::string& mode, double delta, const std::string& oracle, std::uint64_t seed) {
    SearchOptions opt;
    opt.mode = parse_mode(mode);
    opt.delta = delta;
    opt.oracle = parse_oracle_mode(oracle);
    opt.seed = seed;
    return opt;
}

std::vector<std::pair<std::size_t, double>> records(const SearchTrace& t) {
    std::vector<std::pair<std::size_t, double>> out;
    for (const TraceRecord& r : t.records) out.emplace_back(r.iteration, r.marked_probability);
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Statevector simulation of quantum search over job-shop schedules";

    auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<ValidationError>(m, "ValidationError", base.ptr());
    py::register_exception<ParameterError>(m, "ParameterError", base.ptr());
    py::register_exception<CapacityError>(m, "CapacityError", base.ptr());

    py::class_<Instance>(m, "Instance")
        .def(py::init([](std::size_t machines, std::size_t jobs, std::uint64_t window,
                         std::optional<std::vector<std::int64_t>> offsets) {
                 return new_instance(machines, jobs, window,
                                     offsets.value_or(std::vector<std::int64_t>(machines, 0)));
             }),
             py::arg("machines"), py::arg("jobs"), py::arg("window"), py::arg("offsets") = py::none())
        .def_readonly("machines", &Instance::machines)
        .def_readonly("jobs", &Instance::jobs)
        .def_readonly("window", &Instance::window)
        .def_readonly("offsets", &Instance::offsets)
        .def("to_json", &instance_to_json)
        .def("__repr__", [](const Instance& i) { return "Instance(" + instance_to_json(i) + ")"; });

    m.def("load_instance", &load_instance, py::arg("path"));
    m.def("parse_instance_json", [](const std::string& text) { return parse_instance_json(text); });
    m.def("count_solutions", [](const Instance& i) { return count_solutions(i); }, py::arg("instance"));
    m.def(
        "space_sizes",
        [](const Instance& i) {
            const SpaceSizes s = space_sizes(i);
            return py::dict(py::arg("full") = s.n_full, py::arg("reduced") = s.n_reduced,
                            py::arg("solutions") = s.m_solutions);
        },
        py::arg("instance"));
    m.def(
        "layout_total",
        [](const Instance& i, const std::string& mode) {
            LayoutOptions opt;
            opt.max_qubits = std::numeric_limits<std::size_t>::max();
            return build_layout(i, parse_mode(mode), opt).total;
        },
        py::arg("instance"), py::arg("mode"));

    m.def(
        "fixed_point_angles",
        [](std::size_t rounds, double delta) {
            const AngleSequence a = fixed_point_angles(rounds, delta);
            return py::make_tuple(a.alphas, a.betas);
        },
        py::arg("rounds"), py::arg("delta"));
    m.def("required_rounds", &required_rounds, py::arg("w_min"), py::arg("delta"));

    m.def(
        "run_fixed_point",
        [](const Instance& i, const std::string& mode, std::size_t rounds, double delta, const std::string& oracle,
           std::uint64_t seed) {
            py::gil_scoped_release release;
            return records(run_fixed_point(i, options(mode, delta, oracle, seed), rounds));
        },
        py::arg("instance"), py::arg("mode") = "reduced", py::arg("rounds") = 8, py::arg("delta") = 0.1,
        py::arg("oracle") = "auto", py::arg("seed") = 0);
    m.def(
        "run_grover",
        [](const Instance& i, const std::string& mode, std::size_t iterations, const std::string& oracle) {
            py::gil_scoped_release release;
            return records(run_grover(i, options(mode, 0.1, oracle, 0), iterations));
        },
        py::arg("instance"), py::arg("mode") = "reduced", py::arg("iterations") = 8, py::arg("oracle") = "auto");

    m.def(
        "ratio_curves",
        [](std::uint64_t window, const std::vector<std::size_t>& machines, std::size_t k_min, std::size_t k_max) {
            return ratio_rows_to_csv(ratio_curves(window, machines, k_min, k_max).rows);
        },
        py::arg("window"), py::arg("machines"), py::arg("k_min"), py::arg("k_max"));
    m.def(
        "resource_report_json",
        [](const Instance& i, const std::string& mode, bool gates) {
            const Mode md = parse_mode(mode);
            return resource_report_to_json(gates ? resource_report(i, md) : qubit_report(i, md));
        },
        py::arg("instance"), py::arg("mode"), py::arg("gates") = true);
}
