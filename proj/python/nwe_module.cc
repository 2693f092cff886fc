// Copyright 2026 The NWE Authors
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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "nwe/cli.h"
#include "nwe/constructions.h"
#include "nwe/document.h"
#include "nwe/lemma_engine.h"
#include "nwe/oplm_verifier.h"
#include "nwe/tensor.h"

namespace py = pybind11;
using namespace nwe;

namespace {

py::int_ to_py(const Integer &x) {
    const std::string s = x.str();
    return py::reinterpret_steal<py::int_>(PyLong_FromString(s.c_str(), nullptr, 10));
}

LocalVector to_local(const std::vector<std::int64_t> &coeffs) {
    return LocalVector(coeffs);
}

std::vector<std::vector<std::int64_t>> locals_of(const ProductState &s) {
    std::vector<std::vector<std::int64_t>> out;
    for (const auto &v : s.locals()) {
        out.emplace_back(v.coeffs().begin(), v.coeffs().end());
    }
    return out;
}

py::dict size_dict(const SizeReport &r) {
    py::dict d;
    d["dims"] = r.dims;
    d["jiang"] = r.jiang;
    d["ours"] = r.ours ? py::object(py::int_(*r.ours)) : py::none();
    d["wang"] = r.wang ? py::object(py::int_(*r.wang)) : py::none();
    d["zhang"] = r.zhang ? py::object(py::int_(*r.zhang)) : py::none();
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Orthogonal product state sets and exact triviality certification";

    py::register_exception<ConstructionDomainError>(m, "ConstructionDomainError", PyExc_ValueError);
    py::register_exception<DimensionError>(m, "DimensionError", PyExc_ValueError);
    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);

    py::class_<StateSet>(m, "StateSet")
        .def_static(
            "from_json", [](const std::string &text) { return parse_document(text); }, py::arg("text"),
            "Parse an nwe/1 JSON document.")
        .def(
            "to_json", [](const StateSet &s) { return canonical_dump(to_document(s)); },
            "Canonical nwe/1 JSON document.")
        .def_property_readonly("dims", [](const StateSet &s) { return s.shape().dims(); })
        .def_property_readonly("provenance", &StateSet::provenance)
        .def_property_readonly("labels",
                               [](const StateSet &s) {
                                   std::vector<std::string> out;
                                   for (const auto &p : s.states()) {
                                       out.push_back(p.label());
                                   }
                                   return out;
                               })
        .def(
            "state", [](const StateSet &s, std::size_t i) { return locals_of(s[i]); }, py::arg("index"),
            "Local coefficient vectors of one state.")
        .def("without", &StateSet::without, py::arg("index"))
        .def("__len__", &StateSet::size)
        .def("__repr__", [](const StateSet &s) {
            return "<StateSet " + s.provenance() + " with " + std::to_string(s.size()) + " states>";
        });

    py::class_<Certificate>(m, "Certificate")
        .def_property_readonly("all_trivial", &Certificate::all_trivial)
        .def_property_readonly("trivial",
                               [](const Certificate &c) {
                                   std::vector<bool> out;
                                   for (const auto &p : c.conclusions) {
                                       out.push_back(p.trivial);
                                   }
                                   return out;
                               })
        .def_property_readonly("facts",
                               [](const Certificate &c) {
                                   std::vector<std::string> out;
                                   for (const auto &f : c.facts) {
                                       out.push_back(render_fact(f, c.labels));
                                   }
                                   return out;
                               })
        .def("render", &render_certificate);

    py::class_<TrivialityVerdict>(m, "TrivialityVerdict")
        .def_readonly("party", &TrivialityVerdict::party)
        .def_readonly("nullspace_dim", &TrivialityVerdict::nullspace_dim)
        .def_property_readonly("trivial", &TrivialityVerdict::trivial)
        .def_property_readonly("witness", [](const TrivialityVerdict &v) -> py::object {
            if (!v.witness) {
                return py::none();
            }
            py::list rows;
            for (const auto &row : *v.witness) {
                py::list r;
                for (const auto &x : row) {
                    r.append(py::make_tuple(rational_str(x.re), rational_str(x.im)));
                }
                rows.append(r);
            }
            return rows;
        });

    m.def(
        "local_inner",
        [](const std::vector<std::int64_t> &u, const std::vector<std::int64_t> &v) {
            return to_py(local_inner(to_local(u), to_local(v)));
        },
        py::arg("u"), py::arg("v"));
    m.def(
        "inner_factors",
        [](const StateSet &set, std::size_t i, std::size_t j) {
            py::list out;
            for (const auto &f : inner_factors(set[i], set[j])) {
                out.append(to_py(f));
            }
            return out;
        },
        py::arg("set"), py::arg("i"), py::arg("j"));
    m.def("gen_equal", &gen_equal, py::arg("parties"), py::arg("dim"));
    m.def("gen_general", &gen_general, py::arg("dims"));
    m.def(
        "expected_size_equal",
        [](std::size_t n, std::size_t d) { return expected_size(ConstructionKind::equal(n, d)); }, py::arg("parties"),
        py::arg("dim"));
    m.def(
        "expected_size_general",
        [](const std::vector<std::size_t> &dims) { return expected_size(ConstructionKind::general(dims)); },
        py::arg("dims"));
    m.def(
        "prior_sizes", [](const std::vector<std::size_t> &dims) { return size_dict(prior_sizes(dims)); },
        py::arg("dims"));
    m.def("check_pairwise_orthogonality", &check_pairwise_orthogonality, py::arg("set"));
    m.def("derive_certificate", &derive_certificate, py::arg("set"), py::call_guard<py::gil_scoped_release>());
    m.def("verdict", &verdict, py::arg("set"), py::arg("party"), py::call_guard<py::gil_scoped_release>());
    m.def("verify_all", &verify_all, py::arg("set"), py::call_guard<py::gil_scoped_release>());
    m.def(
        "run_cli",
        [](const std::vector<std::string> &args) {
            std::ostringstream out;
            std::ostringstream err;
            const int code = cli::run(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Run the nwe command line in-process; returns (exit_code, stdout, stderr).");
}
