#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "welldoc/morphism.hpp"
#include "welldoc/prng.hpp"
#include "welldoc/welldoc.hpp"

namespace py = pybind11;
using namespace welldoc;

namespace {

Morphism parse_any(const std::string& text) {
    if (text.find('{') != std::string::npos) return Morphism::from_json(text);
    return Morphism::parse(text);
}

std::vector<LcgParams> to_params(const std::vector<std::tuple<std::uint64_t, std::uint64_t,
                                                              std::uint64_t, std::uint64_t>>& quads) {
    std::vector<LcgParams> params;
    for (const auto& [a, c, m, seed] : quads) {
        LcgParams p{a, c, m, seed};
        p.validate();
        params.push_back(p);
    }
    return params;
}

}  // namespace

PYBIND11_MODULE(_welldoc_core, mod) {
    mod.doc() = "Morphic words, the WELLDOC decision, and word-combined LCG streams";

    py::class_<Morphism>(mod, "Morphism")
        .def(py::init(&parse_any), py::arg("spec"))
        .def_property_readonly("sigma", &Morphism::sigma)
        .def("apply", &Morphism::apply)
        .def("incidence_matrix", &Morphism::incidence_matrix)
        .def("is_prolongable", &Morphism::is_prolongable)
        .def("__str__", &Morphism::to_string)
        .def("__eq__", [](const Morphism& a, const Morphism& b) { return a == b; })
        .def("to_json", &Morphism::to_json);

    mod.def("prefix", &fixed_point_prefix, py::arg("phi"), py::arg("start"), py::arg("n"),
            "First n symbols of the fixed point of phi at `start`");
    mod.def("parikh", &parikh, py::arg("word"), py::arg("sigma"));
    mod.def("det", [](const std::vector<std::vector<long long>>& rows) {
        IntMatrix m(rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i)
            m[i] = IntVector(rows[i].begin(), rows[i].end());
        return py::cast(det(m).str());
    });

    mod.def("decide_json", [](const Morphism& phi) { return decide_welldoc(phi).to_json(phi); });
    mod.def("verify_json",
            [](const Morphism& phi, std::size_t lmax, unsigned long long mmax,
               std::size_t horizon) {
                return empirical_welldoc(phi, lmax, mmax, horizon).to_json(phi);
            },
            py::arg("phi"), py::arg("lmax") = 5, py::arg("mmax") = 6,
            py::arg("horizon") = 100000);
    mod.def("returns_json", [](const Morphism& phi) { return returns_complete(phi).to_json(); });

    mod.def("prng_stream",
            [](const Morphism& phi,
               const std::vector<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t,
                                            std::uint64_t>>& quads,
               std::size_t n) {
                CombinedStream stream(PrefixStream(phi, 0), to_params(quads));
                std::vector<std::uint64_t> out;
                out.reserve(n);
                for (std::size_t i = 0; i < n; ++i) out.push_back(stream.next());
                return out;
            },
            py::arg("phi"), py::arg("lcgs"), py::arg("n"));
    mod.def("tuple_coverage",
            [](const Morphism& phi,
               const std::vector<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t,
                                            std::uint64_t>>& quads,
               std::size_t d, std::size_t samples) {
                CombinedStream stream(PrefixStream(phi, 0), to_params(quads));
                auto cov = tuple_coverage(stream, d, samples);
                return py::make_tuple(cov.fraction, cov.distinct, cov.missing);
            },
            py::arg("phi"), py::arg("lcgs"), py::arg("d"), py::arg("samples"));
}
