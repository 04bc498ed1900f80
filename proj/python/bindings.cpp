#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "izr/classify.hpp"
#include "izr/enumerate.hpp"
#include "izr/json_io.hpp"
#include "izr/suites.hpp"

namespace py = pybind11;

namespace {

py::object json_to_py(const nlohmann::ordered_json& j) {
    switch (j.type()) {
        case nlohmann::ordered_json::value_t::null: return py::none();
        case nlohmann::ordered_json::value_t::boolean: return py::bool_(j.get<bool>());
        case nlohmann::ordered_json::value_t::number_integer:
            return py::int_(j.get<long long>());
        case nlohmann::ordered_json::value_t::number_unsigned:
            return py::int_(j.get<unsigned long long>());
        case nlohmann::ordered_json::value_t::number_float:
            return py::float_(j.get<double>());
        case nlohmann::ordered_json::value_t::string: return py::str(j.get<std::string>());
        case nlohmann::ordered_json::value_t::array: {
            py::list out;
            for (const auto& item : j) out.append(json_to_py(item));
            return out;
        }
        case nlohmann::ordered_json::value_t::object: {
            py::dict out;
            for (auto it = j.begin(); it != j.end(); ++it)
                out[py::str(it.key())] = json_to_py(it.value());
            return out;
        }
        default: return py::none();
    }
}

izr::Variety variety_arg(const std::string& s) {
    auto v = izr::variety_from_string(s);
    if (!v) throw py::value_error("variety must be one of i, i20, mc, s, is");
    return *v;
}

py::dict enumeration_to_py(const izr::EnumerationResult& r) {
    py::dict out;
    py::list algebras;
    for (const auto& a : r.algebras) algebras.append(a);
    out["algebras"] = algebras;
    out["complete"] = r.complete;
    out["count"] = r.algebras.size();
    out["elapsed_seconds"] = r.elapsed_seconds;
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Finite-model laboratory for implication zroupoids";

    py::class_<izr::FiniteAlgebra>(m, "FiniteAlgebra",
                                   "Finite algebra <A, ->, 0> on carrier {0..n-1}; the "
                                   "constant 0 is element 0.")
        .def(py::init(&izr::FiniteAlgebra::from_rows), py::arg("rows"))
        .def_property_readonly("size", &izr::FiniteAlgebra::size)
        .def("rows", &izr::FiniteAlgebra::rows)
        .def("apply", &izr::FiniteAlgebra::apply, py::arg("a"), py::arg("b"))
        .def("__eq__",
             [](const izr::FiniteAlgebra& a, const izr::FiniteAlgebra& b) { return a == b; })
        .def("__repr__",
             [](const izr::FiniteAlgebra& a) {
                 return "FiniteAlgebra(" + izr::algebra_to_json(a).dump() + ")";
             })
        .def("to_json", [](const izr::FiniteAlgebra& a) { return izr::algebra_to_json(a).dump(); });

    m.def(
        "parse_term",
        [](const std::string& src) { return izr::to_string(*izr::parse_term(src)); },
        py::arg("src"),
        "Parse a term, expand the derived operators, and return its core form.");

    m.def(
        "parse_identity",
        [](const std::string& src) { return izr::to_string(izr::parse_identity(src)); },
        py::arg("src"));

    m.def(
        "variables_of",
        [](const std::string& src) { return izr::variables_of(*izr::parse_term(src)); },
        py::arg("src"));

    m.def(
        "is_transfer_shape",
        [](const std::string& src) { return izr::is_transfer_shape(izr::parse_identity(src)); },
        py::arg("identity"));

    m.def(
        "eval_term",
        [](const izr::FiniteAlgebra& alg, const std::string& src,
           const std::map<std::string, int>& env) {
            return izr::eval_term(alg, *izr::parse_term(src), env);
        },
        py::arg("algebra"), py::arg("term"), py::arg("env"));

    m.def(
        "find_witness",
        [](const izr::FiniteAlgebra& alg, const std::string& identity) -> py::object {
            auto w = izr::find_witness(alg, izr::parse_identity(identity));
            if (!w) return py::none();
            return json_to_py(izr::witness_to_json(*w));
        },
        py::arg("algebra"), py::arg("identity"),
        "None when the identity holds, else the first falsifying assignment.");

    m.def(
        "satisfies",
        [](const izr::FiniteAlgebra& alg, const std::string& identity) {
            return izr::satisfies(alg, izr::parse_identity(identity));
        },
        py::arg("algebra"), py::arg("identity"));

    m.def("is_izroupoid", &izr::is_izroupoid, py::arg("algebra"));

    m.def(
        "derive_bimagma",
        [](const izr::FiniteAlgebra& alg) {
            const izr::DerivedBimagma bm = izr::derive_bimagma(alg);
            auto rows = [&](const std::vector<std::uint8_t>& t) {
                std::vector<std::vector<int>> out(bm.size, std::vector<int>(bm.size));
                for (int a = 0; a < bm.size; ++a)
                    for (int b = 0; b < bm.size; ++b) out[a][b] = t[a * bm.size + b];
                return out;
            };
            return py::make_tuple(rows(bm.meet), rows(bm.join));
        },
        py::arg("algebra"), "Returns (meet_rows, join_rows) of the derived algebra.");

    m.def(
        "isomorphism",
        [](const izr::FiniteAlgebra& a, const izr::FiniteAlgebra& b) -> py::object {
            auto pi = izr::isomorphism(a, b);
            if (!pi) return py::none();
            return py::cast(*pi);
        },
        py::arg("a"), py::arg("b"),
        "A zero-fixing bijection transporting a onto b, or None.");

    m.def("canonical_form", &izr::canonical_form, py::arg("algebra"), py::arg("max_size") = 7);

    m.def(
        "classify",
        [](const izr::FiniteAlgebra& alg) { return json_to_py(izr::to_json(izr::classify(alg))); },
        py::arg("algebra"));

    m.def(
        "enumerate_algebras",
        [](int size, const std::string& variety, bool iso_reduce,
           std::optional<double> budget_seconds, int jobs) {
            izr::SearchConfig cfg;
            cfg.size = size;
            cfg.filter = variety_arg(variety);
            cfg.iso_reduce = iso_reduce;
            cfg.budget_seconds = budget_seconds;
            cfg.jobs = jobs;
            return enumeration_to_py(izr::enumerate(cfg));
        },
        py::arg("size"), py::arg("variety") = "i", py::arg("iso_reduce") = true,
        py::arg("budget_seconds") = py::none(), py::arg("jobs") = 1);

    m.def(
        "count_classes",
        [](int size, const std::string& variety) {
            return izr::count_classes(size, variety_arg(variety)).count;
        },
        py::arg("size"), py::arg("variety") = "i");

    m.def(
        "verify",
        [](const std::string& suite, int max_size, int jobs) {
            izr::SuiteOptions opts;
            opts.jobs = jobs;
            return json_to_py(izr::to_json(izr::run_suite(suite, max_size, opts)));
        },
        py::arg("suite"), py::arg("max_size"), py::arg("jobs") = 1);

    m.def("suite_names", &izr::suite_names);

    m.def(
        "search_birkhoff_not_bisemilattice",
        [](int max_size) {
            const izr::SearchOutcome out = izr::search_birkhoff_not_bisemilattice(max_size);
            py::list algebras;
            for (const auto& a : out.algebras) algebras.append(a);
            return algebras;
        },
        py::arg("max_size"));
}
