#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ncfgl/bfk.hpp"
#include "ncfgl/errors.hpp"
#include "ncfgl/qsym.hpp"
#include "ncfgl/verify.hpp"

namespace py = pybind11;
using namespace ncfgl;

namespace {

py::object py_int(const Int& v) {
    PyObject* o = PyLong_FromString(v.str().c_str(), nullptr, 10);
    if (!o) throw py::error_already_set();
    return py::reinterpret_steal<py::object>(o);
}

py::list dims_list(const std::vector<Int>& v) {
    py::list out;
    for (const auto& d : v) out.append(py_int(d));
    return out;
}

py::list reports_list(const std::vector<RelationReport>& rs) {
    py::list out;
    for (const auto& r : rs) {
        py::dict d;
        d["relation"] = r.relation;
        d["ok"] = r.ok;
        d["lhs"] = r.lhs;
        d["rhs"] = r.rhs;
        out.append(d);
    }
    return out;
}

std::vector<RelationReport> run_named_suite(const std::string& name, int order, int max_weight) {
    FglEngine eng(order);
    if (name == "figures") return verify_figures(eng);
    if (name == "relations") return verify_relation_suite(std::min(max_weight, order), eng);
    if (name == "commutators") return verify_commutators(eng);
    if (name == "vieta") return verify_vieta_chern(eng);
    if (name == "qsym") return verify_qsym(eng);
    if (name == "hopf") return verify_hopf(max_weight, eng);
    if (name == "braiding") return verify_braiding(std::min(order, 8), eng);
    if (name == "dims") return verify_dims(order, std::min(max_weight, order), eng);
    if (name == "splitting") return verify_splitting(std::min(order, 8));
    throw BadInput("unknown suite: " + name);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact calculus of the noncommutative formal group law";

    py::register_exception<PrecisionExhausted>(m, "PrecisionExhausted");
    py::register_exception<BadInput>(m, "BadInput");
    py::register_exception<NotInvertible>(m, "NotInvertible");

    py::class_<FreePoly>(m, "FreePoly")
        .def(py::init<>())
        .def_static("parse", [](const std::string& s) { return FreePoly::parse(s); })
        .def_static("gen", [](int k) {
            if (k < 1) throw BadInput("generator index must be >= 1");
            return FreePoly::gen(uint32_t(k));
        })
        .def_static("one", &FreePoly::one)
        .def("is_zero", &FreePoly::is_zero)
        .def("max_weight", &FreePoly::max_weight)
        .def("term_count", &FreePoly::term_count)
        .def("to_text", [](const FreePoly& p) { return p.to_text(); })
        .def("to_latex", [](const FreePoly& p) { return p.to_latex(); })
        .def("to_json", &FreePoly::to_json)
        .def("__repr__", [](const FreePoly& p) { return p.to_text(); })
        .def("__eq__", [](const FreePoly& a, const FreePoly& b) { return a == b; })
        .def("__add__", [](const FreePoly& a, const FreePoly& b) { return a + b; })
        .def("__sub__", [](const FreePoly& a, const FreePoly& b) { return a - b; })
        .def("__mul__", [](const FreePoly& a, const FreePoly& b) { return a * b; })
        .def("__neg__", [](const FreePoly& a) { return -a; })
        .def("__rmul__", [](const FreePoly& a, long s) { return a * Int(s); });

    m.def("commutator", &commutator);

    py::class_<FglEngine>(m, "Engine")
        .def(py::init([](int order, const std::string& convention) {
                 auto c = convention_from_name(convention);
                 if (!c) throw BadInput("unknown convention: " + convention);
                 return std::make_unique<FglEngine>(order, *c);
             }),
             py::arg("order"), py::arg("convention") = "paper-figures")
        .def_property_readonly("order", &FglEngine::order)
        .def_property_readonly("convention",
                               [](const FglEngine& e) { return std::string(convention_name(e.convention())); })
        .def("phi", &FglEngine::phi)
        .def("phi_word",
             [](const FglEngine& e, const std::vector<int>& w, const FreePoly& a) {
                 return e.phi_word(w, a);
             })
        .def("upsilon", [](const FglEngine& e, int p, int q) { return e.upsilon(p, q); })
        .def("upsilon_direct",
             [](const FglEngine& e, int p, int q) { return e.upsilon_direct(p, q); })
        .def("fgl_coeff", [](const FglEngine& e, int i, int j) { return e.fgl_coeff(i, j); })
        .def("formal_inverse", [](const FglEngine& e) { return e.formal_inverse(); })
        .def("generator_X", &FglEngine::generator_X);

    m.def(
        "express",
        [](const FreePoly& target, const std::vector<std::pair<std::string, FreePoly>>& dict) {
            std::vector<DictEntry> entries;
            for (const auto& [n, v] : dict) entries.push_back({n, v});
            ExpressResult r = express(target, entries);
            py::dict out;
            out["status"] = r.status == ExpressResult::Status::Unique      ? "unique"
                            : r.status == ExpressResult::Status::NonUnique ? "non-unique"
                                                                           : "not-in-span";
            py::list combo;
            for (const auto& [n, c] : r.combo) combo.append(py::make_tuple(n, py_int(c)));
            out["combo"] = combo;
            out["detail"] = r.detail;
            return out;
        },
        py::arg("target"), py::arg("dictionary"));

    m.def("chern", [](int k, int nvars, int order) {
        py::list out;
        for (const auto& [I, c] : chern(k, nvars, order).terms)
            out.append(py::make_tuple(I, c));
        return out;
    });

    m.def("qsym_mul_monomials", [](const Composition& I, const Composition& J, int order) {
        QSymElement r =
            qsym_mul(QSymElement::monomial(order, I), QSymElement::monomial(order, J), order);
        py::list out;
        for (const auto& [K, c] : r.terms) out.append(py::make_tuple(K, c));
        return out;
    });

    m.def("graded_dims", [](int w_max) { return dims_list(graded_dims(w_max)); });
    m.def("generator_counts", [](int w_max) { return dims_list(generator_counts(w_max)); });

    m.def("ranks", [](int w_max, int order) {
        FglEngine eng(order);
        py::list out;
        for (const auto& r : basis_check(w_max, eng)) {
            py::dict d;
            d["weight"] = r.weight;
            d["family"] = r.family_size;
            d["expected"] = py_int(r.expected);
            d["rank"] = r.rank;
            d["index"] = py_int(r.index);
            d["ok"] = r.count_ok && r.full_rank;
            out.append(d);
        }
        return out;
    });

    m.def(
        "run_suite",
        [](const std::string& name, int order, int max_weight) {
            return reports_list(run_named_suite(name, order, max_weight));
        },
        py::arg("name"), py::arg("order") = 10, py::arg("max_weight") = 8,
        "run a verification suite and return its reports");

    m.def("reproduce_figures", [](int order) {
        FglEngine eng(order);
        return reproduce_figures(eng);
    });
}
