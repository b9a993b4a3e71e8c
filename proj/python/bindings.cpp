#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "johnson/engine.hpp"
#include "johnson/io.hpp"

namespace py = pybind11;
using namespace johnson;

// mpq_class <-> fractions.Fraction, by way of decimal strings so arbitrary
// precision survives the crossing. Python ints are accepted too (they expose
// numerator/denominator); floats are rejected to keep everything exact.
namespace pybind11 {
namespace detail {

template <>
struct type_caster<mpq_class> {
    PYBIND11_TYPE_CASTER(mpq_class, const_name("fractions.Fraction"));

    bool load(handle src, bool) {
        if (isinstance<float_>(src)) return false;
        if (!hasattr(src, "numerator") || !hasattr(src, "denominator")) return false;
        const std::string num = str(src.attr("numerator")).cast<std::string>();
        const std::string den = str(src.attr("denominator")).cast<std::string>();
        mpq_class q;
        if (q.set_str(num + "/" + den, 10) != 0) return false;
        if (q.get_den() == 0) return false;
        q.canonicalize();
        value = std::move(q);
        return true;
    }

    static handle cast(const mpq_class& src, return_value_policy, handle) {
        object fraction = module_::import("fractions").attr("Fraction");
        return fraction(src.get_str()).release();
    }
};

}  // namespace detail
}  // namespace pybind11

namespace {

TopSet top_set_arg(const Elements& b, int n) { return make_top_set(Elements(b), n); }

py::dict report_to_dict(const VerifyReport& report) {
    py::dict out;
    out["n"] = report.n;
    out["k"] = report.k;
    out["all_pass"] = report.all_pass();
    py::list checks;
    for (const VerifyCheck& c : report.checks) {
        py::dict check;
        check["name"] = c.name;
        check["pass"] = c.pass;
        check["detail"] = c.detail;
        checks.append(check);
    }
    out["checks"] = checks;
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact eigenbasis construction and eigenspace projections for "
              "Johnson graphs J(n,k)";

    py::class_<EigenVector>(m, "EigenVector")
        .def_readonly("n", &EigenVector::n)
        .def_readonly("k", &EigenVector::k)
        .def_property_readonly("label",
                               [](const EigenVector& e) { return e.label.b; })
        .def_property_readonly("degree", &EigenVector::degree)
        .def_property_readonly("eigenvalue", &EigenVector::eigenvalue)
        .def_readonly("entries", &EigenVector::entries)
        .def("__repr__", [](const EigenVector& e) {
            return "EigenVector(B=" + format_top_set(e.label) + ", n=" +
                   std::to_string(e.n) + ", k=" + std::to_string(e.k) + ")";
        });

    py::class_<Decomposition>(m, "Decomposition")
        .def_readonly("n", &Decomposition::n)
        .def_readonly("k", &Decomposition::k)
        .def_readonly("components", &Decomposition::components)
        .def_readonly("energies", &Decomposition::energies);

    m.def("binomial", [](int n, int mm) { return binomial(n, mm); }, py::arg("n"),
          py::arg("m"));
    m.def("subset_count", &subset_count, py::arg("n"), py::arg("m"));
    m.def(
        "enumerate_subsets",
        [](int n, int mm) {
            std::vector<Elements> out;
            for_each_subset(n, mm, [&](std::span<const int> s, std::uint64_t) {
                out.emplace_back(s.begin(), s.end());
            });
            return out;
        },
        py::arg("n"), py::arg("m"), "All m-subsets of [n] in canonical order");
    m.def(
        "subset_rank",
        [](const Elements& elems, int n) { return rank_elements(elems, n); },
        py::arg("elements"), py::arg("n"));
    m.def("subset_unrank", &unrank_elements, py::arg("index"), py::arg("n"),
          py::arg("m"));

    m.def(
        "is_top_set", [](const Elements& b, int n) { return is_top_set(b, n); },
        py::arg("b"), py::arg("n"));
    m.def(
        "count_predecessors",
        [](const Elements& b, int n) { return count_predecessors(top_set_arg(b, n)); },
        py::arg("b"), py::arg("n"));
    m.def(
        "enumerate_top_sets",
        [](int n, int k) {
            std::vector<Elements> out;
            for_each_top_set(n, k, [&](const Elements& b) { out.push_back(b); });
            return out;
        },
        py::arg("n"), py::arg("k"),
        "Every top set of length 0..k, in generation order");
    m.def("eigenspace_dimension", &eigenspace_dimension, py::arg("n"), py::arg("d"));
    m.def("eigenvalue", &eigenvalue, py::arg("n"), py::arg("k"), py::arg("d"));
    m.def("count_pairs", &count_pairs, py::arg("n"), py::arg("k"));

    m.def(
        "extract_coefficient",
        [](const Elements& b, const Elements& s, int n) {
            return extract_coefficient(top_set_arg(b, n), s);
        },
        py::arg("b"), py::arg("s"), py::arg("n"));
    m.def(
        "coefficient_vector",
        [](const Elements& b, int n) {
            return coefficient_vector(top_set_arg(b, n), n).entries;
        },
        py::arg("b"), py::arg("n"));

    m.def(
        "make_eigenvector",
        [](const Elements& b, int n, int k) {
            return make_eigenvector(top_set_arg(b, n), n, k);
        },
        py::arg("b"), py::arg("n"), py::arg("k"));
    m.def(
        "lift", [](const IntVec& v, int n, int a, int b) { return lift(v, n, a, b); },
        py::arg("v"), py::arg("n"), py::arg("a"), py::arg("b"));
    m.def(
        "lift", [](const RatVec& v, int n, int a, int b) { return lift(v, n, a, b); },
        py::arg("v"), py::arg("n"), py::arg("a"), py::arg("b"));
    m.def(
        "transpose_lift",
        [](const IntVec& f, int n, int k, int d) { return transpose_lift(f, n, k, d); },
        py::arg("f"), py::arg("n"), py::arg("k"), py::arg("d"));
    m.def(
        "transpose_lift",
        [](const RatVec& f, int n, int k, int d) { return transpose_lift(f, n, k, d); },
        py::arg("f"), py::arg("n"), py::arg("k"), py::arg("d"));

    m.def(
        "norm_squared",
        [](const Elements& b, int n, int k) {
            return norm_squared(top_set_arg(b, n), n, k);
        },
        py::arg("b"), py::arg("n"), py::arg("k"));
    m.def("project", &project, py::arg("f"), py::arg("n"), py::arg("k"), py::arg("d"));
    m.def("decompose", &decompose, py::arg("f"), py::arg("n"), py::arg("k"));

    m.def(
        "basis",
        [](int n, int k, unsigned workers, std::optional<std::vector<int>> degrees) {
            RunConfig cfg;
            cfg.n = n;
            cfg.k = k;
            cfg.workers = workers;
            if (degrees) cfg.degrees = std::set<int>(degrees->begin(), degrees->end());
            return run_basis_collect(cfg);
        },
        py::arg("n"), py::arg("k"), py::arg("workers") = 0,
        py::arg("degrees") = py::none(),
        "The full orthogonal eigenbasis in canonical order");

    m.def(
        "verify_basis",
        [](int n, int k, std::uint64_t max_cells) {
            return report_to_dict(verify_basis(n, k, max_cells));
        },
        py::arg("n"), py::arg("k"), py::arg("max_cells") = kDefaultOracleGuard);
}
