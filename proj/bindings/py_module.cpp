#include "helpenum/report.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>

namespace py = pybind11;
using namespace helpenum;

namespace {

// Keeps the base table alive alongside its Brauer tables.
struct PyTable {
    std::shared_ptr<CharacterTable> table;
};

struct PyBrauer {
    std::shared_ptr<CharacterTable> base;
    std::shared_ptr<BrauerTable> table;
};

TableSet make_tables(const PyTable& t, const std::vector<PyBrauer>& brauers, bool include_ordinary) {
    TableSet ts;
    ts.base = t.table.get();
    for (const auto& b : brauers) {
        if (b.base != t.table)
            throw std::invalid_argument("Brauer table was loaded against a different base table");
        ts.brauers.push_back(b.table.get());
    }
    ts.include_ordinary = include_ordinary;
    return ts;
}

py::dict order_result_to_py(const CharacterTable& base, const OrderResult& r) {
    py::dict d;
    d["status"] = to_string(r.verdict.status);
    d["rationally_conjugate"] = r.verdict.rationally_conjugate;
    py::list sols;
    for (std::size_t i = 0; i < r.set.tuples.size(); ++i) {
        py::dict s;
        py::dict by_class;
        for (const auto& [cls, v] : r.set.tuples[i].entries)
            by_class[py::str(base.classes()[cls].name)] = v;
        s["by_class"] = by_class;
        s["vector"] = report_vector(base, r.set.tuples[i]);
        s["branches"] = r.set.provenance[i];
        sols.append(s);
    }
    d["solutions"] = sols;
    d["branch_count"] = r.branches.size();
    py::list eliminated;
    for (const auto& b : r.branches)
        if (b.eliminated_by) eliminated.append(*b.eliminated_by);
    d["eliminated_branches"] = eliminated;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact Luthar-Passi / HeLP constraint enumeration for torsion units of integral group rings";

    m.def("euler_phi", &euler_phi, py::arg("n"));
    m.def("moebius", &moebius, py::arg("n"));
    m.def("ramanujan_sum", &ramanujan_sum, py::arg("m"), py::arg("a"),
          "Sum of e(a*j/m) over j coprime to m, evaluated exactly.");

    py::class_<PyTable>(m, "CharacterTable")
        .def_property_readonly("name", [](const PyTable& t) { return t.table->name(); })
        .def_property_readonly("order", [](const PyTable& t) { return t.table->group_order(); })
        .def_property_readonly("exponent", [](const PyTable& t) { return t.table->exponent(); })
        .def_property_readonly("classes",
                               [](const PyTable& t) {
                                   py::list out;
                                   for (const auto& c : t.table->classes())
                                       out.append(py::make_tuple(c.name, c.element_order, c.size));
                                   return out;
                               })
        .def("power_class",
             [](const PyTable& t, std::size_t cls, long long mm) { return t.table->power_class(cls, mm); },
             py::arg("class_index"), py::arg("m"))
        .def("classes_of_order",
             [](const PyTable& t, long long k) { return t.table->classes_of_order(k); })
        .def("validate_orthogonality", [](const PyTable& t) {
            py::list out;
            for (const auto& v : validate_orthogonality(*t.table)) out.append(v.detail);
            return out;
        });

    py::class_<PyBrauer>(m, "BrauerTable")
        .def_property_readonly("name", [](const PyBrauer& b) { return b.table->name; })
        .def_property_readonly("prime", [](const PyBrauer& b) { return b.table->prime; });

    m.def("load_table", [](const std::string& path) {
        return PyTable{std::make_shared<CharacterTable>(CharacterTable::load_file(path))};
    });
    m.def("load_brauer", [](const std::string& path, const PyTable& base) {
        PyBrauer b{base.table, nullptr};
        b.table = std::make_shared<BrauerTable>(BrauerTable::load_file(path, *base.table));
        return b;
    });

    m.def("admissible_classes",
          [](const PyTable& t, long long k) { return admissible_classes(*t.table, k); });

    m.def(
        "solve_order",
        [](const PyTable& t, const std::vector<PyBrauer>& brauers, long long k, long long max_coeff,
           bool include_ordinary) {
            TableSet ts = make_tables(t, brauers, include_ordinary);
            SolveOptions opts{max_coeff, 1};
            std::map<long long, OrderResult> solved;
            for (long long e = 1; e <= k; ++e) {
                if (k % e != 0) continue;
                solved.emplace(e, solve_order(e, ts, solved, opts));
            }
            return order_result_to_py(*t.table, solved.at(k));
        },
        py::arg("table"), py::arg("brauers"), py::arg("k"), py::arg("max_coeff") = 128,
        py::arg("include_ordinary") = true);

    m.def(
        "solve_all",
        [](const PyTable& t, const std::vector<PyBrauer>& brauers, long long max_coeff,
           bool include_ordinary) {
            TableSet ts = make_tables(t, brauers, include_ordinary);
            SolveOptions opts{max_coeff, 1};
            std::vector<long long> pruned;
            auto solved = solve_all(ts, opts, &pruned);
            py::dict out;
            for (const auto& [k, r] : solved) out[py::int_(k)] = order_result_to_py(*t.table, r);
            py::dict wrap;
            wrap["orders"] = out;
            wrap["pruned"] = pruned;
            return wrap;
        },
        py::arg("table"), py::arg("brauers"), py::arg("max_coeff") = 128,
        py::arg("include_ordinary") = true);

    m.def("group_prime_graph", [](const PyTable& t) {
        PrimeGraph g = group_prime_graph(*t.table);
        return py::make_tuple(g.vertices, g.edges);
    });

    m.def(
        "verify_report_json",
        [](const PyTable& t, const std::vector<PyBrauer>& brauers, long long max_coeff) {
            TableSet ts = make_tables(t, brauers, true);
            RunReport r;
            r.base = t.table.get();
            r.group = t.table->name();
            r.tables_used.push_back(t.table->name());
            for (const auto& b : brauers) r.tables_used.push_back(b.table->name);
            r.max_coeff = max_coeff;
            SolveOptions opts{max_coeff, 1};
            r.orders = solve_all(ts, opts, &r.pruned);
            r.graph_group = group_prime_graph(*t.table);
            r.graph_units = unit_prime_graph(*t.table, r.orders);
            r.kimmerle = kimmerle_check(r.graph_group, r.graph_units, &r.kimmerle_diff);
            return report_to_json(r);
        },
        py::arg("table"), py::arg("brauers"), py::arg("max_coeff") = 128,
        "Full run rendered as the deterministic machine-readable report.");
}
