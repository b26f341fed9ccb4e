#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dessinforge/catalog.hpp"
#include "dessinforge/classification.hpp"
#include "dessinforge/error.hpp"
#include "dessinforge/universal.hpp"
#include "dessinforge/version.hpp"

namespace py = pybind11;
using namespace dessinforge;

namespace {

py::dict report_to_dict(const VerificationReport& rep) {
    py::list claims;
    for (const Claim& c : rep.claims) {
        py::dict d;
        d["claim"] = c.claim;
        d["paper_value"] = c.paper_value;
        d["computed_value"] = c.computed_value;
        d["verdict"] = verdict_name(c.verdict);
        claims.append(d);
    }
    py::dict out;
    out["subject"] = rep.subject;
    out["claims"] = claims;
    out["mismatches"] = rep.mismatch_count();
    out["paper_discrepancies"] = rep.discrepancy_count();
    out["ok"] = rep.ok();
    return out;
}

py::dict invariants_to_dict(const DessinInvariants& inv) {
    py::dict d;
    d["type"] = inv.type;
    d["black_vertices"] = inv.black_vertices;
    d["white_vertices"] = inv.white_vertices;
    d["edges"] = inv.edges;
    d["faces"] = inv.faces;
    d["euler_characteristic"] = inv.euler_characteristic;
    d["genus"] = inv.genus;
    d["multiplicity"] = inv.multiplicity;
    d["symmetric"] = inv.symmetric;
    d["reflexible"] = inv.reflexible;
    d["totally_symmetric"] = inv.totally_symmetric;
    return d;
}

// Thin handle keeping the group alive; elements are dense indices.
struct PyGroup {
    GroupPtr g;
};

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "regular dessins d'enfants as finite groups with ordered generating pairs";
    m.attr("__version__") = kVersion;
    m.attr("DEFAULT_ORDER_CAP") = kDefaultOrderCap;

    py::register_exception<SpecParseError>(m, "SpecParseError", PyExc_ValueError);
    py::register_exception<UnsupportedInputError>(m, "UnsupportedInputError", PyExc_ValueError);
    py::register_exception<OrderCapError>(m, "OrderCapError", PyExc_RuntimeError);
    py::register_exception<ValidationError>(m, "ValidationError", PyExc_RuntimeError);

    py::class_<PyGroup>(m, "Group")
        .def_property_readonly("order", [](const PyGroup& s) { return s.g->order(); })
        .def_property_readonly("label", [](const PyGroup& s) { return s.g->label(); })
        .def_property_readonly("x", [](const PyGroup& s) { return s.g->gen_x().index; })
        .def_property_readonly("y", [](const PyGroup& s) { return s.g->gen_y().index; })
        .def_property_readonly("identity", [](const PyGroup& s) { return s.g->identity().index; })
        .def("mul", [](const PyGroup& s, int a, int b) { return s.g->mul(Element{a}, Element{b}).index; })
        .def("inverse", [](const PyGroup& s, int a) { return s.g->inverse(Element{a}).index; })
        .def("power",
             [](const PyGroup& s, int a, long long n) { return s.g->power(Element{a}, n).index; })
        .def("commutator",
             [](const PyGroup& s, int a, int b) {
                 return s.g->commutator(Element{a}, Element{b}).index;
             })
        .def("element_order",
             [](const PyGroup& s, int a) { return s.g->element_order(Element{a}); })
        .def("is_generating_pair",
             [](const PyGroup& s, int x, int y) {
                 return is_generating_pair(*s.g, Element{x}, Element{y});
             })
        .def("__repr__", [](const PyGroup& s) {
            return "<Group " + s.g->label() + " of order " + std::to_string(s.g->order()) + ">";
        });

    m.def(
        "build_group",
        [](const std::string& spec, long long order_cap) {
            return PyGroup{build_group(spec, order_cap)};
        },
        py::arg("spec"), py::arg("order_cap") = kDefaultOrderCap);

    m.def(
        "validate_group",
        [](const std::string& spec, long long order_cap) {
            return report_to_dict(validate_group(*build_group(spec, order_cap)));
        },
        py::arg("spec"), py::arg("order_cap") = kDefaultOrderCap);

    m.def(
        "dessins",
        [](const std::string& spec, long long order_cap, int workers) {
            GroupPtr G = build_group(spec, order_cap);
            DessinEnumeration e = enumerate_dessins(G, workers);
            py::list out;
            for (std::size_t k = 0; k < e.representatives.size(); ++k) {
                py::dict d = invariants_to_dict(invariants(e.representatives[k]));
                d["x_index"] = e.representatives[k].x.index;
                d["y_index"] = e.representatives[k].y.index;
                d["orbit_size"] = e.orbit_sizes[k];
                out.append(d);
            }
            py::dict res;
            res["spec"] = to_string(parse_group_spec(spec));
            res["classes"] = out;
            res["generating_pairs"] = e.generating_pairs;
            res["aut_order"] = e.representatives.empty()
                                   ? 0
                                   : e.generating_pairs / static_cast<long long>(e.classes());
            return res;
        },
        py::arg("spec"), py::arg("order_cap") = kDefaultOrderCap, py::arg("workers") = 1);

    m.def(
        "universal",
        [](const std::string& spec, long long order_cap, int workers) {
            GroupPtr G = build_group(spec, order_cap);
            UniversalCover u = universal_dessin(G, order_cap, workers);
            py::dict d;
            d["spec"] = G->label();
            d["classes_folded"] = u.classes_folded;
            d["order"] = u.dessin.carrier.group->order();
            d["invariants"] = invariants_to_dict(invariants(u.dessin.carrier));
            d["unique"] = u.unique;
            d["totally_symmetric"] = u.totally_symmetric;
            d["factor_orbit_sizes"] = u.factor_orbit_sizes;
            return d;
        },
        py::arg("spec"), py::arg("order_cap") = kDefaultOrderCap, py::arg("workers") = 1);

    m.def(
        "is_unique_dessin_group",
        [](const std::string& spec, long long order_cap, int workers) {
            return is_unique_dessin_group(build_group(spec, order_cap), workers);
        },
        py::arg("spec"), py::arg("order_cap") = kDefaultOrderCap, py::arg("workers") = 1);

    m.def(
        "count_automorphisms",
        [](const std::string& spec, long long order_cap, int workers) {
            return count_automorphisms(build_group(spec, order_cap), workers);
        },
        py::arg("spec"), py::arg("order_cap") = kDefaultOrderCap, py::arg("workers") = 1);

    m.def("psi", &dedekind_psi, py::arg("n"));
    m.def("lift_unit", &lift_unit, py::arg("s"), py::arg("m"), py::arg("n"));

    m.def(
        "verify_family",
        [](const std::string& family, long long p, int a, int b, long long order_cap, int workers) {
            FamilyParams fp;
            if (family == "i") fp.family = Family::I;
            else if (family == "ii") fp.family = Family::II;
            else if (family == "iii") fp.family = Family::III;
            else throw std::invalid_argument("family must be 'i', 'ii' or 'iii'");
            fp.p = p;
            fp.a = a;
            fp.b = b;
            return report_to_dict(verify_family(fp, order_cap, workers));
        },
        py::arg("family"), py::arg("p"), py::arg("a"), py::arg("b") = 0,
        py::arg("order_cap") = kDefaultOrderCap, py::arg("workers") = 1);

    m.def(
        "theorem_sweep",
        [](long long max_order, long long order_cap, int workers) {
            return report_to_dict(theorem_sweep(max_order, order_cap, workers).report);
        },
        py::arg("max_order"), py::arg("order_cap") = kDefaultOrderCap, py::arg("workers") = 1);

    m.def(
        "abelian_baseline",
        [](long long p, int a, long long order_cap, int workers) {
            return report_to_dict(abelian_baseline(p, a, order_cap, workers));
        },
        py::arg("p"), py::arg("a"), py::arg("order_cap") = kDefaultOrderCap, py::arg("workers") = 1);

    m.def(
        "decom_check",
        [](const std::string& spec, long long order_cap, int workers) {
            return report_to_dict(decom_check(parse_group_spec(spec), order_cap, workers));
        },
        py::arg("spec"), py::arg("order_cap") = kDefaultOrderCap, py::arg("workers") = 1);
}
