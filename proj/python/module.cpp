#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "trinv/canon.hpp"
#include "trinv/census.hpp"
#include "trinv/parser.hpp"

namespace py = pybind11;

namespace {

using namespace trinv;

Var var_from_name(const std::string& name) {
    const VarNames& names = xyzw_names();
    for (int i = 0; i < kVarCount; ++i) {
        if (names[i] == name) return static_cast<Var>(i);
    }
    fail(errc::unknown_variable, "unknown variable " + name);
}

const VarNames& names_for(const std::string& kind) {
    if (kind == "xyzw") return xyzw_names();
    if (kind == "eta") return eta_slot_names();
    if (kind == "gamma") return slot_names();
    fail(errc::usage_error, "unknown name set " + kind + " (want xyzw, eta or gamma)");
}

SlotContext context_from(const std::string& kind) {
    if (kind == "none") return SlotContext::none;
    if (kind == "eta") return SlotContext::eta;
    if (kind == "gamma") return SlotContext::gamma;
    fail(errc::usage_error, "unknown slot context " + kind + " (want none, eta or gamma)");
}

py::dict parameters_dict(const CanonicalForm& form) {
    py::dict params;
    if (const auto* one = std::get_if<FormI>(&form)) {
        params["f"] = one->f.str();
    } else if (const auto* two = std::get_if<FormII>(&form)) {
        params["xi"] = two->xi.str();
        params["eta"] = two->eta.str(eta_slot_names());
    } else {
        const auto& three = std::get<FormIII>(form);
        params["alpha"] = three.alpha.str();
        params["beta"] = three.beta.str();
        params["gamma"] = three.gamma.str(slot_names());
        params["d"] = three.d.str();
        params["a"] = three.a.str();
        params["b"] = three.b.str();
        for (int i = 0; i < 4; ++i) {
            params[py::str("f" + std::to_string(i + 1))] = three.generators[i].str();
        }
    }
    return params;
}

DegreeBounds bounds_from(std::optional<unsigned> d2, std::optional<unsigned> d3,
                         std::optional<unsigned> d4, std::vector<uint16_t> phi1) {
    DegreeBounds b;
    b.phi1_values = std::move(phi1);
    b.d2 = d2;
    b.d3 = d3;
    b.d4 = d4;
    return b;
}

}  // namespace

PYBIND11_MODULE(trinv, m) {
    m.doc() = "triangular involutions of k[x,y,z,w] in characteristic two";

    static py::exception<Error> error_type(m, "Error");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::set_error(error_type,
                          (std::string(errc_name(e.code())) + ": " + e.what()).c_str());
        }
    });

    py::class_<Polynomial>(m, "Polynomial")
        .def("__str__", [](const Polynomial& p) { return p.str(); })
        .def("__repr__", [](const Polynomial& p) { return p.str(); })
        .def(
            "__add__", [](const Polynomial& a, const Polynomial& b) { return a + b; },
            py::is_operator())
        .def(
            "__mul__", [](const Polynomial& a, const Polynomial& b) { return a * b; },
            py::is_operator())
        .def(
            "__pow__", [](const Polynomial& a, uint32_t k) { return a.pow(k); },
            py::is_operator())
        .def(
            "__eq__", [](const Polynomial& a, const Polynomial& b) { return a == b; },
            py::is_operator())
        .def("is_zero", &Polynomial::is_zero)
        .def("term_count", &Polynomial::term_count)
        .def_property_readonly("field", [](const Polynomial& p) { return p.field()->tag(); })
        .def("total_degree", [](const Polynomial& p) { return p.total_degree(); })
        .def("degree",
             [](const Polynomial& p, const std::string& v) { return p.degree(var_from_name(v)); })
        .def(
            "text",
            [](const Polynomial& p, const std::string& slots) { return p.str(names_for(slots)); },
            py::arg("slots") = "xyzw");

    py::class_<PolyMap>(m, "PolyMap")
        .def(py::init([](const std::string& field, const std::vector<Polynomial>& images) {
                 if (images.size() != 4) {
                     fail(errc::usage_error, "a map needs exactly four images");
                 }
                 Field f = parse_field_tag(field);
                 return PolyMap(f, {images[0], images[1], images[2], images[3]});
             }),
             py::arg("field"), py::arg("images"))
        .def("__str__", [](const PolyMap& s) { return s.str(); })
        .def("__repr__", [](const PolyMap& s) { return s.str(); })
        .def(
            "__eq__", [](const PolyMap& a, const PolyMap& b) { return a == b; },
            py::is_operator())
        .def_property_readonly("field", [](const PolyMap& s) { return s.field()->tag(); })
        .def("images",
             [](const PolyMap& s) {
                 return std::vector<Polynomial>(s.images().begin(), s.images().end());
             })
        .def("image",
             [](const PolyMap& s, const std::string& v) { return s.image(var_from_name(v)); });

    m.def("field_tag", [](const std::string& t) { return parse_field_tag(t)->tag(); });
    m.def("field_order", [](const std::string& t) { return parse_field_tag(t)->order(); });
    m.def("field_elements", [](const std::string& t) {
        Field f = parse_field_tag(t);
        std::vector<std::string> out;
        for (uint32_t bits = 0; bits < f->order(); ++bits) {
            out.push_back(f->element_text(static_cast<uint16_t>(bits)));
        }
        return out;
    });

    m.def(
        "parse_poly",
        [](const std::string& text, const std::string& field, const std::string& context) {
            return parse_poly(text, parse_field_tag(field), context_from(context));
        },
        py::arg("text"), py::arg("field") = "gf2", py::arg("context") = "none");
    m.def(
        "variable",
        [](const std::string& name, const std::string& field) {
            return Polynomial::variable(parse_field_tag(field), var_from_name(name));
        },
        py::arg("name"), py::arg("field") = "gf2");
    m.def(
        "parse_map",
        [](const std::string& text, const std::string& field) {
            return parse_map(text, parse_field_tag(field));
        },
        py::arg("text"), py::arg("field") = "gf2");
    m.def(
        "identity", [](const std::string& field) { return PolyMap::identity(parse_field_tag(field)); },
        py::arg("field") = "gf2");

    m.def("apply", [](const PolyMap& s, const Polynomial& p) { return apply(s, p); });
    m.def("compose", [](const PolyMap& s, const PolyMap& t) { return compose(s, t); });
    m.def("substitute", [](const Polynomial& p, const std::vector<Polynomial>& images) {
        if (images.size() != 4) fail(errc::usage_error, "substitute needs exactly four images");
        return substitute(p, {images[0], images[1], images[2], images[3]});
    });
    m.def("exact_div",
          [](const Polynomial& p, const Polynomial& q) { return exact_div(p, q); });
    m.def("gcd_form_iii", [](const Polynomial& alpha, const Polynomial& beta) {
        GcdFormIII g = gcd_form_iii(alpha, beta);
        return py::make_tuple(g.d, g.a, g.b);
    });

    m.def("is_triangular", [](const PolyMap& s) { return is_triangular(s); });
    m.def("is_involution", [](const PolyMap& s) { return is_involution(s); });
    m.def("triangular_parts", [](const PolyMap& s) {
        TriangularParts parts = triangular_parts(s);
        py::dict out;
        std::vector<std::string> lambdas;
        std::vector<Polynomial> phis;
        for (int i = 0; i < kVarCount; ++i) {
            lambdas.push_back(parts.lambdas[i].str());
            phis.push_back(parts.phis[i]);
        }
        out["lambdas"] = lambdas;
        out["phis"] = phis;
        return out;
    });
    m.def("invert_triangular", [](const PolyMap& s) { return invert_triangular(s); });
    m.def("conjugate",
          [](const PolyMap& phi, const PolyMap& t) { return conjugate(phi, t); });
    m.def("conjugate_with_inverse",
          [](const PolyMap& phi, const PolyMap& phi_inverse, const PolyMap& t) {
              return conjugate(phi, phi_inverse, t);
          });

    m.def("make_form_i", [](const Polynomial& f) { return make_form_i(f); });
    m.def("make_form_ii",
          [](const Polynomial& xi, const Polynomial& eta) { return make_form_ii(xi, eta); });
    m.def("make_form_iii",
          [](const Polynomial& alpha, const Polynomial& beta, const Polynomial& gamma) {
              auto built = make_form_iii(alpha, beta, gamma);
              return py::make_tuple(built.first, parameters_dict(CanonicalForm(built.second)));
          });

    m.def("normalize", [](const PolyMap& t) {
        NormalizeResult n = normalize(t);
        py::dict out;
        out["conjugator"] = n.conjugator.map;
        out["conjugator_inverse"] = n.conjugator.inverse;
        out["tau_prime"] = n.tau_prime;
        out["condition"] = n.condition;
        return out;
    });
    m.def("classify", [](const PolyMap& t) {
        Classification c = trinv::classify(t);
        py::dict out;
        out["form"] = form_tag(c.canonical);
        out["condition"] = c.condition;
        out["parameters"] = parameters_dict(c.canonical);
        out["conjugator"] = c.conjugator.map;
        out["conjugator_inverse"] = c.conjugator.inverse;
        out["canonical_map"] = c.canonical_map;
        return out;
    });

    m.def(
        "decompose_even",
        [](const Polynomial& f, const Polynomial& xi, const std::string& t) {
            return decompose_even(f, var_from_name(t), xi);
        },
        py::arg("f"), py::arg("xi"), py::arg("t") = "z");
    m.def("decompose_fixed_iii",
          [](const Polynomial& f, const Polynomial& alpha, const Polynomial& beta) {
              return decompose_fixed_iii(f, alpha, beta);
          });

    m.def(
        "enumerate_involutions",
        [](const std::string& field, std::optional<unsigned> d2, std::optional<unsigned> d3,
           std::optional<unsigned> d4, std::vector<uint16_t> phi1, uint64_t budget) {
            return enumerate_involutions(parse_field_tag(field),
                                         bounds_from(d2, d3, d4, std::move(phi1)), budget);
        },
        py::arg("field"), py::arg("d2"), py::arg("d3"), py::arg("d4"),
        py::arg("phi1") = std::vector<uint16_t>{}, py::arg("budget") = kDefaultCensusBudget);
    m.def(
        "census",
        [](const std::string& field, std::optional<unsigned> d2, std::optional<unsigned> d3,
           std::optional<unsigned> d4, std::vector<uint16_t> phi1, uint64_t budget) {
            CensusReport r = census_classify(parse_field_tag(field),
                                             bounds_from(d2, d3, d4, std::move(phi1)), budget);
            py::dict out;
            out["total_maps"] = r.total_maps;
            out["involutions"] = r.involutions;
            out["per_condition"] =
                py::make_tuple(r.per_condition[0], r.per_condition[1], r.per_condition[2]);
            out["failures"] = r.failures;
            return out;
        },
        py::arg("field"), py::arg("d2"), py::arg("d3"), py::arg("d4"),
        py::arg("phi1") = std::vector<uint16_t>{}, py::arg("budget") = kDefaultCensusBudget);
    m.def("fixed_space_basis", [](const PolyMap& t, unsigned max_total_degree) {
        return fixed_space_basis(t, max_total_degree);
    });
}
