#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gforge/serialize.hpp"
#include "gforge/skew.hpp"
#include "gforge/text.hpp"

namespace py = pybind11;
using namespace gforge;
using nlohmann::json;

namespace {

std::string dump(const json& j) { return j.dump(); }

std::vector<std::pair<std::string, int>> factor_text(const std::string& poly, const std::string& field) {
    std::vector<std::pair<std::string, int>> out;
    for (const auto& f : factor(parse_unipoly(poly, Field::parse(field)))) out.emplace_back(f.factor.to_string(), f.multiplicity);
    return out;
}

std::string specialize_text(const std::string& poly, const std::string& at, const std::string& field) {
    const Field f = Field::parse(field);
    return dump(to_json(specialize_at(parse_parampoly(poly, f), parse_element(at, f))));
}

std::string decomposition_text(const std::string& poly, const std::string& at, const std::string& field) {
    const Field f = Field::parse(field);
    return dump(to_json(frobenius_decomposition(parse_parampoly(poly, f), parse_element(at, f))));
}

std::string bb_construct_text(const std::string& stem, int n, long prime_budget, long attempt_budget) {
    BBOptions opts;
    opts.prime_budget = prime_budget;
    opts.attempt_budget = attempt_budget;
    return dump(to_json(bb_construct(parse_unipoly(stem, Field::rationals()), n, opts)));
}

std::string verify_text(const std::string& cert) {
    VerifyResult v;
    try {
        v = verify_bb_certificate(bb_certificate_from_json(json::parse(cert)));
    } catch (const Error& e) {
        v = {false, {std::string("malformed certificate: ") + e.what()}};
    }
    return dump(to_json(v));
}

std::string split_text(const std::string& field, const std::optional<std::string>& alpha) {
    const Field f = Field::parse(field);
    return dump(to_json(alpha ? split_trinomial_at(parse_element(*alpha, f)) : split_trinomial(f)));
}

std::pair<std::string, std::string> text_pair(const std::pair<SkewPoly, SkewPoly>& p) {
    return {p.first.to_string(), p.second.to_string()};
}

using SkewBinary = std::pair<SkewPoly, SkewPoly> (*)(const SkewPoly&, const SkewPoly&);

auto skew_pair(SkewBinary op) {
    return [op](const std::string& ring, const std::string& lhs, const std::string& rhs) {
        const SkewRing r = SkewRing::parse(ring);
        return text_pair(op(parse_skewpoly(lhs, r), parse_skewpoly(rhs, r)));
    };
}

PermGroup read_group(const std::string& text, int degree) {
    if (text == "S" + std::to_string(degree)) return PermGroup::symmetric(degree);
    return PermGroup::parse(text, degree);
}

}  // namespace

PYBIND11_MODULE(_gforge, m) {
    m.doc() = "Exact constructive inverse Galois theory";
    m.attr("__version__") = GFORGE_VERSION;

    // Module-lifetime handles; the translator runs with the GIL held.
    static PyObject* const error = py::exception<Error>(m, "GforgeError").release().ptr();
    static PyObject* const parse_error = py::exception<ParseError>(m, "ParseError", error).release().ptr();
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const ParseError& e) {
            PyErr_SetString(parse_error, e.what());
        } catch (const Error& e) {
            PyErr_SetString(error, e.what());
        }
    });

    m.def("factor", &factor_text, py::arg("poly"), py::arg("field") = "Q");
    m.def("discriminant_y", [](const std::string& poly, const std::string& field) {
        return discriminant_y(parse_parampoly(poly, Field::parse(field))).to_string('T');
    }, py::arg("poly"), py::arg("field") = "Q");
    m.def("specialize_at", &specialize_text, py::arg("poly"), py::arg("at"), py::arg("field") = "Q");
    m.def("frobenius_decomposition", &decomposition_text, py::arg("poly"), py::arg("at"), py::arg("field"));
    m.def("certify_sn", [](const std::string& poly, long budget) {
        return dump(to_json(certify_sn(parse_unipoly(poly, Field::rationals()), budget)));
    }, py::arg("poly"), py::arg("prime_budget") = 200);
    m.def("cubic_galois_group", [](const std::string& poly, const std::string& field) {
        return dump(to_json(cubic_galois_group(parse_unipoly(poly, Field::parse(field)))));
    }, py::arg("poly"), py::arg("field") = "Q");
    m.def("lp_trinomial", [](const std::string& x, const std::string& field) {
        return dump(to_json(lp_trinomial_data(parse_element(x, Field::parse(field)))));
    }, py::arg("x"), py::arg("field") = "Q");
    m.def("split_trinomial", &split_text, py::arg("field") = "Q", py::arg("alpha") = py::none());
    m.def("bb_construct", &bb_construct_text, py::arg("stem"), py::arg("n"), py::arg("prime_budget") = 200,
          py::arg("attempt_budget") = 1000);
    m.def("verify_bb_certificate", &verify_text, py::arg("certificate"));

    m.def("skew_mul", [](const std::string& ring, const std::string& lhs, const std::string& rhs) {
        const SkewRing r = SkewRing::parse(ring);
        return skew_mul(parse_skewpoly(lhs, r), parse_skewpoly(rhs, r)).to_string();
    }, py::arg("ring"), py::arg("lhs"), py::arg("rhs"));
    m.def("right_divide", skew_pair(&right_divide), py::arg("ring"), py::arg("lhs"), py::arg("rhs"));
    m.def("left_divide", skew_pair(&left_divide), py::arg("ring"), py::arg("lhs"), py::arg("rhs"));
    m.def("ore_witness", skew_pair(&ore_witness), py::arg("ring"), py::arg("lhs"), py::arg("rhs"));
    m.def("center_test", [](const std::string& ring, const std::string& poly) {
        return center_test(parse_skewpoly(poly, SkewRing::parse(ring)));
    }, py::arg("ring"), py::arg("poly"));
    m.def("normalizer_quotient", [](int degree, const std::string& group, const std::string& subgroup) {
        const NormalizerQuotient q = normalizer_quotient(read_group(group, degree), read_group(subgroup, degree));
        std::vector<std::string> reps;
        for (const auto& p : q.coset_representatives) reps.push_back(perm_to_string(p));
        return py::make_tuple(q.order, q.normalizer_order, reps);
    }, py::arg("degree"), py::arg("group"), py::arg("subgroup"));
    m.def("degree_bookkeeping", &degree_bookkeeping, py::arg("deg_ehat_over_base"), py::arg("deg_ehat_over_e"));
}
