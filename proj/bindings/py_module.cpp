// Python extension: the document-level API of the workbench.  Inputs and
// outputs are plain dicts/lists in exactly the JSON document formats the
// command-line tool reads and writes; the converters below bridge those to
// the C++ document layer, so both front ends share one serialization.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "idem/boolpoly.hpp"
#include "idem/closure.hpp"
#include "idem/congruence.hpp"
#include "idem/corpus.hpp"
#include "idem/fragment.hpp"
#include "idem/ideals.hpp"
#include "idem/io.hpp"
#include "idem/lattice.hpp"
#include "idem/semiring.hpp"
#include "idem/topology.hpp"
#include "idem/valuation.hpp"

namespace py = pybind11;
using nlohmann::json;

namespace {

py::object to_py(const json& j) {
    switch (j.type()) {
        case json::value_t::null:
            return py::none();
        case json::value_t::boolean:
            return py::bool_(j.get<bool>());
        case json::value_t::number_integer:
            return py::int_(j.get<long long>());
        case json::value_t::number_unsigned:
            return py::int_(j.get<unsigned long long>());
        case json::value_t::number_float:
            return py::float_(j.get<double>());
        case json::value_t::string:
            return py::str(j.get<std::string>());
        case json::value_t::array: {
            py::list out;
            for (const auto& e : j) out.append(to_py(e));
            return out;
        }
        case json::value_t::object: {
            py::dict out;
            for (auto it = j.begin(); it != j.end(); ++it)
                out[py::str(it.key())] = to_py(it.value());
            return out;
        }
        default:
            throw idem::parse_error("unsupported JSON value");
    }
}

json to_json(const py::handle& h) {
    if (h.is_none()) return nullptr;
    if (py::isinstance<py::bool_>(h)) return h.cast<bool>();
    if (py::isinstance<py::int_>(h)) return h.cast<long long>();
    if (py::isinstance<py::float_>(h)) return h.cast<double>();
    if (py::isinstance<py::str>(h)) return h.cast<std::string>();
    if (py::isinstance<py::dict>(h)) {
        json out = json::object();
        for (auto item : h.cast<py::dict>())
            out[item.first.cast<std::string>()] = to_json(item.second);
        return out;
    }
    if (py::isinstance<py::list>(h) || py::isinstance<py::tuple>(h)) {
        json out = json::array();
        for (auto item : h.cast<py::sequence>()) out.push_back(to_json(item));
        return out;
    }
    throw idem::parse_error("documents may contain only dicts, lists, strings, "
                            "numbers, booleans, and None");
}

idem::finite_semiring semiring_arg(const py::object& doc) {
    return idem::semiring_from_doc(to_json(doc));
}

idem::finite_space space_arg(const py::object& doc) {
    return idem::space_from_doc(to_json(doc));
}

json property_json(const idem::property_report& r) {
    json p;
    p["idempotent"] = r.idempotent;
    p["integral"] = r.integral;
    p["cancellative"] = r.cancellative;
    p["zero_sum_free"] = r.zero_sum_free;
    p["idealic"] = r.idealic;
    p["radical_idealic"] = r.radical_idealic;
    p["totally_ordered"] = r.totally_ordered;
    p["freshman_dream"] = r.freshman_dream;
    return p;
}

json quotient_json(const idem::finite_semiring& source, const idem::quotient_result& q) {
    json out;
    out["semiring"] = idem::semiring_to_doc(q.semiring);
    json map;
    for (int i = 0; i < source.size(); ++i)
        map[source.names[i]] = q.semiring.names[q.block_of[i]];
    out["map"] = map;
    return out;
}

}  // namespace

PYBIND11_MODULE(_idem, m) {
    m.doc() = "finite commutative semiring workbench: spectra, closure operations, "
              "lattice duality, and valuations over label-based documents";

    py::register_exception<idem::validation_error>(m, "ValidationError",
                                                   PyExc_ValueError);
    py::register_exception<idem::capability_error>(m, "CapabilityError",
                                                   PyExc_ValueError);
    py::register_exception<idem::parse_error>(m, "ParseError", PyExc_ValueError);

    m.def("corpus", [] {
        json out;
        out["trivial"] = idem::semiring_to_doc(idem::make_trivial());
        out["bool"] = idem::semiring_to_doc(idem::make_bool());
        out["chain3"] = idem::semiring_to_doc(idem::make_chain3());
        out["n3"] = idem::semiring_to_doc(idem::make_n3());
        out["inf3"] = idem::semiring_to_doc(idem::make_inf3());
        out["diamond"] = idem::semiring_to_doc(idem::make_diamond());
        return to_py(out);
    }, "the six named example semirings as documents, keyed by name");

    m.def("props", [](const py::object& doc) {
        return to_py(property_json(idem::classify(semiring_arg(doc))));
    }, py::arg("semiring"), "structural property flags of a semiring document");

    m.def("ideals", [](const py::object& doc, const std::string& kind) {
        auto s = semiring_arg(doc);
        idem::ideal_kind k = kind == "all"       ? idem::ideal_kind::all
                             : kind == "prime-k" ? idem::ideal_kind::prime_k
                             : kind == "k"       ? idem::ideal_kind::k
                                                 : throw idem::parse_error(
                                                       "kind must be k, prime-k, or all");
        json out = json::array();
        for (const auto& i : idem::enumerate_ideals(s, k))
            out.push_back(idem::subset_to_doc(s, i));
        return to_py(out);
    }, py::arg("semiring"), py::arg("kind") = "k",
       "ideals of the requested kind as label arrays, in canonical order");

    m.def("spec_k", [](const py::object& doc) {
        return to_py(idem::space_to_doc(idem::spec_k(semiring_arg(doc))));
    }, py::arg("semiring"), "hull-kernel space of prime k-ideals");

    m.def("spec_c", [](const py::object& doc) {
        return to_py(idem::space_to_doc(idem::spec_c(semiring_arg(doc))));
    }, py::arg("semiring"), "hull-kernel space of prime congruences");

    m.def("spv", [](const py::object& doc) {
        auto s = semiring_arg(doc);
        json out;
        out["space"] = idem::space_to_doc(idem::spv_topology(s));
        json vals = json::array();
        for (const auto& v : idem::spv(s)) vals.push_back(idem::valuation_to_doc(v));
        out["valuations"] = vals;
        return to_py(out);
    }, py::arg("semiring"), "valuation space and one witness document per point");

    m.def("zariski", [](const py::object& doc) {
        return to_py(idem::space_to_doc(idem::zariski_space(semiring_arg(doc))));
    }, py::arg("semiring"), "space of prime lattice elements");

    m.def("closure", [](const py::object& doc, const std::string& op,
                        const std::vector<std::string>& ideal,
                        const py::object& blocks) {
        auto s = semiring_arg(doc);
        std::optional<idem::congruence> c;
        if (!blocks.is_none()) c = idem::congruence_from_doc(s, to_json(blocks));
        auto cl = idem::make_ideal_closure(s, op, c);
        idem::bits input(s.size());
        for (const auto& l : ideal) input.set(s.index_of(l));
        if (std::find(cl.domain.begin(), cl.domain.end(), input) == cl.domain.end())
            throw idem::validation_error("the input set is not in the domain of \"" +
                                         cl.name + "\"");
        json out;
        out["op"] = cl.name;
        out["closed"] = idem::subset_to_doc(s, cl.map(input));
        json ws = json::array();
        if (op == "integral" || op == "integral-raw") {
            for (const auto& w : idem::integral_witnesses(s, input)) {
                json e;
                e["element"] = s.names[w.element];
                e["z"] = s.names[w.z];
                e["n"] = w.n;
                ws.push_back(e);
            }
        } else if (op == "frobenius") {
            for (const auto& w : idem::frobenius_witnesses(s, input)) {
                json e;
                e["element"] = s.names[w.element];
                e["n"] = w.n;
                ws.push_back(e);
            }
        }
        out["witnesses"] = ws;
        return to_py(out);
    }, py::arg("semiring"), py::arg("op"), py::arg("ideal"),
       py::arg("congruence") = py::none(),
       "apply a named closure operation to a set given by labels");

    m.def("radical_congruence", [](const py::object& doc, const py::object& blocks) {
        auto s = semiring_arg(doc);
        auto c = idem::congruence_from_doc(s, to_json(blocks));
        return to_py(idem::congruence_to_doc(s, idem::radical_congruence(s, c)));
    }, py::arg("semiring"), py::arg("blocks"),
       "intersection of the prime congruences above the given one");

    m.def("congruences", [](const py::object& doc) {
        auto s = semiring_arg(doc);
        json out = json::array();
        for (const auto& c : idem::enumerate_congruences(s))
            out.push_back(idem::congruence_to_doc(s, c));
        return to_py(out);
    }, py::arg("semiring"), "every congruence as an array of blocks");

    m.def("to_lattice", [](const py::object& doc) {
        return to_py(idem::lattice_to_doc(idem::semiring_to_lattice(semiring_arg(doc))));
    }, py::arg("semiring"), "the lattice presentation (join = add, meet = mul)");

    m.def("from_lattice", [](const py::object& doc) {
        return to_py(idem::semiring_to_doc(idem::lattice_to_semiring(
            idem::lattice_from_doc(to_json(doc)))));
    }, py::arg("lattice"), "the semiring presentation of a distributive lattice");

    m.def("idealize", [](const py::object& doc) {
        auto s = semiring_arg(doc);
        return to_py(quotient_json(s, idem::idealization(s)));
    }, py::arg("semiring"), "quotient forcing every element below the identity");

    m.def("radicalize", [](const py::object& doc) {
        auto s = semiring_arg(doc);
        return to_py(quotient_json(s, idem::radicalization(s)));
    }, py::arg("semiring"), "quotient forcing multiplicative idempotence");

    m.def("realize", [](const py::object& doc) {
        auto x = space_arg(doc);
        auto r = idem::realize_space(x);
        json out;
        out["semiring"] = idem::semiring_to_doc(r.semiring);
        auto spectrum = idem::spec_k(r.semiring);
        json points;
        for (int i = 0; i < x.size(); ++i)
            points[x.point_names[i]] = spectrum.point_names[r.point_map[i]];
        out["points"] = points;
        return to_py(out);
    }, py::arg("space"), "a semiring whose prime k-ideal spectrum is the given space");

    m.def("homeomorphic", [](const py::object& a, const py::object& b) {
        auto xa = space_arg(a);
        auto xb = space_arg(b);
        auto map = idem::find_homeomorphism(xa, xb);
        json out;
        out["homeomorphic"] = map.has_value();
        if (map) {
            json pm;
            for (int i = 0; i < xa.size(); ++i)
                pm[xa.point_names[i]] = xb.point_names[(*map)[i]];
            out["map"] = pm;
        }
        return to_py(out);
    }, py::arg("first"), py::arg("second"), "decide homeomorphism of two space documents");

    m.def("enumerate_semirings", [](int order) {
        json out = json::array();
        for (const auto& s : idem::enumerate_idempotent_commutative_semirings(order, true))
            out.push_back(idem::semiring_to_doc(s));
        return to_py(out);
    }, py::arg("order"),
       "idempotent commutative semirings of the given order, up to isomorphism");

    m.def("cd_example", [](int n, int degree) {
        auto frag = idem::cd_product_fragment(degree);
        auto x = idem::bp_monomial({1, 0});
        auto y = idem::bp_monomial({0, 1});
        auto first = idem::bp_add(idem::bp_pow(x, 2 * n), idem::bp_pow(y, 2 * n));
        auto second = idem::bp_mul(idem::bp_pow(x, n), idem::bp_pow(y, n));
        auto verdict = idem::fragment_member(frag.product, first, second, &frag.base);
        json out;
        out["pair"] = json::object();
        out["pair"]["first"] = idem::bp_to_string(first);
        out["pair"]["second"] = idem::bp_to_string(second);
        out["membership"] =
            verdict.verdict == idem::membership::proven ? "proven" : "inconclusive";
        out["derivation"] = verdict.derivation;
        out["truncated"] = frag.base.truncated || frag.product.truncated;
        return to_py(out);
    }, py::arg("n"), py::arg("degree"),
       "bounded membership query for (x^2n + y^2n, x^n y^n) in the product congruence");

    m.def("space_dot", [](const py::object& doc) {
        return idem::space_to_dot(space_arg(doc));
    }, py::arg("space"), "DOT digraph of the specialization order, covering edges only");

    m.def("lattice_dot", [](const py::object& doc) {
        return idem::lattice_to_dot(idem::lattice_from_doc(to_json(doc)));
    }, py::arg("lattice"), "DOT digraph of the order, covering edges only");
}
