// Python bindings. Strings of bits cross as str; structured values (formulas,
// graphs, transcripts, oracle and machine handles, certificates) cross as the
// same JSON documents the CLI prints, converted to dicts and lists.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qmono/bitcodec.hpp"
#include "qmono/catalog.hpp"
#include "qmono/constraint.hpp"
#include "qmono/deciders.hpp"
#include "qmono/diag_lab.hpp"
#include "qmono/errors.hpp"
#include "qmono/nondet.hpp"
#include "qmono/padding.hpp"
#include "qmono/registry.hpp"
#include "qmono/robust_wrap.hpp"
#include "qmono/run.hpp"
#include "qmono/transformers.hpp"

namespace py = pybind11;
using namespace qmono;

namespace {

json to_native(const py::object& o) {
    const auto text = py::module_::import("json").attr("dumps")(o).cast<std::string>();
    return json::parse(text);
}

py::object to_py(const json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

std::vector<BitString> bits(const std::vector<std::string>& v) {
    std::vector<BitString> out;
    out.reserve(v.size());
    for (const auto& s : v) out.emplace_back(s);
    return out;
}

std::vector<std::string> strs(const std::vector<BitString>& v) {
    std::vector<std::string> out;
    out.reserve(v.size());
    for (const auto& b : v) out.push_back(b.str());
    return out;
}

Constraint constraint_named(const std::string& name) {
    auto c = constraint_by_name(name);
    if (!c) throw InvalidInput("unknown constraint \"" + name + "\"");
    return *c;
}

Padding padding_named(const std::string& name) {
    auto p = padding_by_name(name);
    if (!p) throw InvalidInput("unknown padding \"" + name + "\"");
    return *p;
}

std::optional<Polynomial> maybe_poly(const std::optional<std::vector<std::uint64_t>>& c) {
    if (!c) return std::nullopt;
    return Polynomial(*c);
}

} // namespace

PYBIND11_MODULE(_qmono, m) {
    m.doc() = "Query-order constrained oracle machines: codecs, runners, wrappers, transforms, stages";

    auto base = py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
    py::register_exception<ConfigurationError>(m, "ConfigurationError", PyExc_ValueError);
    py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);
    py::register_exception<StagingViolation>(m, "StagingViolation", PyExc_RuntimeError);
    py::register_exception<InternalConsistencyError>(m, "InternalConsistencyError", PyExc_RuntimeError);
    (void)base;

    // codec
    m.def("multi_pair", [](const std::vector<std::string>& parts) { return multi_pair(bits(parts)).str(); });
    m.def("multi_unpair", [](const std::string& x) -> std::optional<std::vector<std::string>> {
        auto r = multi_unpair(BitString(x));
        if (!r) return std::nullopt;
        return strs(*r);
    });
    m.def("lex_rank", [](const std::string& x) { return lex_rank(BitString(x)).value; });
    m.def("lex_unrank", [](std::uint64_t r) { return lex_unrank(LexRank{r}).str(); });
    m.def("at_length_with_rank_of",
          [](const std::string& w, std::size_t length) { return at_length_with_rank_of(BitString(w), length).str(); });

    // encodings, paddings, deciders
    m.def("encode_formula", [](const py::object& f) { return encode_formula(formula_from_json(to_native(f))).str(); });
    m.def("decode_formula", [](const std::string& x) -> py::object {
        auto f = decode_formula(BitString(x));
        return f ? to_py(to_json(*f)) : py::none();
    });
    m.def("encode_graph", [](const py::object& g) { return encode_graph(graph_from_json(to_native(g))).str(); });
    m.def("decode_graph", [](const std::string& x) -> py::object {
        auto g = decode_graph(BitString(x));
        return g ? to_py(to_json(*g)) : py::none();
    });
    m.def("encode_clique_instance", [](const py::object& g, std::uint64_t k) {
        return encode_clique_instance(graph_from_json(to_native(g)), k).str();
    });
    m.def("pad", [](const std::string& name, const std::string& x) { return padding_named(name)(BitString(x)).str(); },
          py::arg("padding"), py::arg("x"));
    m.def("sat3_decide", [](const std::string& x) { return sat3_string_decide(BitString(x)); });
    m.def("clique_decide", [](const std::string& z) { return clique_string_decide(BitString(z)); });
    m.def("count_3sat_witnesses",
          [](const std::string& x) { return count_accepting(brute_force_3sat_machine(), BitString(x)); });

    // oracles, machines, runs
    m.def("oracle_decide", [](const py::object& spec, const std::string& x) {
        return oracle_from_json(to_native(spec))(BitString(x));
    });
    m.def("catalog_names", [] {
        auto names = catalog_names();
        for (const auto& n : catalog_tt_names()) names.push_back(n);
        return names;
    });
    m.def(
        "run",
        [](const py::object& machine, const py::object& oracle, const std::string& x,
           const std::optional<std::string>& constraint) {
            const OracleMachine mm = machine_from_json(to_native(machine));
            const OracleHandle o = oracle_from_json(to_native(oracle));
            std::optional<Constraint> c;
            if (constraint) c = constraint_named(*constraint);
            return to_py(to_json(run(mm, o, BitString(x), c)));
        },
        py::arg("machine"), py::arg("oracle"), py::arg("x"), py::arg("constraint") = py::none());
    m.def("constraint_allows", [](const std::string& kind, const std::string& x, const std::vector<std::string>& qs) {
        const auto q = bits(qs);
        return constraint_named(kind).allows(BitString(x), q);
    });
    m.def(
        "has_query_property",
        [](const py::object& machine, const py::object& oracle, const std::string& constraint,
           const std::vector<std::string>& inputs) {
            return has_query_property(machine_from_json(to_native(machine)), oracle_from_json(to_native(oracle)),
                                      constraint_named(constraint), bits(inputs));
        });

    // wrappers
    m.def(
        "find_escape_route",
        [](const std::string& constraint, const std::string& x, const std::vector<std::string>& prefix, std::size_t r,
           std::size_t cap) -> std::optional<std::vector<std::string>> {
            auto route = find_escape_route(constraint_named(constraint), BitString(x), bits(prefix), r, cap);
            if (!route) return std::nullopt;
            return strs(route->extension);
        },
        py::arg("constraint"), py::arg("x"), py::arg("prefix"), py::arg("r"), py::arg("cap") = kDefaultEscapeCap);
    m.def("wrap_prefix", [](const py::object& machine, const std::string& constraint) {
        return to_py(wrap_prefix_checked(machine_from_json(to_native(machine)), constraint_named(constraint)).spec());
    });
    m.def("wrap_escape", [](const py::object& machine, const std::string& constraint, const std::vector<std::uint64_t>& p) {
        return to_py(
            wrap_escape_routed(machine_from_json(to_native(machine)), constraint_named(constraint), Polynomial(p))
                .spec());
    });

    // transforms; each returns a machine handle usable with run()
    m.def(
        "to_query_increasing",
        [](const py::object& machine, const std::string& padding, const std::optional<std::vector<std::uint64_t>>& p) {
            return to_py(to_query_increasing(machine_from_json(to_native(machine)), padding_named(padding), maybe_poly(p))
                             .spec());
        },
        py::arg("machine"), py::arg("padding"), py::arg("p") = py::none());
    m.def(
        "to_query_decreasing",
        [](const py::object& machine, const std::string& padding, const std::optional<std::vector<std::uint64_t>>& p) {
            return to_py(to_query_decreasing(machine_from_json(to_native(machine)), padding_named(padding), maybe_poly(p))
                             .spec());
        },
        py::arg("machine"), py::arg("padding"), py::arg("p") = py::none());
    m.def("to_equal_length", [](const py::object& machine, const py::object& oracle, const std::vector<std::uint64_t>& q,
                                const std::string& non_member) {
        auto r = to_equal_length(machine_from_json(to_native(machine)), oracle_from_json(to_native(oracle)),
                                 Polynomial(q), BitString(non_member));
        return py::make_tuple(to_py(r.m1.spec()), to_py(r.z.spec()));
    });
    m.def("sparse_encode", [](const py::object& oracle, const std::vector<std::uint64_t>& p,
                              const std::vector<std::uint64_t>& lengths) {
        auto s = sparse_encode(oracle_from_json(to_native(oracle)), Polynomial(p), WideSpacedLengths::increasing(lengths));
        return py::make_tuple(to_py(s.oracle.spec()), s.support);
    });
    m.def("one_query_transform", [](const py::object& machine, const py::object& oracle,
                                    const std::vector<std::uint64_t>& support, const std::vector<std::uint64_t>& q) {
        const SparseOracle c = sparse_oracle(oracle_from_json(to_native(oracle)), support);
        return to_py(one_query_transform(machine_from_json(to_native(machine)), c, Polynomial(q)).spec());
    });
    m.def("classify_connective", [](unsigned arity, std::uint64_t code) {
        const auto c = classify_connective(ConnectiveTable::from_code(arity, code));
        return py::make_tuple(to_string(c.kind), c.relevant);
    });

    // diagonalization
    m.def(
        "diag_run",
        [](const std::string& construction, const std::vector<std::string>& machines, std::uint64_t cap) {
            auto kind = parse_construction_kind(construction);
            if (!kind) throw InvalidInput("unknown construction \"" + construction + "\"");
            std::vector<DiagMachine> ms;
            for (const auto& name : machines) {
                auto dm = diag_machine_by_name(name);
                if (!dm) throw ConfigurationError("unknown machine " + name);
                ms.push_back(*dm);
            }
            const ConstructionResult r = run_construction(*kind, ms, cap);
            json certs = json::array();
            for (const auto& c : r.certificates) certs.push_back(to_json(c));
            return to_py(json{{"oracle", to_json(r.oracle)}, {"certificates", std::move(certs)}});
        },
        py::arg("construction"), py::arg("machines"), py::arg("cap") = kDefaultStageCap);
    m.def("diag_verify", [](const py::object& certificate, const py::object& oracle) {
        const StageCertificate c = certificate_from_json(to_native(certificate));
        const StagedOracle o = staged_oracle_from_json(to_native(oracle));
        auto dm = diag_machine_by_name(c.machine);
        if (!dm) throw ConfigurationError("unknown machine " + c.machine);
        return verify_certificate(c, *dm, o);
    });
}
