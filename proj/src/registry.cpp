#include "qmono/registry.hpp"

#include <fstream>
#include <sstream>

#include "qmono/catalog.hpp"
#include "qmono/cylinder.hpp"
#include "qmono/deciders.hpp"
#include "qmono/errors.hpp"
#include "qmono/robust_wrap.hpp"
#include "qmono/transformers.hpp"

namespace qmono {

namespace {

BitString bits_at(const json& j, const char* key) { return BitString(j.at(key).get<std::string>()); }

std::set<BitString> member_set(const json& arr) {
    std::set<BitString> out;
    for (const auto& s : arr) out.emplace(s.get<std::string>());
    return out;
}

template <class F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("malformed ") + what + ": " + e.what());
    }
}

std::string kind_of(const json& j) {
    if (j.contains("kind")) return j.at("kind").get<std::string>();
    if (j.contains("backend")) return j.at("backend").get<std::string>();
    if (j.contains("members")) return "finite";
    throw InvalidInput("oracle JSON needs \"members\", \"kind\" or \"backend\"");
}

Constraint constraint_at(const json& j) {
    const std::string name = j.at("constraint").get<std::string>();
    auto c = constraint_by_name(name);
    if (!c) throw ConfigurationError("unknown constraint " + name);
    return *c;
}

} // namespace

json to_json(const QueryTranscript& t) {
    json events = json::array();
    for (const auto& e : t.events) events.push_back({{"q", e.query.str()}, {"a", e.answer}});
    json j = {{"input", t.input.str()}, {"events", std::move(events)}, {"outcome", to_string(t.outcome)},
              {"steps", t.steps}};
    if (t.violation_index) j["violationIndex"] = *t.violation_index;
    return j;
}

QueryTranscript transcript_from_json(const json& j) {
    return guarded("transcript", [&] {
        QueryTranscript t;
        t.input = bits_at(j, "input");
        for (const auto& e : j.at("events")) t.events.push_back({bits_at(e, "q"), e.at("a").get<bool>()});
        auto o = parse_outcome(j.at("outcome").get<std::string>());
        if (!o) throw InvalidInput("unknown outcome " + j.at("outcome").dump());
        t.outcome = *o;
        t.steps = j.at("steps").get<std::uint64_t>();
        if (j.contains("violationIndex") && !j.at("violationIndex").is_null())
            t.violation_index = j.at("violationIndex").get<std::size_t>();
        return t;
    });
}

json to_json(const ThreeCnf& f) {
    json clauses = json::array();
    for (const auto& c : f.clauses) {
        json lits = json::array();
        for (const auto& l : c) lits.push_back({{"v", l.var}, {"neg", l.neg}});
        clauses.push_back(std::move(lits));
    }
    return {{"clauses", std::move(clauses)}};
}

ThreeCnf formula_from_json(const json& j) {
    return guarded("formula", [&] {
        ThreeCnf f;
        for (const auto& c : j.at("clauses")) {
            if (!c.is_array() || c.size() != 3) throw InvalidInput("each clause needs exactly 3 literals");
            Clause cl;
            for (std::size_t i = 0; i < 3; ++i) {
                const auto v = c[i].at("v").get<std::uint64_t>();
                if (v == 0) throw InvalidInput("variable indices start at 1");
                cl[i] = Literal{v, c[i].value("neg", false)};
            }
            f.clauses.push_back(cl);
        }
        return f;
    });
}

json to_json(const Graph& g) {
    json edges = json::array();
    for (const auto& [k, l] : g.edges) edges.push_back({k, l});
    return {{"n", g.n}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const json& j) {
    return guarded("graph", [&] {
        std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2) throw InvalidInput("each edge needs two endpoints");
            edges.emplace_back(e[0].get<std::uint64_t>(), e[1].get<std::uint64_t>());
        }
        return Graph::make(j.at("n").get<std::uint64_t>(), std::move(edges));
    });
}

json to_json(const Polynomial& p) { return {{"coeffs", p.coeffs()}}; }

Polynomial polynomial_from_json(const json& j) {
    return guarded("polynomial", [&] {
        const json& c = j.is_array() ? j : j.at("coeffs");
        return Polynomial(c.get<std::vector<std::uint64_t>>());
    });
}

json to_json(const StagedOracle& o) {
    json members = json::array();
    for (const auto& m : o.members()) members.push_back(m.str());
    return {{"kind", "staged"}, {"members", std::move(members)}, {"watermark", o.watermark()}};
}

StagedOracle staged_oracle_from_json(const json& j) {
    return guarded("staged oracle", [&] {
        return StagedOracle(member_set(j.at("members")), j.value("watermark", std::uint64_t{0}));
    });
}

OracleHandle oracle_from_json(const json& j) {
    return guarded("oracle", [&]() -> OracleHandle {
        const std::string kind = kind_of(j);
        if (kind == "finite" || kind == "staged") return finite_oracle(member_set(j.at("members")));
        if (kind == "all") return all_strings_oracle();
        if (kind == "random") return random_oracle(j.at("seed").get<std::uint64_t>());
        if (kind == "3sat") return sat3_oracle();
        if (kind == "clique") return clique_oracle();
        if (kind == "tight-equiv")
            return make_tight_equivalent(oracle_from_json(j.at("inner")), bits_at(j, "nonMember")).b;
        if (kind == "non-tight-equiv") {
            std::optional<BitString> member;
            if (j.contains("member") && !j.at("member").is_null()) member = bits_at(j, "member");
            return make_non_tight_equivalent(oracle_from_json(j.at("inner")), j.at("finite").get<bool>(),
                                             bits_at(j, "nonMember"), member)
                .b;
        }
        if (kind == "sparse") {
            return sparse_encode(oracle_from_json(j.at("inner")), polynomial_from_json(j.at("p")),
                                 WideSpacedLengths::increasing(j.at("lengths").get<std::vector<std::uint64_t>>()))
                .oracle;
        }
        if (kind == "cylinder") return make_cylinder(oracle_from_json(j.at("inner")), bits_at(j, "nonMember")).l;
        throw ConfigurationError("unknown oracle kind " + kind);
    });
}

std::optional<Padding> padding_by_name(const std::string& name) {
    if (name == "3sat") return padding_3sat();
    if (name == "clique") return padding_clique();
    if (name == "rank-shift") return rank_shift_padding();
    return std::nullopt;
}

std::optional<DiagMachine> diag_machine_by_name(const std::string& name) {
    if (auto m = catalog_machine(name)) return DiagMachine(*m);
    if (auto t = catalog_tt_machine(name)) return DiagMachine(*t);
    return std::nullopt;
}

OracleMachine machine_from_json(const json& j) {
    return guarded("machine", [&]() -> OracleMachine {
        if (j.is_string()) {
            const std::string name = j.get<std::string>();
            if (auto m = catalog_machine(name)) return *m;
            if (auto t = catalog_tt_machine(name)) return as_oracle_machine(*t).with_spec(name);
            throw ConfigurationError("unknown machine " + name);
        }
        const std::string kind = j.at("kind").get<std::string>();
        if (kind == "wrap-prefix") return wrap_prefix_checked(machine_from_json(j.at("inner")), constraint_at(j));
        if (kind == "wrap-escape") {
            return wrap_escape_routed(machine_from_json(j.at("inner")), constraint_at(j),
                                      polynomial_from_json(j.at("p")), j.value("cap", kDefaultEscapeCap));
        }
        if (kind == "ftt-monotonic") {
            const std::string name = j.at("machine").get<std::string>();
            auto t = catalog_tt_machine(name);
            if (!t) throw ConfigurationError("unknown truth-table machine " + name);
            return degenerate_ftt_to_monotonic(*t);
        }
        if (kind != "transform") throw ConfigurationError("unknown machine kind " + kind);
        const std::string tr = j.at("transform").get<std::string>();
        const OracleMachine inner = machine_from_json(j.at("machine"));
        if (tr == "increasing" || tr == "decreasing") {
            const std::string pad = j.at("padding").get<std::string>();
            auto sigma = padding_by_name(pad);
            if (!sigma) throw ConfigurationError("unknown padding " + pad);
            std::optional<Polynomial> p;
            if (j.contains("p")) p = polynomial_from_json(j.at("p"));
            return tr == "increasing" ? to_query_increasing(inner, *sigma, p) : to_query_decreasing(inner, *sigma, p);
        }
        if (tr == "equal-length") return equal_length_machine(inner, polynomial_from_json(j.at("q")));
        if (tr == "one-query") {
            SparseOracle c = sparse_oracle(oracle_from_json(j.at("oracle")),
                                           j.at("support").get<std::vector<std::uint64_t>>());
            return one_query_transform(inner, c, polynomial_from_json(j.at("q")));
        }
        throw ConfigurationError("unknown transform " + tr);
    });
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(path + ": " + e.what());
    }
}

} // namespace qmono
