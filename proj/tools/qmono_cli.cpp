// qmono command-line front end. Every command prints one JSON document on
// stdout. Exit codes: 0 ok/accept, 1 reject, 2 malformed input or usage,
// 3 constraint violation, 4 resource cap exceeded.

#include <filesystem>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "qmono/bitcodec.hpp"
#include "qmono/catalog.hpp"
#include "qmono/constraint.hpp"
#include "qmono/diag_lab.hpp"
#include "qmono/errors.hpp"
#include "qmono/padding.hpp"
#include "qmono/registry.hpp"
#include "qmono/robust_wrap.hpp"
#include "qmono/run.hpp"
#include "qmono/transformers.hpp"

using namespace qmono;

namespace {

enum Exit { kOk = 0, kReject = 1, kMalformed = 2, kViolation = 3, kResource = 4 };

struct Emit {
    json doc;
    int code = kOk;
};

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    if (s.empty()) return out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    if (s.back() == ',') out.emplace_back();
    return out;
}

Polynomial poly_flag(const std::string& s) {
    std::vector<std::uint64_t> c;
    for (const auto& part : split_csv(s)) {
        try {
            std::size_t used = 0;
            c.push_back(std::stoull(part, &used));
            if (used != part.size()) throw std::invalid_argument(part);
        } catch (const std::exception&) {
            throw InvalidInput("bad polynomial coefficient list \"" + s + "\"");
        }
    }
    return Polynomial(std::move(c));
}

json json_flag(const std::string& text_or_path) {
    if (std::filesystem::exists(text_or_path)) return read_json_file(text_or_path);
    try {
        return json::parse(text_or_path);
    } catch (const json::exception&) {
        throw InvalidInput("\"" + text_or_path + "\" is neither a readable file nor JSON text");
    }
}

// Catalog name, JSON file holding a handle, or inline JSON handle.
OracleMachine machine_flag(const std::string& s) {
    if (catalog_machine(s) || catalog_tt_machine(s)) return machine_from_json(json(s));
    // a bare word that is not a file is taken as a (possibly unknown) name
    const bool bare = !s.empty() && s.find_first_of("{[\"") == std::string::npos && !std::filesystem::exists(s);
    if (bare) return machine_from_json(json(s));
    return machine_from_json(json_flag(s));
}

Constraint constraint_flag(const std::string& s) {
    auto c = constraint_by_name(s);
    if (!c) throw InvalidInput("unknown constraint \"" + s + "\"");
    return *c;
}

std::vector<BitString> bits_list(const std::string& csv) {
    std::vector<BitString> out;
    for (const auto& p : split_csv(csv)) out.emplace_back(p);
    return out;
}

json bits_json(const std::vector<BitString>& v) {
    json a = json::array();
    for (const auto& b : v) a.push_back(b.str());
    return a;
}

int outcome_code(Outcome o) {
    switch (o) {
    case Outcome::accept: return kOk;
    case Outcome::reject: return kReject;
    case Outcome::violation: return kViolation;
    case Outcome::budget: return kResource;
    }
    return kMalformed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Query-monotonic reduction lab"};
    app.require_subcommand(1);
    Emit out;

    // encode / decode
    auto* encode = app.add_subcommand("encode", "JSON formula or graph -> bit string");
    encode->require_subcommand(1);
    std::string enc_json;
    for (const char* what : {"formula", "graph"}) {
        auto* sc = encode->add_subcommand(what);
        sc->add_option("--json", enc_json, "JSON text or file")->required();
        sc->callback([&out, &enc_json, w = std::string(what)] {
            const json j = json_flag(enc_json);
            out.doc = w == "formula" ? encode_formula(formula_from_json(j)).str() : encode_graph(graph_from_json(j)).str();
        });
    }
    auto* decode = app.add_subcommand("decode", "bit string -> JSON formula or graph");
    decode->require_subcommand(1);
    std::string dec_input;
    for (const char* what : {"formula", "graph"}) {
        auto* sc = decode->add_subcommand(what);
        sc->add_option("--input", dec_input, "bit string")->required();
        sc->callback([&out, &dec_input, w = std::string(what)] {
            const BitString x(dec_input);
            if (w == "formula") {
                auto f = decode_formula(x);
                if (!f) throw InvalidInput("not a formula encoding");
                out.doc = to_json(*f);
            } else {
                auto g = decode_graph(x);
                if (!g) throw InvalidInput("not a graph encoding");
                out.doc = to_json(*g);
            }
        });
    }

    // pad
    auto* pad = app.add_subcommand("pad", "apply a padding function");
    pad->require_subcommand(1);
    std::string pad_input, pad_oracle, pad_nonmember;
    for (const char* what : {"3sat", "clique"}) {
        auto* sc = pad->add_subcommand(what);
        sc->add_option("--input", pad_input, "bit string")->required();
        sc->callback([&out, &pad_input, w = std::string(what)] {
            out.doc = (*padding_by_name(w))(BitString(pad_input)).str();
        });
    }
    {
        auto* sc = pad->add_subcommand("tight-equiv", "derived oracle spec");
        sc->add_option("--oracle", pad_oracle, "oracle JSON text or file")->required();
        sc->add_option("--nonmember", pad_nonmember, "a string outside the oracle")->required();
        sc->callback([&] {
            out.doc = make_tight_equivalent(oracle_from_json(json_flag(pad_oracle)), BitString(pad_nonmember)).b.spec();
        });
    }

    // run
    auto* runc = app.add_subcommand("run", "run a machine against an oracle");
    std::string run_machine, run_oracle, run_input, run_constraint;
    runc->add_option("--machine", run_machine, "catalog name or machine handle JSON")->required();
    runc->add_option("--oracle", run_oracle, "oracle JSON text or file")->required();
    runc->add_option("--input", run_input, "input bit string")->required();
    runc->add_option("--constraint", run_constraint, "constraint name");
    runc->callback([&] {
        std::optional<Constraint> c;
        if (!run_constraint.empty()) c = constraint_flag(run_constraint);
        const QueryTranscript t =
            run(machine_flag(run_machine), oracle_from_json(json_flag(run_oracle)), BitString(run_input), c);
        out.doc = to_json(t);
        out.code = outcome_code(t.outcome);
    });

    // check
    auto* check = app.add_subcommand("check", "constraint, escape-route and robustness checks");
    check->require_subcommand(1);
    std::string ck_kind, ck_transcript;
    {
        auto* sc = check->add_subcommand("constraint", "is a transcript's query list allowed?");
        sc->add_option("--kind", ck_kind, "constraint name")->required();
        sc->add_option("--transcript", ck_transcript, "transcript JSON text or file")->required();
        sc->callback([&] {
            const QueryTranscript t = transcript_from_json(json_flag(ck_transcript));
            const auto qs = t.queries();
            out.doc = {{"allowed", constraint_flag(ck_kind).allows(t.input, qs)}};
        });
    }
    std::string esc_constraint, esc_input, esc_prefix;
    std::size_t esc_r = 0, esc_cap = kDefaultEscapeCap;
    {
        auto* sc = check->add_subcommand("escape", "first escape route");
        sc->add_option("--constraint", esc_constraint, "constraint name")->required();
        sc->add_option("--input", esc_input, "input bit string");
        sc->add_option("--prefix", esc_prefix, "comma-separated queries so far");
        sc->add_option("--r", esc_r, "bound on route size and string length")->required();
        sc->add_option("--cap", esc_cap, "candidate cap");
        sc->callback([&] {
            auto route = find_escape_route(constraint_flag(esc_constraint), BitString(esc_input), bits_list(esc_prefix),
                                           esc_r, esc_cap);
            out.doc = route ? bits_json(route->extension) : json(nullptr);
        });
    }
    std::string rb_machine, rb_constraint, rb_wrap = "none", rb_p = "2";
    std::uint64_t rb_seed = 1;
    std::size_t rb_count = 100, rb_max_len = 5;
    {
        auto* sc = check->add_subcommand("robust", "query property over seeded random oracles");
        sc->add_option("--machine", rb_machine, "catalog name or machine handle JSON")->required();
        sc->add_option("--constraint", rb_constraint, "constraint name")->required();
        sc->add_option("--wrap", rb_wrap, "none | prefix | escape")->check(CLI::IsMember({"none", "prefix", "escape"}));
        sc->add_option("--p", rb_p, "escape bound polynomial, coefficients low to high");
        sc->add_option("--seed", rb_seed, "first seed");
        sc->add_option("--count", rb_count, "number of random oracles");
        sc->add_option("--max-len", rb_max_len, "inputs up to this length");
        sc->callback([&] {
            const Constraint c = constraint_flag(rb_constraint);
            OracleMachine m = machine_flag(rb_machine);
            if (rb_wrap == "prefix") m = wrap_prefix_checked(m, c);
            if (rb_wrap == "escape") m = wrap_escape_routed(m, c, poly_flag(rb_p));
            const auto inputs = strings_up_to(rb_max_len);
            json failures = json::array();
            for (std::size_t i = 0; i < rb_count; ++i) {
                const std::uint64_t seed = rb_seed + i;
                std::string diag;
                if (!has_query_property(m, random_oracle(seed), c, inputs, &diag))
                    failures.push_back({{"seed", seed}, {"detail", diag}});
            }
            out.doc = {{"robust", failures.empty()}, {"machine", m.spec()}, {"failures", failures}};
            out.code = failures.empty() ? kOk : kViolation;
        });
    }

    // transform
    auto* transform = app.add_subcommand("transform", "derive a machine handle");
    transform->require_subcommand(1);
    std::string tf_machine, tf_padding, tf_p, tf_q, tf_oracle, tf_nonmember, tf_support;
    for (const char* what : {"increasing", "decreasing"}) {
        auto* sc = transform->add_subcommand(what);
        sc->add_option("--machine", tf_machine, "catalog name or machine handle JSON")->required();
        sc->add_option("--padding", tf_padding, "3sat | clique | rank-shift")->required();
        sc->add_option("--p", tf_p, "raw query length bound, coefficients low to high");
        sc->callback([&, w = std::string(what)] {
            auto sigma = padding_by_name(tf_padding);
            if (!sigma) throw InvalidInput("unknown padding \"" + tf_padding + "\"");
            std::optional<Polynomial> p;
            if (!tf_p.empty()) p = poly_flag(tf_p);
            const OracleMachine m = machine_flag(tf_machine);
            out.doc = (w == "increasing" ? to_query_increasing(m, *sigma, p) : to_query_decreasing(m, *sigma, p)).spec();
        });
    }
    {
        auto* sc = transform->add_subcommand("equal-length");
        sc->add_option("--machine", tf_machine, "catalog name or machine handle JSON")->required();
        sc->add_option("--q", tf_q, "query length bound, coefficients low to high")->required();
        sc->add_option("--oracle", tf_oracle, "the original oracle, JSON text or file")->required();
        sc->add_option("--nonmember", tf_nonmember, "a string outside the oracle")->required();
        sc->callback([&] {
            EqualLength r = to_equal_length(machine_flag(tf_machine), oracle_from_json(json_flag(tf_oracle)),
                                            poly_flag(tf_q), BitString(tf_nonmember));
            out.doc = {{"machine", r.m1.spec()}, {"oracle", r.z.spec()}};
        });
    }
    {
        auto* sc = transform->add_subcommand("one-query");
        sc->add_option("--machine", tf_machine, "catalog name or machine handle JSON")->required();
        sc->add_option("--q", tf_q, "query length bound, coefficients low to high")->required();
        sc->add_option("--oracle", tf_oracle, "sparse oracle JSON text or file")->required();
        sc->add_option("--support", tf_support, "comma-separated support lengths (derived for sparse specs)");
        sc->callback([&] {
            const json spec = json_flag(tf_oracle);
            std::vector<std::uint64_t> support;
            if (!tf_support.empty()) {
                for (const auto& s : split_csv(tf_support)) support.push_back(poly_flag(s)(0));
            } else if (spec.value("kind", "") == "sparse") {
                const Polynomial p = polynomial_from_json(spec.at("p"));
                for (auto m : spec.at("lengths").get<std::vector<std::uint64_t>>()) support.push_back(p(m) + 1);
            } else {
                throw InvalidInput("--support is required unless the oracle is a sparse spec");
            }
            SparseOracle c = sparse_oracle(oracle_from_json(spec), support);
            out.doc = one_query_transform(machine_flag(tf_machine), c, poly_flag(tf_q)).spec();
        });
    }

    // diag
    auto* diag = app.add_subcommand("diag", "diagonalization stages");
    diag->require_subcommand(1);
    std::string dg_construction, dg_machines, dg_certs, dg_oracle;
    std::uint64_t dg_cap = kDefaultStageCap;
    {
        auto* sc = diag->add_subcommand("run");
        sc->add_option("--construction", dg_construction, "thm4.4 | thm4.7 | thm4.9 | thm4.13")->required();
        sc->add_option("--machines", dg_machines, "comma-separated catalog names");
        sc->add_option("--cap", dg_cap, "largest diagonal length per stage");
        sc->callback([&] {
            auto kind = parse_construction_kind(dg_construction);
            if (!kind) throw InvalidInput("unknown construction \"" + dg_construction + "\"");
            std::vector<DiagMachine> ms;
            for (const auto& name : split_csv(dg_machines)) {
                auto m = diag_machine_by_name(name);
                if (!m) throw InvalidInput("unknown machine \"" + name + "\"");
                ms.push_back(*m);
            }
            ConstructionResult r = run_construction(*kind, ms, dg_cap);
            json certs = json::array();
            for (const auto& c : r.certificates) certs.push_back(to_json(c));
            out.doc = {{"oracle", to_json(r.oracle)}, {"certificates", std::move(certs)}};
        });
    }
    {
        auto* sc = diag->add_subcommand("verify");
        sc->add_option("--certs", dg_certs, "certificate list (or diag run output), JSON text or file")->required();
        sc->add_option("--oracle", dg_oracle, "staged oracle, JSON text or file")->required();
        sc->callback([&] {
            json certs = json_flag(dg_certs);
            if (certs.is_object() && certs.contains("certificates")) certs = certs.at("certificates");
            if (certs.is_object()) certs = json::array({certs});
            json o = json_flag(dg_oracle);
            if (o.contains("oracle")) o = o.at("oracle");
            const StagedOracle staged = staged_oracle_from_json(o);
            json results = json::array();
            bool all = true;
            for (const auto& cj : certs) {
                const StageCertificate c = certificate_from_json(cj);
                auto m = diag_machine_by_name(c.machine);
                std::string why;
                const bool ok = m && verify_certificate(c, *m, staged, &why);
                if (!m) why = "unknown machine " + c.machine;
                all = all && ok;
                json entry = {{"stage", c.stage}, {"machine", c.machine}, {"verified", ok}};
                if (!ok) entry["reason"] = why;
                results.push_back(std::move(entry));
            }
            out.doc = {{"all", all}, {"results", std::move(results)}};
            out.code = all ? kOk : kReject;
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kMalformed;
    } catch (const ResourceError& e) {
        std::cout << json({{"error", "resource"}, {"message", e.what()}}).dump() << "\n";
        return kResource;
    } catch (const InternalConsistencyError& e) {
        std::cout << json({{"error", "consistency"}, {"message", e.what()}}).dump() << "\n";
        return kViolation;
    } catch (const ConfigurationError& e) {
        std::cout << json({{"error", "configuration"}, {"message", e.what()}}).dump() << "\n";
        return kMalformed;
    } catch (const StagingViolation& e) {
        std::cout << json({{"error", "staging"}, {"message", e.what()}}).dump() << "\n";
        return kMalformed;
    } catch (const std::exception& e) {
        std::cout << json({{"error", "malformed"}, {"message", e.what()}}).dump() << "\n";
        return kMalformed;
    }
    std::cout << out.doc.dump() << "\n";
    return out.code;
}
