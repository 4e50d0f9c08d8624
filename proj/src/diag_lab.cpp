#include "qmono/diag_lab.hpp"

#include <algorithm>
#include <set>

#include "qmono/constraint.hpp"
#include "qmono/errors.hpp"
#include "qmono/run.hpp"

namespace qmono {

namespace {

struct NamedStage {
    StageKind kind;
    const char* name;
};
constexpr NamedStage kStageNames[] = {
    {StageKind::thm4_4, "thm4.4"},          {StageKind::thm4_7, "thm4.7"},
    {StageKind::thm4_9, "thm4.9"},          {StageKind::thm4_13_odd, "thm4.13-odd"},
    {StageKind::thm4_13_even, "thm4.13-even"},
};

// 2^e, saturating
std::uint64_t pow2_sat(std::uint64_t e) { return e >= 64 ? UINT64_MAX : (std::uint64_t{1} << e); }

struct Replay {
    std::vector<BitString> queries;
    bool accepted = false;
};

Replay replay(const DiagMachine& m, const OracleHandle& o, const BitString& x) {
    Replay r;
    if (const auto* om = std::get_if<OracleMachine>(&m)) {
        QueryTranscript t = run(*om, o, x);
        if (t.outcome == Outcome::budget) {
            throw ResourceError(om->name() + " exceeded its step budget on input of length " +
                                std::to_string(x.size()));
        }
        r.queries = t.queries();
        r.accepted = t.accepted();
    } else {
        const auto& tt = std::get<TruthTableMachine>(m);
        TtRun t = run_tt(tt, o, x);
        if (t.outcome == Outcome::budget) {
            throw ResourceError(tt.name + " exceeded its step budget on input of length " + std::to_string(x.size()));
        }
        r.queries = std::move(t.queries);
        r.accepted = t.accepted();
    }
    return r;
}

bool contains(const std::vector<BitString>& qs, const BitString& s) {
    return std::find(qs.begin(), qs.end(), s) != qs.end();
}

std::uint64_t max_len(const std::vector<BitString>& qs) {
    std::uint64_t m = 0;
    for (const auto& q : qs) m = std::max<std::uint64_t>(m, q.size());
    return m;
}

std::vector<BitString> sorted(std::set<BitString> s) {
    std::vector<BitString> v(s.begin(), s.end());
    std::sort(v.begin(), v.end(), shortlex_less);
    return v;
}

// alpha's bits pick members among 0^(n - j) (and the mirrored 0^(n + j)).
std::set<BitString> alpha_members(const BitString& alpha, std::uint64_t n, bool mirrored) {
    std::set<BitString> out;
    for (std::size_t j = 1; j <= alpha.size(); ++j) {
        if (!alpha[j - 1]) continue;
        out.insert(BitString::zeros(n - j));
        if (mirrored) out.insert(BitString::zeros(n + j));
    }
    return out;
}

// alphas of the queries of the form 0^prefix alpha with |alpha| = width
std::vector<BitString> blocks_after(const std::vector<BitString>& qs, std::size_t prefix, std::size_t width) {
    std::vector<BitString> out;
    for (const auto& q : qs) {
        if (q.size() == prefix + width && q.substr(0, prefix).all_zero()) out.push_back(q.substr(prefix));
    }
    return out;
}

std::uint64_t next_watermark(const StagedOracle& o, const DiagMachine& m, std::uint64_t n,
                             const std::vector<BitString>& queries, const std::set<BitString>& added,
                             std::uint64_t extra) {
    std::uint64_t wm = std::max({o.watermark(), diag_machine_budget(m)(n), max_len(queries), extra, n});
    for (const auto& s : added) wm = std::max<std::uint64_t>(wm, s.size());
    return wm;
}

// The oracle with the tentative members in place, for the replay before the
// stage settles its final watermark.
StagedOracle tentative(const StagedOracle& o, const std::set<BitString>& added) {
    std::uint64_t wm = o.watermark();
    for (const auto& s : added) wm = std::max<std::uint64_t>(wm, s.size());
    return o.extend(added, wm);
}

const OracleMachine& need_adaptive_or_convert(const DiagMachine& m, std::optional<OracleMachine>& holder) {
    if (const auto* om = std::get_if<OracleMachine>(&m)) return *om;
    holder = as_oracle_machine(std::get<TruthTableMachine>(m));
    return *holder;
}

} // namespace

std::string to_string(StageKind k) {
    for (const auto& e : kStageNames)
        if (e.kind == k) return e.name;
    return "thm4.4";
}

std::optional<StageKind> parse_stage_kind(const std::string& s) {
    for (const auto& e : kStageNames)
        if (s == e.name) return e.kind;
    return std::nullopt;
}

std::string to_string(ConstructionKind k) {
    switch (k) {
    case ConstructionKind::thm4_4: return "thm4.4";
    case ConstructionKind::thm4_7: return "thm4.7";
    case ConstructionKind::thm4_9: return "thm4.9";
    case ConstructionKind::thm4_13: return "thm4.13";
    }
    return "thm4.4";
}

std::optional<ConstructionKind> parse_construction_kind(const std::string& s) {
    for (auto k : {ConstructionKind::thm4_4, ConstructionKind::thm4_7, ConstructionKind::thm4_9,
                   ConstructionKind::thm4_13})
        if (s == to_string(k)) return k;
    return std::nullopt;
}

std::string to_string(CaseTag c) {
    switch (c) {
    case CaseTag::disagreement_accept: return "disagreement-accept";
    case CaseTag::disagreement_reject: return "disagreement-reject";
    case CaseTag::constraint_violation: return "constraint-violation";
    }
    return "constraint-violation";
}

std::optional<CaseTag> parse_case_tag(const std::string& s) {
    for (auto c : {CaseTag::disagreement_accept, CaseTag::disagreement_reject, CaseTag::constraint_violation})
        if (s == to_string(c)) return c;
    return std::nullopt;
}

TestLanguageKind stage_language(StageKind k) {
    switch (k) {
    case StageKind::thm4_4: return TestLanguageKind::xor_pair;
    case StageKind::thm4_7: return TestLanguageKind::mirror;
    case StageKind::thm4_9: return TestLanguageKind::sweep_down;
    case StageKind::thm4_13_odd: return TestLanguageKind::shift_up_4k1;
    case StageKind::thm4_13_even: return TestLanguageKind::xor_4k2;
    }
    return TestLanguageKind::xor_pair;
}

const std::string& diag_machine_name(const DiagMachine& m) {
    if (const auto* om = std::get_if<OracleMachine>(&m)) return om->name();
    return std::get<TruthTableMachine>(m).name;
}

const StepBudget& diag_machine_budget(const DiagMachine& m) {
    if (const auto* om = std::get_if<OracleMachine>(&m)) return om->budget();
    return std::get<TruthTableMachine>(m).budget;
}

nlohmann::json to_json(const StageCertificate& c) {
    nlohmann::json added = nlohmann::json::array();
    for (const auto& s : c.added) added.push_back(s.str());
    return {{"construction", to_string(c.kind)},
            {"stage", c.stage},
            {"machine", c.machine},
            {"exponent", c.exponent ? nlohmann::json(*c.exponent) : nlohmann::json(nullptr)},
            {"n", c.n},
            {"case", to_string(c.case_tag)},
            {"alpha", c.alpha ? nlohmann::json(c.alpha->str()) : nlohmann::json(nullptr)},
            {"added", std::move(added)},
            {"watermark", c.watermark}};
}

StageCertificate certificate_from_json(const nlohmann::json& j) {
    try {
        StageCertificate c;
        auto kind = parse_stage_kind(j.at("construction").get<std::string>());
        if (!kind) throw InvalidInput("unknown construction " + j.at("construction").dump());
        c.kind = *kind;
        c.stage = j.at("stage").get<std::size_t>();
        c.machine = j.at("machine").get<std::string>();
        if (j.contains("exponent") && !j.at("exponent").is_null()) c.exponent = j.at("exponent").get<unsigned>();
        c.n = j.at("n").get<std::uint64_t>();
        auto tag = parse_case_tag(j.at("case").get<std::string>());
        if (!tag) throw InvalidInput("unknown case tag " + j.at("case").dump());
        c.case_tag = *tag;
        if (j.contains("alpha") && !j.at("alpha").is_null()) c.alpha = BitString(j.at("alpha").get<std::string>());
        for (const auto& s : j.at("added")) c.added.emplace_back(s.get<std::string>());
        c.watermark = j.at("watermark").get<std::uint64_t>();
        return c;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("malformed certificate: ") + e.what());
    }
}

std::uint64_t diag_length_thm4_4(std::uint64_t watermark, std::uint64_t cap) {
    const std::uint64_t n = watermark + 1;
    if (n > cap) throw ResourceError("no diagonal length <= " + std::to_string(cap));
    return n;
}

std::uint64_t diag_length_thm4_7(const StepBudget& b, std::uint64_t watermark, std::uint64_t cap) {
    for (std::uint64_t n = 8; n <= cap; n *= 8) {
        if (b(n) < pow2_sat(n / 8) && 4 * watermark < 3 * n) return n;
    }
    throw ResourceError("no n = 8^k <= " + std::to_string(cap) + " satisfies the stage conditions");
}

std::uint64_t diag_length_thm4_9(const StepBudget& b, std::uint64_t watermark, std::uint64_t cap) {
    for (std::uint64_t n = 4; n <= cap; n *= 4) {
        if (b(n) < pow2_sat(n / 4) && 2 * watermark < n) return n;
    }
    throw ResourceError("no n = 4^k <= " + std::to_string(cap) + " satisfies the stage conditions");
}

std::uint64_t diag_length_thm4_13_odd(std::uint64_t watermark, std::uint64_t cap) {
    std::uint64_t n = std::max<std::uint64_t>(4, (watermark / 4 + 1) * 4);
    if (n > cap) throw ResourceError("no n = 4k <= " + std::to_string(cap));
    return n;
}

std::uint64_t diag_length_thm4_13_even(std::uint64_t watermark, std::uint64_t cap) {
    for (std::uint64_t n = 7; n <= cap; n += 4) {
        if (watermark + 1 < n) return n;
    }
    throw ResourceError("no n = 4k+3 <= " + std::to_string(cap));
}

BitString first_free_block(std::size_t width, const std::vector<BitString>& taken) {
    std::set<BitString> seen;
    for (const auto& t : taken)
        if (t.size() == width) seen.insert(t);
    // Fixed-width strings sort lexicographically like their numeric values,
    // so the first gap lies among the first |seen| + 1 numbers.
    BitString cand = BitString::zeros(width);
    for (std::size_t v = 0; v <= seen.size(); ++v) {
        if (!seen.count(cand)) return cand;
        // increment cand as a width-bit counter
        std::string s = cand.str();
        std::size_t i = s.size();
        while (i > 0 && s[i - 1] == '1') s[--i] = '0';
        if (i == 0) break;
        s[i - 1] = '1';
        cand = BitString(s);
    }
    throw InternalConsistencyError("no free block of width " + std::to_string(width));
}

StageResult run_diag_stage(StageKind kind, const DiagMachine& m, const StagedOracle& o, std::size_t stage,
                           std::uint64_t cap) {
    StageCertificate cert;
    cert.kind = kind;
    cert.stage = stage;
    cert.machine = diag_machine_name(m);
    cert.exponent = diag_machine_budget(m).exponent;
    const StepBudget& budget = diag_machine_budget(m);

    std::set<BitString> added;
    std::uint64_t extra_wm = 0;
    std::vector<BitString> touched;

    switch (kind) {
    case StageKind::thm4_4: {
        const std::uint64_t n = diag_length_thm4_4(o.watermark(), cap);
        cert.n = n;
        const Replay r = replay(m, o.handle(), BitString::zeros(n));
        touched = r.queries;
        if (r.accepted) {
            cert.case_tag = CaseTag::disagreement_accept;
            break;
        }
        const bool q0 = contains(r.queries, BitString::zeros(n));
        const bool q1 = contains(r.queries, BitString::ones(n));
        if (q0 && q1) {
            cert.case_tag = CaseTag::constraint_violation;
        } else {
            cert.case_tag = CaseTag::disagreement_reject;
            added.insert(q0 ? BitString::ones(n) : BitString::zeros(n));
        }
        break;
    }
    case StageKind::thm4_7: {
        const auto* tt = std::get_if<TruthTableMachine>(&m);
        if (!tt) throw ConfigurationError("the thm4.7 stage needs a truth-table machine");
        const std::uint64_t n = diag_length_thm4_7(budget, o.watermark(), cap);
        cert.n = n;
        const BitString x = BitString::zeros(n);
        const std::vector<BitString> q = run_tt(*tt, o.handle(), x).queries;
        std::vector<BitString> taken = blocks_after(q, 5 * n / 8, n / 8);
        const auto hi = blocks_after(q, 9 * n / 8, n / 8);
        taken.insert(taken.end(), hi.begin(), hi.end());
        const BitString alpha = first_free_block(n / 8, taken);
        cert.alpha = alpha;
        added = alpha_members(alpha, n, true);
        const StagedOracle a_prime = tentative(o, added);
        const Replay r = replay(m, a_prime.handle(), x);
        touched = r.queries;
        if (r.accepted) {
            cert.case_tag = CaseTag::disagreement_accept;
        } else {
            cert.case_tag = CaseTag::disagreement_reject;
            added.insert(BitString::zeros(5 * n / 8) + alpha);
            added.insert(BitString::zeros(9 * n / 8) + alpha);
        }
        extra_wm = 5 * n / 4;
        break;
    }
    case StageKind::thm4_9: {
        std::optional<OracleMachine> holder;
        const OracleMachine& om = need_adaptive_or_convert(m, holder);
        const std::uint64_t n = diag_length_thm4_9(budget, o.watermark(), cap);
        cert.n = n;
        const BitString x = BitString::zeros(n);
        const std::vector<BitString> q0 = replay(om, o.handle(), x).queries;
        // queries strictly before the first one longer than n/2
        std::vector<BitString> early;
        for (const auto& s : q0) {
            if (s.size() > n / 2) break;
            early.push_back(s);
        }
        const BitString alpha = first_free_block(n / 4, blocks_after(early, n / 4, n / 4));
        cert.alpha = alpha;
        added = alpha_members(alpha, n, false);
        const StagedOracle a_prime = tentative(o, added);
        const Replay r = replay(om, a_prime.handle(), x);
        touched = r.queries;
        touched.insert(touched.end(), q0.begin(), q0.end());
        const BitString target = BitString::zeros(n / 4) + alpha;
        if (contains(r.queries, target)) {
            cert.case_tag = CaseTag::constraint_violation;
        } else if (r.accepted) {
            cert.case_tag = CaseTag::disagreement_accept;
        } else {
            cert.case_tag = CaseTag::disagreement_reject;
            added.insert(target);
        }
        break;
    }
    case StageKind::thm4_13_odd: {
        const std::uint64_t n = diag_length_thm4_13_odd(o.watermark(), cap);
        cert.n = n;
        const Replay r = replay(m, o.handle(), BitString::zeros(n));
        touched = r.queries;
        if (contains(r.queries, BitString::zeros(n + 1))) {
            cert.case_tag = CaseTag::constraint_violation;
        } else if (r.accepted) {
            cert.case_tag = CaseTag::disagreement_accept;
        } else {
            cert.case_tag = CaseTag::disagreement_reject;
            added.insert(BitString::zeros(n + 1));
        }
        extra_wm = n + 1;
        break;
    }
    case StageKind::thm4_13_even: {
        const std::uint64_t n = diag_length_thm4_13_even(o.watermark(), cap);
        cert.n = n;
        const Replay r = replay(m, o.handle(), BitString::zeros(n));
        touched = r.queries;
        const bool q0 = contains(r.queries, BitString::zeros(n - 1));
        const bool q1 = contains(r.queries, BitString::ones(n - 1));
        if (q0 && q1) {
            cert.case_tag = CaseTag::constraint_violation;
        } else if (r.accepted) {
            cert.case_tag = CaseTag::disagreement_accept;
        } else {
            cert.case_tag = CaseTag::disagreement_reject;
            added.insert(q0 ? BitString::ones(n - 1) : BitString::zeros(n - 1));
        }
        break;
    }
    }

    const std::uint64_t wm = next_watermark(o, m, cert.n, touched, added, extra_wm);
    StagedOracle next = o.extend(added, wm);
    cert.added = sorted(std::move(added));
    cert.watermark = wm;
    return StageResult{std::move(next), std::move(cert)};
}

bool verify_certificate(const StageCertificate& cert, const DiagMachine& m, const StagedOracle& o, std::string* why) {
    auto fail = [why](std::string msg) {
        if (why) *why = std::move(msg);
        return false;
    };
    if (diag_machine_name(m) != cert.machine) return fail("machine name differs from the certificate");
    if (o.watermark() < cert.watermark) return fail("oracle watermark is below the certificate's");
    for (const auto& s : cert.added) {
        if (!o.decide(s)) return fail("added string \"" + s.str() + "\" is not a member");
    }
    const std::uint64_t n = cert.n;
    const BitString x = BitString::zeros(n);
    const OracleHandle h = o.handle();
    Replay r;
    try {
        r = replay(m, h, x);
    } catch (const ResourceError& e) {
        return fail(e.what());
    }

    if (cert.case_tag != CaseTag::constraint_violation) {
        const bool in_lang = test_language_decide(stage_language(cert.kind), h, x);
        const bool claims_accept = cert.case_tag == CaseTag::disagreement_accept;
        if (r.accepted != claims_accept) return fail("machine verdict does not match the case tag");
        if (r.accepted == in_lang) return fail("machine agrees with the test language at 0^n");
        return true;
    }

    auto illegal_under = [&](ConstraintKind k) { return !constraint_allows(k, x, r.queries); };
    switch (cert.kind) {
    case StageKind::thm4_4:
        if (!contains(r.queries, BitString::zeros(n)) || !contains(r.queries, BitString::ones(n)))
            return fail("transcript lacks the same-length pair 0^n, 1^n");
        if (!illegal_under(ConstraintKind::li) || !illegal_under(ConstraintKind::ld))
            return fail("transcript is legal under li or ld");
        return true;
    case StageKind::thm4_7: return fail("thm4.7 stages never certify a violation");
    case StageKind::thm4_9: {
        if (!cert.alpha) return fail("missing alpha");
        const BitString target = BitString::zeros(n / 4) + *cert.alpha;
        auto it = std::find(r.queries.begin(), r.queries.end(), target);
        if (it == r.queries.end()) return fail("transcript lacks 0^(n/4) alpha");
        const bool longer_before =
            std::any_of(r.queries.begin(), it, [n](const BitString& s) { return s.size() > n / 2; });
        if (!longer_before) return fail("no query longer than n/2 precedes 0^(n/4) alpha");
        if (!illegal_under(ConstraintKind::lnd)) return fail("transcript is legal under lnd");
        return true;
    }
    case StageKind::thm4_13_odd:
        if (!contains(r.queries, BitString::zeros(n + 1))) return fail("transcript lacks 0^(n+1)");
        if (!illegal_under(ConstraintKind::s_lni)) return fail("transcript is legal under s-lni");
        return true;
    case StageKind::thm4_13_even:
        if (!contains(r.queries, BitString::zeros(n - 1)) || !contains(r.queries, BitString::ones(n - 1)))
            return fail("transcript lacks the pair 0^(n-1), 1^(n-1)");
        if (!illegal_under(ConstraintKind::ld)) return fail("transcript is legal under ld");
        return true;
    }
    return fail("unknown stage kind");
}

ConstructionResult run_construction(ConstructionKind kind, const std::vector<DiagMachine>& machines,
                                    std::uint64_t cap_per_stage) {
    ConstructionResult out;
    for (std::size_t i = 0; i < machines.size(); ++i) {
        const std::size_t stage = i + 1;
        StageKind sk = StageKind::thm4_4;
        switch (kind) {
        case ConstructionKind::thm4_4: sk = StageKind::thm4_4; break;
        case ConstructionKind::thm4_7: sk = StageKind::thm4_7; break;
        case ConstructionKind::thm4_9: sk = StageKind::thm4_9; break;
        case ConstructionKind::thm4_13: sk = stage % 2 == 1 ? StageKind::thm4_13_odd : StageKind::thm4_13_even; break;
        }
        StageResult r = run_diag_stage(sk, machines[i], out.oracle, stage, cap_per_stage);
        out.oracle = std::move(r.oracle);
        out.certificates.push_back(std::move(r.certificate));
    }
    return out;
}

} // namespace qmono
