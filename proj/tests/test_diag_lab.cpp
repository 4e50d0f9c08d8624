#include <cmath>
#include <set>

#include "doctest.h"
#include "qmono/catalog.hpp"
#include "qmono/constraint.hpp"
#include "qmono/diag_lab.hpp"
#include "qmono/errors.hpp"
#include "qmono/run.hpp"

using namespace qmono;

namespace {

OracleMachine cm(const char* name) { return *catalog_machine(name); }
TruthTableMachine tt(const char* name) { return *catalog_tt_machine(name); }

// n^i + i < 2^(n/d), in floating point; wide margins on both sides at these sizes
bool fits(std::uint64_t n, unsigned i, unsigned d) {
    return std::pow(static_cast<long double>(n), i) + i < std::pow(2.0L, static_cast<long double>(n / d));
}

std::uint64_t ref_power_length(std::uint64_t base, unsigned i, unsigned d, std::uint64_t wm, std::uint64_t num,
                               std::uint64_t den) {
    for (std::uint64_t n = base; n <= (1u << 20); n *= base) {
        if (fits(n, i, d) && wm * den < num * n) return n;
    }
    return 0;
}

std::vector<BitString> queries_at(const DiagMachine& m, const StagedOracle& o, std::uint64_t n) {
    const BitString x = BitString::zeros(n);
    if (const auto* om = std::get_if<OracleMachine>(&m)) return run(*om, o.handle(), x).queries();
    return run_tt(std::get<TruthTableMachine>(m), o.handle(), x).queries;
}

bool accepts_at(const DiagMachine& m, const StagedOracle& o, std::uint64_t n) {
    const BitString x = BitString::zeros(n);
    if (const auto* om = std::get_if<OracleMachine>(&m)) return run(*om, o.handle(), x).accepted();
    return run_tt(std::get<TruthTableMachine>(m), o.handle(), x).accepted();
}

ConstraintKind stage_constraint(StageKind k) {
    switch (k) {
    case StageKind::thm4_4: return ConstraintKind::li;
    case StageKind::thm4_7: return ConstraintKind::lnd;
    case StageKind::thm4_9: return ConstraintKind::lnd;
    case StageKind::thm4_13_odd: return ConstraintKind::s_lni;
    case StageKind::thm4_13_even: return ConstraintKind::ld;
    }
    return ConstraintKind::li;
}

// The recorded case, re-derived without verify_certificate.
void check_case(const StageCertificate& c, const DiagMachine& m, const StagedOracle& o) {
    const BitString x = BitString::zeros(c.n);
    if (c.case_tag == CaseTag::constraint_violation) {
        const auto qs = queries_at(m, o, c.n);
        CHECK_FALSE(constraint_allows(stage_constraint(c.kind), x, qs));
        if (c.kind == StageKind::thm4_4) CHECK_FALSE(constraint_allows(ConstraintKind::ld, x, qs));
    } else {
        const bool verdict = accepts_at(m, o, c.n);
        CHECK(verdict == (c.case_tag == CaseTag::disagreement_accept));
        CHECK(verdict != test_language_decide(stage_language(c.kind), o.handle(), x));
    }
}

} // namespace

TEST_CASE("test languages: small evaluations") {
    CHECK(test_language_decide(TestLanguageKind::xor_pair, finite_oracle({"000"_bits}), "000"_bits));
    CHECK_FALSE(test_language_decide(TestLanguageKind::xor_pair, finite_oracle({"000"_bits, "111"_bits}), "000"_bits));
    for (std::uint64_t seed = 0; seed < 5; ++seed)
        CHECK_FALSE(test_language_decide(TestLanguageKind::xor_pair, random_oracle(seed), "01"_bits));
    CHECK(test_language_decide(TestLanguageKind::shift_up_4k1, finite_oracle({"00000"_bits}), "0000"_bits));
    CHECK_FALSE(test_language_decide(TestLanguageKind::shift_up_4k1, finite_oracle({"00000"_bits}), "000"_bits));
}

TEST_CASE("diagonal lengths are minimal") {
    for (std::uint64_t wm = 0; wm < 400; wm += 7) {
        CHECK(diag_length_thm4_4(wm) == wm + 1);
        std::uint64_t odd = 4;
        while (odd <= wm) odd += 4;
        CHECK(diag_length_thm4_13_odd(wm) == odd);
        std::uint64_t even = 7;
        while (wm + 1 >= even) even += 4;
        CHECK(diag_length_thm4_13_even(wm) == even);
        for (unsigned i = 1; i <= 3; ++i) {
            const auto b = StepBudget::exponent_form(i);
            CHECK(diag_length_thm4_7(b, wm) == ref_power_length(8, i, 8, wm, 3, 4));
            CHECK(diag_length_thm4_9(b, wm) == ref_power_length(4, i, 4, wm, 1, 2));
        }
    }
    CHECK(diag_length_thm4_9(StepBudget::exponent_form(1), 0) == 64);
    CHECK(diag_length_thm4_7(StepBudget::exponent_form(1), 0) == 64);
    CHECK_THROWS_AS(diag_length_thm4_4(10, 10), ResourceError);
    CHECK_THROWS_AS(diag_length_thm4_9(StepBudget::exponent_form(1), 0, 63), ResourceError);
    CHECK_THROWS_AS(diag_length_thm4_13_even(100, 100), ResourceError);
}

TEST_CASE("free block scan") {
    CHECK(first_free_block(3, {}) == "000"_bits);
    CHECK(first_free_block(3, {"000"_bits, "001"_bits, "011"_bits}) == "010"_bits);
    CHECK(first_free_block(2, {"00"_bits, "01"_bits, "10"_bits}) == "11"_bits);
}

TEST_CASE("xor-pair stage: the three cases") {
    const StagedOracle fresh;
    const auto r = run_diag_stage(StageKind::thm4_4, cm("reject-all"), fresh);
    CHECK(r.certificate.n == 1);
    CHECK(r.certificate.case_tag == CaseTag::disagreement_reject);
    CHECK(r.certificate.added == std::vector<BitString>{"0"_bits});
    CHECK(r.oracle.decide("0"_bits));
    CHECK(verify_certificate(r.certificate, cm("reject-all"), r.oracle));
    check_case(r.certificate, cm("reject-all"), r.oracle);

    const auto v = run_diag_stage(StageKind::thm4_4, cm("xor-probe"), fresh);
    CHECK(v.certificate.case_tag == CaseTag::constraint_violation);
    CHECK(v.certificate.added.empty());
    CHECK(v.oracle.members().empty());
    CHECK(verify_certificate(v.certificate, cm("xor-probe"), v.oracle));

    // one of the pair queried: the other goes in
    const auto z = run_diag_stage(StageKind::thm4_4, cm("zero-probe"), fresh);
    CHECK(z.certificate.added == std::vector<BitString>{"1"_bits});
    CHECK(z.certificate.case_tag == CaseTag::disagreement_reject);
    const auto a = run_diag_stage(StageKind::thm4_4, cm("accept-all"), r.oracle);
    CHECK(a.certificate.n == r.oracle.watermark() + 1);
    CHECK(a.certificate.case_tag == CaseTag::disagreement_accept);
    CHECK(a.certificate.added.empty());
}

TEST_CASE("sweep-down stage") {
    const StagedOracle fresh;
    const auto r = run_diag_stage(StageKind::thm4_9, cm("zero-probe"), fresh);
    CHECK(r.certificate.n == 64);
    CHECK(r.certificate.exponent == std::optional<unsigned>(1));
    CHECK(r.certificate.case_tag == CaseTag::disagreement_reject);
    CHECK(r.certificate.alpha == std::optional(BitString::zeros(16)));
    CHECK(r.certificate.added == std::vector<BitString>{BitString::zeros(32)});
    CHECK(verify_certificate(r.certificate, cm("zero-probe"), r.oracle));
    check_case(r.certificate, cm("zero-probe"), r.oracle);

    const auto s = run_diag_stage(StageKind::thm4_9, cm("sweep-down-probe"), r.oracle);
    CHECK(s.certificate.case_tag == CaseTag::constraint_violation);
    CHECK(verify_certificate(s.certificate, cm("sweep-down-probe"), s.oracle));
    check_case(s.certificate, cm("sweep-down-probe"), s.oracle);

    // alpha: least block with 0^(n/4) alpha missing from the queries before
    // the first one longer than n/2, replayed on the pre-stage oracle
    for (const char* name : {"zero-probe", "sweep-up-probe", "accept-all", "increasing-chain"}) {
        const StagedOracle before = s.oracle;
        const auto t = run_diag_stage(StageKind::thm4_9, cm(name), before);
        const auto n = t.certificate.n;
        std::set<BitString> early;
        for (const auto& q : queries_at(cm(name), before, n)) {
            if (q.size() > n / 2) break;
            early.insert(q);
        }
        BitString expect;
        for (std::uint64_t v = 0;; ++v) {
            BitString beta;
            for (std::size_t b = n / 4; b-- > 0;) beta.push_back(b < 64 && ((v >> b) & 1u));
            if (!early.count(BitString::zeros(n / 4) + beta)) {
                expect = beta;
                break;
            }
        }
        CHECK(t.certificate.alpha == std::optional(expect));
        CHECK(verify_certificate(t.certificate, cm(name), t.oracle));
        check_case(t.certificate, cm(name), t.oracle);
    }
}

TEST_CASE("mirror stage keeps its promises") {
    StagedOracle o;
    std::vector<std::pair<StageCertificate, TruthTableMachine>> certs;
    for (const char* name : {"mirror-tt", "mirror-tt", "constant-true-tt"}) {
        const auto r = run_diag_stage(StageKind::thm4_7, tt(name), o, certs.size() + 1);
        o = r.oracle;
        certs.emplace_back(r.certificate, tt(name));
        const std::uint64_t n = r.certificate.n;
        CHECK(n % 8 == 0);
        CHECK(r.certificate.alpha.has_value());
        CHECK(r.certificate.alpha->size() == n / 8);
        for (std::uint64_t j = 1; j <= n / 8; ++j)
            CHECK(o.decide(BitString::zeros(n - j)) == o.decide(BitString::zeros(n + j)));
    }
    for (const auto& [c, m] : certs) {
        CHECK(verify_certificate(c, m, o));
        check_case(c, m, o);
    }
    CHECK_THROWS_AS(run_diag_stage(StageKind::thm4_7, cm("mirror-probe"), StagedOracle{}), ConfigurationError);
}

TEST_CASE("shift and xor stages") {
    const StagedOracle fresh;
    const auto odd = run_diag_stage(StageKind::thm4_13_odd, cm("shift-up-probe"), fresh);
    CHECK(odd.certificate.n == 4);
    CHECK(odd.certificate.case_tag == CaseTag::constraint_violation);
    const auto odd2 = run_diag_stage(StageKind::thm4_13_odd, cm("reject-all"), fresh);
    CHECK(odd2.certificate.added == std::vector<BitString>{BitString::zeros(5)});
    const auto even = run_diag_stage(StageKind::thm4_13_even, cm("xor-4k2-probe"), fresh);
    CHECK(even.certificate.n == 7);
    CHECK(even.certificate.case_tag == CaseTag::constraint_violation);
    const auto even2 = run_diag_stage(StageKind::thm4_13_even, cm("shift-down-probe"), fresh);
    CHECK(even2.certificate.added == std::vector<BitString>{BitString::ones(6)});
    CHECK(even2.certificate.case_tag == CaseTag::disagreement_reject);
    check_case(even2.certificate, cm("shift-down-probe"), even2.oracle);
}

TEST_CASE("certificates survive later stages and reject tampering") {
    StagedOracle o;
    std::vector<std::pair<StageCertificate, OracleMachine>> done;
    const std::vector<const char*> names{"reject-all", "zero-probe", "accept-all", "one-probe"};
    for (std::size_t i = 0; i < names.size(); ++i) {
        const auto r = run_diag_stage(StageKind::thm4_4, cm(names[i]), o, i + 1);
        o = r.oracle;
        done.emplace_back(r.certificate, cm(names[i]));
        for (const auto& [c, m] : done) CHECK(verify_certificate(c, m, o));
    }
    auto first = done[0].first;
    CHECK(certificate_from_json(to_json(first)) == first);
    auto tampered = first;
    tampered.case_tag = CaseTag::disagreement_accept;
    std::string why;
    CHECK_FALSE(verify_certificate(tampered, done[0].second, o, &why));
    CHECK_FALSE(why.empty());
    tampered = first;
    tampered.case_tag = CaseTag::constraint_violation;
    CHECK_FALSE(verify_certificate(tampered, done[0].second, o));
    CHECK_FALSE(verify_certificate(first, cm("accept-all"), o));
    tampered = first;
    tampered.watermark = o.watermark() + 1;
    CHECK_FALSE(verify_certificate(tampered, done[0].second, o));
    CHECK_THROWS_AS(certificate_from_json(nlohmann::json{{"construction", "thm9"}}), InvalidInput);
}

TEST_CASE("constructions") {
    std::vector<DiagMachine> eight;
    // the watermark covers budget(n), so the cubic machine goes last
    for (const char* name : {"accept-all", "reject-all", "zero-probe", "one-probe", "shift-up-probe", "xor-4k1-probe",
                             "xor-probe", "increasing-chain"})
        eight.emplace_back(cm(name));
    const auto r = run_construction(ConstructionKind::thm4_4, eight);
    REQUIRE(r.certificates.size() == 8);
    for (std::size_t i = 0; i < 8; ++i) {
        CHECK(r.certificates[i].stage == i + 1);
        CHECK(verify_certificate(r.certificates[i], eight[i], r.oracle));
        check_case(r.certificates[i], eight[i], r.oracle);
        if (i > 0) CHECK(r.certificates[i].n > r.certificates[i - 1].watermark);
    }

    const auto empty = run_construction(ConstructionKind::thm4_4, {});
    CHECK(empty.certificates.empty());
    CHECK(empty.oracle.members().empty());

    std::vector<DiagMachine> alt;
    for (const char* name : {"shift-up-probe", "xor-4k2-probe", "reject-all", "shift-down-probe", "accept-all"})
        alt.emplace_back(cm(name));
    const auto a = run_construction(ConstructionKind::thm4_13, alt);
    REQUIRE(a.certificates.size() == 5);
    for (std::size_t i = 0; i < 5; ++i) {
        CHECK(a.certificates[i].kind == (i % 2 == 0 ? StageKind::thm4_13_odd : StageKind::thm4_13_even));
        CHECK(verify_certificate(a.certificates[i], alt[i], a.oracle));
        check_case(a.certificates[i], alt[i], a.oracle);
    }
}
