#include "corpus.hpp"
#include "doctest.h"
#include "escape_oracle.hpp"
#include "qmono/catalog.hpp"
#include "qmono/errors.hpp"
#include "qmono/robust_wrap.hpp"
#include "qmono/run.hpp"

using namespace qmono;
using namespace qmono::testing;

namespace {

std::vector<BitString> strs(std::initializer_list<const char*> xs) {
    std::vector<BitString> out;
    for (auto s : xs) out.emplace_back(s);
    return out;
}

std::vector<Constraint> all_constraints() {
    std::vector<Constraint> out(kBuiltinKinds.begin(), kBuiltinKinds.end());
    for (const auto& n : constraint_fixture_names()) out.push_back(*constraint_fixture(n));
    return out;
}

OracleMachine asks_then_halts(std::vector<BitString> qs, bool verdict) {
    return script_machine("asks", StepBudget::exponent_form(2),
                          [qs, verdict](const BitString&, const std::vector<bool>& a) {
                              if (a.size() < qs.size()) return Event::query(qs[a.size()]);
                              return Event::halt(verdict);
                          });
}

} // namespace

TEST_CASE("escape route examples") {
    const auto li = Constraint(ConstraintKind::li);
    auto r = find_escape_route(li, "00"_bits, strs({"0", "00"}), 3);
    REQUIRE(r);
    CHECK(r->extension.empty());
    CHECK(r->bound == 3);

    auto pair = *constraint_fixture("pair-0-11");
    auto p = find_escape_route(pair, "01"_bits, strs({"0"}), 2);
    REQUIRE(p);
    CHECK(p->extension == strs({"11"}));

    auto single = *constraint_fixture("singleton");
    CHECK_FALSE(find_escape_route(single, "01"_bits, strs({"0"}), 2).has_value());
    CHECK_THROWS_AS(find_escape_route(single, "01"_bits, strs({"0"}), 2, 5), ResourceError);

    auto even = *constraint_fixture("even-short");
    auto e = find_escape_route(even, ""_bits, strs({"1"}), 2);
    REQUIRE(e);
    CHECK(e->extension == strs({""}));
    CHECK_FALSE(find_escape_route(even, ""_bits, strs({"11"}), 3).has_value());
    CHECK(constraint_by_name("s-li").has_value());
    CHECK_FALSE(constraint_by_name("nope").has_value());
}

TEST_CASE("escape routes agree with the reference enumeration (r <= 3)") {
    const auto prefixes_pool = strings_up_to(2);
    for (const auto& c : all_constraints()) {
        for (const auto& x : strings_up_to(1)) {
            for_each_sequence(prefixes_pool, 2, [&](const std::vector<BitString>& prefix) {
                for (std::size_t r = 1; r <= 3; ++r) {
                    const auto got = find_escape_route(c, x, prefix, r);
                    const auto want = reference_escape(c, x, prefix, r);
                    REQUIRE(got.has_value() == want.has_value());
                    if (got) {
                        CHECK(got->extension == *want);
                        auto full = prefix;
                        full.insert(full.end(), got->extension.begin(), got->extension.end());
                        CHECK(c.allows(x, full));
                    }
                }
            });
        }
    }
}

TEST_CASE("prefix-checked wrapper") {
    const auto xp = *catalog_machine("xor-probe");
    const auto w = wrap_prefix_checked(xp, ConstraintKind::li);
    const auto t = run(w, finite_oracle({"000"_bits}), "000"_bits);
    CHECK(t.outcome == Outcome::reject);
    REQUIRE(t.events.size() == 1);
    CHECK(t.events[0].query == "000"_bits);
    CHECK(w.spec()["kind"] == "wrap-prefix");

    CHECK_THROWS_AS(wrap_prefix_checked(xp, *constraint_fixture("singleton")), ConfigurationError);
}

TEST_CASE("prefix-checked wrapper is robust and transparent") {
    const auto oracles = seeded_finite_oracles(10, 6, 7);
    const auto inputs = strings_up_to(4);
    for (auto k : kBuiltinKinds) {
        for (const auto& name : catalog_names()) {
            const auto m = *catalog_machine(name);
            const auto w = wrap_prefix_checked(m, k);
            for (const auto& o : oracles) {
                CHECK_MESSAGE(has_query_property(w, o, k, inputs), name, " / ", to_string(k));
                for (const auto& x : inputs) {
                    const auto raw = run(m, o, x);
                    if (constraint_allows(k, x, raw.queries())) {
                        const auto wrapped = run(w, o, x);
                        CHECK(wrapped.events == raw.events);
                        CHECK(wrapped.outcome == raw.outcome);
                    }
                }
            }
        }
    }
}

TEST_CASE("escape-routed wrapper traces") {
    const auto pair = *constraint_fixture("pair-0-11");
    const auto p = Polynomial::constant(2);

    // asks "0" then halts: the final route "11" is appended
    const auto w1 = wrap_escape_routed(asks_then_halts(strs({"0"}), true), pair, p);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto t = run(w1, random_oracle(seed), "101"_bits);
        CHECK(t.queries() == strs({"0", "11"}));
        CHECK(t.outcome == Outcome::accept);
    }

    // planned second query "1" has no route: recovery route then reject
    const auto w2 = wrap_escape_routed(asks_then_halts(strs({"0", "1"}), true), pair, p);
    const auto t2 = run(w2, all_strings_oracle(), ""_bits);
    CHECK(t2.queries() == strs({"0", "11"}));
    CHECK(t2.outcome == Outcome::reject);

    // compliant machine under a nice kind behaves like the prefix wrapper
    const auto chain = *catalog_machine("increasing-chain");
    const auto we = wrap_escape_routed(chain, ConstraintKind::li, p);
    const auto wp = wrap_prefix_checked(chain, ConstraintKind::li);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto o = random_finite_oracle(seed, 5);
        for (const auto& x : strings_up_to(2)) CHECK(run(we, o, x).events == run(wp, o, x).events);
    }
}

TEST_CASE("escape-routed wrapper is robust on the non-prefix-closed fixtures") {
    const auto p = Polynomial::constant(2);
    const std::vector<OracleMachine> bases = {asks_then_halts(strs({"0"}), true), asks_then_halts(strs({"0", "1"}), false),
                                              *catalog_machine("zero-one-probe"), *catalog_machine("adaptive-walk"),
                                              *catalog_machine("accept-all")};
    for (const auto& name : constraint_fixture_names()) {
        const auto c = *constraint_fixture(name);
        for (const auto& b : bases) {
            const auto w = wrap_escape_routed(b, c, p);
            for (std::uint64_t seed = 0; seed < 10; ++seed)
                CHECK_MESSAGE(has_query_property(w, random_oracle(seed), c, strings_up_to(2)), name, " / ", b.name());
        }
    }
}
