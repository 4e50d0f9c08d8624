#include "qmono/run.hpp"

namespace qmono {

std::string to_string(Outcome o) {
    switch (o) {
    case Outcome::accept: return "accept";
    case Outcome::reject: return "reject";
    case Outcome::violation: return "violation";
    case Outcome::budget: return "budget";
    }
    return "reject";
}

std::optional<Outcome> parse_outcome(std::string_view s) {
    for (Outcome o : {Outcome::accept, Outcome::reject, Outcome::violation, Outcome::budget}) {
        if (to_string(o) == s) return o;
    }
    return std::nullopt;
}

std::vector<BitString> QueryTranscript::queries() const {
    std::vector<BitString> qs;
    qs.reserve(events.size());
    for (const auto& e : events) qs.push_back(e.query);
    return qs;
}

QueryTranscript run(const OracleMachine& m, const OracleHandle& oracle, const BitString& x,
                    const std::optional<Constraint>& constraint) {
    QueryTranscript t;
    t.input = x;
    const std::uint64_t ceiling = m.budget()(x.size());
    auto session = m.start(x);
    std::vector<BitString> asked;
    std::optional<bool> answer;
    for (;;) {
        Event e = session->step(answer);
        const std::uint64_t cost = sat_add(1, e.work);
        if (sat_add(t.steps, cost) > ceiling) {
            t.outcome = Outcome::budget;
            t.violation_index = t.events.size() + 1;
            return t;
        }
        t.steps += cost;
        if (!e.is_query()) {
            t.outcome = e.accepts() ? Outcome::accept : Outcome::reject;
            return t;
        }
        const BitString& q = e.query_string();
        const bool a = oracle(q);
        t.events.push_back({q, a});
        asked.push_back(q);
        if (constraint && !constraint->allows(x, asked)) {
            t.outcome = Outcome::violation;
            t.violation_index = t.events.size();
            return t;
        }
        answer = a;
    }
}

bool has_query_property(const OracleMachine& m, const OracleHandle& oracle, const Constraint& c,
                        const std::vector<BitString>& inputs, std::string* diagnostic) {
    for (const auto& x : inputs) {
        const QueryTranscript t = run(m, oracle, x);
        if (t.outcome == Outcome::budget) {
            if (diagnostic) *diagnostic = "budget exceeded on input \"" + x.str() + "\"";
            return false;
        }
        if (!c.allows(x, t.queries())) {
            if (diagnostic) *diagnostic = "query sequence outside " + c.name() + " on input \"" + x.str() + "\"";
            return false;
        }
    }
    return true;
}

} // namespace qmono
