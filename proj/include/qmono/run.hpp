#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qmono/constraint.hpp"
#include "qmono/machine.hpp"
#include "qmono/oracle.hpp"

namespace qmono {

enum class Outcome { accept, reject, violation, budget };

std::string to_string(Outcome o);
std::optional<Outcome> parse_outcome(std::string_view s);

struct TranscriptEvent {
    BitString query;
    bool answer = false;
    friend bool operator==(const TranscriptEvent&, const TranscriptEvent&) = default;
};

struct QueryTranscript {
    BitString input;
    std::vector<TranscriptEvent> events;
    Outcome outcome = Outcome::reject;
    std::uint64_t steps = 0;
    /// 1-based. For a violation, the recorded query the constraint refused;
    /// for a budget overrun, the ordinal of the event that would have
    /// exceeded the ceiling (that event is not recorded).
    std::optional<std::size_t> violation_index;

    std::vector<BitString> queries() const;
    bool accepted() const noexcept { return outcome == Outcome::accept; }
    friend bool operator==(const QueryTranscript&, const QueryTranscript&) = default;
};

/// Drives m on x against the oracle. Each event costs one step plus the work
/// the machine reports for it; the machine's budget caps the total.
QueryTranscript run(const OracleMachine& m, const OracleHandle& oracle, const BitString& x,
                    const std::optional<Constraint>& constraint = std::nullopt);

/// True iff every listed input's full query sequence lies in c. A budget
/// overrun counts as false and is described in *diagnostic when given.
bool has_query_property(const OracleMachine& m, const OracleHandle& oracle, const Constraint& c,
                        const std::vector<BitString>& inputs, std::string* diagnostic = nullptr);

} // namespace qmono
