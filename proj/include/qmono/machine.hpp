#pragma once

// Resumable deterministic oracle machines. A machine is started on an input
// and then driven one event at a time: each step either asks a query (and
// the next step receives the oracle's answer) or halts with a verdict.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "qmono/bitstring.hpp"
#include "qmono/polynomial.hpp"

namespace qmono {

struct Query {
    BitString q;
};
struct Halt {
    bool accept = false;
};

struct Event {
    std::variant<Query, Halt> action;
    /// Internal steps the machine spent before this event; charged by the runner.
    std::uint64_t work = 0;

    static Event query(BitString q, std::uint64_t work = 0) { return {Query{std::move(q)}, work}; }
    static Event halt(bool accept, std::uint64_t work = 0) { return {Halt{accept}, work}; }
    static Event accept(std::uint64_t work = 0) { return halt(true, work); }
    static Event reject(std::uint64_t work = 0) { return halt(false, work); }

    bool is_query() const noexcept { return std::holds_alternative<Query>(action); }
    const BitString& query_string() const { return std::get<Query>(action).q; }
    bool accepts() const { return std::get<Halt>(action).accept; }
};

class Session {
public:
    virtual ~Session() = default;
    /// The first call passes nullopt; each later call carries the answer to the
    /// query returned by the previous call. Calling after a Halt is an error.
    virtual Event step(std::optional<bool> answer) = 0;
};

class OracleMachine {
public:
    using Start = std::function<std::unique_ptr<Session>(const BitString&)>;

    OracleMachine(std::string name, StepBudget budget, Start start, nlohmann::json spec = nullptr);

    const std::string& name() const noexcept { return name_; }
    const StepBudget& budget() const noexcept { return budget_; }
    /// Handle usable to rebuild this machine through the registry; a catalog
    /// machine's handle is just its name.
    const nlohmann::json& spec() const noexcept { return spec_; }
    std::unique_ptr<Session> start(const BitString& x) const { return start_(x); }

    OracleMachine with_spec(nlohmann::json spec) const;

private:
    std::string name_;
    StepBudget budget_;
    Start start_;
    nlohmann::json spec_;
};

/// Next event as a pure function of the input and the answers received so far.
using Script = std::function<Event(const BitString& x, const std::vector<bool>& answers)>;

OracleMachine script_machine(std::string name, StepBudget budget, Script script);

} // namespace qmono
