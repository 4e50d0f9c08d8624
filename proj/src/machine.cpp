#include "qmono/machine.hpp"

#include "qmono/errors.hpp"

namespace qmono {

OracleMachine::OracleMachine(std::string name, StepBudget budget, Start start, nlohmann::json spec)
    : name_(std::move(name)), budget_(std::move(budget)), start_(std::move(start)), spec_(std::move(spec)) {
    if (spec_.is_null()) spec_ = name_;
}

OracleMachine OracleMachine::with_spec(nlohmann::json spec) const {
    OracleMachine copy = *this;
    copy.spec_ = std::move(spec);
    return copy;
}

namespace {

class ScriptSession final : public Session {
public:
    ScriptSession(std::shared_ptr<const Script> script, BitString x) : script_(std::move(script)), x_(std::move(x)) {}

    Event step(std::optional<bool> answer) override {
        if (halted_) throw InternalConsistencyError("machine stepped after halting");
        if (awaiting_) {
            if (!answer) throw InternalConsistencyError("query answered with no answer");
            answers_.push_back(*answer);
        }
        Event e = (*script_)(x_, answers_);
        awaiting_ = e.is_query();
        halted_ = !awaiting_;
        return e;
    }

private:
    std::shared_ptr<const Script> script_;
    BitString x_;
    std::vector<bool> answers_;
    bool awaiting_ = false;
    bool halted_ = false;
};

} // namespace

OracleMachine script_machine(std::string name, StepBudget budget, Script script) {
    auto shared = std::make_shared<const Script>(std::move(script));
    return OracleMachine(std::move(name), std::move(budget),
                         [shared](const BitString& x) { return std::make_unique<ScriptSession>(shared, x); });
}

} // namespace qmono
