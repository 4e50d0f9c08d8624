#include "qmono/truth_table.hpp"

#include <memory>

#include "qmono/errors.hpp"

namespace qmono {

ConnectiveTable::ConnectiveTable(unsigned k, std::vector<bool> out) : arity(k), outputs(std::move(out)) {
    if (k >= 20) throw InvalidInput("connective arity too large");
    if (outputs.size() != (std::size_t{1} << k)) throw InvalidInput("connective table needs 2^k entries");
}

ConnectiveTable ConnectiveTable::from_code(unsigned k, std::uint64_t code) {
    std::vector<bool> out(std::size_t{1} << k);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = ((code >> i) & 1u) != 0;
    return ConnectiveTable(k, std::move(out));
}

std::size_t ConnectiveTable::index_of(const std::vector<bool>& answers) const {
    if (answers.size() != arity) throw InvalidInput("connective applied to the wrong number of answers");
    std::size_t idx = 0;
    for (bool a : answers) idx = (idx << 1) | (a ? 1u : 0u);
    return idx;
}

bool ConnectiveTable::operator()(const std::vector<bool>& answers) const { return outputs[index_of(answers)]; }

ConnectiveTable parity_table(unsigned k) {
    std::vector<bool> out(std::size_t{1} << k);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = (__builtin_popcountll(i) & 1) != 0;
    return ConnectiveTable(k, std::move(out));
}

ConnectiveTable projection_table(unsigned k, unsigned j) {
    if (j >= k) throw InvalidInput("projection index out of range");
    std::vector<bool> out(std::size_t{1} << k);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = ((i >> (k - 1 - j)) & 1u) != 0;
    return ConnectiveTable(k, std::move(out));
}

ConnectiveTable constant_table(unsigned k, bool value) {
    return ConnectiveTable(k, std::vector<bool>(std::size_t{1} << k, value));
}

TruthTableMachine fixed_table_machine(std::string name, StepBudget budget,
                                      std::function<std::vector<BitString>(const BitString&)> generator,
                                      ConnectiveTable table) {
    TruthTableMachine t;
    t.name = std::move(name);
    t.budget = std::move(budget);
    t.generator = std::move(generator);
    t.evaluator = [table](const BitString&, const std::vector<bool>& answers) { return table(answers); };
    t.fixed_table = std::move(table);
    return t;
}

TtRun run_tt(const TruthTableMachine& t, const OracleHandle& oracle, const BitString& x) {
    TtRun r;
    r.queries = t.generator(x);
    const std::uint64_t ceiling = t.budget(x.size());
    if (r.queries.size() + 1 > ceiling) {
        r.outcome = Outcome::budget;
        return r;
    }
    for (const auto& q : r.queries) r.answers.push_back(oracle(q));
    r.steps = r.queries.size() + 1;
    r.outcome = t.evaluator(x, r.answers) ? Outcome::accept : Outcome::reject;
    return r;
}

OracleMachine as_oracle_machine(const TruthTableMachine& t) {
    auto shared = std::make_shared<const TruthTableMachine>(t);
    // The query list is fixed on the first step; later steps only collect answers.
    class TtSession final : public Session {
    public:
        TtSession(std::shared_ptr<const TruthTableMachine> m, BitString x) : m_(std::move(m)), x_(std::move(x)) {}
        Event step(std::optional<bool> answer) override {
            if (!started_) {
                queries_ = m_->generator(x_);
                started_ = true;
            } else {
                if (!answer) throw InternalConsistencyError("query answered with no answer");
                answers_.push_back(*answer);
            }
            if (answers_.size() < queries_.size()) return Event::query(queries_[answers_.size()]);
            return Event::halt(m_->evaluator(x_, answers_));
        }

    private:
        std::shared_ptr<const TruthTableMachine> m_;
        BitString x_;
        std::vector<BitString> queries_;
        std::vector<bool> answers_;
        bool started_ = false;
    };
    return OracleMachine(t.name, t.budget,
                         [shared](const BitString& x) { return std::make_unique<TtSession>(shared, x); });
}

} // namespace qmono
