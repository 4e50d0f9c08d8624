#pragma once

// Truth-table machines: the whole query list is a function of the input
// alone, and the verdict is computed from the answer vector afterwards.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qmono/machine.hpp"
#include "qmono/oracle.hpp"
#include "qmono/run.hpp"

namespace qmono {

/// A k-ary boolean connective. outputs[idx] with idx = sum_j a_j << (k-1-j),
/// so the first answer is the most significant bit.
struct ConnectiveTable {
    unsigned arity = 0;
    std::vector<bool> outputs;

    ConnectiveTable() = default;
    ConnectiveTable(unsigned k, std::vector<bool> out);
    /// Table whose outputs are the bits of `code`, entry idx taken from bit idx.
    static ConnectiveTable from_code(unsigned k, std::uint64_t code);

    bool operator()(const std::vector<bool>& answers) const;
    std::size_t index_of(const std::vector<bool>& answers) const;
    friend bool operator==(const ConnectiveTable&, const ConnectiveTable&) = default;
};

ConnectiveTable parity_table(unsigned k);
ConnectiveTable projection_table(unsigned k, unsigned j);
ConnectiveTable constant_table(unsigned k, bool value);

struct TruthTableMachine {
    std::string name;
    StepBudget budget;
    std::function<std::vector<BitString>(const BitString&)> generator;
    std::function<bool(const BitString&, const std::vector<bool>&)> evaluator;
    std::optional<ConnectiveTable> fixed_table;
};

/// Builds a machine whose evaluator is the connective itself.
TruthTableMachine fixed_table_machine(std::string name, StepBudget budget,
                                      std::function<std::vector<BitString>(const BitString&)> generator,
                                      ConnectiveTable table);

struct TtRun {
    std::vector<BitString> queries;
    std::vector<bool> answers;
    Outcome outcome = Outcome::reject;
    std::uint64_t steps = 0;
    bool accepted() const noexcept { return outcome == Outcome::accept; }
};

/// Costs one step per query plus one for the verdict, against the budget.
TtRun run_tt(const TruthTableMachine& t, const OracleHandle& oracle, const BitString& x);

/// The same computation as an adaptive machine that happens not to adapt.
OracleMachine as_oracle_machine(const TruthTableMachine& t);

} // namespace qmono
