#pragma once

// Named built-in machines: probers that decide the test languages, simple
// fixtures for the diagonalization stages, and base machines for the
// transformers. Every machine's declared budget covers its actual event
// count on every input, including the empty one.

#include <optional>
#include <string>
#include <vector>

#include "qmono/machine.hpp"
#include "qmono/test_languages.hpp"
#include "qmono/truth_table.hpp"

namespace qmono {

std::optional<OracleMachine> catalog_machine(const std::string& name);
std::vector<std::string> catalog_names();

std::optional<TruthTableMachine> catalog_tt_machine(const std::string& name);
std::vector<std::string> catalog_tt_names();

/// The catalog machine that decides L_D with oracle D for the given kind.
OracleMachine test_language_prober(TestLanguageKind kind);

} // namespace qmono
