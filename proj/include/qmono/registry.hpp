#pragma once

// JSON forms of the library's values, and rebuilding oracles, machines and
// paddings from the kind-tagged handles they carry. Anything malformed raises
// InvalidInput; an unknown name raises ConfigurationError.

#include <optional>
#include <string>

#include "json.hpp"
#include "qmono/diag_lab.hpp"
#include "qmono/machine.hpp"
#include "qmono/np_encodings.hpp"
#include "qmono/oracle.hpp"
#include "qmono/padding.hpp"
#include "qmono/polynomial.hpp"
#include "qmono/run.hpp"
#include "qmono/staged_oracle.hpp"

namespace qmono {

using json = nlohmann::json;

json to_json(const QueryTranscript& t);
QueryTranscript transcript_from_json(const json& j);

json to_json(const ThreeCnf& f);
ThreeCnf formula_from_json(const json& j);

json to_json(const Graph& g);
Graph graph_from_json(const json& j);

/// {"coeffs": [...]}; a bare array is accepted on input.
json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const json& j);

json to_json(const StagedOracle& o);
StagedOracle staged_oracle_from_json(const json& j);

/// Accepts {"members": [...]}, {"backend": name, ...} and every kind-tagged
/// spec this library emits: finite, all, random, 3sat, clique, tight-equiv,
/// non-tight-equiv, sparse, cylinder.
OracleHandle oracle_from_json(const json& j);

/// A catalog name (string, adaptive or truth-table) or a derived-machine
/// handle: wrap-prefix, wrap-escape, transform, ftt-monotonic.
OracleMachine machine_from_json(const json& j);

/// "3sat", "clique", "rank-shift".
std::optional<Padding> padding_by_name(const std::string& name);

/// Catalog lookup for diagonalization: truth-table machines stay truth-table.
std::optional<DiagMachine> diag_machine_by_name(const std::string& name);

json read_json_file(const std::string& path);

} // namespace qmono
