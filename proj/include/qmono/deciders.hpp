#pragma once

// Exhaustive deciders for 3-SAT and threshold CLIQUE at desk scale.

#include <cstddef>
#include <cstdint>

#include "qmono/np_encodings.hpp"
#include "qmono/oracle.hpp"

namespace qmono {

inline constexpr std::size_t kDefaultSatVarCap = 20;
inline constexpr std::size_t kDefaultCliqueVertexCap = 20;

/// Tries every assignment to the variables that occur. The empty formula is
/// satisfiable. More distinct variables than the cap -> ResourceError.
bool sat3_decide(const ThreeCnf& f, std::size_t var_cap = kDefaultSatVarCap);

/// Is there a clique with at least m vertices? Subset search over n vertices.
bool clique_decide(const Graph& g, std::uint64_t m, std::size_t vertex_cap = kDefaultCliqueVertexCap);

/// String-level deciders: malformed strings are non-members.
bool sat3_string_decide(const BitString& x);
bool clique_string_decide(const BitString& z);

OracleHandle sat3_oracle();
OracleHandle clique_oracle();

} // namespace qmono
