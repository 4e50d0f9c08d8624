#pragma once

// Wrappers that make a machine's query sequence stay inside a constraint
// against every oracle: a prefix check for prefix-closed constraints, and an
// escape-route wrapper that also works for constraints that are not.

#include <optional>
#include <string>
#include <vector>

#include "qmono/constraint.hpp"
#include "qmono/machine.hpp"

namespace qmono {

struct EscapeRoute {
    std::vector<BitString> extension;
    std::size_t bound = 0;
    friend bool operator==(const EscapeRoute&, const EscapeRoute&) = default;
};

inline constexpr std::size_t kDefaultEscapeCap = 4'000'000;

/// First extension (fewest strings first; among equal counts, compared slot
/// by slot in length-then-lexicographic order) of at most r strings, each of
/// length at most r, that puts (x, prefix ++ extension) inside c. nullopt when
/// none exists. Examining more than `cap` candidates raises ResourceError.
std::optional<EscapeRoute> find_escape_route(const Constraint& c, const BitString& x,
                                             const std::vector<BitString>& prefix, std::size_t r,
                                             std::size_t cap = kDefaultEscapeCap);

/// Before each query, halts and rejects if the extended prefix would leave c.
/// c must be prefix-closed (ConfigurationError otherwise). Same budget as m.
OracleMachine wrap_prefix_checked(const OracleMachine& m, const Constraint& c);

/// Asks an inner query only when an escape route (bound r = p(|x|)) exists
/// past it; otherwise asks a route from the current prefix and rejects. When
/// the inner machine halts, a final route is asked before the same verdict.
OracleMachine wrap_escape_routed(const OracleMachine& m, const Constraint& c, const Polynomial& p,
                                 std::size_t cap = kDefaultEscapeCap);

/// Named constraints that are not prefix-closed, used to exercise the
/// escape-route machinery:
///   "pair-0-11": {(x)} u {(x, "0", "11")}
///   "singleton": {(x)}
///   "even-short": tuples with an even number of queries, each of length <= 1
std::optional<Constraint> constraint_fixture(const std::string& name);
std::vector<std::string> constraint_fixture_names();

/// Built-in kind name ("li", "s-ld", ...) or a fixture name.
std::optional<Constraint> constraint_by_name(const std::string& name);

} // namespace qmono
