#pragma once

// Machine-to-machine rewriters that force a length discipline on the query
// sequence, plus the sparse re-encoding and the degenerate-connective shortcut.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qmono/machine.hpp"
#include "qmono/oracle.hpp"
#include "qmono/padding.hpp"
#include "qmono/polynomial.hpp"
#include "qmono/truth_table.hpp"

namespace qmono {

/// Raw query lengths are bounded by p(|x|) (default: m's step budget). Each
/// raw query is padded past the current floor l, starting at l = p(|x|); l then
/// becomes the padded length. Query lengths strictly increase and exceed |x|
/// against every oracle. Requires p(|x|) >= |x| (ConfigurationError).
OracleMachine to_query_increasing(const OracleMachine& m, const Padding& sigma,
                                  std::optional<Polynomial> p = std::nullopt);

/// With P = p(|x|) and slack k, the i-th raw query is padded into the window
/// (P + (P-i)(k+1), P + (P-i)(k+1) + k]. The windows are disjoint and descend.
/// More than P queries raises InternalConsistencyError.
OracleMachine to_query_decreasing(const OracleMachine& m, const Padding& sigma,
                                  std::optional<Polynomial> p = std::nullopt);

/// Lower end of the i-th window (exclusive), i >= 1.
std::uint64_t decreasing_window_floor(std::uint64_t P, std::uint64_t k, std::uint64_t i);

struct EqualLength {
    OracleHandle z;
    OracleMachine m1;
    StringMap z_to_b;
};

/// Every query w of m becomes the string of length q(|x|)+1 whose rank among
/// strings of that length is lex_rank(w); z holds those images of b's members.
EqualLength to_equal_length(const OracleMachine& m, const OracleHandle& b, const Polynomial& q,
                            const BitString& non_member);

/// Just the rewritten machine of to_equal_length.
OracleMachine equal_length_machine(const OracleMachine& m, const Polynomial& q);

/// A strictly increasing list of lengths with a declared spacing predicate
/// between consecutive entries.
struct WideSpacedLengths {
    std::vector<std::uint64_t> values;
    std::function<bool(std::uint64_t a, std::uint64_t b)> gap_ok;
    std::string gap_name;

    /// Throws ConfigurationError unless values increase and every gap passes.
    static WideSpacedLengths make(std::vector<std::uint64_t> values,
                                  std::function<bool(std::uint64_t, std::uint64_t)> gap_ok, std::string gap_name);
    /// Any strictly increasing list.
    static WideSpacedLengths increasing(std::vector<std::uint64_t> values);
    /// The tower 2^2^2, 2^2^2^2, ... truncated to what fits in 64 bits, i.e. {16},
    /// with the spacing a <= log log log b.
    static WideSpacedLengths tower();
};

/// a <= log2 log2 log2 b
bool triple_log_gap(std::uint64_t a, std::uint64_t b);

struct SparseOracle {
    OracleHandle oracle;
    /// Lengths at which the oracle may have members, ascending.
    std::vector<std::uint64_t> support;
    /// Local decision procedure for the oracle (the brute-force side).
    std::function<bool(const BitString&)> local_decide;
};

/// C is empty outside lengths {p(m)+1 : m in lengths}. At such a length, the
/// string of rank r (r <= 2^(p(m)+1) - 1) is in C iff lex_unrank(r) is in b.
SparseOracle sparse_encode(const OracleHandle& b, const Polynomial& p, const WideSpacedLengths& lengths);

/// Support-only sparse oracle (toy support sets, any local decider).
SparseOracle sparse_oracle(OracleHandle oracle, std::vector<std::uint64_t> support);

/// k = max{l in support : l <= q(|x|)}. Queries of length outside the support
/// are answered no locally; support lengths below k are decided locally
/// (lengths above `local_len_cap` raise ResourceError); the one query of
/// length k is forwarded. A second forward raises InternalConsistencyError.
OracleMachine one_query_transform(const OracleMachine& m0, const SparseOracle& c, const Polynomial& q,
                                  std::size_t local_len_cap = 24);

enum class ConnectiveClassKind { completely_degenerate, almost_completely_degenerate, essential };
std::string to_string(ConnectiveClassKind k);

struct ConnectiveClass {
    ConnectiveTable table;
    ConnectiveClassKind kind = ConnectiveClassKind::essential;
    /// Positions (0-based) whose value can change the output.
    std::vector<unsigned> relevant;
};

ConnectiveClass classify_connective(const ConnectiveTable& table);

/// A fixed-table machine whose table depends on at most one answer becomes a
/// machine asking at most one query. Essential tables raise ConfigurationError.
OracleMachine degenerate_ftt_to_monotonic(const TruthTableMachine& t);

} // namespace qmono
