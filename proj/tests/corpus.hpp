#pragma once

// Shared exhaustive corpora and independent reference predicates for tests.

#include <functional>
#include <map>
#include <set>
#include <vector>

#include "qmono/bitstring.hpp"
#include "qmono/constraint.hpp"
#include "qmono/oracle.hpp"

namespace qmono::testing {

/// Every sequence of at most max_count strings drawn from pool.
inline void for_each_sequence(const std::vector<BitString>& pool, std::size_t max_count,
                              const std::function<void(const std::vector<BitString>&)>& f) {
    std::vector<BitString> cur;
    std::function<void()> rec = [&] {
        f(cur);
        if (cur.size() == max_count) return;
        for (const auto& s : pool) {
            cur.push_back(s);
            rec();
            cur.pop_back();
        }
    };
    rec();
}

/// Def-by-definition reference: every pair i < j of positions (and the input,
/// for strong kinds, as position 0) must satisfy the relation. For the
/// transitive relations involved this equals the chain condition, but it is
/// computed without looking at adjacent pairs only.
inline bool reference_allows(ConstraintKind k, const BitString& x, const std::vector<BitString>& qs) {
    if (qs.empty()) return true;
    std::vector<std::size_t> lens;
    const bool strong = k == ConstraintKind::s_li || k == ConstraintKind::s_ld || k == ConstraintKind::s_lni ||
                        k == ConstraintKind::s_lnd;
    if (strong) lens.push_back(x.size());
    for (const auto& q : qs) lens.push_back(q.size());
    for (std::size_t i = 0; i < lens.size(); ++i) {
        for (std::size_t j = i + 1; j < lens.size(); ++j) {
            const std::size_t a = lens[i], b = lens[j];
            bool ok = true;
            switch (k) {
            case ConstraintKind::li:
            case ConstraintKind::s_li: ok = a < b; break;
            case ConstraintKind::ld:
            case ConstraintKind::s_ld: ok = a > b; break;
            case ConstraintKind::lni:
            case ConstraintKind::s_lni: ok = a >= b; break;
            case ConstraintKind::lnd:
            case ConstraintKind::s_lnd: ok = a <= b; break;
            case ConstraintKind::custom: ok = false; break;
            }
            if (!ok) return false;
        }
    }
    return true;
}

/// Finite oracles over all strings up to length max_len, drawn independently.
inline std::vector<OracleHandle> seeded_finite_oracles(std::size_t count, std::size_t max_len, std::uint64_t seed0) {
    std::vector<OracleHandle> out;
    for (std::size_t i = 0; i < count; ++i) out.push_back(random_finite_oracle(seed0 + i, max_len));
    return out;
}

} // namespace qmono::testing
