#pragma once

#include <cstdint>
#include <set>

#include "qmono/oracle.hpp"

namespace qmono {

/// A finite oracle built in stages. Every string of length <= watermark is
/// frozen: later stages may only add strictly longer strings.
class StagedOracle {
public:
    StagedOracle() = default;
    StagedOracle(std::set<BitString> members, std::uint64_t watermark);

    bool decide(const BitString& x) const { return members_.count(x) != 0; }
    const std::set<BitString>& members() const noexcept { return members_; }
    std::uint64_t watermark() const noexcept { return watermark_; }

    /// Throws StagingViolation when a new member is not longer than the
    /// current watermark, or new_watermark is below the old one or below a
    /// new member's length.
    StagedOracle extend(const std::set<BitString>& new_members, std::uint64_t new_watermark) const;

    /// Snapshot handle; later extends do not affect it.
    OracleHandle handle() const;

    friend bool operator==(const StagedOracle&, const StagedOracle&) = default;

private:
    std::set<BitString> members_;
    std::uint64_t watermark_ = 0;
};

inline StagedOracle staged_extend(const StagedOracle& o, const std::set<BitString>& new_members,
                                  std::uint64_t new_watermark) {
    return o.extend(new_members, new_watermark);
}

} // namespace qmono
