#include "qmono/staged_oracle.hpp"

#include <string>

#include "qmono/errors.hpp"

namespace qmono {

StagedOracle::StagedOracle(std::set<BitString> members, std::uint64_t watermark)
    : members_(std::move(members)), watermark_(watermark) {
    for (const auto& m : members_) {
        if (m.size() > watermark_) {
            throw StagingViolation("member \"" + m.str() + "\" lies above the watermark " + std::to_string(watermark_));
        }
    }
}

StagedOracle StagedOracle::extend(const std::set<BitString>& new_members, std::uint64_t new_watermark) const {
    if (new_watermark < watermark_) {
        throw StagingViolation("watermark may not decrease (" + std::to_string(watermark_) + " -> " +
                               std::to_string(new_watermark) + ")");
    }
    StagedOracle next = *this;
    for (const auto& m : new_members) {
        if (m.size() <= watermark_) {
            throw StagingViolation("cannot add \"" + m.str() + "\": length " + std::to_string(m.size()) +
                                   " is frozen by watermark " + std::to_string(watermark_));
        }
        if (m.size() > new_watermark) {
            throw StagingViolation("new member \"" + m.str() + "\" is longer than the new watermark");
        }
        next.members_.insert(m);
    }
    next.watermark_ = new_watermark;
    return next;
}

OracleHandle StagedOracle::handle() const {
    OracleHandle h = finite_oracle(members_);
    auto spec = h.spec();
    spec["watermark"] = watermark_;
    return OracleHandle([h](const BitString& x) { return h(x); }, std::move(spec));
}

} // namespace qmono
