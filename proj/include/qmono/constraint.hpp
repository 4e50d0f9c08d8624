#pragma once

// The eight query-length restriction sets, plus user-defined tuple predicates.
// Every built-in kind admits the empty query sequence and is prefix-closed.

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qmono/bitstring.hpp"

namespace qmono {

enum class ConstraintKind { li, ld, lni, lnd, s_li, s_ld, s_lni, s_lnd, custom };

inline constexpr std::array<ConstraintKind, 8> kBuiltinKinds = {
    ConstraintKind::li,   ConstraintKind::ld,   ConstraintKind::lni,   ConstraintKind::lnd,
    ConstraintKind::s_li, ConstraintKind::s_ld, ConstraintKind::s_lni, ConstraintKind::s_lnd};

std::string to_string(ConstraintKind k);
/// Accepts "li", "s-li", ... ; nullopt for anything else.
std::optional<ConstraintKind> parse_constraint_kind(std::string_view s);

class Constraint {
public:
    using Predicate = std::function<bool(const BitString& x, std::span<const BitString> qs)>;

    Constraint(ConstraintKind builtin); // NOLINT(google-explicit-constructor)
    /// prefix_closed is the caller's declaration; wrap_prefix_checked trusts it.
    static Constraint custom(std::string name, Predicate predicate, bool prefix_closed);

    ConstraintKind kind() const noexcept { return kind_; }
    const std::string& name() const noexcept { return name_; }
    bool prefix_closed() const noexcept { return prefix_closed_; }

    bool allows(const BitString& x, std::span<const BitString> qs) const;

private:
    Constraint() = default;
    ConstraintKind kind_ = ConstraintKind::li;
    std::string name_;
    Predicate predicate_;
    bool prefix_closed_ = true;
};

bool constraint_allows(const Constraint& c, const BitString& x, std::span<const BitString> qs);

} // namespace qmono
