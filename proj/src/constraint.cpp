#include "qmono/constraint.hpp"

#include "qmono/errors.hpp"

namespace qmono {

namespace {

struct KindName {
    ConstraintKind kind;
    std::string_view name;
};

constexpr std::array<KindName, 8> kNames = {{{ConstraintKind::li, "li"},
                                             {ConstraintKind::ld, "ld"},
                                             {ConstraintKind::lni, "lni"},
                                             {ConstraintKind::lnd, "lnd"},
                                             {ConstraintKind::s_li, "s-li"},
                                             {ConstraintKind::s_ld, "s-ld"},
                                             {ConstraintKind::s_lni, "s-lni"},
                                             {ConstraintKind::s_lnd, "s-lnd"}}};

template <class Rel>
bool chain(std::size_t first, std::span<const BitString> qs, Rel rel, bool anchored) {
    std::size_t prev = first;
    for (std::size_t i = 0; i < qs.size(); ++i) {
        if ((anchored || i > 0) && !rel(prev, qs[i].size())) return false;
        prev = qs[i].size();
    }
    return true;
}

bool builtin_allows(ConstraintKind k, const BitString& x, std::span<const BitString> qs) {
    if (qs.empty()) return true;
    const std::size_t n = x.size();
    switch (k) {
    case ConstraintKind::li: return chain(n, qs, std::less<>{}, false);
    case ConstraintKind::ld: return chain(n, qs, std::greater<>{}, false);
    case ConstraintKind::lni: return chain(n, qs, std::greater_equal<>{}, false);
    case ConstraintKind::lnd: return chain(n, qs, std::less_equal<>{}, false);
    case ConstraintKind::s_li: return chain(n, qs, std::less<>{}, true);
    case ConstraintKind::s_ld: return chain(n, qs, std::greater<>{}, true);
    case ConstraintKind::s_lni: return chain(n, qs, std::greater_equal<>{}, true);
    case ConstraintKind::s_lnd: return chain(n, qs, std::less_equal<>{}, true);
    case ConstraintKind::custom: break;
    }
    throw InternalConsistencyError("builtin_allows called on a custom constraint");
}

} // namespace

std::string to_string(ConstraintKind k) {
    for (const auto& kn : kNames) {
        if (kn.kind == k) return std::string(kn.name);
    }
    return "custom";
}

std::optional<ConstraintKind> parse_constraint_kind(std::string_view s) {
    for (const auto& kn : kNames) {
        if (kn.name == s) return kn.kind;
    }
    return std::nullopt;
}

Constraint::Constraint(ConstraintKind builtin) : kind_(builtin), name_(to_string(builtin)) {
    if (builtin == ConstraintKind::custom) throw InvalidInput("use Constraint::custom for custom constraints");
}

Constraint Constraint::custom(std::string name, Predicate predicate, bool prefix_closed) {
    Constraint c;
    c.kind_ = ConstraintKind::custom;
    c.name_ = std::move(name);
    c.predicate_ = std::move(predicate);
    c.prefix_closed_ = prefix_closed;
    return c;
}

bool Constraint::allows(const BitString& x, std::span<const BitString> qs) const {
    if (kind_ == ConstraintKind::custom) return predicate_(x, qs);
    return builtin_allows(kind_, x, qs);
}

bool constraint_allows(const Constraint& c, const BitString& x, std::span<const BitString> qs) {
    return c.allows(x, qs);
}

} // namespace qmono
