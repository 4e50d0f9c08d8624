#include "qmono/cylinder.hpp"

#include <memory>

#include "qmono/bitcodec.hpp"
#include "qmono/errors.hpp"

namespace qmono {

namespace {

std::optional<std::pair<BitString, BitString>> as_pair(const BitString& x) {
    const auto parts = multi_unpair(x);
    if (!parts || parts->size() != 2) return std::nullopt;
    return std::make_pair((*parts)[0], (*parts)[1]);
}

} // namespace

Cylinder make_cylinder(const OracleHandle& a, const BitString& non_member) {
    if (a(non_member)) throw ConfigurationError("make_cylinder: \"" + non_member.str() + "\" is a member of A");
    Cylinder c;
    c.l = OracleHandle(
        [a](const BitString& z) {
            const auto uv = as_pair(z);
            return uv && a(uv->first);
        },
        {{"kind", "cylinder"}, {"inner", a.spec()}, {"nonMember", non_member.str()}});

    c.s.name = "cylinder-pad";
    c.s.honesty = Polynomial::linear(1, 0);
    c.s.map = [non_member](const BitString& x, const BitString& y) {
        if (const auto uv = as_pair(x)) return multi_pair({uv->first, multi_pair({uv->second, x, y})});
        return multi_pair({non_member, multi_pair({x, y})});
    };
    c.s.full_inverse = [non_member](const BitString& z) -> std::optional<std::pair<BitString, BitString>> {
        const auto outer = as_pair(z);
        if (!outer) return std::nullopt;
        const auto inner = multi_unpair(outer->second);
        if (!inner) return std::nullopt;
        if (inner->size() == 3) {
            const BitString& x = (*inner)[1];
            const auto uv = as_pair(x);
            if (!uv || uv->first != outer->first || uv->second != (*inner)[0]) return std::nullopt;
            return std::make_pair(x, (*inner)[2]);
        }
        if (inner->size() == 2) {
            const BitString& x = (*inner)[0];
            if (outer->first != non_member || as_pair(x)) return std::nullopt;
            return std::make_pair(x, (*inner)[1]);
        }
        return std::nullopt;
    };
    auto inv = c.s.full_inverse;
    c.s.inverse_second = [inv](const BitString& x, const BitString& z) -> std::optional<BitString> {
        const auto xy = inv(z);
        if (!xy || xy->first != x) return std::nullopt;
        return xy->second;
    };
    return c;
}

NondetMachine cylinder_membership_machine(const Cylinder& c) {
    NondetMachine m;
    m.name = "cylinder-guess";
    m.guess_bound = Polynomial::constant(1);
    auto l = c.l;
    m.check = [l](const BitString& x, const BitString& guess) { return guess.size() <= 1 && l(x); };
    return m;
}

NondetMachine self_witnessing_lift(const NondetMachine& n, const SPadding& pi, const Polynomial& p,
                                   const Polynomial& q) {
    if (!pi.full_inverse) throw ConfigurationError("self_witnessing_lift: the padding must be fully invertible");
    const auto base = std::make_shared<const NondetMachine>(n);
    const auto pad = std::make_shared<const SPadding>(pi);
    NondetMachine lifted;
    lifted.name = "lift(" + n.name + ")";
    lifted.guess_bound = Polynomial::compose(q, Polynomial::linear(1, 0) + p);
    lifted.check = [base, pad, p](const BitString& x, const BitString& w) {
        const auto xy = pad->full_inverse(w);
        if (!xy || xy->first != x) return false;
        if ((*pad)(xy->first, xy->second) != w) {
            throw ConfigurationError("self_witnessing_lift: full inverse of " + pad->name +
                                     " disagrees with the map on \"" + w.str() + "\"");
        }
        return xy->second.size() <= p(x.size()) && base->check(x, xy->second);
    };
    lifted.candidates = [pad, p](const BitString& x) {
        std::vector<BitString> out;
        for (const auto& w : strings_up_to(p(x.size()))) out.push_back((*pad)(x, w));
        return out;
    };
    return lifted;
}

} // namespace qmono
