#include "qmono/padding.hpp"

#include <cmath>

#include "qmono/bitcodec.hpp"
#include "qmono/errors.hpp"
#include "qmono/np_encodings.hpp"
#include "qmono/oracle.hpp"

namespace qmono {

namespace {

const BitString& tautology_clause_code() {
    static const BitString code = multi_pair({"1"_bits, "0"_bits, "1"_bits});
    return code;
}

std::uint64_t isqrt(std::uint64_t v) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(v)));
    while (r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

} // namespace

BitString pad_3sat(const BitString& x) {
    if (!decode_formula(x)) return "10"_bits + x;
    return x + tautology_clause_code();
}

BitString pad_clique(const BitString& z) {
    const auto inst = decode_clique_instance(z);
    if (!inst) return "10"_bits + z;
    const Graph& g = inst->first;
    return encode_clique_instance(Graph{2 * g.n + 1, g.edges}, inst->second);
}

Padding padding_3sat() { return Padding{"3sat", pad_3sat, true, 12}; }
Padding padding_clique() { return Padding{"clique", pad_clique, true, 4}; }

Padding rank_shift_padding() {
    return Padding{"rank-shift",
                   [](const BitString& x) { return x.all_one() ? BitString::ones(x.size() + 1) : "0"_bits + x; },
                   true, 1};
}

BitString iterate_pad_to_window(const Padding& sigma, const BitString& q, std::uint64_t floor,
                                std::size_t* iterations) {
    if (q.size() > floor) {
        throw InvalidInput("iterate_pad_to_window: |q| = " + std::to_string(q.size()) + " already exceeds floor " +
                           std::to_string(floor));
    }
    BitString cur = q;
    std::size_t count = 0;
    while (cur.size() <= floor) {
        BitString next = sigma(cur);
        if (next.size() <= cur.size()) {
            throw ConfigurationError("padding " + sigma.name + " did not lengthen a string of length " +
                                     std::to_string(cur.size()));
        }
        cur = std::move(next);
        ++count;
    }
    if (iterations) *iterations = count;
    return cur;
}

SPadding normalize_s_padding(const SPadding& s, std::size_t probe_len) {
    if (!s.full_inverse) {
        throw ConfigurationError("normalize_s_padding: " + s.name +
                                 " has no full inverse, so the normal form cannot be inverted");
    }
    const auto corpus = strings_up_to(probe_len);
    for (const auto& x : corpus) {
        for (const auto& y : corpus) {
            const BitString z = s(x, y);
            const auto y2 = s.inverse_second(x, z);
            if (!y2 || *y2 != y) {
                throw ConfigurationError("declared second-argument inverse of " + s.name + " fails on (\"" + x.str() +
                                         "\", \"" + y.str() + "\")");
            }
            const auto xy = s.full_inverse(z);
            if (!xy || xy->first != x || xy->second != y) {
                throw ConfigurationError("declared full inverse of " + s.name + " fails on (\"" + x.str() + "\", \"" +
                                         y.str() + "\")");
            }
        }
    }

    const auto base = std::make_shared<const SPadding>(s);
    SPadding pi;
    pi.name = "normalized(" + s.name + ")";
    pi.honesty = s.honesty;
    pi.map = [base](const BitString& x, const BitString& y) {
        const BitString tail = BitString::zeros(base->honesty(x.size()) + 1);
        return (*base)(x, multi_pair({x, multi_pair({y, tail})}));
    };
    pi.full_inverse = [base](const BitString& z) -> std::optional<std::pair<BitString, BitString>> {
        const auto outer = base->full_inverse(z);
        if (!outer) return std::nullopt;
        const auto xv = multi_unpair(outer->second);
        if (!xv || xv->size() != 2 || (*xv)[0] != outer->first) return std::nullopt;
        const auto ypad = multi_unpair((*xv)[1]);
        if (!ypad || ypad->size() != 2) return std::nullopt;
        const BitString& pad = (*ypad)[1];
        if (pad.size() != base->honesty(outer->first.size()) + 1 || !pad.all_zero()) return std::nullopt;
        return std::make_pair(outer->first, (*ypad)[0]);
    };
    auto inv = pi.full_inverse;
    pi.inverse_second = [inv](const BitString& x, const BitString& z) -> std::optional<BitString> {
        const auto xy = inv(z);
        if (!xy || xy->first != x) return std::nullopt;
        return xy->second;
    };
    return pi;
}

Padding z_from_s(const SPadding& pi, const Polynomial& q) {
    for (std::uint64_t n = 0; n <= 64; ++n) {
        if (q(n) < n) {
            throw ConfigurationError("z_from_s: q(" + std::to_string(n) + ") = " + std::to_string(q(n)) +
                                     " is below n");
        }
    }
    const auto shared = std::make_shared<const SPadding>(pi);
    return Padding{"z(" + pi.name + ")",
                   [shared, q](const BitString& x) {
                       const std::uint64_t len = q(x.size());
                       if (len < x.size()) throw ConfigurationError("z_from_s: q(|x|) < |x|");
                       return (*shared)(x, BitString::zeros(len - x.size()));
                   },
                   true, std::nullopt};
}

bool tight_equivalent_member(const OracleHandle& a, const BitString& y) {
    if (y.empty() || y.all_one()) return false;
    return a(unrank_rank_at_length(y));
}

TightEquivalent make_tight_equivalent(const OracleHandle& a, const BitString& non_member) {
    if (a(non_member)) {
        throw ConfigurationError("make_tight_equivalent: \"" + non_member.str() + "\" is a member of the source set");
    }
    TightEquivalent t;
    t.b = OracleHandle([a](const BitString& y) { return tight_equivalent_member(a, y); },
                       {{"kind", "tight-equiv"}, {"inner", a.spec()}, {"nonMember", non_member.str()}});
    t.a_to_b = [](const BitString& x) { return at_length_with_rank_of(x, x.size() + 1); };
    t.b_to_a = [non_member](const BitString& y) {
        if (y.all_one()) return non_member;
        return unrank_rank_at_length(y);
    };
    t.sigma_b = rank_shift_padding();
    return t;
}

NonTightEquivalent make_non_tight_equivalent(const OracleHandle& a, bool a_is_finite, const BitString& non_member,
                                             const std::optional<BitString>& member) {
    if (a(non_member)) {
        throw ConfigurationError("make_non_tight_equivalent: \"" + non_member.str() +
                                 "\" is a member of the source set");
    }
    if (member && !a(*member)) {
        throw ConfigurationError("make_non_tight_equivalent: \"" + member->str() + "\" is not a member");
    }
    NonTightEquivalent r;
    if (a_is_finite) {
        const bool nonempty = member.has_value();
        r.b = OracleHandle(
            [nonempty](const BitString& y) {
                const std::uint64_t s = isqrt(y.size());
                return nonempty && s * s == y.size();
            },
            {{"kind", "non-tight-equiv"},
             {"finite", true},
             {"inner", a.spec()},
             {"nonMember", non_member.str()},
             {"member", member ? nlohmann::json(member->str()) : nlohmann::json(nullptr)}});
        r.a_to_b = [a, nonempty](const BitString& x) {
            return (nonempty && a(x)) ? BitString() : "00"_bits;
        };
        r.b_to_a = [nonempty, member, non_member](const BitString& y) {
            const std::uint64_t s = isqrt(y.size());
            return (nonempty && s * s == y.size()) ? *member : non_member;
        };
        return r;
    }
    // Infinite case: y of length n^2 is in b iff y = 0^(n^2-n) w with w in a.
    auto decode = [](const BitString& y) -> std::optional<BitString> {
        const std::uint64_t n = isqrt(y.size());
        if (n * n != y.size()) return std::nullopt;
        const BitString head = y.substr(0, y.size() - n);
        if (!head.all_zero()) return std::nullopt;
        return y.substr(y.size() - n);
    };
    r.b = OracleHandle(
        [a, decode](const BitString& y) {
            const auto w = decode(y);
            return w && a(*w);
        },
        {{"kind", "non-tight-equiv"}, {"finite", false}, {"inner", a.spec()}, {"nonMember", non_member.str()}});
    r.a_to_b = [](const BitString& x) { return BitString::zeros(x.size() * x.size() - x.size()) + x; };
    r.b_to_a = [decode, non_member](const BitString& y) {
        const auto w = decode(y);
        return w ? *w : non_member;
    };
    return r;
}

} // namespace qmono
