#pragma once

// Length-increasing, membership-preserving maps: tight paddings for 3-SAT and
// CLIQUE, the rank-shift padding of the tight-equivalent construction,
// two-argument S-paddings with their normal form, and the two constructions
// that turn an arbitrary set into a many-one equivalent one.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>

#include "qmono/bitstring.hpp"
#include "qmono/oracle.hpp"
#include "qmono/polynomial.hpp"

namespace qmono {

using StringMap = std::function<BitString(const BitString&)>;

/// One-argument padding. When `slack` is set the map is tight:
/// |x| < |map(x)| <= |x| + *slack for every x.
struct Padding {
    std::string name;
    StringMap map;
    bool injective = false;
    std::optional<std::size_t> slack;

    BitString operator()(const BitString& x) const { return map(x); }
};

/// Malformed x -> "10"+x. Well-formed x -> x with the clause (x1 v -x1 v x1)
/// appended, which adds exactly 12 bits.
BitString pad_3sat(const BitString& x);
/// Malformed z -> "10"+z. A clique instance (G, m) -> (G', m) where G' has
/// n+1 extra isolated vertices; this adds exactly 4 bits.
BitString pad_clique(const BitString& z);

Padding padding_3sat();
Padding padding_clique();
/// 1^n -> 1^(n+1), every other x -> "0"+x. Slack 1; preserves membership in
/// every set built by make_tight_equivalent.
Padding rank_shift_padding();

/// Applies sigma until the result is longer than floor. Requires |q| <= floor.
/// Throws ConfigurationError if sigma fails to lengthen its argument.
BitString iterate_pad_to_window(const Padding& sigma, const BitString& q, std::uint64_t floor,
                                std::size_t* iterations = nullptr);

/// Two-argument padding s(x, y): membership follows x, y is recoverable.
struct SPadding {
    std::string name;
    std::function<BitString(const BitString&, const BitString&)> map;
    std::function<std::optional<BitString>(const BitString& x, const BitString& z)> inverse_second;
    /// Declared: |x| + |y| <= honesty(|map(x, y)|).
    Polynomial honesty;
    /// Optional: recovers (x, y) from map(x, y); nullopt off the image.
    std::function<std::optional<std::pair<BitString, BitString>>(const BitString& z)> full_inverse;

    BitString operator()(const BitString& x, const BitString& y) const { return map(x, y); }
};

/// pi(x, y) = s(x, <x, <y, 0^(q(|x|)+1)>>) with q the declared honesty bound.
/// The result is one-to-one, fully invertible and always longer than x.
/// Requires s to carry a full inverse; declared inverses are probed on all
/// |x|, |y| <= probe_len and a mismatch raises ConfigurationError.
SPadding normalize_s_padding(const SPadding& s, std::size_t probe_len = 2);

/// rho(x) = pi(x, 0^(q(|x|) - |x|)). Injective and length-increasing but with
/// no constant slack. q(n) < n raises ConfigurationError.
Padding z_from_s(const SPadding& pi, const Polynomial& q);

/// Membership in the tight-equivalent set built from a: y is in iff |y| > 0,
/// y is not all ones, and the string whose rank equals y's rank among
/// strings of length |y| lies in a.
bool tight_equivalent_member(const OracleHandle& a, const BitString& y);

struct TightEquivalent {
    OracleHandle b;
    StringMap a_to_b;
    StringMap b_to_a;
    Padding sigma_b;
};

/// non_member must lie outside a; this is checked.
TightEquivalent make_tight_equivalent(const OracleHandle& a, const BitString& non_member);

struct NonTightEquivalent {
    OracleHandle b;
    StringMap a_to_b;
    StringMap b_to_a;
};

/// Infinite a: b holds 0^(n^2-n) w for each w in a of length n.
/// Finite a: b is every string of square length (empty when a is empty, in
/// which case `member` may be omitted).
NonTightEquivalent make_non_tight_equivalent(const OracleHandle& a, bool a_is_finite, const BitString& non_member,
                                             const std::optional<BitString>& member);

} // namespace qmono
