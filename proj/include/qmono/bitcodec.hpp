#pragma once

// Bit-string primitives: lexicographic rank, bit/prefix access, and the
// multiarity pairing codec <x1,...,xk> = 11 b(x1) 11 b(x2) ... 11 b(xk),
// where b doubles every bit (0 -> 00, 1 -> 01).

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "qmono/bitstring.hpp"

namespace qmono {

/// 1-based position of a string in the length-then-lexicographic order.
struct LexRank {
    std::uint64_t value = 1;
    friend auto operator<=>(const LexRank&, const LexRank&) = default;
};

/// Exact for |x| <= 63; longer strings throw InvalidInput (use rank_numeral).
LexRank lex_rank(const BitString& x);
/// Throws InvalidInput when r.value == 0.
BitString lex_unrank(LexRank r);

/// i-th symbol, 1-based. Throws InvalidInput unless 1 <= i <= |x|.
bool bit_at(const BitString& x, std::size_t i);
/// Length-i prefix. Throws InvalidInput unless i <= |x|.
BitString prefix_of(const BitString& x, std::size_t i);

BitString multi_pair(std::span<const BitString> parts);
inline BitString multi_pair(std::initializer_list<BitString> parts) {
    return multi_pair(std::span<const BitString>(parts.begin(), parts.size()));
}
/// Strict inverse of multi_pair; nullopt means "not an encoding".
std::optional<std::vector<BitString>> multi_unpair(const BitString& x);

/// Binary numeral without leading zeros; 0 maps to "0".
BitString to_binary(std::uint64_t n);
/// Inverse of to_binary on canonical numerals only (no leading zeros, fits
/// in 64 bits).
std::optional<std::uint64_t> from_binary(const BitString& x);

// Rank arithmetic carried out on the strings themselves, so it is exact at
// any length. rank_at_length(x) is x's 1-based position among strings of
// length |x|, i.e. value(x) + 1.

/// Binary numeral of lex_rank(x); equals "1" + x.
BitString rank_numeral(const BitString& x);
/// lex_unrank(rank_at_length(x)). For x = 1^L (rank 2^L) this is 0^L.
BitString unrank_rank_at_length(const BitString& x);
/// The string of the given length whose rank-at-length equals lex_rank(w).
/// Throws InvalidInput when lex_rank(w) > 2^length.
BitString at_length_with_rank_of(const BitString& w, std::size_t length);

} // namespace qmono
