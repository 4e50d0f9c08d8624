#include "qmono/bitcodec.hpp"

#include <string>

#include "qmono/errors.hpp"

namespace qmono {

LexRank lex_rank(const BitString& x) {
    if (x.size() >= 64) {
        throw InvalidInput("lex_rank: string of length " + std::to_string(x.size()) +
                           " does not fit a 64-bit rank");
    }
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < x.size(); ++i) r = (r << 1) | (x[i] ? 1u : 0u);
    return LexRank{r};
}

BitString lex_unrank(LexRank r) {
    if (r.value == 0) throw InvalidInput("lex_unrank: rank must be >= 1");
    int top = 63;
    while (((r.value >> top) & 1u) == 0) --top;
    BitString out;
    for (int i = top - 1; i >= 0; --i) out.push_back(((r.value >> i) & 1u) != 0);
    return out;
}

bool bit_at(const BitString& x, std::size_t i) {
    if (i < 1 || i > x.size()) {
        throw InvalidInput("bit_at: index " + std::to_string(i) + " outside 1.." + std::to_string(x.size()));
    }
    return x[i - 1];
}

BitString prefix_of(const BitString& x, std::size_t i) {
    if (i > x.size()) {
        throw InvalidInput("prefix_of: index " + std::to_string(i) + " outside 0.." + std::to_string(x.size()));
    }
    return x.substr(0, i);
}

BitString multi_pair(std::span<const BitString> parts) {
    std::string out;
    std::size_t total = 0;
    for (const auto& p : parts) total += 2 * (1 + p.size());
    out.reserve(total);
    for (const auto& p : parts) {
        out += "11";
        for (char c : p.str()) {
            out += '0';
            out += c;
        }
    }
    return BitString(out);
}

std::optional<std::vector<BitString>> multi_unpair(const BitString& x) {
    const std::string& s = x.str();
    std::vector<BitString> parts;
    if (s.size() % 2 != 0) return std::nullopt;
    std::string current;
    bool open = false;
    for (std::size_t i = 0; i < s.size(); i += 2) {
        const char a = s[i];
        const char b = s[i + 1];
        if (a == '1' && b == '1') {
            if (open) parts.emplace_back(current);
            current.clear();
            open = true;
        } else if (a == '0' && open) {
            current += b;
        } else {
            return std::nullopt; // "10" block, or payload before the first separator
        }
    }
    if (open) parts.emplace_back(current);
    return parts;
}

BitString to_binary(std::uint64_t n) {
    if (n == 0) return BitString("0");
    std::string out;
    while (n != 0) {
        out.insert(out.begin(), (n & 1u) ? '1' : '0');
        n >>= 1;
    }
    return BitString(out);
}

std::optional<std::uint64_t> from_binary(const BitString& x) {
    if (x.empty() || x.size() > 64) return std::nullopt;
    if (x.size() > 1 && !x[0]) return std::nullopt;
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < x.size(); ++i) v = (v << 1) | (x[i] ? 1u : 0u);
    return v;
}

BitString rank_numeral(const BitString& x) { return BitString("1") + x; }

namespace {

std::string increment(std::string s) {
    for (std::size_t i = s.size(); i-- > 0;) {
        if (s[i] == '0') {
            s[i] = '1';
            return s;
        }
        s[i] = '0';
    }
    return "1" + s;
}

// s must be nonzero.
std::string decrement(std::string s) {
    for (std::size_t i = s.size(); i-- > 0;) {
        if (s[i] == '1') {
            s[i] = '0';
            return s;
        }
        s[i] = '1';
    }
    return s;
}

std::string strip_leading_zeros(const std::string& s) {
    const auto pos = s.find('1');
    return pos == std::string::npos ? std::string{} : s.substr(pos);
}

} // namespace

BitString unrank_rank_at_length(const BitString& x) {
    // binary(value(x) + 1) with its leading 1 removed
    const std::string numeral = strip_leading_zeros(increment(x.str()));
    return BitString(std::string_view(numeral).substr(1));
}

BitString at_length_with_rank_of(const BitString& w, std::size_t length) {
    // value(y) + 1 = rank(w)  =>  y = rank_numeral(w) - 1
    std::string y = strip_leading_zeros(decrement(rank_numeral(w).str()));
    if (y.size() > length) {
        throw InvalidInput("at_length_with_rank_of: rank of a length-" + std::to_string(w.size()) +
                           " string exceeds 2^" + std::to_string(length));
    }
    y.insert(0, length - y.size(), '0');
    return BitString(y);
}

} // namespace qmono
