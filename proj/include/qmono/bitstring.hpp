#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

namespace qmono {

/// A finite string over {0, 1}. Stored as ASCII '0'/'1', which is also its
/// serialized form; the empty string is epsilon.
class BitString {
public:
    BitString() = default;

    /// Throws InvalidInput on any character other than '0' or '1'.
    explicit BitString(std::string_view text);

    static BitString zeros(std::size_t n) { return from_trusted(std::string(n, '0')); }
    static BitString ones(std::size_t n) { return from_trusted(std::string(n, '1')); }
    static BitString repeat(bool bit, std::size_t n) { return bit ? ones(n) : zeros(n); }

    std::size_t size() const noexcept { return bits_.size(); }
    bool empty() const noexcept { return bits_.empty(); }

    /// 0-based access; bit_at() in bitcodec is the 1-based checked variant.
    bool operator[](std::size_t i) const noexcept { return bits_[i] == '1'; }

    const std::string& str() const noexcept { return bits_; }

    bool all_zero() const noexcept { return bits_.find('1') == std::string::npos; }
    bool all_one() const noexcept { return bits_.find('0') == std::string::npos; }
    bool starts_with(const BitString& p) const noexcept { return bits_.starts_with(p.bits_); }

    BitString substr(std::size_t pos, std::size_t len = std::string::npos) const {
        return from_trusted(bits_.substr(pos, len));
    }

    BitString& push_back(bool bit) {
        bits_.push_back(bit ? '1' : '0');
        return *this;
    }
    BitString& operator+=(const BitString& rhs) {
        bits_ += rhs.bits_;
        return *this;
    }
    friend BitString operator+(BitString lhs, const BitString& rhs) { return lhs += rhs; }

    friend bool operator==(const BitString&, const BitString&) = default;
    /// Plain lexicographic character order; see shortlex_less for the
    /// length-first order used by rank.
    friend std::strong_ordering operator<=>(const BitString& a, const BitString& b) {
        return a.bits_ <=> b.bits_;
    }

    friend std::ostream& operator<<(std::ostream& os, const BitString& b) {
        return os << '"' << b.bits_ << '"';
    }

private:
    static BitString from_trusted(std::string s) {
        BitString b;
        b.bits_ = std::move(s);
        return b;
    }

    std::string bits_;
};

/// Length-then-lexicographic order (the enumeration order of Sigma*).
inline bool shortlex_less(const BitString& a, const BitString& b) noexcept {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.str() < b.str();
}

inline BitString operator""_bits(const char* s, std::size_t n) { return BitString(std::string_view(s, n)); }

} // namespace qmono

template <>
struct std::hash<qmono::BitString> {
    std::size_t operator()(const qmono::BitString& b) const noexcept {
        return std::hash<std::string>{}(b.str());
    }
};
