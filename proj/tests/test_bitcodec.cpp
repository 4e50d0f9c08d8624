#include <algorithm>
#include <deque>
#include <map>

#include "doctest.h"
#include "qmono/bitcodec.hpp"
#include "qmono/errors.hpp"
#include "qmono/oracle.hpp"

using namespace qmono;

namespace {

// Independent enumeration of Sigma* in length-then-lexicographic order by
// breadth-first expansion: children of w are w0, w1.
std::vector<std::string> bfs_order(std::size_t count) {
    std::vector<std::string> out;
    std::deque<std::string> q{""};
    while (out.size() < count) {
        auto w = q.front();
        q.pop_front();
        out.push_back(w);
        q.push_back(w + "0");
        q.push_back(w + "1");
    }
    return out;
}

// Pair encoding written directly from the layout 11 b(x1) 11 b(x2) ...
std::string pair_by_layout(const std::vector<std::string>& parts) {
    std::string out;
    for (const auto& p : parts) {
        out += "11";
        for (char c : p) out += (c == '0') ? "00" : "01";
    }
    return out;
}

void tuples_up_to(std::size_t k_max, std::size_t total_max, std::vector<std::vector<BitString>>& out) {
    std::vector<std::vector<BitString>> frontier{{}};
    out.push_back({});
    for (std::size_t k = 1; k <= k_max; ++k) {
        std::vector<std::vector<BitString>> next;
        for (const auto& t : frontier) {
            std::size_t used = 0;
            for (const auto& s : t) used += s.size();
            for (const auto& s : strings_up_to(total_max - used)) {
                auto u = t;
                u.push_back(s);
                next.push_back(u);
            }
        }
        out.insert(out.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
}

} // namespace

TEST_CASE("lex_rank and lex_unrank on fixed values") {
    CHECK(lex_rank(BitString()).value == 1);
    CHECK(lex_rank("0"_bits).value == 2);
    CHECK(lex_rank("00"_bits).value == 4);
    CHECK(lex_rank("11"_bits).value == 7);
    CHECK(lex_unrank({1}) == BitString());
    CHECK(lex_unrank({3}) == "1"_bits);
    CHECK(lex_unrank({8}) == "000"_bits);
    CHECK_THROWS_AS(lex_unrank({0}), InvalidInput);
    CHECK_THROWS_AS(lex_rank(BitString::zeros(64)), InvalidInput);
}

TEST_CASE("rank agrees with breadth-first enumeration up to length 12") {
    const auto order = bfs_order((std::size_t{1} << 13) - 1);
    for (std::size_t i = 0; i < order.size(); ++i) {
        const BitString x(order[i]);
        REQUIRE(lex_rank(x).value == i + 1);
        REQUIRE(lex_unrank({i + 1}) == x);
    }
}

TEST_CASE("bit_at and prefix_of") {
    CHECK(bit_at("011"_bits, 1) == false);
    CHECK(bit_at("011"_bits, 3) == true);
    CHECK(bit_at("1"_bits, 1) == true);
    CHECK_THROWS_AS(bit_at("011"_bits, 0), InvalidInput);
    CHECK_THROWS_AS(bit_at("011"_bits, 4), InvalidInput);
    CHECK(prefix_of("011"_bits, 0) == BitString());
    CHECK(prefix_of("011"_bits, 2) == "01"_bits);
    CHECK(prefix_of("011"_bits, 3) == "011"_bits);
    CHECK_THROWS_AS(prefix_of("011"_bits, 4), InvalidInput);
}

TEST_CASE("multi_pair fixed values") {
    CHECK(multi_pair({}) == BitString());
    CHECK(multi_pair({"0"_bits}) == "1100"_bits);
    CHECK(multi_pair({"1"_bits, "0"_bits}) == "11011100"_bits);
    CHECK(*multi_unpair("1100"_bits) == std::vector<BitString>{"0"_bits});
    CHECK(multi_unpair(BitString())->empty());
    CHECK_FALSE(multi_unpair("10"_bits).has_value());
    CHECK_FALSE(multi_unpair("110"_bits).has_value());   // odd length
    CHECK_FALSE(multi_unpair("0011"_bits).has_value());  // payload before a separator
    CHECK_FALSE(multi_unpair("1110"_bits).has_value());  // bad block after a separator
}

TEST_CASE("pairing law, round trip and layout agreement over k <= 4, total length <= 10") {
    std::vector<std::vector<BitString>> corpus;
    tuples_up_to(4, 10, corpus);
    std::map<std::string, std::size_t> seen;
    for (const auto& t : corpus) {
        const BitString enc = multi_pair(t);
        std::size_t total = 0;
        std::vector<std::string> raw;
        for (const auto& s : t) {
            total += s.size();
            raw.push_back(s.str());
        }
        REQUIRE(enc.size() == 2 * (t.size() + total));
        REQUIRE(enc.str() == pair_by_layout(raw));
        const auto back = multi_unpair(enc);
        REQUIRE(back.has_value());
        REQUIRE(*back == t);
        REQUIRE(seen.emplace(enc.str(), seen.size()).second);
    }
}

TEST_CASE("strings starting 10 are never encodings") {
    for (const auto& s : strings_up_to(8)) {
        REQUIRE_FALSE(multi_unpair("10"_bits + s).has_value());
    }
}

TEST_CASE("multi_unpair accepts exactly the image") {
    // Every even-length string decodes iff re-encoding reproduces it.
    for (const auto& s : strings_up_to(12)) {
        const auto d = multi_unpair(s);
        if (d) REQUIRE(multi_pair(*d) == s);
    }
}

TEST_CASE("binary numerals") {
    CHECK(to_binary(0) == "0"_bits);
    CHECK(to_binary(5) == "101"_bits);
    CHECK(*from_binary("101"_bits) == 5);
    CHECK_FALSE(from_binary("0101"_bits).has_value());
    CHECK_FALSE(from_binary(BitString()).has_value());
    for (std::uint64_t n = 0; n < 300; ++n) REQUIRE(*from_binary(to_binary(n)) == n);
}

TEST_CASE("string rank arithmetic matches the numeric rank") {
    for (const auto& x : strings_up_to(9)) {
        const std::uint64_t r_at_len = [&] {
            std::uint64_t v = 0;
            for (std::size_t i = 0; i < x.size(); ++i) v = 2 * v + (x[i] ? 1 : 0);
            return v + 1;
        }();
        REQUIRE(unrank_rank_at_length(x) == lex_unrank({r_at_len}));
        REQUIRE(rank_numeral(x) == to_binary(lex_rank(x).value));
        for (std::size_t len = x.size() + 1; len <= x.size() + 2; ++len) {
            const BitString y = at_length_with_rank_of(x, len);
            REQUIRE(y.size() == len);
            REQUIRE(unrank_rank_at_length(y) == x);
        }
    }
    CHECK(at_length_with_rank_of(BitString(), 3) == "000"_bits);
    CHECK(at_length_with_rank_of("000"_bits, 3) == "111"_bits); // rank 8 = 2^3
    CHECK_THROWS_AS(at_length_with_rank_of("0000"_bits, 3), InvalidInput);
    CHECK(unrank_rank_at_length("111"_bits) == "000"_bits);
}
