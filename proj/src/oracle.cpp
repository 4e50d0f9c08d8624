#include "qmono/oracle.hpp"

#include <random>

#include "qmono/errors.hpp"

namespace qmono {

OracleHandle finite_oracle(std::set<BitString> members) {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& m : members) list.push_back(m.str());
    auto shared = std::make_shared<const std::set<BitString>>(std::move(members));
    return OracleHandle([shared](const BitString& x) { return shared->count(x) != 0; },
                        {{"kind", "finite"}, {"members", std::move(list)}});
}

OracleHandle empty_oracle() { return finite_oracle({}); }

OracleHandle all_strings_oracle() {
    return OracleHandle([](const BitString&) { return true; }, {{"kind", "all"}});
}

std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

OracleHandle random_oracle(std::uint64_t seed) {
    return OracleHandle(
        [seed](const BitString& x) {
            // FNV-1a over the symbols, with the length folded in so that
            // prefixes of zeros do not collide.
            std::uint64_t h = 0xcbf29ce484222325ULL ^ splitmix64(seed);
            for (char c : x.str()) {
                h ^= static_cast<unsigned char>(c);
                h *= 0x100000001b3ULL;
            }
            h ^= x.size();
            return (splitmix64(h) & 1u) != 0;
        },
        {{"kind", "random"}, {"seed", seed}});
}

OracleHandle random_finite_oracle(std::uint64_t seed, std::size_t max_len) {
    std::mt19937_64 rng(seed);
    std::set<BitString> members;
    for (const auto& s : strings_up_to(max_len)) {
        if (rng() & 1u) members.insert(s);
    }
    return finite_oracle(std::move(members));
}

std::vector<BitString> strings_of_length(std::size_t n) {
    if (n >= 24) throw ResourceError("refusing to enumerate all strings of length " + std::to_string(n));
    std::vector<BitString> out;
    out.reserve(std::size_t{1} << n);
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
        std::string s(n, '0');
        for (std::size_t i = 0; i < n; ++i) {
            if ((v >> (n - 1 - i)) & 1u) s[i] = '1';
        }
        out.emplace_back(s);
    }
    return out;
}

std::vector<BitString> strings_up_to(std::size_t n) {
    std::vector<BitString> out;
    for (std::size_t len = 0; len <= n; ++len) {
        auto layer = strings_of_length(len);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

} // namespace qmono
