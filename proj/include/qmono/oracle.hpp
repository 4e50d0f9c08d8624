#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <set>
#include <utility>

#include "json.hpp"
#include "qmono/bitstring.hpp"

namespace qmono {

/// A characteristic function plus a JSON description of where it came from
/// (an extensional member list or a kind-tagged generator spec).
class OracleHandle {
public:
    using Decide = std::function<bool(const BitString&)>;

    OracleHandle() : decide_([](const BitString&) { return false; }), spec_({{"kind", "finite"}, {"members", nlohmann::json::array()}}) {}
    OracleHandle(Decide decide, nlohmann::json spec) : decide_(std::move(decide)), spec_(std::move(spec)) {}

    bool operator()(const BitString& x) const { return decide_(x); }
    bool decide(const BitString& x) const { return decide_(x); }
    const nlohmann::json& spec() const noexcept { return spec_; }

private:
    Decide decide_;
    nlohmann::json spec_;
};

OracleHandle finite_oracle(std::set<BitString> members);
OracleHandle empty_oracle();
OracleHandle all_strings_oracle();

/// Pseudorandom oracle: membership of x is one bit of a hash of (seed, x).
/// Stable across platforms and runs.
OracleHandle random_oracle(std::uint64_t seed);

/// Random finite oracle over strings of length <= max_len, each included
/// independently with probability 1/2. Drawn from std::mt19937_64(seed).
OracleHandle random_finite_oracle(std::uint64_t seed, std::size_t max_len);

std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// All strings of length exactly n, in lexicographic order.
std::vector<BitString> strings_of_length(std::size_t n);
/// All strings of length <= n, in length-then-lexicographic order.
std::vector<BitString> strings_up_to(std::size_t n);

} // namespace qmono
