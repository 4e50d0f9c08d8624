#pragma once

// Nondeterministic machines as guess-and-check pairs, with exhaustive
// witness enumeration.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "qmono/bitstring.hpp"
#include "qmono/polynomial.hpp"

namespace qmono {

struct NondetMachine {
    std::string name;
    /// Accepting guesses have length <= guess_bound(|x|).
    Polynomial guess_bound;
    std::function<bool(const BitString& x, const BitString& guess)> check;
    /// Optional: a finite list that contains every accepting guess on x. When
    /// absent, witnesses() scans all strings up to the guess bound.
    std::function<std::vector<BitString>(const BitString& x)> candidates;
};

inline constexpr std::size_t kDefaultGuessCap = std::size_t{1} << 20;

/// All accepting guesses, in length-then-lexicographic order. Throws
/// ResourceError when the guess space exceeds the cap.
std::vector<BitString> witnesses(const NondetMachine& n, const BitString& x, std::size_t cap = kDefaultGuessCap);
std::uint64_t count_accepting(const NondetMachine& n, const BitString& x, std::size_t cap = kDefaultGuessCap);
bool nondet_accepts(const NondetMachine& n, const BitString& x, std::size_t cap = kDefaultGuessCap);

/// Guesses one bit per distinct variable (in increasing index order) of the
/// decoded formula and checks the clauses. Malformed input has no witness.
NondetMachine brute_force_3sat_machine();

} // namespace qmono
