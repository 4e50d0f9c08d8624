#pragma once

// Oracle-parameterized test languages L_D used by the diagonalization stages.
// Each decider consults d only at the positions its defining formula names.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qmono/oracle.hpp"

namespace qmono {

enum class TestLanguageKind {
    xor_pair,       // 0^i : (0^i in D) xor (1^i in D)
    double_sweep,   // 0^(4^k) : (mu1(k) in D) xor (mu2(k) in D)
    mirror,         // 0^(8^k) : 0^(5n/8) chi(0^(n-1)) .. chi(0^(7n/8)) in D
    sweep_down,     // 0^(4^k) : 0^(n/4) chi(0^(n-1)) .. chi(0^(3n/4)) in D
    sweep_up,       // 0^(4^k) : 0^(5n/4) chi(0^(n+1)) .. chi(0^(5n/4)) in D
    shift_up_4k1,   // 0^(4i), i >= 1 : 0^(4i+1) in D
    xor_4k2,        // 0^(4i+3), i >= 1 : (0^(4i+2) in D) xor (1^(4i+2) in D)
    shift_down_4k2, // 0^(4i+3), i >= 1 : 0^(4i+2) in D
    xor_4k1,        // 0^(4i), i >= 1 : (0^(4i+1) in D) xor (1^(4i+1) in D)
};

std::string to_string(TestLanguageKind k);
std::optional<TestLanguageKind> parse_test_language(const std::string& s);
std::vector<TestLanguageKind> all_test_languages();

bool test_language_decide(TestLanguageKind kind, const OracleHandle& d, const BitString& x);

/// n = base^k for some k >= 1.
bool is_positive_power(std::uint64_t n, std::uint64_t base);

/// 0^prefix followed by the membership bits of the given strings, in order.
BitString membership_word(const OracleHandle& d, std::size_t prefix, const std::vector<BitString>& probes);

/// 0^(n-1), 0^(n-2), ..., 0^(n-count)
std::vector<BitString> descending_zero_run(std::size_t n, std::size_t count);
/// 0^(n+1), 0^(n+2), ..., 0^(n+count)
std::vector<BitString> ascending_zero_run(std::size_t n, std::size_t count);

} // namespace qmono
