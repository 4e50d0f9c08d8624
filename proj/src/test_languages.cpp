#include "qmono/test_languages.hpp"

#include <array>

namespace qmono {

namespace {

constexpr std::array<std::pair<TestLanguageKind, const char*>, 9> kNames = {{
    {TestLanguageKind::xor_pair, "xor-pair"},
    {TestLanguageKind::double_sweep, "double-sweep"},
    {TestLanguageKind::mirror, "mirror"},
    {TestLanguageKind::sweep_down, "sweep-down"},
    {TestLanguageKind::sweep_up, "sweep-up"},
    {TestLanguageKind::shift_up_4k1, "shift-up-4k1"},
    {TestLanguageKind::xor_4k2, "xor-4k2"},
    {TestLanguageKind::shift_down_4k2, "shift-down-4k2"},
    {TestLanguageKind::xor_4k1, "xor-4k1"},
}};

} // namespace

std::string to_string(TestLanguageKind k) {
    for (const auto& [kind, name] : kNames) {
        if (kind == k) return name;
    }
    return "?";
}

std::optional<TestLanguageKind> parse_test_language(const std::string& s) {
    for (const auto& [kind, name] : kNames) {
        if (s == name) return kind;
    }
    return std::nullopt;
}

std::vector<TestLanguageKind> all_test_languages() {
    std::vector<TestLanguageKind> out;
    for (const auto& kn : kNames) out.push_back(kn.first);
    return out;
}

bool is_positive_power(std::uint64_t n, std::uint64_t base) {
    if (n < base) return false;
    while (n % base == 0) n /= base;
    return n == 1;
}

BitString membership_word(const OracleHandle& d, std::size_t prefix, const std::vector<BitString>& probes) {
    BitString w = BitString::zeros(prefix);
    for (const auto& p : probes) w.push_back(d(p));
    return w;
}

std::vector<BitString> descending_zero_run(std::size_t n, std::size_t count) {
    std::vector<BitString> out;
    for (std::size_t j = 1; j <= count; ++j) out.push_back(BitString::zeros(n - j));
    return out;
}

std::vector<BitString> ascending_zero_run(std::size_t n, std::size_t count) {
    std::vector<BitString> out;
    for (std::size_t j = 1; j <= count; ++j) out.push_back(BitString::zeros(n + j));
    return out;
}

bool test_language_decide(TestLanguageKind kind, const OracleHandle& d, const BitString& x) {
    if (!x.all_zero()) return false;
    const std::size_t n = x.size();
    switch (kind) {
    case TestLanguageKind::xor_pair:
        return d(BitString::zeros(n)) != d(BitString::ones(n));
    case TestLanguageKind::double_sweep: {
        if (!is_positive_power(n, 4)) return false;
        const BitString mu1 = membership_word(d, n / 4, descending_zero_run(n, n / 4));
        const BitString mu2 = membership_word(d, 5 * n / 4, ascending_zero_run(n, n / 4));
        return d(mu1) != d(mu2);
    }
    case TestLanguageKind::mirror:
        if (!is_positive_power(n, 8)) return false;
        return d(membership_word(d, 5 * n / 8, descending_zero_run(n, n / 8)));
    case TestLanguageKind::sweep_down:
        if (!is_positive_power(n, 4)) return false;
        return d(membership_word(d, n / 4, descending_zero_run(n, n / 4)));
    case TestLanguageKind::sweep_up:
        if (!is_positive_power(n, 4)) return false;
        return d(membership_word(d, 5 * n / 4, ascending_zero_run(n, n / 4)));
    case TestLanguageKind::shift_up_4k1:
        if (n < 4 || n % 4 != 0) return false;
        return d(BitString::zeros(n + 1));
    case TestLanguageKind::xor_4k2:
        if (n < 7 || n % 4 != 3) return false;
        return d(BitString::zeros(n - 1)) != d(BitString::ones(n - 1));
    case TestLanguageKind::shift_down_4k2:
        if (n < 7 || n % 4 != 3) return false;
        return d(BitString::zeros(n - 1));
    case TestLanguageKind::xor_4k1:
        if (n < 4 || n % 4 != 0) return false;
        return d(BitString::zeros(n + 1)) != d(BitString::ones(n + 1));
    }
    return false;
}

} // namespace qmono
