#include "qmono/polynomial.hpp"

#include <algorithm>
#include <limits>

#include "qmono/errors.hpp"

namespace qmono {

namespace {
constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) noexcept { return a > kMax - b ? kMax : a + b; }

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) noexcept {
    if (a == 0 || b == 0) return 0;
    return a > kMax / b ? kMax : a * b;
}

std::uint64_t sat_pow(std::uint64_t base, unsigned e) noexcept {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < e; ++i) r = sat_mul(r, base);
    return r;
}

Polynomial::Polynomial(std::vector<std::uint64_t> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::exponent_form(unsigned i) {
    if (i == 0) throw InvalidInput("exponent must be positive");
    std::vector<std::uint64_t> c(i + 1, 0);
    c[0] = i;
    c[i] += 1;
    return Polynomial(std::move(c));
}

std::uint64_t Polynomial::operator()(std::uint64_t n) const {
    std::uint64_t acc = 0;
    for (std::size_t j = coeffs_.size(); j-- > 0;) acc = sat_add(sat_mul(acc, n), coeffs_[j]);
    return acc;
}

std::string Polynomial::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (std::size_t j = coeffs_.size(); j-- > 0;) {
        const auto c = coeffs_[j];
        if (c == 0) continue;
        if (!out.empty()) out += "+";
        if (j == 0) {
            out += std::to_string(c);
            continue;
        }
        if (c != 1) out += std::to_string(c) + "*";
        out += "n";
        if (j > 1) out += "^" + std::to_string(j);
    }
    return out;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<std::uint64_t> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t j = 0; j < a.coeffs_.size(); ++j) c[j] = sat_add(c[j], a.coeffs_[j]);
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[j] = sat_add(c[j], b.coeffs_[j]);
    return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.coeffs_.empty() || b.coeffs_.empty()) return Polynomial();
    std::vector<std::uint64_t> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] = sat_add(c[i + j], sat_mul(a.coeffs_[i], b.coeffs_[j]));
    }
    return Polynomial(std::move(c));
}

Polynomial Polynomial::compose(const Polynomial& outer, const Polynomial& inner) {
    Polynomial acc;
    for (std::size_t j = outer.coeffs_.size(); j-- > 0;) acc = acc * inner + Polynomial::constant(outer.coeffs_[j]);
    return acc;
}

} // namespace qmono
