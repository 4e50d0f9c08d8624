#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qmono {

/// Polynomial with nonnegative integer coefficients, coeffs[j] multiplies n^j.
/// Evaluation saturates at UINT64_MAX instead of wrapping, so huge budgets
/// simply read as "unbounded".
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<std::uint64_t> coeffs);

    static Polynomial constant(std::uint64_t c) { return Polynomial({c}); }
    static Polynomial linear(std::uint64_t a, std::uint64_t b) { return Polynomial({b, a}); }
    /// n^i + i
    static Polynomial exponent_form(unsigned i);

    std::uint64_t operator()(std::uint64_t n) const;

    const std::vector<std::uint64_t>& coeffs() const noexcept { return coeffs_; }
    std::string to_string() const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    /// outer(inner(n))
    static Polynomial compose(const Polynomial& outer, const Polynomial& inner);
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    std::vector<std::uint64_t> coeffs_; // no trailing zeros
};

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) noexcept;
std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) noexcept;
std::uint64_t sat_pow(std::uint64_t base, unsigned e) noexcept;

/// Step ceiling of a machine. Machines of the diagonal enumeration carry an
/// exponent i and the bound n^i + i; derived machines may carry any polynomial.
struct StepBudget {
    Polynomial bound;
    std::optional<unsigned> exponent;

    static StepBudget exponent_form(unsigned i) { return {Polynomial::exponent_form(i), i}; }
    static StepBudget of(Polynomial p) { return {std::move(p), std::nullopt}; }

    std::uint64_t operator()(std::uint64_t n) const { return bound(n); }
};

} // namespace qmono
