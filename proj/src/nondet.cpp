#include "qmono/nondet.hpp"

#include <algorithm>
#include <optional>

#include "qmono/errors.hpp"
#include "qmono/np_encodings.hpp"
#include "qmono/oracle.hpp"

namespace qmono {

std::vector<BitString> witnesses(const NondetMachine& n, const BitString& x, std::size_t cap) {
    const std::uint64_t bound = n.guess_bound(x.size());
    std::vector<BitString> space;
    if (n.candidates) {
        space = n.candidates(x);
        if (space.size() > cap) throw ResourceError("guess space of " + n.name + " exceeds cap");
        for (const auto& g : space) {
            if (g.size() > bound) {
                throw ConfigurationError(n.name + ": candidate guess of length " + std::to_string(g.size()) +
                                         " exceeds the guess bound " + std::to_string(bound));
            }
        }
    } else {
        if (bound >= 62 || (std::uint64_t{2} << bound) - 1 > cap) {
            throw ResourceError(n.name + ": guess space 2^(" + std::to_string(bound) + "+1)-1 exceeds cap " +
                                std::to_string(cap));
        }
        space = strings_up_to(bound);
    }
    std::vector<BitString> out;
    for (const auto& g : space) {
        if (n.check(x, g)) out.push_back(g);
    }
    std::sort(out.begin(), out.end(), shortlex_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::uint64_t count_accepting(const NondetMachine& n, const BitString& x, std::size_t cap) {
    return witnesses(n, x, cap).size();
}

bool nondet_accepts(const NondetMachine& n, const BitString& x, std::size_t cap) {
    return !witnesses(n, x, cap).empty();
}

namespace {

std::optional<std::vector<std::uint64_t>> distinct_vars(const BitString& x) {
    const auto f = decode_formula(x);
    if (!f) return std::nullopt;
    std::vector<std::uint64_t> vars;
    for (const auto& c : f->clauses) {
        for (const auto& l : c) vars.push_back(l.var);
    }
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    return vars;
}

} // namespace

NondetMachine brute_force_3sat_machine() {
    NondetMachine m;
    m.name = "3sat-guess";
    m.guess_bound = Polynomial::linear(1, 0);
    m.check = [](const BitString& x, const BitString& guess) {
        const auto f = decode_formula(x);
        const auto vars = distinct_vars(x);
        if (!vars || guess.size() != vars->size()) return false;
        for (const auto& c : f->clauses) {
            bool any = false;
            for (const auto& l : c) {
                const auto slot = std::lower_bound(vars->begin(), vars->end(), l.var) - vars->begin();
                if (guess[static_cast<std::size_t>(slot)] != l.neg) any = true;
            }
            if (!any) return false;
        }
        return true;
    };
    // only assignments of exactly the right width can succeed
    m.candidates = [](const BitString& x) {
        const auto vars = distinct_vars(x);
        if (!vars) return std::vector<BitString>{};
        if (vars->size() > 20) throw ResourceError("3sat-guess: more than 20 variables");
        return strings_of_length(vars->size());
    };
    return m;
}

} // namespace qmono
