#include "qmono/deciders.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "qmono/errors.hpp"

namespace qmono {

bool sat3_decide(const ThreeCnf& f, std::size_t var_cap) {
    std::vector<std::uint64_t> vars;
    for (const auto& c : f.clauses) {
        for (const auto& l : c) vars.push_back(l.var);
    }
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    if (vars.size() > var_cap) {
        throw ResourceError("3-SAT brute force: " + std::to_string(vars.size()) + " variables exceeds cap " +
                            std::to_string(var_cap));
    }
    auto slot = [&](std::uint64_t v) {
        return static_cast<std::size_t>(std::lower_bound(vars.begin(), vars.end(), v) - vars.begin());
    };
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << vars.size()); ++a) {
        bool all = true;
        for (const auto& c : f.clauses) {
            bool any = false;
            for (const auto& l : c) {
                const bool value = ((a >> slot(l.var)) & 1u) != 0;
                if (value != l.neg) {
                    any = true;
                    break;
                }
            }
            if (!any) {
                all = false;
                break;
            }
        }
        if (all) return true;
    }
    return false;
}

bool clique_decide(const Graph& g, std::uint64_t m, std::size_t vertex_cap) {
    if (m == 0) return true;
    if (m > g.n) return false;
    if (g.n > vertex_cap || g.n > 62) {
        throw ResourceError("clique brute force: " + std::to_string(g.n) + " vertices exceeds cap " +
                            std::to_string(vertex_cap));
    }
    const auto n = static_cast<unsigned>(g.n);
    for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
        if (static_cast<std::uint64_t>(__builtin_popcountll(s)) < m) continue;
        bool clique = true;
        for (unsigned a = 0; a < n && clique; ++a) {
            if (!((s >> a) & 1u)) continue;
            for (unsigned b = a + 1; b < n; ++b) {
                if (((s >> b) & 1u) && !g.adjacent(a + 1, b + 1)) {
                    clique = false;
                    break;
                }
            }
        }
        if (clique) return true;
    }
    return false;
}

bool sat3_string_decide(const BitString& x) {
    const auto f = decode_formula(x);
    return f && sat3_decide(*f);
}

bool clique_string_decide(const BitString& z) {
    const auto inst = decode_clique_instance(z);
    return inst && clique_decide(inst->first, inst->second);
}

OracleHandle sat3_oracle() { return OracleHandle(sat3_string_decide, {{"kind", "3sat"}}); }
OracleHandle clique_oracle() { return OracleHandle(clique_string_decide, {{"kind", "clique"}}); }

} // namespace qmono
