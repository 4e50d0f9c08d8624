#include "qmono/np_encodings.hpp"

#include <algorithm>
#include <string>

#include "qmono/bitcodec.hpp"
#include "qmono/errors.hpp"

namespace qmono {

namespace {

std::optional<std::uint64_t> index_of(const BitString& s) {
    if (s.size() >= 64) return std::nullopt;
    return lex_rank(s).value;
}

} // namespace

Graph Graph::make(std::uint64_t n, std::vector<std::pair<std::uint64_t, std::uint64_t>> edges) {
    if (n == 0) throw InvalidInput("graph needs at least one vertex");
    for (auto& [k, l] : edges) {
        if (k > l) std::swap(k, l);
        if (k == l) throw InvalidInput("self-loop on vertex " + std::to_string(k));
        if (k < 1 || l > n) throw InvalidInput("edge endpoint out of range 1.." + std::to_string(n));
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) throw InvalidInput("duplicate edge");
    return Graph{n, std::move(edges)};
}

bool Graph::adjacent(std::uint64_t a, std::uint64_t b) const {
    if (a > b) std::swap(a, b);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(a, b));
}

BitString encode_literal(const Literal& l) {
    if (l.var == 0) throw InvalidInput("variable indices start at 1");
    return BitString(l.neg ? "0" : "1") + lex_unrank({l.var});
}

BitString encode_formula(const ThreeCnf& f) {
    std::vector<BitString> parts;
    parts.reserve(3 * f.clauses.size());
    for (const auto& c : f.clauses) {
        for (const auto& l : c) parts.push_back(encode_literal(l));
    }
    return multi_pair(parts);
}

std::optional<ThreeCnf> decode_formula(const BitString& x) {
    const auto parts = multi_unpair(x);
    if (!parts || parts->size() % 3 != 0) return std::nullopt;
    ThreeCnf f;
    for (std::size_t i = 0; i < parts->size(); i += 3) {
        Clause c;
        for (std::size_t j = 0; j < 3; ++j) {
            const BitString& p = (*parts)[i + j];
            if (p.empty()) return std::nullopt;
            const auto var = index_of(p.substr(1));
            if (!var) return std::nullopt;
            c[j] = Literal{*var, !p[0]};
        }
        f.clauses.push_back(c);
    }
    return f;
}

BitString encode_graph(const Graph& g) {
    const Graph canon = Graph::make(g.n, g.edges);
    std::vector<BitString> parts{lex_unrank({canon.n})};
    for (const auto& [k, l] : canon.edges) parts.push_back(multi_pair({lex_unrank({k}), lex_unrank({l})}));
    return multi_pair(parts);
}

std::optional<Graph> decode_graph(const BitString& x) {
    const auto parts = multi_unpair(x);
    if (!parts || parts->empty()) return std::nullopt;
    const auto n = index_of((*parts)[0]);
    if (!n) return std::nullopt;
    Graph g{*n, {}};
    for (std::size_t i = 1; i < parts->size(); ++i) {
        const auto ends = multi_unpair((*parts)[i]);
        if (!ends || ends->size() != 2) return std::nullopt;
        const auto k = index_of((*ends)[0]);
        const auto l = index_of((*ends)[1]);
        if (!k || !l || *k >= *l || *l > *n) return std::nullopt;
        const std::pair<std::uint64_t, std::uint64_t> e{*k, *l};
        if (!g.edges.empty() && !(g.edges.back() < e)) return std::nullopt; // order and uniqueness
        g.edges.push_back(e);
    }
    return g;
}

BitString encode_clique_instance(const Graph& g, std::uint64_t m) {
    return multi_pair({encode_graph(g), to_binary(m)});
}

std::optional<std::pair<Graph, std::uint64_t>> decode_clique_instance(const BitString& z) {
    const auto parts = multi_unpair(z);
    if (!parts || parts->size() != 2) return std::nullopt;
    auto g = decode_graph((*parts)[0]);
    const auto m = from_binary((*parts)[1]);
    if (!g || !m) return std::nullopt;
    return std::make_pair(std::move(*g), *m);
}

} // namespace qmono
