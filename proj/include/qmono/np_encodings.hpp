#pragma once

// Bit-exact encodings of 3CNF formulas and undirected graphs on top of the
// pairing codec. Decoders are strict: anything outside the image of the
// encoder decodes to nullopt.

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "qmono/bitstring.hpp"

namespace qmono {

struct Literal {
    std::uint64_t var = 1; // 1-based
    bool neg = false;
    friend bool operator==(const Literal&, const Literal&) = default;
};

using Clause = std::array<Literal, 3>;

struct ThreeCnf {
    std::vector<Clause> clauses;
    friend bool operator==(const ThreeCnf&, const ThreeCnf&) = default;
};

/// Undirected simple graph on vertices 1..n; edges kept sorted with k < l.
struct Graph {
    std::uint64_t n = 1;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;

    /// Orients and sorts the edges; throws InvalidInput on self-loops,
    /// duplicates, out-of-range endpoints or n == 0.
    static Graph make(std::uint64_t n, std::vector<std::pair<std::uint64_t, std::uint64_t>> edges);
    bool adjacent(std::uint64_t a, std::uint64_t b) const;
    friend bool operator==(const Graph&, const Graph&) = default;
};

/// Literal x_i becomes "1"+s_i, its negation "0"+s_i, s_i = lex_unrank(i).
BitString encode_literal(const Literal& l);
BitString encode_formula(const ThreeCnf& f);
std::optional<ThreeCnf> decode_formula(const BitString& x);

BitString encode_graph(const Graph& g);
std::optional<Graph> decode_graph(const BitString& x);

/// A threshold-clique instance: the pair of a graph encoding and bin(m).
BitString encode_clique_instance(const Graph& g, std::uint64_t m);
std::optional<std::pair<Graph, std::uint64_t>> decode_clique_instance(const BitString& z);

} // namespace qmono
