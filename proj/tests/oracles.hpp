#pragma once

// Test-only oracles: independent, deliberately naive implementations
// used as ground truth. Nothing here shares a code path with the
// library routines they check.

#include "oddcover/graph.hpp"
#include "oddcover/rng.hpp"

#include <cstdint>
#include <set>
#include <vector>

namespace oracles {

/// Rank over F2 by fraction-free elimination on a plain int matrix.
inline std::size_t naive_rank_mod2(std::vector<std::vector<int>> m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][col] % 2 == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r != rank && m[r][col] % 2 != 0)
                for (std::size_t c = 0; c < cols; ++c) m[r][c] = (m[r][c] + m[rank][c]) % 2;
        }
        ++rank;
    }
    return rank;
}

inline std::vector<std::vector<int>> to_int_matrix(const oddcover::F2Matrix& m) {
    std::vector<std::vector<int>> out(m.rows(), std::vector<int>(m.cols(), 0));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m.at(r, c) ? 1 : 0;
    return out;
}

/// Direct neighborhood-parity test: every vertex of g must have an
/// even number of neighbors inside s.
inline bool is_even_core(const oddcover::Graph& g, const oddcover::BitVec& s) {
    if (s.none()) return false;
    for (std::size_t v = 0; v < g.size(); ++v)
        if (g.neighbors(v).count_and(s) % 2 != 0) return false;
    return true;
}

/// Smallest cover size up to 3 by exhaustive enumeration over biclique
/// tuples, organized through the XOR algebra of covered-pair masks: a
/// multiset of bicliques is a valid cover iff the XOR of their pair
/// masks equals the edge mask. Returns 0..3, or 4 meaning "more than
/// 3". Only for graphs with at most 7 vertices.
inline int naive_b2_upto3(const oddcover::Graph& g) {
    const std::size_t n = g.size();
    if (n > 7) throw std::invalid_argument("naive_b2_upto3: n > 7");
    const std::size_t npairs = n * (n - 1) / 2;
    auto pair_bit = [&](std::size_t u, std::size_t v) {
        if (u > v) std::swap(u, v);
        std::size_t idx = 0;
        for (std::size_t a = 0; a < u; ++a) idx += n - 1 - a;
        return idx + (v - u - 1);
    };

    std::uint64_t edge_mask = 0;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (g.has_edge(u, v)) edge_mask |= std::uint64_t{1} << pair_bit(u, v);

    if (edge_mask == 0) return 0;

    // Every biclique on n vertices, as a covered-pair mask: assign each
    // vertex to X, Y, or neither.
    std::set<std::uint64_t> masks;
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= 3;
    for (std::size_t code = 0; code < total; ++code) {
        std::size_t rest = code;
        std::vector<int> side(n);
        for (std::size_t v = 0; v < n; ++v) {
            side[v] = static_cast<int>(rest % 3);
            rest /= 3;
        }
        std::uint64_t mask = 0;
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = u + 1; v < n; ++v)
                if ((side[u] == 1 && side[v] == 2) || (side[u] == 2 && side[v] == 1))
                    mask |= std::uint64_t{1} << pair_bit(u, v);
        masks.insert(mask);
    }

    const std::vector<std::uint64_t> singles(masks.begin(), masks.end());
    for (std::uint64_t a : singles)
        if (a == edge_mask) return 1;

    std::vector<bool> two(std::size_t{1} << npairs, false);
    for (std::uint64_t a : singles)
        for (std::uint64_t b : singles) two[a ^ b] = true;
    if (two[edge_mask]) return 2;
    for (std::uint64_t a : singles)
        if (two[edge_mask ^ a]) return 3;
    return 4;
}

/// Seeded G(n, p)-style random graph (p in 256ths).
inline oddcover::Graph random_graph(std::size_t n, oddcover::SplitMix64& rng,
                                    unsigned p_256 = 128) {
    oddcover::Graph g(n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (rng.below(256) < p_256) g.add_edge(u, v);
    return g;
}

} // namespace oracles
