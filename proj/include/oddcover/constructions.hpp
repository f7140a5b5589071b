#pragma once

#include "oddcover/cover.hpp"
#include "oddcover/gf.hpp"
#include "oddcover/graph.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace oddcover {

/// Square matrix over {-1, 0, +1} encoding a pairs construction: row i
/// stands for the vertex pair (2i, 2i+1), column j for biclique j.
class SignedPairsMatrix {
public:
    explicit SignedPairsMatrix(std::size_t size)
        : size_(size), entries_(size, std::vector<std::int8_t>(size, 0)) {}

    std::size_t size() const { return size_; }
    std::int8_t at(std::size_t i, std::size_t j) const { return entries_.at(i).at(j); }
    void set(std::size_t i, std::size_t j, std::int8_t v);

    struct ConditionReport {
        bool rows_odd_support = true;      // each row has an odd number of nonzeros
        bool pairwise_opposite_odd = true; // distinct rows: odd # columns with opposite signs
        bool pairwise_equal_odd = true;    // distinct rows: odd # columns with equal signs
        std::string detail;                // first failure, if any
        bool all() const { return rows_odd_support && pairwise_opposite_odd && pairwise_equal_odd; }
    };

    /// Validates the pairs-construction conditions; these are checked,
    /// never assumed, on constructed matrices.
    ConditionReport validate() const;

private:
    std::size_t size_;
    std::vector<std::vector<std::int8_t>> entries_;
};

/// Odd cover of H + H (copies on vertices i and |V(H)|+i) with |V(H)|
/// bicliques, each X_i = {v_i, w_i}; built by the inductive recipe that
/// grows the cover one mirrored vertex pair at a time.
OddCover double_cover(const Graph& h);

/// k+1 bicliques covering K_{2k+1}; vertex 0 is the apex, 1..k and
/// k+1..2k the two mirrored cliques.
OddCover odd_clique_cover(std::size_t k);

/// sum(ms)+1 bicliques covering K_{2m_1+1} + ... + K_{2m_j+1}, cliques
/// laid out consecutively in input order.
OddCover odd_clique_union_cover(const std::vector<std::size_t>& ms);

/// Host graph for odd_clique_union_cover (cliques in input order).
Graph odd_clique_union_target(const std::vector<std::size_t>& ms);

/// m-1 bicliques covering C_{2m} (vertices in cycle order): the fan of
/// K_{2,2}'s through the hub vertex 2m-1; overlaps cancel in pairs.
OddCover even_cycle_cover(std::size_t m);

/// Extends a cover of an odd cycle (standard cycle labeling) to
/// C_target by repeatedly shifting labels up by one and appending a
/// K_{2,2} whose symmetric difference grows the cycle by two.
OddCover cycle_extension(const OddCover& c, std::size_t target);

/// Cover of C_{2n_1+1} + ... + C_{2n_t+1} + C_{2m_1} + ... + C_{2m_l}
/// with sum(n) + sum(m) - l + 1 bicliques: a tC_3 core from
/// odd_clique_union_cover, the cycle_extension ladder per odd cycle,
/// and even_cycle_cover per even cycle.
OddCover cycle_union_cover(const std::vector<std::size_t>& odd_ns,
                           const std::vector<std::size_t>& even_ms);

/// Host graph for cycle_union_cover (odd cycles first, then even).
Graph cycle_union_target(const std::vector<std::size_t>& odd_ns,
                         const std::vector<std::size_t>& even_ms);

/// Cover on 2*size vertices, one biclique per column: +1 puts 2i in X_j
/// and 2i+1 in Y_j, -1 swaps, 0 omits the pair.
OddCover pairs_to_cover(const SignedPairsMatrix& m);

/// Block matrix [[A,C,B],[C,B,A],[B,A,C]] with (n/6)-square blocks: A
/// all ones, B all zeros, C the alternating-sign pattern. Its cover is
/// a perfect odd cover of K_n. Requires n = 18 (mod 24).
SignedPairsMatrix pairs_18mod24(std::size_t n);

/// Same block recipe for n = 6 (mod 24), n >= 30; the cover is a
/// perfect odd cover of 3K_{n/3} (cliques on the first, middle, and
/// last n/3 vertices).
SignedPairsMatrix pairs_6mod24(std::size_t n);

/// Perfect odd cover of K_{3^k-1}: vertices are the nonzero vectors of
/// F_3^k in lexicographic order; each projective normal a contributes
/// the biclique ({v : <v,a> = 1}, {v : <v,a> = 2}).
OddCover hyperplane_cover(std::size_t k);

/// Lifts a perfect odd cover of K_{q-1} to one of K_{q^k-1}: per
/// projective normal a and base biclique (X, Y), vertex v joins X' iff
/// the nonzero label of <v,a> lies in X (labels are 1..q-1 in element
/// encoding order, base vertex j-1 carrying label j). Throws unless the
/// base is a valid perfect odd cover of K_{q-1}.
OddCover field_lift_cover(const GFContext& ctx, std::size_t k, const OddCover& base);

} // namespace oddcover
