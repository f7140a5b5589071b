#pragma once

#include "oddcover/cover.hpp"
#include "oddcover/f2matrix.hpp"
#include "oddcover/graph.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace oddcover {

/// True iff m satisfies A_G = m A_k m^T over F2 (m need not be a cover
/// incidence matrix).
bool decomposition_holds(const Graph& g, const F2Matrix& m);

struct CorrespondenceReport {
    bool passed = true;
    std::string counterexample; // first failing subset, if any
};

/// Row-independence correspondence: for every vertex subset S of size
/// at most 4, plus `trials` random larger subsets, the rows of m
/// indexed by S are independent exactly when the adjacency rows are.
/// Preconditions (m shaped n x r2(G) and the decomposition identity)
/// are enforced; a counterexample indicts the implementation, since
/// the correspondence is guaranteed for such matrices.
CorrespondenceReport row_correspondence_check(const Graph& g, const F2Matrix& m, std::size_t trials,
                        std::uint64_t seed = 0x5eed);

/// Basis vertices form a system of distinct representatives of the 2k
/// partite sets: finds a complete matching vertex -> partite set by
/// augmenting paths. Requires c perfect for g and basis rows a row
/// basis of the adjacency matrix.
bool sdr_check(const Graph& g, const OddCover& c, const std::vector<std::size_t>& basis);

struct ItemReport {
    bool passed = true;
    std::string detail;
};

struct EvenCliqueReport {
    ItemReport part_sizes;             // |X_i|, |Y_i| = 1 mod 4 (k odd) or 3 mod 4 (k even)
    ItemReport pairwise_intersections; // all cross intersections odd
    ItemReport odd_membership;         // every vertex in an odd number of U_i
    ItemReport subset_parity;          // each A with |A| = 2,3 mod 4 meets some biclique oddly
    bool all_passed() const {
        return part_sizes.passed && pairwise_intersections.passed && odd_membership.passed &&
               subset_parity.passed;
    }
};

/// Structural facts every perfect odd cover of K_{two_k} satisfies.
/// The subset item is exhaustive for two_k <= 12 and samples `samples`
/// sets per residue class beyond that (seeded generator).
EvenCliqueReport even_clique_props(const OddCover& c, std::size_t two_k, std::size_t samples,
                                   std::uint64_t seed = 0x5eed);

/// True iff paired vertices occupy exactly the same biclique supports
/// U_i = X_i u Y_i. The pairing must partition all vertices.
bool same_type_check(const OddCover& c,
                     const std::vector<std::pair<std::size_t, std::size_t>>& pairing);

/// Greedy row basis of the adjacency matrix (lowest indices first);
/// handy input for sdr_check.
std::vector<std::size_t> adjacency_row_basis(const Graph& g);

} // namespace oddcover
