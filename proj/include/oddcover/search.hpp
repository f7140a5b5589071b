#pragma once

#include "oddcover/constructions.hpp"
#include "oddcover/cover.hpp"
#include "oddcover/graph.hpp"

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace oddcover {

/// Vertex label over the alphabet {0, 1, e} (e = absent), one symbol
/// per biclique coordinate. Two labeled vertices are adjacent exactly
/// when the number of positions where one holds 0 and the other 1 is
/// odd.
struct Label {
    std::size_t k = 0;
    std::uint64_t zeros = 0; // coordinates holding symbol 0
    std::uint64_t ones = 0;  // coordinates holding symbol 1

    static Label parse(std::string_view s); // symbols '0', '1', 'e'
    std::string str() const;

    /// Symbol at coordinate j: 0, 1, or 2 (= e).
    int symbol(std::size_t j) const {
        if ((zeros >> j) & 1) return 0;
        if ((ones >> j) & 1) return 1;
        return 2;
    }

    bool operator==(const Label&) const = default;
};

std::size_t clash(const Label& u, const Label& v);
bool odd_clash(const Label& u, const Label& v);

/// The graph induced by the odd-clash relation on the given labels.
Graph label_graph(const std::vector<Label>& labels);

/// k bicliques from a labeling: coordinate j sends 0-vertices to X_j
/// and 1-vertices to Y_j. Throws on mixed lengths.
OddCover labeling_to_cover(const std::vector<Label>& labels);

struct SearchOptions {
    /// Wall-clock budget; zero or negative means unlimited.
    std::chrono::duration<double> budget{0};
    /// Worker count for the top-level branch split; 0 = library default.
    int threads = 0;
};

enum class SearchStatus { yes, no, timeout };

struct SearchResult {
    SearchStatus status = SearchStatus::no;
    std::vector<Label> witness; // one label per vertex, original order (when yes)
};

/// Decides whether g admits an odd cover of exactly k bicliques by
/// exhaustive labeling search. "no" is only reported on full
/// exhaustion. Completed searches return identical witnesses across
/// runs and thread counts.
SearchResult has_cover_of_size(const Graph& g, std::size_t k, const SearchOptions& opts = {});

struct B2Result {
    SearchStatus status = SearchStatus::no;
    std::size_t value = 0;        // b2(g), valid when status == yes
    std::optional<OddCover> witness;
    std::size_t proved_lower = 0; // best lower bound certified so far
};

/// Exact b2 via has_cover_of_size, iterating k upward from the
/// certified lower bound. Timeouts surface with the bounds proved so
/// far.
B2Result b2_exact(const Graph& g, const SearchOptions& opts = {});

enum class PairsStatus { found, none, timeout };

struct PairsResult {
    PairsStatus status = PairsStatus::none;
    std::optional<SignedPairsMatrix> matrix;
};

/// Backtracking search for an (n/2) x (n/2) pairs-construction matrix
/// of K_n: rows with odd support, pairwise odd equal-sign and
/// opposite-sign column counts, pruned by the part-size residue every
/// such cover must satisfy. Requires n even, n <= 28.
PairsResult pairs_search(std::size_t n, const SearchOptions& opts = {});

} // namespace oddcover
