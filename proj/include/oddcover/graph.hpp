#pragma once

#include "oddcover/bitvec.hpp"
#include "oddcover/f2matrix.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace oddcover {

/// Simple undirected graph on vertices 0..n-1 with bit-vector adjacency
/// rows. Rows stay symmetric and loop-free by construction.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n) : n_(n), adj_(n, BitVec(n)) {}

    static Graph complete(std::size_t n);
    static Graph cycle(std::size_t n); // n >= 3
    static Graph empty(std::size_t n) { return Graph(n); }
    static Graph from_edges(std::size_t n,
                            const std::vector<std::pair<std::size_t, std::size_t>>& edges);

    std::size_t size() const { return n_; }

    bool has_edge(std::size_t u, std::size_t v) const { return adj_.at(u).test(v); }

    void add_edge(std::size_t u, std::size_t v);
    void toggle_edge(std::size_t u, std::size_t v);

    /// Open neighborhood N(v) as a bit row.
    const BitVec& neighbors(std::size_t v) const { return adj_.at(v); }

    /// Closed neighborhood N[v].
    BitVec closed_neighborhood(std::size_t v) const {
        BitVec r = adj_.at(v);
        r.set(v);
        return r;
    }

    std::size_t degree(std::size_t v) const { return adj_.at(v).count(); }
    std::size_t edge_count() const;

    F2Matrix adjacency() const { return F2Matrix::from_rows(adj_, n_); }

    Graph induced(const BitVec& keep) const;

    bool operator==(const Graph& o) const = default;

private:
    std::size_t n_ = 0;
    std::vector<BitVec> adj_;
};

Graph disjoint_union(const std::vector<Graph>& gs);

/// Edge-wise symmetric difference on a common vertex universe; the
/// smaller graph is padded with isolated vertices.
Graph sym_diff(const Graph& g, const Graph& h);

struct EvenCores {
    std::vector<BitVec> cores; // each: vertex set with all neighborhood parities even
    bool truncated = false;    // true when only the kernel basis was returned
};

/// All nonempty even cores of g when the kernel dimension is at most
/// cap (2^d - 1 sets, enumerated Gray-code style over the RREF basis);
/// otherwise just the basis vectors, flagged truncated.
EvenCores even_cores(const Graph& g, std::size_t cap = 20);

/// F2 rank of the adjacency matrix via greedy adjacent-twin matching
/// (pairs u,v with N[u] = N[v]) and recursion, finishing with plain
/// elimination once no twins remain.
std::size_t rank_via_twins(const Graph& g);

} // namespace oddcover
