#pragma once

#include "oddcover/bitvec.hpp"
#include "oddcover/f2matrix.hpp"
#include "oddcover/graph.hpp"

#include <cstddef>
#include <vector>

namespace oddcover {

/// A biclique as two disjoint vertex sets over a host vertex count.
/// Either side may be empty (an empty side covers no pairs but the
/// biclique still counts toward cover cardinality).
struct Biclique {
    BitVec x;
    BitVec y;

    Biclique(BitVec x_, BitVec y_);
};

/// Ordered multiset of bicliques on vertices 0..n-1.
struct OddCover {
    std::size_t n = 0;
    std::vector<Biclique> bicliques;

    explicit OddCover(std::size_t n_) : n(n_) {}
    void add(Biclique b);
    std::size_t size() const { return bicliques.size(); }
};

/// Number of bicliques splitting the pair {u, v}. Throws on u == v.
std::size_t coverage_count(const OddCover& c, std::size_t u, std::size_t v);

struct Violation {
    std::size_t u = 0, v = 0;
    bool is_edge = false;  // in the target graph
    std::size_t count = 0; // observed coverage multiplicity
};

struct VerifyReport {
    bool valid = false;
    std::vector<Violation> violations; // every failing pair, (u,v) ascending
};

/// Checks that every edge is covered an odd number of times and every
/// nonedge an even number of times. Parallel kernel; results are
/// deterministic and identical to verify_serial.
VerifyReport verify(const Graph& g, const OddCover& c);

/// Serial reference: plain per-pair, per-biclique membership counting.
VerifyReport verify_serial(const Graph& g, const OddCover& c);

/// n x 2k incidence matrix, columns X1,Y1,...,Xk,Yk.
F2Matrix incidence_matrix(const OddCover& c);

/// Adjacency matrix of a perfect matching on 2k vertices (direct sum of
/// k swap blocks).
F2Matrix matching_adjacency(std::size_t k);

/// Algebraic route: tests A_G = M A_k M^T over F2 with M the incidence
/// matrix. Agrees with verify() on every input; kept as an independent
/// implementation of the same semantics.
bool eq2_holds(const Graph& g, const OddCover& c);

/// Valid cover meeting the rank bound with equality (2|c| = r2(G)).
bool is_perfect(const Graph& g, const OddCover& c);

struct LowerBound {
    std::size_t value = 0;
    bool truncated = false; // core enumeration was capped; bound sound but maybe not tight
};

/// Certified lower bound on b2(g): r2/2, plus one when an obstruction
/// applies (an even core inducing an odd number of edges, or g being a
/// disjoint union of odd cliques).
LowerBound lower_bound(const Graph& g, std::size_t core_cap = 20);

/// True iff s meets both sides of every biclique evenly. Throws on
/// empty s.
bool even_intersection_check(const OddCover& c, const BitVec& s);

} // namespace oddcover
