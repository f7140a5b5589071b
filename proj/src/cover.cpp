#include "oddcover/cover.hpp"

#include <stdexcept>

namespace oddcover {

Biclique::Biclique(BitVec x_, BitVec y_) : x(std::move(x_)), y(std::move(y_)) {
    if (x.size() != y.size()) throw std::invalid_argument("Biclique: side size mismatch");
    if (x.intersects(y)) throw std::invalid_argument("Biclique: sides overlap");
}

void OddCover::add(Biclique b) {
    if (b.x.size() != n) throw std::invalid_argument("OddCover: biclique host size mismatch");
    bicliques.push_back(std::move(b));
}

std::size_t coverage_count(const OddCover& c, std::size_t u, std::size_t v) {
    if (u == v) throw std::invalid_argument("coverage_count: u == v");
    if (u >= c.n || v >= c.n) throw std::out_of_range("coverage_count: vertex out of range");
    std::size_t count = 0;
    for (const auto& b : c.bicliques)
        if ((b.x.test(u) && b.y.test(v)) || (b.x.test(v) && b.y.test(u))) ++count;
    return count;
}

VerifyReport verify_serial(const Graph& g, const OddCover& c) {
    if (g.size() != c.n) throw std::invalid_argument("verify: size mismatch");
    VerifyReport report;
    report.valid = true;
    for (std::size_t u = 0; u < c.n; ++u) {
        for (std::size_t v = u + 1; v < c.n; ++v) {
            const std::size_t count = coverage_count(c, u, v);
            const bool edge = g.has_edge(u, v);
            if ((count % 2 == 1) != edge) {
                report.valid = false;
                report.violations.push_back({u, v, edge, count});
            }
        }
    }
    return report;
}

VerifyReport verify(const Graph& g, const OddCover& c) {
    if (g.size() != c.n) throw std::invalid_argument("verify: size mismatch");
    const std::size_t n = c.n;
    const std::size_t k = c.bicliques.size();

    // Per-vertex membership signatures over the bicliques, so a pair's
    // count reduces to two masked popcounts.
    std::vector<BitVec> in_x(n, BitVec(k)), in_y(n, BitVec(k));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t v : c.bicliques[i].x.to_indices()) in_x[v].set(i);
        for (std::size_t v : c.bicliques[i].y.to_indices()) in_y[v].set(i);
    }

    std::vector<std::vector<Violation>> per_u(n);
#pragma omp parallel for schedule(dynamic)
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            const std::size_t count = in_x[u].count_and(in_y[v]) + in_y[u].count_and(in_x[v]);
            const bool edge = g.has_edge(u, v);
            if ((count % 2 == 1) != edge) per_u[u].push_back({u, v, edge, count});
        }
    }

    VerifyReport report;
    report.valid = true;
    for (auto& bucket : per_u) {
        if (!bucket.empty()) report.valid = false;
        report.violations.insert(report.violations.end(), bucket.begin(), bucket.end());
    }
    return report;
}

F2Matrix incidence_matrix(const OddCover& c) {
    F2Matrix m(c.n, 2 * c.bicliques.size());
    for (std::size_t i = 0; i < c.bicliques.size(); ++i) {
        for (std::size_t v : c.bicliques[i].x.to_indices()) m.set(v, 2 * i);
        for (std::size_t v : c.bicliques[i].y.to_indices()) m.set(v, 2 * i + 1);
    }
    return m;
}

F2Matrix matching_adjacency(std::size_t k) {
    F2Matrix a(2 * k, 2 * k);
    for (std::size_t i = 0; i < k; ++i) {
        a.set(2 * i, 2 * i + 1);
        a.set(2 * i + 1, 2 * i);
    }
    return a;
}

bool eq2_holds(const Graph& g, const OddCover& c) {
    if (g.size() != c.n) throw std::invalid_argument("eq2_holds: size mismatch");
    const F2Matrix m = incidence_matrix(c);
    const F2Matrix ma = m.multiplied(matching_adjacency(c.bicliques.size()));
    // (M A_k) M^T row by row against the adjacency rows.
    for (std::size_t u = 0; u < c.n; ++u)
        for (std::size_t v = 0; v < c.n; ++v)
            if ((ma.row(u).count_and(m.row(v)) & 1) != (u != v && g.has_edge(u, v)))
                return false;
    return true;
}

bool is_perfect(const Graph& g, const OddCover& c) {
    if (g.size() != c.n) return false;
    return 2 * c.bicliques.size() == g.adjacency().rank() && verify(g, c).valid;
}

namespace {

bool induced_edge_count_odd(const Graph& g, const BitVec& s) {
    std::size_t twice = 0;
    for (std::size_t v : s.to_indices()) twice += g.neighbors(v).count_and(s);
    return (twice / 2) % 2 == 1;
}

// Disjoint union of odd cliques with at least one nontrivial clique:
// b2 exceeds the rank bound even when no even core has an odd number
// of edges (every K_{2m+1} with m even induces an even edge count).
bool is_odd_clique_union(const Graph& g) {
    const std::size_t n = g.size();
    std::vector<bool> seen(n, false);
    bool nontrivial = false;
    for (std::size_t v = 0; v < n; ++v) {
        if (seen[v]) continue;
        BitVec comp = g.closed_neighborhood(v);
        // A component that is a clique has N[u] identical on it.
        for (std::size_t u : comp.to_indices()) {
            if (g.closed_neighborhood(u) != comp) return false;
            seen[u] = true;
        }
        if (comp.count() % 2 == 0) return false;
        if (comp.count() >= 3) nontrivial = true;
    }
    return nontrivial;
}

} // namespace

LowerBound lower_bound(const Graph& g, std::size_t core_cap) {
    LowerBound lb;
    const std::size_t half_rank = g.adjacency().rank() / 2;
    const EvenCores cores = even_cores(g, core_cap);
    lb.truncated = cores.truncated;
    bool obstructed = false;
    for (const auto& s : cores.cores) {
        if (induced_edge_count_odd(g, s)) {
            obstructed = true;
            break;
        }
    }
    if (!obstructed && is_odd_clique_union(g)) obstructed = true;
    lb.value = half_rank + (obstructed ? 1 : 0);
    return lb;
}

bool even_intersection_check(const OddCover& c, const BitVec& s) {
    if (s.size() != c.n) throw std::invalid_argument("even_intersection_check: size mismatch");
    if (s.none()) throw std::invalid_argument("even_intersection_check: empty set");
    for (const auto& b : c.bicliques)
        if (b.x.count_and(s) % 2 != 0 || b.y.count_and(s) % 2 != 0) return false;
    return true;
}

} // namespace oddcover
