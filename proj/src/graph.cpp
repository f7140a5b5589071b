#include "oddcover/graph.hpp"

#include <stdexcept>

namespace oddcover {

Graph Graph::complete(std::size_t n) {
    Graph g(n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph Graph::cycle(std::size_t n) {
    if (n < 3) throw std::invalid_argument("cycle: need n >= 3");
    Graph g(n);
    for (std::size_t i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph Graph::from_edges(std::size_t n,
                        const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
        if (u == v) throw std::invalid_argument("from_edges: loop");
        if (u >= n || v >= n) throw std::out_of_range("from_edges: vertex index >= n");
        if (g.has_edge(u, v)) throw std::invalid_argument("from_edges: duplicate edge");
        g.add_edge(u, v);
    }
    return g;
}

void Graph::add_edge(std::size_t u, std::size_t v) {
    if (u == v) throw std::invalid_argument("add_edge: loop");
    adj_.at(u).set(v);
    adj_.at(v).set(u);
}

void Graph::toggle_edge(std::size_t u, std::size_t v) {
    if (u == v) throw std::invalid_argument("toggle_edge: loop");
    adj_.at(u).flip(v);
    adj_.at(v).flip(u);
}

std::size_t Graph::edge_count() const {
    std::size_t twice = 0;
    for (const auto& row : adj_) twice += row.count();
    return twice / 2;
}

Graph Graph::induced(const BitVec& keep) const {
    if (keep.size() != n_) throw std::invalid_argument("induced: mask size mismatch");
    const auto verts = keep.to_indices();
    Graph h(verts.size());
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (has_edge(verts[i], verts[j])) h.add_edge(i, j);
    return h;
}

Graph disjoint_union(const std::vector<Graph>& gs) {
    std::size_t total = 0;
    for (const auto& g : gs) total += g.size();
    Graph out(total);
    std::size_t offset = 0;
    for (const auto& g : gs) {
        for (std::size_t u = 0; u < g.size(); ++u)
            for (std::size_t v : g.neighbors(u).to_indices())
                if (u < v) out.add_edge(offset + u, offset + v);
        offset += g.size();
    }
    return out;
}

Graph sym_diff(const Graph& g, const Graph& h) {
    const std::size_t n = std::max(g.size(), h.size());
    Graph out(n);
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            const bool in_g = u < g.size() && v < g.size() && g.has_edge(u, v);
            const bool in_h = u < h.size() && v < h.size() && h.has_edge(u, v);
            if (in_g != in_h) out.add_edge(u, v);
        }
    }
    return out;
}

EvenCores even_cores(const Graph& g, std::size_t cap) {
    EvenCores out;
    const std::vector<BitVec> basis = g.adjacency().kernel_basis();
    const std::size_t d = basis.size();
    if (d == 0) return out;
    if (d > cap || d > 63) {
        out.cores = basis;
        out.truncated = true;
        return out;
    }
    // Gray-code walk over all 2^d - 1 nonzero combinations.
    BitVec current(g.size());
    std::uint64_t prev = 0;
    for (std::uint64_t i = 1; i < (std::uint64_t{1} << d); ++i) {
        const std::uint64_t gray = i ^ (i >> 1);
        const std::uint64_t changed = gray ^ prev;
        current ^= basis[static_cast<std::size_t>(std::countr_zero(changed))];
        prev = gray;
        out.cores.push_back(current);
    }
    return out;
}

namespace {

std::size_t rank_via_twins_impl(const Graph& g) {
    const std::size_t n = g.size();
    std::vector<bool> matched(n, false);
    std::size_t pairs = 0;
    for (std::size_t u = 0; u < n; ++u) {
        if (matched[u]) continue;
        const BitVec nu = g.closed_neighborhood(u);
        for (std::size_t v = u + 1; v < n; ++v) {
            if (matched[v]) continue;
            if (nu == g.closed_neighborhood(v)) {
                matched[u] = matched[v] = true;
                ++pairs;
                break;
            }
        }
    }
    if (pairs == 0) return g.adjacency().rank();
    BitVec keep(n);
    for (std::size_t v = 0; v < n; ++v)
        if (!matched[v]) keep.set(v);
    return 2 * pairs + rank_via_twins_impl(g.induced(keep));
}

} // namespace

std::size_t rank_via_twins(const Graph& g) { return rank_via_twins_impl(g); }

} // namespace oddcover
