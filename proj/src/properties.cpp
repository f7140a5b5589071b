#include "oddcover/properties.hpp"

#include "oddcover/rng.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace oddcover {

bool decomposition_holds(const Graph& g, const F2Matrix& m) {
    if (m.rows() != g.size() || m.cols() % 2 != 0)
        throw std::invalid_argument("decomposition_holds: bad matrix shape");
    const F2Matrix ma = m.multiplied(matching_adjacency(m.cols() / 2));
    for (std::size_t u = 0; u < g.size(); ++u)
        for (std::size_t v = 0; v < g.size(); ++v)
            if ((ma.row(u).count_and(m.row(v)) & 1) != (u != v && g.has_edge(u, v)))
                return false;
    return true;
}

namespace {

std::string subset_str(const std::vector<std::size_t>& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s[i]);
    }
    return out + "}";
}

} // namespace

CorrespondenceReport row_correspondence_check(const Graph& g, const F2Matrix& m, std::size_t trials,
                        std::uint64_t seed) {
    const F2Matrix adj = g.adjacency();
    if (m.rows() != g.size() || m.cols() != adj.rank())
        throw std::invalid_argument("row_correspondence_check: matrix must be n x r2(G)");
    if (!decomposition_holds(g, m))
        throw std::invalid_argument("row_correspondence_check: decomposition identity does not hold");

    CorrespondenceReport rep;
    auto agree = [&](const std::vector<std::size_t>& s) {
        if (m.rows_independent(s) == adj.rows_independent(s)) return true;
        rep.passed = false;
        rep.counterexample = subset_str(s);
        return false;
    };

    const std::size_t n = g.size();
    std::vector<std::size_t> s;
    for (std::size_t a = 0; a < n; ++a) {
        s = {a};
        if (!agree(s)) return rep;
        for (std::size_t b = a + 1; b < n; ++b) {
            s = {a, b};
            if (!agree(s)) return rep;
            for (std::size_t c = b + 1; c < n; ++c) {
                s = {a, b, c};
                if (!agree(s)) return rep;
                for (std::size_t d = c + 1; d < n; ++d) {
                    s = {a, b, c, d};
                    if (!agree(s)) return rep;
                }
            }
        }
    }

    if (n >= 5) {
        SplitMix64 rng(seed);
        std::vector<std::size_t> pool(n);
        std::iota(pool.begin(), pool.end(), std::size_t{0});
        for (std::size_t t = 0; t < trials; ++t) {
            const std::size_t size = 5 + rng.below(n - 4);
            for (std::size_t i = 0; i < size; ++i)
                std::swap(pool[i], pool[i + rng.below(n - i)]);
            s.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(size));
            std::sort(s.begin(), s.end());
            if (!agree(s)) return rep;
        }
    }
    return rep;
}

namespace {

// Kuhn's augmenting-path matching on vertex -> partite-set membership.
bool augment(std::size_t left, const std::vector<std::vector<std::size_t>>& adj,
             std::vector<bool>& visited, std::vector<std::ptrdiff_t>& match_right) {
    for (std::size_t right : adj[left]) {
        if (visited[right]) continue;
        visited[right] = true;
        if (match_right[right] < 0 ||
            augment(static_cast<std::size_t>(match_right[right]), adj, visited, match_right)) {
            match_right[right] = static_cast<std::ptrdiff_t>(left);
            return true;
        }
    }
    return false;
}

} // namespace

bool sdr_check(const Graph& g, const OddCover& c, const std::vector<std::size_t>& basis) {
    if (!is_perfect(g, c)) throw std::invalid_argument("sdr_check: cover is not perfect for g");
    const std::size_t two_k = 2 * c.bicliques.size();
    if (basis.size() != two_k || !g.adjacency().rows_independent(basis))
        throw std::invalid_argument("sdr_check: basis must index a row basis of A_G");

    std::vector<std::vector<std::size_t>> adj(two_k);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = 0; j < c.bicliques.size(); ++j) {
            if (c.bicliques[j].x.test(basis[i])) adj[i].push_back(2 * j);
            if (c.bicliques[j].y.test(basis[i])) adj[i].push_back(2 * j + 1);
        }
    }
    std::vector<std::ptrdiff_t> match_right(two_k, -1);
    std::size_t matched = 0;
    for (std::size_t left = 0; left < two_k; ++left) {
        std::vector<bool> visited(two_k, false);
        if (augment(left, adj, visited, match_right)) ++matched;
    }
    return matched == two_k;
}

EvenCliqueReport even_clique_props(const OddCover& c, std::size_t two_k, std::size_t samples,
                                   std::uint64_t seed) {
    const Graph clique = Graph::complete(two_k);
    if (c.n != two_k || !is_perfect(clique, c))
        throw std::invalid_argument("even_clique_props: not a perfect odd cover of K_{2k}");

    EvenCliqueReport rep;
    const std::size_t k = c.bicliques.size();
    const std::size_t residue = k % 2 == 1 ? 1 : 3;

    for (std::size_t i = 0; i < k && rep.part_sizes.passed; ++i) {
        const std::size_t xs = c.bicliques[i].x.count(), ys = c.bicliques[i].y.count();
        if (xs % 4 != residue || ys % 4 != residue) {
            rep.part_sizes.passed = false;
            rep.part_sizes.detail = "biclique " + std::to_string(i) + " has part sizes " +
                                    std::to_string(xs) + "," + std::to_string(ys) +
                                    " (want " + std::to_string(residue) + " mod 4)";
        }
    }

    for (std::size_t i = 0; i < k && rep.pairwise_intersections.passed; ++i) {
        for (std::size_t j = i + 1; j < k && rep.pairwise_intersections.passed; ++j) {
            const auto& a = c.bicliques[i];
            const auto& b = c.bicliques[j];
            const bool ok = a.x.count_and(b.x) % 2 == 1 && a.x.count_and(b.y) % 2 == 1 &&
                            a.y.count_and(b.x) % 2 == 1 && a.y.count_and(b.y) % 2 == 1;
            if (!ok) {
                rep.pairwise_intersections.passed = false;
                rep.pairwise_intersections.detail =
                    "bicliques " + std::to_string(i) + "," + std::to_string(j) +
                    " have an even part intersection";
            }
        }
    }

    for (std::size_t v = 0; v < two_k && rep.odd_membership.passed; ++v) {
        std::size_t memberships = 0;
        for (const auto& b : c.bicliques) memberships += b.x.test(v) || b.y.test(v);
        if (memberships % 2 == 0) {
            rep.odd_membership.passed = false;
            rep.odd_membership.detail =
                "vertex " + std::to_string(v) + " lies in " + std::to_string(memberships) +
                " biclique supports";
        }
    }

    auto subset_admits_odd_pair = [&](const BitVec& a) {
        for (const auto& b : c.bicliques)
            if (b.x.count_and(a) % 2 == 1 && b.y.count_and(a) % 2 == 1) return true;
        return false;
    };
    auto fail_subset = [&](const BitVec& a) {
        rep.subset_parity.passed = false;
        rep.subset_parity.detail = "subset " + subset_str(a.to_indices()) + " admits no biclique "
                                   "meeting it oddly on both sides";
    };

    if (two_k <= 12) {
        for (std::uint32_t mask = 1; mask < (1u << two_k) && rep.subset_parity.passed; ++mask) {
            const int size = std::popcount(mask);
            if (size % 4 != 2 && size % 4 != 3) continue;
            BitVec a(two_k);
            for (std::size_t v = 0; v < two_k; ++v)
                if ((mask >> v) & 1) a.set(v);
            if (!subset_admits_odd_pair(a)) fail_subset(a);
        }
    } else {
        SplitMix64 rng(seed);
        std::vector<std::size_t> pool(two_k);
        for (const std::size_t residue_class : {std::size_t{2}, std::size_t{3}}) {
            std::vector<std::size_t> sizes;
            for (std::size_t s = 2; s <= two_k; ++s)
                if (s % 4 == residue_class) sizes.push_back(s);
            if (sizes.empty()) continue;
            for (std::size_t t = 0; t < samples && rep.subset_parity.passed; ++t) {
                const std::size_t size = sizes[rng.below(sizes.size())];
                std::iota(pool.begin(), pool.end(), std::size_t{0});
                BitVec a(two_k);
                for (std::size_t i = 0; i < size; ++i) {
                    std::swap(pool[i], pool[i + rng.below(two_k - i)]);
                    a.set(pool[i]);
                }
                if (!subset_admits_odd_pair(a)) fail_subset(a);
            }
        }
    }
    return rep;
}

bool same_type_check(const OddCover& c,
                     const std::vector<std::pair<std::size_t, std::size_t>>& pairing) {
    std::vector<bool> seen(c.n, false);
    for (auto [u, v] : pairing) {
        if (u >= c.n || v >= c.n || u == v || seen[u] || seen[v])
            throw std::invalid_argument("same_type_check: pairing is not a partition");
        seen[u] = seen[v] = true;
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end())
        throw std::invalid_argument("same_type_check: pairing is not a partition");

    for (auto [u, v] : pairing)
        for (const auto& b : c.bicliques)
            if ((b.x.test(u) || b.y.test(u)) != (b.x.test(v) || b.y.test(v))) return false;
    return true;
}

std::vector<std::size_t> adjacency_row_basis(const Graph& g) {
    const F2Matrix adj = g.adjacency();
    std::vector<BitVec> kept;
    std::vector<std::size_t> basis;
    for (std::size_t v = 0; v < g.size(); ++v) {
        std::vector<BitVec> trial = kept;
        trial.push_back(adj.row(v));
        if (reduced_row_echelon(trial).size() == kept.size() + 1) {
            kept.push_back(adj.row(v));
            basis.push_back(v);
        }
    }
    return basis;
}

} // namespace oddcover
