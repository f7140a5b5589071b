#include "oddcover/constructions.hpp"

#include <stdexcept>

namespace oddcover {

namespace {

OddCover embedded(const OddCover& c, std::size_t offset, std::size_t host_n) {
    OddCover out(host_n);
    for (const auto& b : c.bicliques) {
        BitVec x(host_n), y(host_n);
        for (std::size_t v : b.x.to_indices()) x.set(offset + v);
        for (std::size_t v : b.y.to_indices()) y.set(offset + v);
        out.add(Biclique(std::move(x), std::move(y)));
    }
    return out;
}

} // namespace

void SignedPairsMatrix::set(std::size_t i, std::size_t j, std::int8_t v) {
    if (v < -1 || v > 1) throw std::invalid_argument("SignedPairsMatrix: entry not in {-1,0,1}");
    entries_.at(i).at(j) = v;
}

SignedPairsMatrix::ConditionReport SignedPairsMatrix::validate() const {
    ConditionReport rep;
    for (std::size_t i = 0; i < size_ && rep.rows_odd_support; ++i) {
        std::size_t nnz = 0;
        for (std::size_t j = 0; j < size_; ++j) nnz += entries_[i][j] != 0;
        if (nnz % 2 == 0) {
            rep.rows_odd_support = false;
            rep.detail = "row " + std::to_string(i) + " has even support " + std::to_string(nnz);
        }
    }
    for (std::size_t i = 0; i < size_; ++i) {
        for (std::size_t j = i + 1; j < size_; ++j) {
            std::size_t equal = 0, opposite = 0;
            for (std::size_t col = 0; col < size_; ++col) {
                const int a = entries_[i][col], b = entries_[j][col];
                if (a == 0 || b == 0) continue;
                (a == b ? equal : opposite) += 1;
            }
            if (opposite % 2 == 0 && rep.pairwise_opposite_odd) {
                rep.pairwise_opposite_odd = false;
                if (rep.detail.empty())
                    rep.detail = "rows " + std::to_string(i) + "," + std::to_string(j) +
                                 " have even opposite-sign count";
            }
            if (equal % 2 == 0 && rep.pairwise_equal_odd) {
                rep.pairwise_equal_odd = false;
                if (rep.detail.empty())
                    rep.detail = "rows " + std::to_string(i) + "," + std::to_string(j) +
                                 " have even equal-sign count";
            }
        }
    }
    return rep;
}

OddCover double_cover(const Graph& h) {
    const std::size_t k = h.size();
    OddCover out(2 * k);
    // Grow over mirrored pairs (v_i, w_i) = (i, k + i): each new pair i
    // contributes biclique i with X_i = {v_i, w_i}; edges v_j v_i put
    // v_i into Y_j and w_j into Y_i.
    std::vector<BitVec> ys(k, BitVec(2 * k));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (h.has_edge(j, i)) {
                ys[j].set(i);     // v_i joins Y_j
                ys[i].set(k + j); // w_j joins Y_i
            }
        }
    }
    for (std::size_t i = 0; i < k; ++i) {
        BitVec x(2 * k);
        x.set(i);
        x.set(k + i);
        out.add(Biclique(std::move(x), std::move(ys[i])));
    }
    return out;
}

OddCover odd_clique_cover(std::size_t k) {
    if (k < 1) throw std::invalid_argument("odd_clique_cover: need k >= 1");
    return odd_clique_union_cover({k});
}

OddCover odd_clique_union_cover(const std::vector<std::size_t>& ms) {
    if (ms.empty()) throw std::invalid_argument("odd_clique_union_cover: empty list");
    for (std::size_t m : ms)
        if (m < 1) throw std::invalid_argument("odd_clique_union_cover: need m_i >= 1");

    // Clique i occupies a consecutive block (u_i, v_{i,1..m_i}, w_{i,1..m_i}).
    std::vector<std::size_t> offset(ms.size());
    std::size_t n = 0;
    for (std::size_t i = 0; i < ms.size(); ++i) {
        offset[i] = n;
        n += 2 * ms[i] + 1;
    }

    BitVec all_v(n), all_w(n);
    for (std::size_t i = 0; i < ms.size(); ++i) {
        for (std::size_t t = 0; t < ms[i]; ++t) {
            all_v.set(offset[i] + 1 + t);
            all_w.set(offset[i] + 1 + ms[i] + t);
        }
    }

    OddCover out(n);
    for (std::size_t i = 0; i < ms.size(); ++i) {
        const std::size_t u = offset[i];
        const std::size_t v0 = offset[i] + 1;
        const std::size_t w0 = v0 + ms[i];
        const OddCover mirrored = double_cover(Graph::complete(ms[i]));
        for (std::size_t t = 0; t < ms[i]; ++t) {
            const Biclique& b = mirrored.bicliques[t];
            BitVec x(n), y(n);
            for (std::size_t s : b.x.to_indices())
                x.set(s < ms[i] ? v0 + s : w0 + (s - ms[i]));
            for (std::size_t s : b.y.to_indices())
                y.set(s < ms[i] ? v0 + s : w0 + (s - ms[i]));
            // Apex of clique i plus every other clique's v-block.
            y.set(u);
            y |= all_v;
            for (std::size_t t2 = 0; t2 < ms[i]; ++t2) y.set(v0 + t2, b.y.test(t2));
            out.add(Biclique(std::move(x), std::move(y)));
        }
    }
    out.add(Biclique(all_v, all_w));
    return out;
}

Graph odd_clique_union_target(const std::vector<std::size_t>& ms) {
    std::vector<Graph> parts;
    parts.reserve(ms.size());
    for (std::size_t m : ms) parts.push_back(Graph::complete(2 * m + 1));
    return disjoint_union(parts);
}

OddCover even_cycle_cover(std::size_t m) {
    if (m < 2) throw std::invalid_argument("even_cycle_cover: need m >= 2");
    const std::size_t n = 2 * m;
    OddCover out(n);
    for (std::size_t i = 1; i < m; ++i) {
        BitVec x(n), y(n);
        x.set(2 * (i - 1));
        x.set(2 * i);
        y.set(2 * i - 1);
        y.set(n - 1);
        out.add(Biclique(std::move(x), std::move(y)));
    }
    return out;
}

OddCover cycle_extension(const OddCover& c, std::size_t target) {
    const std::size_t start = c.n;
    if (start < 3 || start % 2 == 0)
        throw std::invalid_argument("cycle_extension: cover host is not an odd cycle length");
    if (target % 2 == 0 || target < start)
        throw std::invalid_argument("cycle_extension: target parity/size mismatch");
    OddCover cur = c;
    while (cur.n < target) {
        const std::size_t len = cur.n;
        OddCover next = embedded(cur, 1, len + 2);
        BitVec x(len + 2), y(len + 2);
        x.set(0);
        x.set(len);
        y.set(1);
        y.set(len + 1);
        next.add(Biclique(std::move(x), std::move(y)));
        cur = std::move(next);
    }
    return cur;
}

OddCover cycle_union_cover(const std::vector<std::size_t>& odd_ns,
                           const std::vector<std::size_t>& even_ms) {
    if (odd_ns.empty())
        throw std::invalid_argument("cycle_union_cover: need at least one odd cycle");
    for (std::size_t v : odd_ns)
        if (v < 1) throw std::invalid_argument("cycle_union_cover: need n_i >= 1");
    for (std::size_t v : even_ms)
        if (v < 2) throw std::invalid_argument("cycle_union_cover: need m_i >= 2");

    const std::size_t t = odd_ns.size();
    std::vector<std::size_t> offset(t + even_ms.size());
    std::size_t n = 0;
    for (std::size_t i = 0; i < t; ++i) {
        offset[i] = n;
        n += 2 * odd_ns[i] + 1;
    }
    for (std::size_t i = 0; i < even_ms.size(); ++i) {
        offset[t + i] = n;
        n += 2 * even_ms[i];
    }

    OddCover out(n);

    // tC_3 core: the extension ladder of odd cycle i leaves its seed
    // triangle on positions n_i-1, n_i, n_i+1 of the block.
    const OddCover core = odd_clique_union_cover(std::vector<std::size_t>(t, 1));
    for (const auto& b : core.bicliques) {
        BitVec x(n), y(n);
        for (std::size_t s : b.x.to_indices())
            x.set(offset[s / 3] + (odd_ns[s / 3] - 1) + s % 3);
        for (std::size_t s : b.y.to_indices())
            y.set(offset[s / 3] + (odd_ns[s / 3] - 1) + s % 3);
        out.add(Biclique(std::move(x), std::move(y)));
    }

    // K_{2,2} ladder per odd cycle, widest rung last.
    for (std::size_t i = 0; i < t; ++i) {
        std::size_t d = odd_ns[i] - 1, len = 3;
        while (d > 0) {
            --d;
            BitVec x(n), y(n);
            x.set(offset[i] + d);
            x.set(offset[i] + d + len);
            y.set(offset[i] + d + 1);
            y.set(offset[i] + d + len + 1);
            out.add(Biclique(std::move(x), std::move(y)));
            len += 2;
        }
    }

    for (std::size_t i = 0; i < even_ms.size(); ++i) {
        const OddCover ec = embedded(even_cycle_cover(even_ms[i]), offset[t + i], n);
        for (const auto& b : ec.bicliques) out.add(b);
    }
    return out;
}

Graph cycle_union_target(const std::vector<std::size_t>& odd_ns,
                         const std::vector<std::size_t>& even_ms) {
    std::vector<Graph> parts;
    for (std::size_t v : odd_ns) parts.push_back(Graph::cycle(2 * v + 1));
    for (std::size_t v : even_ms) parts.push_back(Graph::cycle(2 * v));
    return disjoint_union(parts);
}

OddCover pairs_to_cover(const SignedPairsMatrix& m) {
    const std::size_t n = 2 * m.size();
    OddCover out(n);
    for (std::size_t j = 0; j < m.size(); ++j) {
        BitVec x(n), y(n);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m.at(i, j) == 1) {
                x.set(2 * i);
                y.set(2 * i + 1);
            } else if (m.at(i, j) == -1) {
                x.set(2 * i + 1);
                y.set(2 * i);
            }
        }
        out.add(Biclique(std::move(x), std::move(y)));
    }
    return out;
}

namespace {

// Alternating-sign block: zero diagonal, +1 at odd distance above the
// diagonal and even distance below, -1 otherwise.
int c_entry(std::size_t i, std::size_t j) {
    if (i == j) return 0;
    if (j > i) return (j - i) % 2 == 1 ? 1 : -1;
    return (i - j) % 2 == 0 ? 1 : -1;
}

SignedPairsMatrix pairs_block_matrix(std::size_t n) {
    const std::size_t size = n / 2, block = n / 6;
    SignedPairsMatrix m(size);
    // Block layout [[A,C,B],[C,B,A],[B,A,C]].
    static constexpr char kLayout[3][3] = {{'A', 'C', 'B'}, {'C', 'B', 'A'}, {'B', 'A', 'C'}};
    for (std::size_t bi = 0; bi < 3; ++bi) {
        for (std::size_t bj = 0; bj < 3; ++bj) {
            for (std::size_t i = 0; i < block; ++i) {
                for (std::size_t j = 0; j < block; ++j) {
                    int v = 0;
                    if (kLayout[bi][bj] == 'A') v = 1;
                    else if (kLayout[bi][bj] == 'C') v = c_entry(i, j);
                    m.set(bi * block + i, bj * block + j, static_cast<std::int8_t>(v));
                }
            }
        }
    }
    return m;
}

} // namespace

SignedPairsMatrix pairs_18mod24(std::size_t n) {
    if (n % 24 != 18) throw std::invalid_argument("pairs_18mod24: need n = 18 (mod 24)");
    return pairs_block_matrix(n);
}

SignedPairsMatrix pairs_6mod24(std::size_t n) {
    if (n % 24 != 6 || n < 30)
        throw std::invalid_argument("pairs_6mod24: need n = 6 (mod 24), n >= 30");
    return pairs_block_matrix(n);
}

OddCover hyperplane_cover(std::size_t k) {
    if (k < 1) throw std::invalid_argument("hyperplane_cover: need k >= 1");
    const GFContext f3(3, 1);
    std::size_t n = 1;
    for (std::size_t i = 0; i < k; ++i) {
        n *= 3;
        if (n > BitVec::kMaxBits) throw std::length_error("hyperplane_cover: 3^k too large");
    }
    n -= 1;

    std::vector<GFVec> vertices;
    vertices.reserve(n);
    for (std::size_t t = 1; t <= n; ++t) {
        std::vector<GFContext::Elem> coords(k);
        std::size_t rest = t;
        for (std::size_t i = k; i-- > 0;) {
            coords[i] = static_cast<GFContext::Elem>(rest % 3);
            rest /= 3;
        }
        vertices.push_back(GFVec(f3, std::move(coords)));
    }

    OddCover out(n);
    for (const GFVec& normal : projective_normals(f3, k)) {
        BitVec x(n), y(n);
        for (std::size_t v = 0; v < n; ++v) {
            const GFContext::Elem dot = inner(vertices[v], normal);
            if (dot == 1) x.set(v);
            else if (dot == 2) y.set(v);
        }
        out.add(Biclique(std::move(x), std::move(y)));
    }
    return out;
}

OddCover field_lift_cover(const GFContext& ctx, std::size_t k, const OddCover& base) {
    if (k < 1) throw std::invalid_argument("field_lift_cover: need k >= 1");
    const std::size_t q = ctx.q();
    if (base.n != q - 1 || 2 * base.size() != q - 1 ||
        !verify(Graph::complete(q - 1), base).valid)
        throw std::invalid_argument(
            "field_lift_cover: base is not a valid perfect odd cover of K_{q-1}");

    std::size_t n = 1;
    for (std::size_t i = 0; i < k; ++i) {
        n *= q;
        if (n > BitVec::kMaxBits) throw std::length_error("field_lift_cover: q^k too large");
    }
    n -= 1; // q^k - 1 nonzero vectors

    // Vertex t-1 is the vector whose base-q digits, most significant
    // first, are the coordinates of t in lexicographic order.
    std::vector<GFVec> vertices;
    vertices.reserve(n);
    for (std::size_t t = 1; t <= n; ++t) {
        std::vector<GFContext::Elem> coords(k);
        std::size_t rest = t;
        for (std::size_t i = k; i-- > 0;) {
            coords[i] = static_cast<GFContext::Elem>(rest % q);
            rest /= q;
        }
        vertices.push_back(GFVec(ctx, std::move(coords)));
    }

    OddCover out(n);
    for (const GFVec& normal : projective_normals(ctx, k)) {
        std::vector<GFContext::Elem> labels(n);
        for (std::size_t v = 0; v < n; ++v) labels[v] = inner(vertices[v], normal);
        for (const auto& b : base.bicliques) {
            BitVec x(n), y(n);
            for (std::size_t v = 0; v < n; ++v) {
                if (labels[v] == 0) continue;
                if (b.x.test(labels[v] - 1)) x.set(v);
                else if (b.y.test(labels[v] - 1)) y.set(v);
            }
            out.add(Biclique(std::move(x), std::move(y)));
        }
    }
    return out;
}

} // namespace oddcover
