#include "oddcover/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <numeric>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace oddcover {

Label Label::parse(std::string_view s) {
    if (s.size() > 64) throw std::invalid_argument("Label: more than 64 coordinates");
    Label l;
    l.k = s.size();
    for (std::size_t j = 0; j < s.size(); ++j) {
        switch (s[j]) {
        case '0': l.zeros |= std::uint64_t{1} << j; break;
        case '1': l.ones |= std::uint64_t{1} << j; break;
        case 'e': break;
        default: throw std::invalid_argument("Label: symbol must be one of 0, 1, e");
        }
    }
    return l;
}

std::string Label::str() const {
    std::string out(k, 'e');
    for (std::size_t j = 0; j < k; ++j) {
        if ((zeros >> j) & 1) out[j] = '0';
        else if ((ones >> j) & 1) out[j] = '1';
    }
    return out;
}

std::size_t clash(const Label& u, const Label& v) {
    if (u.k != v.k) throw std::invalid_argument("clash: label length mismatch");
    return static_cast<std::size_t>(std::popcount((u.zeros & v.ones) | (u.ones & v.zeros)));
}

bool odd_clash(const Label& u, const Label& v) { return clash(u, v) % 2 == 1; }

Graph label_graph(const std::vector<Label>& labels) {
    Graph g(labels.size());
    for (std::size_t u = 0; u < labels.size(); ++u)
        for (std::size_t v = u + 1; v < labels.size(); ++v)
            if (odd_clash(labels[u], labels[v])) g.add_edge(u, v);
    return g;
}

OddCover labeling_to_cover(const std::vector<Label>& labels) {
    const std::size_t k = labels.empty() ? 0 : labels[0].k;
    for (const auto& l : labels)
        if (l.k != k) throw std::invalid_argument("labeling_to_cover: mixed label lengths");
    OddCover out(labels.size());
    for (std::size_t j = 0; j < k; ++j) {
        BitVec x(labels.size()), y(labels.size());
        for (std::size_t v = 0; v < labels.size(); ++v) {
            if (labels[v].symbol(j) == 0) x.set(v);
            else if (labels[v].symbol(j) == 1) y.set(v);
        }
        out.add(Biclique(std::move(x), std::move(y)));
    }
    return out;
}

namespace {

using Clock = std::chrono::steady_clock;

struct Deadline {
    bool limited = false;
    Clock::time_point at{};

    static Deadline from(const SearchOptions& opts) {
        Deadline d;
        if (opts.budget.count() > 0) {
            d.limited = true;
            d.at = Clock::now() +
                   std::chrono::duration_cast<Clock::duration>(opts.budget);
        }
        return d;
    }
    bool passed() const { return limited && Clock::now() >= at; }
};

int resolve_threads(const SearchOptions& opts) {
#ifdef _OPENMP
    return opts.threads > 0 ? opts.threads : omp_get_max_threads();
#else
    (void)opts;
    return 1;
#endif
}

constexpr std::size_t kNoBranch = std::numeric_limits<std::size_t>::max();

enum class NodeResult { found, exhausted, aborted };

// ---------------------------------------------------------------------
// Labeling search.
//
// The label matrix (rows = vertices in search order, columns = the k
// coordinates) is explored only in a canonical form: columns must stay
// lexicographically non-decreasing top-down, and a column's first
// non-e symbol must be 0. Coordinate permutations and the per-column
// X/Y swap map covers to covers, so every labeling is equivalent to
// one the search visits.
// ---------------------------------------------------------------------

struct LabelSearchCtx {
    std::size_t n = 0, k = 0;
    std::vector<std::size_t> order;   // search position -> original vertex
    std::vector<BitVec> ordered_adj;  // adjacency in search order
    std::vector<std::uint64_t> pow3;  // 3^0 .. 3^k
    Deadline deadline;

    std::atomic<std::size_t> best{kNoBranch};
    std::atomic<bool> timed_out{false};
};

Label label_from_counter(const LabelSearchCtx& ctx, std::uint64_t counter) {
    Label l;
    l.k = ctx.k;
    for (std::size_t j = 0; j < ctx.k; ++j) {
        const int digit = static_cast<int>((counter / ctx.pow3[ctx.k - 1 - j]) % 3);
        if (digit == 0) l.zeros |= std::uint64_t{1} << j;
        else if (digit == 1) l.ones |= std::uint64_t{1} << j;
    }
    return l;
}

struct LabelRunner {
    LabelSearchCtx& ctx;
    std::size_t branch_idx;
    std::vector<Label> assigned;                   // per depth
    std::vector<std::vector<std::uint8_t>> cls;    // column classes per depth
    std::vector<std::uint64_t> touched;            // non-e columns seen, per depth
    std::uint64_t tick = 0;

    explicit LabelRunner(LabelSearchCtx& c, std::size_t idx)
        : ctx(c), branch_idx(idx), assigned(c.n, Label{}),
          cls(c.n + 1, std::vector<std::uint8_t>(c.k, 0)), touched(c.n + 1, 0) {}

    bool should_abort() {
        if ((++tick & 1023) == 0) {
            if (ctx.best.load(std::memory_order_relaxed) < branch_idx) return true;
            if (ctx.deadline.passed()) {
                ctx.timed_out.store(true, std::memory_order_relaxed);
                return true;
            }
        }
        return false;
    }

    bool candidate_ok(std::size_t depth, const Label& l) const {
        const auto& c = cls[depth];
        const std::uint64_t tm = touched[depth];
        int prev_sym = 0;
        for (std::size_t j = 0; j < ctx.k; ++j) {
            const int s = l.symbol(j);
            if (s == 1 && !((tm >> j) & 1)) return false; // untouched columns start with 0
            if (j > 0 && c[j] == c[j - 1] && s < prev_sym) return false;
            prev_sym = s;
        }
        for (std::size_t i = 0; i < depth; ++i)
            if (odd_clash(l, assigned[i]) != ctx.ordered_adj[depth].test(i)) return false;
        return true;
    }

    void push_state(std::size_t depth, const Label& l) {
        const auto& c = cls[depth];
        auto& nc = cls[depth + 1];
        std::uint8_t id = 0;
        for (std::size_t j = 0; j < ctx.k; ++j) {
            if (j > 0 && (c[j] != c[j - 1] || l.symbol(j) != l.symbol(j - 1))) ++id;
            nc[j] = id;
        }
        touched[depth + 1] = touched[depth] | l.zeros | l.ones;
    }

    NodeResult dfs(std::size_t depth) {
        if (depth == ctx.n) return NodeResult::found;
        for (std::uint64_t cand = 0; cand < ctx.pow3[ctx.k]; ++cand) {
            if (should_abort()) return NodeResult::aborted;
            const Label l = label_from_counter(ctx, cand);
            if (!candidate_ok(depth, l)) continue;
            assigned[depth] = l;
            push_state(depth, l);
            const NodeResult r = dfs(depth + 1);
            if (r != NodeResult::exhausted) return r;
        }
        return NodeResult::exhausted;
    }
};

} // namespace

SearchResult has_cover_of_size(const Graph& g, std::size_t k, const SearchOptions& opts) {
    if (k > 40) throw std::invalid_argument("has_cover_of_size: k > 40 unsupported");
    const std::size_t n = g.size();

    SearchResult res;
    if (n == 0) {
        res.status = SearchStatus::yes;
        return res;
    }

    LabelSearchCtx ctx;
    ctx.n = n;
    ctx.k = k;
    ctx.deadline = Deadline::from(opts);
    ctx.pow3.resize(k + 1);
    ctx.pow3[0] = 1;
    for (std::size_t i = 1; i <= k; ++i) ctx.pow3[i] = ctx.pow3[i - 1] * 3;

    ctx.order.resize(n);
    std::iota(ctx.order.begin(), ctx.order.end(), std::size_t{0});
    std::stable_sort(ctx.order.begin(), ctx.order.end(), [&](std::size_t a, std::size_t b) {
        return g.degree(a) > g.degree(b);
    });
    ctx.ordered_adj.assign(n, BitVec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (g.has_edge(ctx.order[i], ctx.order[j])) ctx.ordered_adj[i].set(j);

    // Top-level branches: the (first, second) label pairs that survive
    // the canonical filters. Branch order is lexicographic, so the
    // lowest successful branch carries the reproducible witness.
    const std::size_t prefix = std::min<std::size_t>(n, 2);
    std::vector<std::vector<Label>> branches;
    {
        LabelRunner probe(ctx, kNoBranch);
        for (std::uint64_t c0 = 0; c0 < ctx.pow3[k]; ++c0) {
            if (ctx.deadline.passed()) {
                SearchResult timed;
                timed.status = SearchStatus::timeout;
                return timed;
            }
            const Label l0 = label_from_counter(ctx, c0);
            if (!probe.candidate_ok(0, l0)) continue;
            if (prefix == 1) {
                branches.push_back({l0});
                continue;
            }
            probe.assigned[0] = l0;
            probe.push_state(0, l0);
            for (std::uint64_t c1 = 0; c1 < ctx.pow3[k]; ++c1) {
                const Label l1 = label_from_counter(ctx, c1);
                if (probe.candidate_ok(1, l1)) branches.push_back({l0, l1});
            }
        }
    }

    std::vector<std::vector<Label>> witnesses(branches.size());
    const int nthreads = resolve_threads(opts);

#pragma omp parallel for schedule(dynamic, 1) num_threads(nthreads)
    for (std::size_t b = 0; b < branches.size(); ++b) {
        if (ctx.best.load(std::memory_order_relaxed) < b) continue;
        if (ctx.deadline.passed()) {
            ctx.timed_out.store(true, std::memory_order_relaxed);
            continue;
        }
        LabelRunner runner(ctx, b);
        for (std::size_t d = 0; d < branches[b].size(); ++d) {
            runner.assigned[d] = branches[b][d];
            runner.push_state(d, branches[b][d]);
        }
        if (runner.dfs(prefix) == NodeResult::found) {
            std::size_t cur = ctx.best.load();
            while (b < cur && !ctx.best.compare_exchange_weak(cur, b)) {
            }
            witnesses[b].assign(runner.assigned.begin(), runner.assigned.end());
        }
    }

    const std::size_t best = ctx.best.load();
    if (best != kNoBranch) {
        res.status = SearchStatus::yes;
        res.witness.resize(n);
        for (std::size_t i = 0; i < n; ++i) res.witness[ctx.order[i]] = witnesses[best][i];
        return res;
    }
    res.status = ctx.timed_out.load() ? SearchStatus::timeout : SearchStatus::no;
    return res;
}

B2Result b2_exact(const Graph& g, const SearchOptions& opts) {
    const Deadline overall = Deadline::from(opts);
    B2Result res;
    res.proved_lower = lower_bound(g).value;

    for (std::size_t k = res.proved_lower; k <= g.size() + 1; ++k) {
        SearchOptions sub = opts;
        if (overall.limited) {
            const auto remaining = overall.at - Clock::now();
            if (remaining <= Clock::duration::zero()) {
                res.status = SearchStatus::timeout;
                return res;
            }
            sub.budget = remaining;
        }
        const SearchResult r = has_cover_of_size(g, k, sub);
        if (r.status == SearchStatus::yes) {
            res.status = SearchStatus::yes;
            res.value = k;
            res.witness = labeling_to_cover(r.witness);
            return res;
        }
        if (r.status == SearchStatus::timeout) {
            res.status = SearchStatus::timeout;
            return res;
        }
        res.proved_lower = k + 1;
    }
    throw std::logic_error("b2_exact: no cover up to n+1 bicliques"); // unreachable
}

// ---------------------------------------------------------------------
// Pairs-construction search.
//
// Rows are explored canonically: row 0 is +1^s 0^* (column permutation
// and column negation freedom), later rows have leading sign +1 (row
// negation freedom) and strictly increase (row permutation freedom).
// Column nonzero counts are the part sizes of the resulting cover, so
// they must land on the 1-or-3 mod 4 residue that part sizes of any
// perfect cover of an even clique satisfy; infeasible columns prune
// the branch.
// ---------------------------------------------------------------------

namespace {

struct RowCand {
    std::uint32_t pos = 0, neg = 0;
    std::uint32_t support() const { return pos | neg; }
};

bool rows_compatible(const RowCand& a, const RowCand& b) {
    const int same = std::popcount((a.pos & b.pos) | (a.neg & b.neg));
    const int diff = std::popcount((a.pos & b.neg) | (a.neg & b.pos));
    return (same % 2 == 1) && (diff % 2 == 1);
}

struct PairsCtx {
    std::size_t half = 0;
    std::uint32_t target = 0; // required column count residue mod 4
    std::vector<RowCand> cands; // odd support, leading +1, lexicographic
    Deadline deadline;

    std::atomic<std::size_t> best{kNoBranch};
    std::atomic<bool> timed_out{false};

    bool col_feasible(std::uint32_t count, std::size_t remaining_rows) const {
        const std::uint32_t r0 = count + ((target + 8 - count % 4) % 4);
        return r0 <= half && r0 <= count + remaining_rows;
    }
};

struct PairsRunner {
    PairsCtx& ctx;
    std::size_t branch_idx;
    std::vector<RowCand> rows;
    std::vector<std::uint32_t> col_counts;
    std::uint64_t tick = 0;

    PairsRunner(PairsCtx& c, std::size_t idx)
        : ctx(c), branch_idx(idx), rows(c.half), col_counts(c.half, 0) {}

    bool should_abort() {
        if ((++tick & 1023) == 0) {
            if (ctx.best.load(std::memory_order_relaxed) < branch_idx) return true;
            if (ctx.deadline.passed()) {
                ctx.timed_out.store(true, std::memory_order_relaxed);
                return true;
            }
        }
        return false;
    }

    bool place(std::size_t depth, const RowCand& row) {
        for (std::size_t i = 0; i < depth; ++i)
            if (!rows_compatible(rows[i], row)) return false;
        for (std::size_t c = 0; c < ctx.half; ++c)
            col_counts[c] += (row.support() >> c) & 1;
        const std::size_t remaining = ctx.half - depth - 1;
        for (std::size_t c = 0; c < ctx.half; ++c) {
            if (!ctx.col_feasible(col_counts[c], remaining)) {
                unplace(row);
                return false;
            }
        }
        rows[depth] = row;
        return true;
    }

    void unplace(const RowCand& row) {
        for (std::size_t c = 0; c < ctx.half; ++c)
            col_counts[c] -= (row.support() >> c) & 1;
    }

    // min_idx: candidates below this index are skipped (sorted rows).
    NodeResult dfs(std::size_t depth, std::size_t min_idx) {
        if (depth == ctx.half) return NodeResult::found;
        for (std::size_t i = min_idx; i < ctx.cands.size(); ++i) {
            if (should_abort()) return NodeResult::aborted;
            if (!place(depth, ctx.cands[i])) continue;
            const NodeResult r = dfs(depth + 1, i + 1);
            if (r != NodeResult::exhausted) return r;
            unplace(ctx.cands[i]);
        }
        return NodeResult::exhausted;
    }
};

} // namespace

PairsResult pairs_search(std::size_t n, const SearchOptions& opts) {
    if (n % 2 != 0 || n == 0) throw std::invalid_argument("pairs_search: n must be even, n >= 2");
    const std::size_t half = n / 2;
    if (half > 14)
        throw std::invalid_argument("pairs_search: n > 28 exceeds the exhaustive row enumeration");

    PairsResult res;
    PairsCtx ctx;
    ctx.half = half;
    ctx.target = half % 2 == 1 ? 1 : 3;
    ctx.deadline = Deadline::from(opts);

    if (!ctx.col_feasible(0, half)) {
        res.status = PairsStatus::none; // part-size residue unreachable at this order
        return res;
    }

    // All sign rows with odd support and leading entry +1, in
    // lexicographic order (digit order: 0, +1, -1; column 0 first).
    // The row-sortedness reduction is valid for any fixed total order.
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < half; ++i) total *= 3;
    for (std::uint64_t counter = 0; counter < total; ++counter) {
        RowCand cand;
        std::uint64_t rest = counter;
        for (std::size_t c = half; c-- > 0;) {
            const int digit = static_cast<int>(rest % 3);
            rest /= 3;
            if (digit == 1) cand.pos |= std::uint32_t{1} << c;
            else if (digit == 2) cand.neg |= std::uint32_t{1} << c;
        }
        if (std::popcount(cand.support()) % 2 == 0) continue;
        const int lead = std::countr_zero(cand.support());
        if (!((cand.pos >> lead) & 1)) continue;
        ctx.cands.push_back(cand);
    }

    // Row 0 candidates: +1^s 0^* for odd s.
    std::vector<RowCand> row0;
    for (std::size_t s = 1; s <= half; s += 2) {
        RowCand r;
        r.pos = (std::uint32_t{1} << s) - 1;
        row0.push_back(r);
    }

    struct Branch {
        RowCand r0;
        std::size_t idx1 = 0; // into ctx.cands; unused when half == 1
    };
    std::vector<Branch> branches;
    for (const RowCand& r0 : row0) {
        if (half == 1) {
            branches.push_back({r0, 0});
            continue;
        }
        for (std::size_t i = 0; i < ctx.cands.size(); ++i)
            if (rows_compatible(r0, ctx.cands[i])) branches.push_back({r0, i});
    }

    std::vector<std::vector<RowCand>> found(branches.size());
    const int nthreads = resolve_threads(opts);

#pragma omp parallel for schedule(dynamic, 1) num_threads(nthreads)
    for (std::size_t b = 0; b < branches.size(); ++b) {
        if (ctx.best.load(std::memory_order_relaxed) < b) continue;
        if (ctx.deadline.passed()) {
            ctx.timed_out.store(true, std::memory_order_relaxed);
            continue;
        }
        PairsRunner runner(ctx, b);
        bool ok = runner.place(0, branches[b].r0);
        std::size_t depth = 1;
        if (ok && half > 1) {
            ok = runner.place(1, ctx.cands[branches[b].idx1]);
            depth = 2;
        }
        if (!ok) continue;
        if (runner.dfs(depth, half > 1 ? branches[b].idx1 + 1 : 0) == NodeResult::found) {
            std::size_t cur = ctx.best.load();
            while (b < cur && !ctx.best.compare_exchange_weak(cur, b)) {
            }
            found[b] = runner.rows;
        }
    }

    const std::size_t best = ctx.best.load();
    if (best != kNoBranch) {
        SignedPairsMatrix m(half);
        for (std::size_t i = 0; i < half; ++i) {
            for (std::size_t c = 0; c < half; ++c) {
                if ((found[best][i].pos >> c) & 1) m.set(i, c, 1);
                else if ((found[best][i].neg >> c) & 1) m.set(i, c, -1);
            }
        }
        res.status = PairsStatus::found;
        res.matrix = std::move(m);
        return res;
    }
    res.status = ctx.timed_out.load() ? PairsStatus::timeout : PairsStatus::none;
    return res;
}

} // namespace oddcover
