// Command-line front end: constructions, verification, exact search,
// and structural property checks, wired for reproducible batch runs.
// Covers travel as JSON (files or stdin/stdout), graphs as edge lists.

#include <CLI11.hpp>

#include "oddcover/constructions.hpp"
#include "oddcover/cover.hpp"
#include "oddcover/io.hpp"
#include "oddcover/properties.hpp"
#include "oddcover/search.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

namespace {

constexpr int kExitOk = 0;       // success / valid / found
constexpr int kExitRefuted = 1;  // invalid / refuted
constexpr int kExitTimeout = 2;  // timeout / truncated
constexpr int kExitUsage = 3;    // usage or input errors

oddcover::Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(path + ": cannot open");
    try {
        return oddcover::read_edge_list(in);
    } catch (const oddcover::ParseError& e) {
        throw std::runtime_error(path + ":" + std::to_string(e.line) + ": " + e.what());
    }
}

oddcover::OddCover load_cover(const std::string& path) {
    if (path.empty() || path == "-") return oddcover::read_cover_json(std::cin);
    std::ifstream in(path);
    if (!in) throw std::runtime_error(path + ": cannot open");
    try {
        return oddcover::read_cover_json(in);
    } catch (const oddcover::ParseError& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

void emit_cover(const oddcover::OddCover& c, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        oddcover::write_cover_json(std::cout, c);
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error(out_path + ": cannot open for writing");
    oddcover::write_cover_json(out, c);
}

std::uint64_t resolve_seed(std::uint64_t flag_seed, bool flag_given) {
    if (flag_given) return flag_seed;
    if (const char* env = std::getenv("ODDCOVER_SEED")) return std::strtoull(env, nullptr, 10);
    return 0x5eed;
}

std::vector<std::size_t> parse_size_list(const std::string& csv) {
    std::vector<std::size_t> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stoull(item));
    }
    return out;
}

int run_construct(const std::string& name, const std::vector<std::string>& params,
                  const std::string& base_path, const std::string& odd_csv,
                  const std::string& even_csv, const std::string& out_path) {
    using namespace oddcover;
    auto num = [&](std::size_t i) {
        if (i >= params.size()) throw std::runtime_error("construct " + name + ": missing parameter");
        return std::stoull(params[i]);
    };

    OddCover cover(0);
    if (name == "double") {
        if (params.empty()) throw std::runtime_error("construct double: need a graph file");
        cover = double_cover(load_graph(params[0]));
    } else if (name == "odd-clique") {
        cover = odd_clique_cover(num(0));
    } else if (name == "odd-clique-union") {
        std::vector<std::size_t> ms;
        for (const auto& p : params) ms.push_back(std::stoull(p));
        cover = odd_clique_union_cover(ms);
    } else if (name == "even-cycle") {
        cover = even_cycle_cover(num(0));
    } else if (name == "cycle-union") {
        cover = cycle_union_cover(parse_size_list(odd_csv), parse_size_list(even_csv));
    } else if (name == "pairs-18mod24") {
        cover = pairs_to_cover(pairs_18mod24(num(0)));
    } else if (name == "pairs-6mod24") {
        cover = pairs_to_cover(pairs_6mod24(num(0)));
    } else if (name == "tomon") {
        cover = hyperplane_cover(num(0));
    } else if (name == "field-lift") {
        if (base_path.empty()) throw std::runtime_error("construct field-lift: need --base cover");
        const GFContext ctx(static_cast<std::uint32_t>(num(0)),
                            static_cast<std::uint32_t>(num(1)));
        cover = field_lift_cover(ctx, num(2), load_cover(base_path));
    } else {
        throw std::runtime_error("construct: unknown name \"" + name + "\"");
    }
    emit_cover(cover, out_path);
    return kExitOk;
}

int run_verify(const std::string& graph_path, const std::string& cover_path, bool perfect) {
    using namespace oddcover;
    const Graph g = load_graph(graph_path);
    const OddCover c = load_cover(cover_path);
    const VerifyReport rep = verify(g, c);
    if (!rep.valid) {
        std::cout << "invalid (" << rep.violations.size() << " violating pairs)\n";
        for (const auto& v : rep.violations)
            std::cout << "  (" << v.u << "," << v.v << ") " << (v.is_edge ? "edge" : "nonedge")
                      << " covered " << v.count << " times\n";
        return kExitRefuted;
    }
    if (perfect) {
        if (!is_perfect(g, c)) {
            std::cout << "valid but not perfect: " << c.size() << " bicliques vs rank "
                      << g.adjacency().rank() << "\n";
            return kExitRefuted;
        }
        std::cout << "perfect odd cover: " << c.size() << " bicliques\n";
        return kExitOk;
    }
    std::cout << "valid odd cover: " << c.size() << " bicliques\n";
    return kExitOk;
}

int run_rank(const std::string& graph_path, bool twins) {
    const oddcover::Graph g = load_graph(graph_path);
    std::cout << (twins ? oddcover::rank_via_twins(g) : g.adjacency().rank()) << "\n";
    return kExitOk;
}

int run_even_cores(const std::string& graph_path, std::size_t cap) {
    const oddcover::Graph g = load_graph(graph_path);
    const oddcover::EvenCores ec = oddcover::even_cores(g, cap);
    if (ec.truncated) std::cout << "truncated: kernel basis only\n";
    for (const auto& core : ec.cores) {
        const auto idx = core.to_indices();
        for (std::size_t i = 0; i < idx.size(); ++i) std::cout << (i ? " " : "") << idx[i];
        std::cout << "\n";
    }
    return ec.truncated ? kExitTimeout : kExitOk;
}

int run_search(const std::string& graph_path, long max_k, double budget, int threads,
               const std::string& out_path) {
    using namespace oddcover;
    const Graph g = load_graph(graph_path);
    SearchOptions opts;
    opts.budget = std::chrono::duration<double>(budget);
    opts.threads = threads;

    if (max_k >= 0) {
        for (std::size_t k = lower_bound(g).value; k <= static_cast<std::size_t>(max_k); ++k) {
            const SearchResult r = has_cover_of_size(g, k, opts);
            if (r.status == SearchStatus::timeout) {
                std::cout << "timeout at k = " << k << "\n";
                return kExitTimeout;
            }
            if (r.status == SearchStatus::yes) {
                std::cout << "b2 = " << k << "\n";
                for (const auto& l : r.witness) std::cout << l.str() << "\n";
                if (!out_path.empty()) emit_cover(labeling_to_cover(r.witness), out_path);
                return kExitOk;
            }
        }
        std::cout << "no cover of size <= " << max_k << "\n";
        return kExitRefuted;
    }

    const B2Result r = b2_exact(g, opts);
    if (r.status == SearchStatus::timeout) {
        std::cout << "timeout; proved b2 >= " << r.proved_lower << "\n";
        return kExitTimeout;
    }
    std::cout << "b2 = " << r.value << "\n";
    // Reconstruct the label table from the witness cover for printing.
    for (std::size_t v = 0; v < g.size(); ++v) {
        Label l;
        l.k = r.witness->size();
        for (std::size_t j = 0; j < r.witness->size(); ++j) {
            if (r.witness->bicliques[j].x.test(v)) l.zeros |= std::uint64_t{1} << j;
            else if (r.witness->bicliques[j].y.test(v)) l.ones |= std::uint64_t{1} << j;
        }
        std::cout << l.str() << "\n";
    }
    if (!out_path.empty()) emit_cover(*r.witness, out_path);
    return kExitOk;
}

int run_pairs_search(std::size_t n, double budget, int threads, const std::string& out_path) {
    using namespace oddcover;
    SearchOptions opts;
    opts.budget = std::chrono::duration<double>(budget);
    opts.threads = threads;
    const PairsResult r = pairs_search(n, opts);
    if (r.status == PairsStatus::timeout) {
        std::cout << "timeout\n";
        return kExitTimeout;
    }
    if (r.status == PairsStatus::none) {
        std::cout << "none: no pairs construction of K_" << n << "\n";
        return kExitRefuted;
    }
    for (std::size_t i = 0; i < r.matrix->size(); ++i) {
        for (std::size_t j = 0; j < r.matrix->size(); ++j) {
            const int v = r.matrix->at(i, j);
            std::cout << (j ? " " : "") << (v == 1 ? "+1" : v == -1 ? "-1" : " 0");
        }
        std::cout << "\n";
    }
    if (!out_path.empty()) emit_cover(pairs_to_cover(*r.matrix), out_path);
    return kExitOk;
}

int run_props(const std::string& graph_path, const std::string& cover_path, std::uint64_t seed,
              std::size_t samples, bool as_json) {
    using namespace oddcover;
    const Graph g = load_graph(graph_path);
    const OddCover c = load_cover(cover_path);

    bool all_ok = true;
    std::ostringstream report;

    const bool valid = verify(g, c).valid;
    const bool perfect = valid && is_perfect(g, c);
    report << "valid: " << (valid ? "pass" : "FAIL") << "\n";
    all_ok &= valid;
    report << "perfect: " << (perfect ? "yes" : "no") << "\n";

    bool correspondence = false, sdr = false;
    bool clique_checked = false;
    EvenCliqueReport clique_rep;
    if (perfect) {
        correspondence = row_correspondence_check(g, incidence_matrix(c), 200, seed).passed;
        report << "row-independence correspondence: " << (correspondence ? "pass" : "FAIL") << "\n";
        sdr = sdr_check(g, c, adjacency_row_basis(g));
        report << "basis SDR matching: " << (sdr ? "pass" : "FAIL") << "\n";
        all_ok &= correspondence && sdr;

        if (g == Graph::complete(g.size()) && g.size() % 2 == 0 && g.size() > 0) {
            clique_checked = true;
            clique_rep = even_clique_props(c, g.size(), samples, seed);
            report << "even-clique part sizes: " << (clique_rep.part_sizes.passed ? "pass" : "FAIL " + clique_rep.part_sizes.detail) << "\n";
            report << "even-clique pairwise intersections: " << (clique_rep.pairwise_intersections.passed ? "pass" : "FAIL " + clique_rep.pairwise_intersections.detail) << "\n";
            report << "even-clique odd membership: " << (clique_rep.odd_membership.passed ? "pass" : "FAIL " + clique_rep.odd_membership.detail) << "\n";
            report << "even-clique subset parity: " << (clique_rep.subset_parity.passed ? "pass" : "FAIL " + clique_rep.subset_parity.detail) << "\n";
            all_ok &= clique_rep.all_passed();
        }
    }

    if (as_json) {
        std::cout << "{\"valid\": " << (valid ? "true" : "false") << ", \"perfect\": "
                  << (perfect ? "true" : "false");
        if (perfect)
            std::cout << ", \"row_correspondence\": " << (correspondence ? "true" : "false") << ", \"sdr\": "
                      << (sdr ? "true" : "false");
        if (clique_checked)
            std::cout << ", \"even_clique\": " << (clique_rep.all_passed() ? "true" : "false");
        std::cout << "}\n";
    } else {
        std::cout << report.str();
    }
    return all_ok ? kExitOk : kExitRefuted;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"odd covers of graphs by complete bipartite graphs"};
    app.require_subcommand(1);

    // construct
    auto* construct = app.add_subcommand("construct", "emit a cover as JSON");
    std::string cname;
    std::vector<std::string> cparams;
    std::string cbase, codd, ceven, cout_path;
    construct->add_option("name", cname,
                          "double | odd-clique | odd-clique-union | even-cycle | cycle-union | "
                          "pairs-18mod24 | pairs-6mod24 | tomon | field-lift")
        ->required();
    construct->add_option("params", cparams, "construction parameters");
    construct->add_option("--base", cbase, "base cover JSON (field-lift)");
    construct->add_option("--odd", codd, "odd cycle n_i list, comma separated (cycle-union)");
    construct->add_option("--even", ceven, "even cycle m_i list, comma separated (cycle-union)");
    construct->add_option("--out", cout_path, "output file (default stdout)");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "check a cover against a graph");
    std::string vgraph, vcover;
    bool vperfect = false;
    verify_cmd->add_option("--graph", vgraph, "edge list file")->required();
    verify_cmd->add_option("--cover", vcover, "cover JSON file (default stdin)");
    verify_cmd->add_flag("--perfect", vperfect, "also require the rank bound with equality");

    // rank
    auto* rank_cmd = app.add_subcommand("rank", "F2 rank of the adjacency matrix");
    std::string rgraph;
    bool rtwins = false;
    rank_cmd->add_option("--graph", rgraph, "edge list file")->required();
    rank_cmd->add_flag("--twins", rtwins, "use the adjacent-twin reduction");

    // even-cores
    auto* cores_cmd = app.add_subcommand("even-cores", "list even cores");
    std::string egraph;
    std::size_t ecap = 20;
    cores_cmd->add_option("--graph", egraph, "edge list file")->required();
    cores_cmd->add_option("--cap", ecap, "kernel dimension cap for full enumeration");

    // search
    auto* search_cmd = app.add_subcommand("search", "exact b2 by labeling search");
    std::string sgraph, sout;
    long smaxk = -1;
    double sbudget = 60.0;
    int sthreads = 0;
    search_cmd->add_option("--graph", sgraph, "edge list file")->required();
    search_cmd->add_option("--max-k", smaxk, "stop after this cover size");
    search_cmd->add_option("--budget-seconds", sbudget, "wall clock budget (0 = unlimited)");
    search_cmd->add_option("--threads", sthreads, "worker threads (0 = default)");
    search_cmd->add_option("--out", sout, "write the witness cover JSON here");

    // pairs-search
    auto* pairs_cmd = app.add_subcommand("pairs-search", "search for a pairs construction");
    std::size_t pn = 0;
    double pbudget = 60.0;
    int pthreads = 0;
    std::string pout;
    pairs_cmd->add_option("--n", pn, "clique order (even)")->required();
    pairs_cmd->add_option("--budget-seconds", pbudget, "wall clock budget (0 = unlimited)");
    pairs_cmd->add_option("--threads", pthreads, "worker threads (0 = default)");
    pairs_cmd->add_option("--out", pout, "write the found cover JSON here");

    // props
    auto* props_cmd = app.add_subcommand("props", "structural checks on a cover");
    std::string pgraph, pcover;
    std::uint64_t pseed = 0;
    bool pseed_given = false;
    std::size_t psamples = 10000;
    bool pjson = false;
    props_cmd->add_option("--graph", pgraph, "edge list file")->required();
    props_cmd->add_option("--cover", pcover, "cover JSON file (default stdin)");
    props_cmd->add_option("--seed", pseed, "sampling seed")->each([&](const std::string&) {
        pseed_given = true;
    });
    props_cmd->add_option("--samples", psamples, "subset samples per residue class");
    props_cmd->add_flag("--json", pjson, "emit a JSON summary");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (construct->parsed())
            return run_construct(cname, cparams, cbase, codd, ceven, cout_path);
        if (verify_cmd->parsed()) return run_verify(vgraph, vcover, vperfect);
        if (rank_cmd->parsed()) return run_rank(rgraph, rtwins);
        if (cores_cmd->parsed()) return run_even_cores(egraph, ecap);
        if (search_cmd->parsed()) return run_search(sgraph, smaxk, sbudget, sthreads, sout);
        if (pairs_cmd->parsed()) return run_pairs_search(pn, pbudget, pthreads, pout);
        if (props_cmd->parsed())
            return run_props(pgraph, pcover, resolve_seed(pseed, pseed_given), psamples, pjson);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
