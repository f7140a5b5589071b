#include "oddcover/io.hpp"

#include <json.hpp>

#include <istream>
#include <ostream>
#include <sstream>

namespace oddcover {

Graph read_edge_list(std::istream& in) {
    std::string text;
    std::size_t lineno = 0;
    bool have_header = false;
    std::size_t n = 0;
    Graph g;
    while (std::getline(in, text)) {
        ++lineno;
        std::istringstream line(text);
        if (!have_header) {
            std::string tag;
            if (!(line >> tag)) continue; // blank line before header
            std::size_t count;
            if (tag != "n" || !(line >> count))
                throw ParseError(lineno, "expected header \"n <vertex count>\"");
            std::string extra;
            if (line >> extra) throw ParseError(lineno, "trailing tokens after header");
            n = count;
            g = Graph(n);
            have_header = true;
            continue;
        }
        std::size_t u, v;
        if (!(line >> u)) continue; // blank line
        if (!(line >> v)) throw ParseError(lineno, "expected \"u v\" edge pair");
        std::string extra;
        if (line >> extra) throw ParseError(lineno, "trailing tokens after edge");
        if (u == v) throw ParseError(lineno, "loop edge " + std::to_string(u));
        if (u >= n || v >= n)
            throw ParseError(lineno, "vertex index out of range (n = " + std::to_string(n) + ")");
        if (g.has_edge(u, v)) throw ParseError(lineno, "duplicate edge");
        g.add_edge(u, v);
    }
    if (!have_header) throw ParseError(lineno, "missing header \"n <vertex count>\"");
    return g;
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << "n " << g.size() << "\n";
    for (std::size_t u = 0; u < g.size(); ++u)
        for (std::size_t v : g.neighbors(u).to_indices())
            if (u < v) out << u << " " << v << "\n";
}

OddCover read_cover_json(std::istream& in) {
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(0, std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("bicliques") ||
        !j["n"].is_number_unsigned() || !j["bicliques"].is_array())
        throw ParseError(0, "cover JSON must be {\"n\": int, \"bicliques\": [...]}");

    const std::size_t n = j["n"].get<std::size_t>();
    OddCover c(n);
    std::size_t index = 0;
    for (const auto& jb : j["bicliques"]) {
        const std::string where = "biclique " + std::to_string(index);
        if (!jb.is_object() || !jb.contains("x") || !jb.contains("y") || !jb["x"].is_array() ||
            !jb["y"].is_array())
            throw ParseError(0, where + " must be {\"x\": [...], \"y\": [...]}");
        BitVec x(n), y(n);
        for (const auto& side : {std::pair{&jb["x"], &x}, std::pair{&jb["y"], &y}}) {
            for (const auto& jv : *side.first) {
                if (!jv.is_number_unsigned() || jv.get<std::size_t>() >= n)
                    throw ParseError(0, where + " has a vertex index out of range");
                side.second->set(jv.get<std::size_t>());
            }
        }
        if (x.intersects(y)) throw ParseError(0, where + " has overlapping sides");
        c.add(Biclique(std::move(x), std::move(y)));
        ++index;
    }
    return c;
}

void write_cover_json(std::ostream& out, const OddCover& c) {
    nlohmann::ordered_json j;
    j["n"] = c.n;
    j["bicliques"] = nlohmann::ordered_json::array();
    for (const auto& b : c.bicliques) {
        nlohmann::ordered_json jb;
        jb["x"] = b.x.to_indices(); // ascending by construction
        jb["y"] = b.y.to_indices();
        j["bicliques"].push_back(std::move(jb));
    }
    out << j.dump(2) << "\n";
}

} // namespace oddcover
