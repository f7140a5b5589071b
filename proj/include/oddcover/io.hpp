#pragma once

#include "oddcover/cover.hpp"
#include "oddcover/graph.hpp"

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace oddcover {

/// Malformed input; line is 1-based (0 when not line-oriented).
struct ParseError : std::runtime_error {
    std::size_t line;
    ParseError(std::size_t line_, const std::string& msg)
        : std::runtime_error(msg), line(line_) {}
};

/// Edge-list text format: header "n <vertex count>", then one "u v"
/// pair per line. Blank lines are ignored; loops, duplicates, and
/// out-of-range endpoints are rejected with the offending line number.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

/// Cover JSON: {"n": int, "bicliques": [{"x": [...], "y": [...]}]},
/// vertex arrays sorted ascending. The reader rejects overlapping
/// sides and out-of-range indices.
OddCover read_cover_json(std::istream& in);
void write_cover_json(std::ostream& out, const OddCover& c);

} // namespace oddcover
