#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "inertial/graph.hpp"

namespace inertial {

struct graph6_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Decodes one short-form graph6 line (order 1..62). Trailing whitespace is
/// tolerated. Extended length forms are rejected with an "unsupported
/// length" error. The resulting graph is named by its graph6 string.
Graph parse_graph6(std::string_view line);

/// Short-form graph6 encoding; requires order <= 62.
std::string encode_graph6(const Graph& g);

struct Graph6File {
    std::vector<Graph> graphs;
    std::vector<std::string> diagnostics;  // "line N: what went wrong"
};

/// One graph6 string per line. '#' comment lines, ">>graph6<<" headers and
/// blank lines are skipped; malformed lines become diagnostics and parsing
/// continues.
Graph6File parse_graph6_lines(std::istream& in);
Graph6File read_graph6_file(const std::string& path);  // throws graph6_error if unreadable

}  // namespace inertial
