#include "inertial/graph6.hpp"

#include <fstream>
#include <istream>
#include <sstream>

namespace inertial {

namespace {

std::string_view strip_trailing_ws(std::string_view s) {
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' ||
                          s.back() == '\n'))
        s.remove_suffix(1);
    return s;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
    line = strip_trailing_ws(line);
    if (line.empty()) throw graph6_error("empty graph6 string");

    const unsigned char first = static_cast<unsigned char>(line[0]);
    if (first == 126)
        throw graph6_error("unsupported length: extended graph6 forms (order > 62) are not handled");
    if (first < 63 || first > 126)
        throw graph6_error("byte out of range [63,126] in graph6 header");
    const int n = first - 63;
    if (n == 0) throw graph6_error("graph6 order 0 is not a valid graph here (order must be >= 1)");

    const std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t nbytes = (nbits + 5) / 6;
    if (line.size() != 1 + nbytes) {
        std::ostringstream msg;
        msg << "malformed length: order " << n << " needs " << nbytes
            << " data bytes, got " << (line.size() - 1);
        throw graph6_error(msg.str());
    }

    std::vector<std::pair<int, int>> edges;
    std::size_t bit = 0;
    // upper triangle, column-major: (0,1),(0,2),(1,2),(0,3),...
    for (int v = 1; v < n && bit < nbits; ++v) {
        for (int u = 0; u < v; ++u, ++bit) {
            const std::size_t byte_idx = 1 + bit / 6;
            const unsigned char b = static_cast<unsigned char>(line[byte_idx]);
            if (b < 63 || b > 126)
                throw graph6_error("byte out of range [63,126] in graph6 data");
            const int shift = 5 - static_cast<int>(bit % 6);
            if (((b - 63) >> shift) & 1) edges.emplace_back(u, v);
        }
    }
    // validate any pure-padding bytes too
    for (std::size_t i = 1; i < line.size(); ++i) {
        const unsigned char b = static_cast<unsigned char>(line[i]);
        if (b < 63 || b > 126)
            throw graph6_error("byte out of range [63,126] in graph6 data");
    }
    return Graph::from_edges(n, edges, std::string(line));
}

std::string encode_graph6(const Graph& g) {
    const int n = g.order();
    if (n > 62)
        throw graph6_error("unsupported length: graphs with order > 62 need extended graph6 forms");
    std::string out;
    out.push_back(static_cast<char>(63 + n));
    int acc = 0, nbits = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
    return out;
}

Graph6File parse_graph6_lines(std::istream& in) {
    Graph6File result;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view sv = strip_trailing_ws(line);
        if (sv.empty() || sv.front() == '#') continue;
        if (sv.rfind(">>graph6<<", 0) == 0) {
            sv.remove_prefix(10);  // nauty file header, possibly prefixing the first graph
            if (sv.empty()) continue;
        }
        try {
            result.graphs.push_back(parse_graph6(sv));
        } catch (const graph6_error& e) {
            result.diagnostics.push_back("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return result;
}

Graph6File read_graph6_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw graph6_error("cannot open graph6 file: " + path);
    return parse_graph6_lines(in);
}

}  // namespace inertial
