#include "inertial/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>
#include <utility>

#include "inertial/generators.hpp"
#include "inertial/graph6.hpp"

namespace inertial {

namespace {

std::vector<std::pair<int, int>> column_major_edge_slots(int n) {
    std::vector<std::pair<int, int>> slots;
    slots.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) slots.emplace_back(u, v);
    return slots;
}

void check_enum_order(int n) {
    if (n < 1 || n > 7)
        throw std::invalid_argument("labeled enumeration supports 1 <= n <= 7, got " +
                                    std::to_string(n));
}

}  // namespace

std::uint64_t labeled_graph_count(int n) {
    check_enum_order(n);
    return std::uint64_t{1} << (n * (n - 1) / 2);
}

Graph labeled_graph_by_index(int n, std::uint64_t index) {
    check_enum_order(n);
    if (index >= labeled_graph_count(n))
        throw std::invalid_argument("labeled graph index out of range");
    const auto slots = column_major_edge_slots(n);
    std::vector<std::pair<int, int>> edges;
    for (std::size_t k = 0; k < slots.size(); ++k)
        if ((index >> k) & 1) edges.push_back(slots[k]);
    Graph g = Graph::from_edges(n, edges);
    return g.named(encode_graph6(g));
}

void enumerate_labeled_graphs(int n, const std::function<void(Graph&&)>& sink) {
    check_enum_order(n);
    const auto slots = column_major_edge_slots(n);
    const std::uint64_t count = labeled_graph_count(n);
    std::vector<std::pair<int, int>> edges;
    for (std::uint64_t index = 0; index < count; ++index) {
        edges.clear();
        for (std::size_t k = 0; k < slots.size(); ++k)
            if ((index >> k) & 1) edges.push_back(slots[k]);
        Graph g = Graph::from_edges(n, edges);
        std::string name = encode_graph6(g);
        sink(std::move(g).named(std::move(name)));
    }
}

namespace {

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

int parse_int(std::string_view s, const std::string& where) {
    s = trim(s);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw std::invalid_argument("bad integer '" + std::string(s) + "' in " + where);
    return value;
}

// one argument: either "k" or "a..b" (inclusive)
std::pair<int, int> parse_arg_range(std::string_view s, const std::string& where) {
    const auto dots = s.find("..");
    if (dots == std::string_view::npos) {
        const int v = parse_int(s, where);
        return {v, v};
    }
    const int a = parse_int(s.substr(0, dots), where);
    const int b = parse_int(s.substr(dots + 2), where);
    if (a > b) throw std::invalid_argument("empty range '" + std::string(s) + "' in " + where);
    return {a, b};
}

Graph build_family_instance(const std::string& name, const std::vector<int>& args,
                            const std::string& item) {
    const auto want = [&](std::size_t k) {
        if (args.size() != k)
            throw std::invalid_argument("family '" + item + "': expected " + std::to_string(k) +
                                        " argument(s), got " + std::to_string(args.size()));
    };
    if (name == "empty") {
        want(1);
        return gen_empty(args[0]);
    }
    if (name == "complete") {
        want(1);
        return gen_complete(args[0]);
    }
    if (name == "cycle") {
        want(1);
        return gen_cycle(args[0]);
    }
    if (name == "path") {
        want(1);
        return gen_path(args[0]);
    }
    if (name == "barbell") {
        want(1);
        return gen_barbell(args[0]);
    }
    if (name == "kneser") {
        want(2);
        return gen_kneser(args[0], args[1]);
    }
    if (name == "gp") {
        want(2);
        return gen_generalized_petersen(args[0], args[1]);
    }
    if (name == "multipartite") {
        if (args.empty())
            throw std::invalid_argument("family '" + item + "': needs at least one part");
        return gen_complete_multipartite(args);
    }
    if (name == "petersen") {
        want(0);
        return gen_generalized_petersen(5, 2).named("Petersen");
    }
    throw std::invalid_argument("unknown family '" + name + "'");
}

bool is_family_name(const std::string& name) {
    static const char* kNames[] = {"empty", "complete",     "cycle",    "path", "barbell",
                                   "kneser", "gp",          "multipartite", "petersen"};
    return std::any_of(std::begin(kNames), std::end(kNames),
                       [&](const char* n) { return name == n; });
}

void expand_family_item(std::string_view item_raw, std::vector<Graph>& out) {
    const std::string item(trim(item_raw));
    if (item.empty()) throw std::invalid_argument("empty family item");

    std::string name;
    std::vector<std::pair<int, int>> arg_ranges;
    const auto open = item.find('(');
    if (open == std::string::npos) {
        name = lower(trim(item));
    } else {
        if (item.back() != ')')
            throw std::invalid_argument("family '" + item + "': missing ')'");
        name = lower(trim(std::string_view(item).substr(0, open)));
        const std::string_view inner =
            std::string_view(item).substr(open + 1, item.size() - open - 2);
        if (!trim(inner).empty()) {
            std::size_t start = 0;
            while (true) {
                const auto comma = inner.find(',', start);
                const auto piece =
                    comma == std::string_view::npos ? inner.substr(start)
                                                    : inner.substr(start, comma - start);
                arg_ranges.push_back(parse_arg_range(piece, item));
                if (comma == std::string_view::npos) break;
                start = comma + 1;
            }
        }
    }
    if (!is_family_name(name)) throw std::invalid_argument("unknown family '" + name + "'");

    // Cartesian product over ranges, leftmost argument outermost
    std::vector<int> args(arg_ranges.size());
    const std::function<void(std::size_t)> walk = [&](std::size_t pos) {
        if (pos == arg_ranges.size()) {
            out.push_back(build_family_instance(name, args, item));
            return;
        }
        for (int v = arg_ranges[pos].first; v <= arg_ranges[pos].second; ++v) {
            args[pos] = v;
            walk(pos + 1);
        }
    };
    walk(0);
}

}  // namespace

std::vector<Graph> expand_family_spec(const std::string& spec) {
    std::vector<Graph> out;
    std::size_t start = 0;
    while (start <= spec.size()) {
        const auto semi = spec.find(';', start);
        const auto piece = semi == std::string::npos ? std::string_view(spec).substr(start)
                                                     : std::string_view(spec).substr(start, semi - start);
        expand_family_item(piece, out);
        if (semi == std::string::npos) break;
        start = semi + 1;
    }
    return out;
}

CorpusSpec parse_corpus_spec(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument(
            "corpus must be exhaustive:N[-M], file:PATH, or family:SPEC");
    const std::string head = lower(trim(std::string_view(text).substr(0, colon)));
    const std::string tail(trim(std::string_view(text).substr(colon + 1)));
    CorpusSpec spec;
    spec.text = text;
    if (head == "exhaustive") {
        spec.kind = CorpusSpec::Kind::exhaustive;
        const auto dash = tail.find('-');
        if (dash == std::string::npos) {
            spec.order_min = spec.order_max = parse_int(tail, "exhaustive corpus");
        } else {
            spec.order_min = parse_int(std::string_view(tail).substr(0, dash), "exhaustive corpus");
            spec.order_max = parse_int(std::string_view(tail).substr(dash + 1), "exhaustive corpus");
        }
        if (spec.order_min < 1 || spec.order_max > 7 || spec.order_min > spec.order_max)
            throw std::invalid_argument("exhaustive corpus orders must satisfy 1 <= A <= B <= 7");
        return spec;
    }
    if (head == "file") {
        if (tail.empty()) throw std::invalid_argument("file corpus needs a path");
        spec.kind = CorpusSpec::Kind::file;
        spec.path = tail;
        return spec;
    }
    if (head == "family") {
        if (tail.empty()) throw std::invalid_argument("family corpus needs a spec");
        spec.kind = CorpusSpec::Kind::family;
        spec.family = tail;
        return spec;
    }
    throw std::invalid_argument("unknown corpus kind '" + head + "'");
}

ResolvedGraphs resolve_graph_argument(const std::string& text) {
    ResolvedGraphs out;
    const std::string trimmed(trim(text));
    if (trimmed.empty()) throw std::invalid_argument("empty graph argument");
    if (trimmed.front() == '@') {
        auto file = read_graph6_file(trimmed.substr(1));
        out.graphs = std::move(file.graphs);
        out.diagnostics = std::move(file.diagnostics);
        return out;
    }
    const auto open = trimmed.find('(');
    const std::string bare = lower(open == std::string::npos ? trimmed
                                                             : trimmed.substr(0, open));
    if (open != std::string::npos || is_family_name(bare)) {
        out.graphs = expand_family_spec(trimmed);
        return out;
    }
    out.graphs.push_back(parse_graph6(trimmed));
    return out;
}

}  // namespace inertial
