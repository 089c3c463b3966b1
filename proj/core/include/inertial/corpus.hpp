#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "inertial/graph.hpp"

namespace inertial {

/// 2^(n(n-1)/2); n <= 7.
std::uint64_t labeled_graph_count(int n);

/// The index-th labeled graph on n vertices. Bit k of index drives edge k
/// in graph6 column order (0,1),(0,2),(1,2),(0,3),...; the graph is named
/// by its graph6 string.
Graph labeled_graph_by_index(int n, std::uint64_t index);

/// Streams all labeled graphs on n vertices in index order, exactly once
/// each. n <= 7 (2^21 graphs) is enforced.
void enumerate_labeled_graphs(int n, const std::function<void(Graph&&)>& sink);

/// Corpus selector: "exhaustive:N" or "exhaustive:A-B", "file:PATH", or
/// "family:SPEC" where SPEC is one or more ';'-separated generator calls
/// like kneser(5..8,2). Integer arguments may be "a..b" ranges; ranged
/// calls expand by Cartesian product, leftmost argument outermost.
struct CorpusSpec {
    enum class Kind { exhaustive, file, family };
    Kind kind = Kind::exhaustive;
    int order_min = 0;    // exhaustive
    int order_max = 0;    // exhaustive (inclusive)
    std::string path;     // file
    std::string family;   // family spec text
    std::string text;     // the original selector, echoed into reports
};

CorpusSpec parse_corpus_spec(const std::string& text);  // std::invalid_argument on bad syntax

/// Expands a family spec (the part after "family:") into graphs.
std::vector<Graph> expand_family_spec(const std::string& spec);

/// Resolves one CLI graph argument: "@PATH" (graph6 file), a family
/// instance like cycle(7) or petersen, or a graph6 literal.
struct ResolvedGraphs {
    std::vector<Graph> graphs;
    std::vector<std::string> diagnostics;  // parse problems from @file inputs
};

ResolvedGraphs resolve_graph_argument(const std::string& text);

}  // namespace inertial
