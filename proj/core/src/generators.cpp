#include "inertial/generators.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace inertial {

namespace {

std::string join_ints(std::span<const int> v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s;
}

}  // namespace

Graph gen_empty(int n) {
    return Graph::edgeless(n, "E" + std::to_string(n));
}

Graph gen_complete(int n) {
    if (n < 1) throw std::invalid_argument("gen_complete: n must be >= 1");
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph::from_edges(n, e, "K" + std::to_string(n));
}

Graph gen_cycle(int n) {
    if (n < 3) throw std::invalid_argument("gen_cycle: n must be >= 3");
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u) e.emplace_back(u, (u + 1) % n);
    return Graph::from_edges(n, e, "C" + std::to_string(n));
}

Graph gen_path(int n) {
    if (n < 1) throw std::invalid_argument("gen_path: n must be >= 1");
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u + 1 < n; ++u) e.emplace_back(u, u + 1);
    return Graph::from_edges(n, e, "P" + std::to_string(n));
}

Graph gen_complete_multipartite(std::span<const int> parts) {
    if (parts.empty())
        throw std::invalid_argument("gen_complete_multipartite: no parts");
    int n = 0;
    for (int p : parts) {
        if (p < 1) throw std::invalid_argument("gen_complete_multipartite: each part must be >= 1");
        n += p;
    }
    std::vector<int> part_of(n);
    int idx = 0;
    for (std::size_t pi = 0; pi < parts.size(); ++pi)
        for (int j = 0; j < parts[pi]; ++j) part_of[idx++] = static_cast<int>(pi);
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (part_of[u] != part_of[v]) e.emplace_back(u, v);
    return Graph::from_edges(n, e, "K_{" + join_ints(parts) + "}");
}

Graph gen_kneser(int p, int k) {
    if (k < 1 || p < 2 * k)
        throw std::invalid_argument("gen_kneser: need p >= 2k >= 2");
    // k-subsets of {0..p-1} in lexicographic order, as bitmasks
    std::vector<std::uint64_t> subsets;
    std::vector<int> comb(k);
    for (int i = 0; i < k; ++i) comb[i] = i;
    for (;;) {
        std::uint64_t m = 0;
        for (int c : comb) m |= 1ULL << c;
        subsets.push_back(m);
        int i = k - 1;
        while (i >= 0 && comb[i] == p - k + i) --i;
        if (i < 0) break;
        ++comb[i];
        for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
    }
    const int n = static_cast<int>(subsets.size());
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if ((subsets[u] & subsets[v]) == 0) e.emplace_back(u, v);
    return Graph::from_edges(n, e,
                             "Kneser(" + std::to_string(p) + "," + std::to_string(k) + ")");
}

Graph gen_generalized_petersen(int n, int k) {
    if (n < 3 || k < 1 || 2 * k >= n)
        throw std::invalid_argument("gen_generalized_petersen: need n >= 3, 1 <= k < n/2");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) {
        e.emplace_back(i, (i + 1) % n);          // outer cycle
        e.emplace_back(i, n + i);                // spoke
        e.emplace_back(n + i, n + (i + k) % n);  // inner star polygon
    }
    return Graph::from_edges(2 * n, e,
                             "GP(" + std::to_string(n) + "," + std::to_string(k) + ")");
}

Graph gen_barbell(int n) {
    if (n < 3) throw std::invalid_argument("gen_barbell: n must be >= 3");
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            e.emplace_back(u, v);
            e.emplace_back(n + u, n + v);
        }
    e.emplace_back(n - 1, n);  // the bridge
    return Graph::from_edges(2 * n, e, "Barbell(" + std::to_string(n) + ")");
}

}  // namespace inertial
