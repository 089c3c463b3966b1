#include "inertial/checks.hpp"

#include <algorithm>
#include <cctype>

#include "inertial/bounds.hpp"
#include "inertial/coloring.hpp"
#include "inertial/fractional.hpp"
#include "inertial/rng.hpp"
#include "inertial/srg.hpp"

namespace inertial {

std::string to_string(ClaimId id) {
    switch (id) {
        case ClaimId::theorem1: return "THEOREM1";
        case ClaimId::corollary1: return "COROLLARY1";
        case ClaimId::conjecture1: return "CONJECTURE1";
        case ClaimId::theorem3: return "THEOREM3";
        case ClaimId::conjecture2: return "CONJECTURE2";
        case ClaimId::corollary3: return "COROLLARY3";
    }
    return "?";
}

std::string to_cli_string(ClaimId id) {
    std::string s = to_string(id);
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

std::optional<ClaimId> claim_from_string(std::string_view s) {
    std::string lower(s);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    for (ClaimId id : kAllClaims)
        if (lower == to_cli_string(id)) return id;
    return std::nullopt;
}

std::string to_string(const Verdict& v) {
    switch (v.kind) {
        case VerdictKind::holds: return "HOLDS";
        case VerdictKind::holds_with_equality: return "HOLDS_WITH_EQUALITY";
        case VerdictKind::violated: return "VIOLATED(" + v.detail + ")";
        case VerdictKind::skipped: return "SKIPPED(" + v.detail + ")";
    }
    return "?";
}

namespace {

Verdict holds() { return {VerdictKind::holds, {}}; }
Verdict equality() { return {VerdictKind::holds_with_equality, {}}; }
Verdict violated(std::string detail) { return {VerdictKind::violated, std::move(detail)}; }
Verdict skipped(std::string reason) { return {VerdictKind::skipped, std::move(reason)}; }

struct ChiValue {
    std::optional<int> value;
    std::string skip_reason;
};

ChiValue compute_chi(const Graph& g, const CheckConfig& cfg) {
    try {
        return {chromatic_number(g, cfg.chi_vertex_budget), {}};
    } catch (const budget_error&) {
        return {std::nullopt, "chi budget"};
    }
}

struct ChifValue {
    std::optional<Rational> value;
    std::string skip_reason;
};

ChifValue compute_chif(const Graph& g, const CheckConfig& cfg) {
    if (g.order() > cfg.chif_order_budget) return {std::nullopt, "chi_f budget"};
    try {
        return {fractional_chromatic(g, cfg.mis_cap), {}};
    } catch (const budget_error&) {
        return {std::nullopt, "mis cap"};
    }
}

Verdict theorem1_core(const Inertia& it, const ChiValue& chi) {
    if (!chi.value) return skipped(chi.skip_reason);
    const Rational bound = inertial_bound(it);
    const Rational c(*chi.value);
    if (bound > c)
        return violated("bound " + to_fraction_string(bound) + " > chi " +
                        std::to_string(*chi.value) + ", inertia " + to_string(it));
    return bound == c ? equality() : holds();
}

Verdict corollary1_core(const Inertia& it, const ChiValue& chi) {
    if (!chi.value) return skipped(chi.skip_reason);
    const int c = *chi.value;
    const Rational side(std::max(it.n_plus, it.n_minus));
    const Rational cap(static_cast<long long>(it.order()) * (c - 1), c);
    if (side > cap)
        return violated("max(n+, n-) " + to_fraction_string(side) + " > n(chi-1)/chi " +
                        to_fraction_string(cap) + ", inertia " + to_string(it));
    return side == cap ? equality() : holds();
}

Verdict conjecture1_core(const Inertia& it, const ChifValue& chif) {
    if (!chif.value) return skipped(chif.skip_reason);
    const Rational bound = inertial_bound(it);
    if (bound > *chif.value)
        return violated("bound " + to_fraction_string(bound) + " > chi_f " +
                        to_fraction_string(*chif.value) + ", inertia " + to_string(it));
    return bound == *chif.value ? equality() : holds();
}

Verdict theorem3_core(const Graph& g, const Inertia& it) {
    const int n = g.order();
    if (n < 2) return skipped("order 1");
    const Inertia ic = inertia(complement(g));
    const int p = it.n_plus + ic.n_plus;
    const int z = it.n_zero + ic.n_zero;
    const int m = it.n_minus + ic.n_minus;
    std::string bad;
    if (p < 1 || p > n + 1) bad = "n+ sums to " + std::to_string(p);
    else if (z < 0 || z > n) bad = "n0 sums to " + std::to_string(z);
    else if (m < n - 1) bad = "n- sums to " + std::to_string(m);
    if (!bad.empty())
        return violated(bad + " on order " + std::to_string(n) + ", inertia " + to_string(it) +
                        " / complement " + to_string(ic));
    return holds();
}

Verdict conjecture2_core(const Graph& g, const Inertia& it) {
    const long long cap = conjecture2_bound(g.order());
    if (it.n_plus > cap)
        return violated("n+ " + std::to_string(it.n_plus) + " > " + std::to_string(cap) +
                        " on order " + std::to_string(g.order()));
    return it.n_plus == cap ? equality() : holds();
}

std::uint64_t graph_seed_material(const Graph& g) {
    std::vector<unsigned char> bytes;
    bytes.push_back(static_cast<unsigned char>(g.order()));
    for (const auto& [u, v] : g.edges()) {
        bytes.push_back(static_cast<unsigned char>(u));
        bytes.push_back(static_cast<unsigned char>(v));
    }
    return fnv1a64(bytes.data(), bytes.size());
}

Verdict corollary3_core(const Graph& g, const ChiValue& chi, int trials, std::uint64_t seed) {
    if (!chi.value) return skipped(chi.skip_reason);
    const auto edges = g.edges();
    SplitMix64 rng(seed ^ graph_seed_material(g));
    std::vector<long long> weights(edges.size());
    for (int t = 0; t < trials; ++t) {
        RationalSymMatrix w(g.order());
        for (std::size_t e = 0; e < edges.size(); ++e) {
            const auto idx = rng.below(6);  // {-3,-2,-1,1,2,3}
            weights[e] =
                idx < 3 ? static_cast<long long>(idx) - 3 : static_cast<long long>(idx) - 2;
            w.set(edges[e].first, edges[e].second, Rational(weights[e]));
        }
        const Inertia wi = inertia_weighted(w, g);
        if (wi.n_plus < 1 || wi.n_minus < 1) continue;  // one-signed: bound not defined
        const Rational bound = inertial_bound(wi);
        if (bound > Rational(*chi.value)) {
            std::string log;
            for (std::size_t e = 0; e < edges.size(); ++e)
                log += " w(" + std::to_string(edges[e].first) + "," +
                       std::to_string(edges[e].second) + ")=" + std::to_string(weights[e]);
            return violated("trial " + std::to_string(t) + ": bound " +
                            to_fraction_string(bound) + " > chi " + std::to_string(*chi.value) +
                            ", weighted inertia " + to_string(wi) + "," + log);
        }
    }
    return holds();
}

}  // namespace

Verdict check_theorem1(const Graph& g, const CheckConfig& cfg) {
    if (g.edge_count() == 0) return skipped("edgeless");
    return theorem1_core(inertia(g), compute_chi(g, cfg));
}

Verdict check_corollary1(const Graph& g, const CheckConfig& cfg) {
    if (g.edge_count() == 0) return skipped("edgeless");
    return corollary1_core(inertia(g), compute_chi(g, cfg));
}

Verdict check_conjecture1(const Graph& g, const CheckConfig& cfg) {
    if (g.edge_count() == 0) return skipped("edgeless");
    return conjecture1_core(inertia(g), compute_chif(g, cfg));
}

Verdict check_nordhaus_gaddum(const Graph& g) { return theorem3_core(g, inertia(g)); }

Verdict check_conjecture2(const Graph& g) { return conjecture2_core(g, inertia(g)); }

Verdict check_corollary3(const Graph& g, int trials, std::uint64_t seed,
                         const CheckConfig& cfg) {
    if (g.edge_count() == 0) return skipped("edgeless");
    return corollary3_core(g, compute_chi(g, cfg), trials, seed);
}

GraphCheckResult check_graph(const Graph& g, const std::vector<ClaimId>& claims,
                             const CheckConfig& cfg) {
    GraphCheckResult result;
    result.inertia = inertia(g);
    const bool has_edge = g.edge_count() > 0;

    bool want_chi = false, want_chif = false;
    for (ClaimId c : claims) {
        want_chi |= c == ClaimId::theorem1 || c == ClaimId::corollary1 ||
                    c == ClaimId::corollary3;
        want_chif |= c == ClaimId::conjecture1;
    }
    ChiValue chi{std::nullopt, "not requested"};
    if (want_chi) chi = compute_chi(g, cfg);
    ChifValue chif{std::nullopt, "not requested"};
    if (want_chif) chif = compute_chif(g, cfg);
    result.chi = chi.value;
    result.chi_f = chif.value;

    for (ClaimId c : claims) {
        Verdict v;
        switch (c) {
            case ClaimId::theorem1:
                v = has_edge ? theorem1_core(result.inertia, chi) : skipped("edgeless");
                break;
            case ClaimId::corollary1:
                v = has_edge ? corollary1_core(result.inertia, chi) : skipped("edgeless");
                break;
            case ClaimId::conjecture1:
                v = has_edge ? conjecture1_core(result.inertia, chif) : skipped("edgeless");
                break;
            case ClaimId::theorem3:
                v = theorem3_core(g, result.inertia);
                break;
            case ClaimId::conjecture2:
                v = conjecture2_core(g, result.inertia);
                break;
            case ClaimId::corollary3:
                v = has_edge ? corollary3_core(g, chi, cfg.corollary3_trials, cfg.seed)
                             : skipped("edgeless");
                break;
        }
        result.verdicts[c] = std::move(v);
    }
    return result;
}

}  // namespace inertial
