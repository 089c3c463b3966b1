#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "inertial/graph.hpp"
#include "inertial/inertia.hpp"
#include "inertial/numeric.hpp"

namespace inertial {

enum class ClaimId {
    theorem1,     // 1 + max(n+/n-, n-/n+) <= chi
    corollary1,   // max(n+, n-) <= n(chi-1)/chi
    conjecture1,  // 1 + max(n+/n-, n-/n+) <= chi_f
    theorem3,     // Nordhaus–Gaddum inertia sums
    conjecture2,  // n+ <= n - floor(8(n-1)/(8+n))
    corollary3,   // weighted inertial bound <= chi, random weights
};

inline constexpr std::array<ClaimId, 6> kAllClaims = {
    ClaimId::theorem1,   ClaimId::corollary1,  ClaimId::conjecture1,
    ClaimId::theorem3,   ClaimId::conjecture2, ClaimId::corollary3,
};

std::string to_string(ClaimId id);                            // "THEOREM1"
std::string to_cli_string(ClaimId id);                        // "theorem1"
std::optional<ClaimId> claim_from_string(std::string_view s);  // either case

enum class VerdictKind { holds, holds_with_equality, violated, skipped };

struct Verdict {
    VerdictKind kind = VerdictKind::skipped;
    std::string detail;  // witness for VIOLATED, reason for SKIPPED, else empty

    bool operator==(const Verdict&) const = default;
};

std::string to_string(const Verdict& v);  // "HOLDS", "VIOLATED(...)", ...

struct CheckConfig {
    int chi_vertex_budget = 64;
    std::size_t mis_cap = 2'000'000;
    int chif_order_budget = 24;      // per-graph chi_f cutoff
    int chif_exhaustive_limit = 6;   // tighter cutoff applied on exhaustive corpora
    int corollary3_trials = 100;
    std::uint64_t seed = 0;
    double spectrum_tol = 1e-9;
};

// Self-contained single-claim checks (each computes what it needs).
Verdict check_theorem1(const Graph& g, const CheckConfig& cfg = {});
Verdict check_corollary1(const Graph& g, const CheckConfig& cfg = {});
Verdict check_conjecture1(const Graph& g, const CheckConfig& cfg = {});
Verdict check_nordhaus_gaddum(const Graph& g);
Verdict check_conjecture2(const Graph& g);
Verdict check_corollary3(const Graph& g, int trials, std::uint64_t seed,
                         const CheckConfig& cfg = {});

/// Everything the harness records for one graph: shared quantities are
/// computed once, then every requested claim is judged.
struct GraphCheckResult {
    Inertia inertia;
    std::optional<int> chi;
    std::optional<Rational> chi_f;
    std::map<ClaimId, Verdict> verdicts;
};

GraphCheckResult check_graph(const Graph& g, const std::vector<ClaimId>& claims,
                             const CheckConfig& cfg);

}  // namespace inertial
