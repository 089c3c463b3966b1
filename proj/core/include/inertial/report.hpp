#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "inertial/checks.hpp"
#include "inertial/corpus.hpp"

namespace inertial {

struct CheckOutcome {
    std::string name;
    int order = 0;
    Inertia inertia;
    std::optional<int> chi;
    std::optional<Rational> chi_f;
    std::map<ClaimId, Verdict> verdicts;
};

struct ClaimSummary {
    long long holds = 0;
    long long holds_with_equality = 0;
    long long violated = 0;
    long long skipped = 0;

    long long total() const { return holds + holds_with_equality + violated + skipped; }
};

struct Report {
    std::string corpus;                    // the selector text
    std::vector<ClaimId> claims;           // canonical order, deduplicated
    std::vector<CheckOutcome> outcomes;    // sorted by (order, name)
    std::map<ClaimId, ClaimSummary> summary;
    std::vector<std::string> diagnostics;  // per-line graph6 problems from file corpora
};

bool any_violation(const Report& r);

/// Runs every requested claim over the corpus. Per-graph work is
/// independent; with jobs > 1 it runs on that many worker threads, and the
/// outcome order (and hence every output byte) is the same either way.
/// Exhaustive corpora get the tighter chi_f order limit from the config.
Report run_corpus(const CorpusSpec& corpus, const std::vector<ClaimId>& claims,
                  const CheckConfig& cfg = {}, int jobs = 1);

std::string report_to_json(const Report& r);
std::string report_to_csv(const Report& r);
std::string report_to_text(const Report& r);

}  // namespace inertial
