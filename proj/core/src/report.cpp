#include "inertial/report.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "inertial/graph6.hpp"

namespace inertial {

namespace {

std::vector<ClaimId> normalize_claims(const std::vector<ClaimId>& claims) {
    std::vector<ClaimId> out;
    for (ClaimId c : kAllClaims)
        if (std::find(claims.begin(), claims.end(), c) != claims.end()) out.push_back(c);
    return out;
}

CheckOutcome make_outcome(const Graph& g, const std::vector<ClaimId>& claims,
                          const CheckConfig& cfg) {
    CheckOutcome o;
    o.name = g.name().empty() && g.order() <= 62 ? encode_graph6(g) : g.name();
    o.order = g.order();
    GraphCheckResult r = check_graph(g, claims, cfg);
    o.inertia = r.inertia;
    o.chi = r.chi;
    o.chi_f = std::move(r.chi_f);
    o.verdicts = std::move(r.verdicts);
    return o;
}

void tally(Report& report) {
    for (ClaimId c : report.claims) report.summary[c] = {};
    for (const CheckOutcome& o : report.outcomes)
        for (const auto& [claim, verdict] : o.verdicts) {
            ClaimSummary& s = report.summary[claim];
            switch (verdict.kind) {
                case VerdictKind::holds: ++s.holds; break;
                case VerdictKind::holds_with_equality: ++s.holds_with_equality; break;
                case VerdictKind::violated: ++s.violated; break;
                case VerdictKind::skipped: ++s.skipped; break;
            }
        }
}

void sort_outcomes(std::vector<CheckOutcome>& outcomes) {
    std::stable_sort(outcomes.begin(), outcomes.end(),
                     [](const CheckOutcome& a, const CheckOutcome& b) {
                         if (a.order != b.order) return a.order < b.order;
                         return a.name < b.name;
                     });
}

}  // namespace

bool any_violation(const Report& r) {
    for (const auto& [claim, s] : r.summary)
        if (s.violated > 0) return true;
    return false;
}

Report run_corpus(const CorpusSpec& corpus, const std::vector<ClaimId>& claims,
                  const CheckConfig& cfg, int jobs) {
    Report report;
    report.corpus = corpus.text;
    report.claims = normalize_claims(claims);

    CheckConfig effective = cfg;
    if (corpus.kind == CorpusSpec::Kind::exhaustive)
        effective.chif_order_budget =
            std::min(effective.chif_order_budget, effective.chif_exhaustive_limit);

    std::vector<Graph> graphs;
    if (corpus.kind == CorpusSpec::Kind::exhaustive) {
        if (jobs <= 1) {
            // streaming keeps exhaustive n=7 from holding two million graphs
            for (int n = corpus.order_min; n <= corpus.order_max; ++n)
                enumerate_labeled_graphs(n, [&](Graph&& g) {
                    report.outcomes.push_back(make_outcome(g, report.claims, effective));
                });
        } else {
            for (int n = corpus.order_min; n <= corpus.order_max; ++n)
                enumerate_labeled_graphs(n, [&](Graph&& g) { graphs.push_back(std::move(g)); });
        }
    } else if (corpus.kind == CorpusSpec::Kind::file) {
        Graph6File file = read_graph6_file(corpus.path);
        graphs = std::move(file.graphs);
        report.diagnostics = std::move(file.diagnostics);
    } else {
        graphs = expand_family_spec(corpus.family);
    }

    if (!graphs.empty()) {
        const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(graphs.size())));
        if (workers == 1) {
            for (const Graph& g : graphs)
                report.outcomes.push_back(make_outcome(g, report.claims, effective));
        } else {
            std::vector<CheckOutcome> slots(graphs.size());
            std::atomic<std::size_t> next{0};
            std::exception_ptr first_error;
            std::mutex error_mutex;
            auto work = [&] {
                for (;;) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= graphs.size()) return;
                    try {
                        slots[i] = make_outcome(graphs[i], report.claims, effective);
                    } catch (...) {
                        std::lock_guard<std::mutex> lock(error_mutex);
                        if (!first_error) first_error = std::current_exception();
                        return;
                    }
                }
            };
            std::vector<std::thread> pool;
            pool.reserve(static_cast<std::size_t>(workers));
            for (int w = 0; w < workers; ++w) pool.emplace_back(work);
            for (auto& t : pool) t.join();
            if (first_error) std::rethrow_exception(first_error);
            report.outcomes = std::move(slots);
        }
    }

    sort_outcomes(report.outcomes);
    tally(report);
    return report;
}

std::string report_to_json(const Report& r) {
    nlohmann::json j;
    j["corpus"] = r.corpus;
    auto claims = nlohmann::json::array();
    for (ClaimId c : r.claims) claims.push_back(to_string(c));
    j["claims"] = claims;
    auto outcomes = nlohmann::json::array();
    for (const CheckOutcome& o : r.outcomes) {
        nlohmann::json row;
        row["name"] = o.name;
        row["order"] = o.order;
        row["n_plus"] = o.inertia.n_plus;
        row["n_zero"] = o.inertia.n_zero;
        row["n_minus"] = o.inertia.n_minus;
        if (o.chi) row["chi"] = *o.chi; else row["chi"] = nullptr;
        if (o.chi_f) row["chi_f"] = to_fraction_string(*o.chi_f); else row["chi_f"] = nullptr;
        nlohmann::json verdicts;
        for (const auto& [claim, verdict] : o.verdicts)
            verdicts[to_string(claim)] = to_string(verdict);
        row["verdicts"] = verdicts;
        outcomes.push_back(std::move(row));
    }
    j["outcomes"] = outcomes;
    nlohmann::json summary;
    for (const auto& [claim, s] : r.summary) {
        nlohmann::json cell;
        cell["holds"] = s.holds;
        cell["holds_with_equality"] = s.holds_with_equality;
        cell["violated"] = s.violated;
        cell["skipped"] = s.skipped;
        summary[to_string(claim)] = cell;
    }
    j["summary"] = summary;
    auto diags = nlohmann::json::array();
    for (const std::string& d : r.diagnostics) diags.push_back(d);
    j["diagnostics"] = diags;
    return j.dump(2) + "\n";
}

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += '"';
    return out;
}

}  // namespace

std::string report_to_csv(const Report& r) {
    std::ostringstream out;
    out << "name,order,n_plus,n_zero,n_minus,chi,chi_f";
    for (ClaimId c : r.claims) out << ',' << to_string(c);
    out << '\n';
    for (const CheckOutcome& o : r.outcomes) {
        out << csv_escape(o.name) << ',' << o.order << ',' << o.inertia.n_plus << ','
            << o.inertia.n_zero << ',' << o.inertia.n_minus << ',';
        if (o.chi) out << *o.chi;
        out << ',';
        if (o.chi_f) out << to_fraction_string(*o.chi_f);
        for (ClaimId c : r.claims) {
            out << ',';
            const auto it = o.verdicts.find(c);
            if (it != o.verdicts.end()) out << csv_escape(to_string(it->second));
        }
        out << '\n';
    }
    return std::move(out).str();
}

std::string report_to_text(const Report& r) {
    std::ostringstream out;
    out << "corpus: " << r.corpus << '\n';
    out << "claims:";
    for (ClaimId c : r.claims) out << ' ' << to_string(c);
    out << '\n';
    out << "graphs: " << r.outcomes.size() << '\n';
    for (const std::string& d : r.diagnostics) out << "diagnostic: " << d << '\n';
    out << '\n';
    for (const CheckOutcome& o : r.outcomes) {
        out << o.name << "  order=" << o.order << "  inertia=" << to_string(o.inertia);
        if (o.chi) out << "  chi=" << *o.chi;
        if (o.chi_f) out << "  chi_f=" << to_fraction_string(*o.chi_f);
        for (const auto& [claim, verdict] : o.verdicts)
            out << "  " << to_string(claim) << "=" << to_string(verdict);
        out << '\n';
    }
    out << '\n' << "summary:\n";
    for (const auto& [claim, s] : r.summary)
        out << "  " << to_string(claim) << ": " << s.holds << " holds, "
            << s.holds_with_equality << " holds_with_equality, " << s.violated
            << " violated, " << s.skipped << " skipped\n";
    return std::move(out).str();
}

}  // namespace inertial
