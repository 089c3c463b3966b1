// inertial: exact graph inertia, chromatic bounds, and claim verification
// over graph corpora. Exit codes: 0 success / no violations, 2 violations
// found by `verify`, 1 operational error.
#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "inertial/bounds.hpp"
#include "inertial/budget.hpp"
#include "inertial/checks.hpp"
#include "inertial/coloring.hpp"
#include "inertial/corpus.hpp"
#include "inertial/fractional.hpp"
#include "inertial/graph.hpp"
#include "inertial/inertia.hpp"
#include "inertial/numeric.hpp"
#include "inertial/report.hpp"
#include "inertial/spectrum.hpp"
#include "inertial/srg.hpp"

namespace {

using namespace inertial;

// Resolves one graph argument, echoing any file-parse diagnostics to
// stderr. An argument that yields no graphs at all is an error.
std::vector<Graph> resolve_or_throw(const std::string& arg) {
    ResolvedGraphs r = resolve_graph_argument(arg);
    for (const auto& d : r.diagnostics) std::cerr << "warning: " << d << "\n";
    if (r.graphs.empty()) throw std::runtime_error("no graphs resolved from '" + arg + "'");
    return r.graphs;
}

int cmd_inertia(const std::string& arg, bool with_charpoly) {
    for (const Graph& g : resolve_or_throw(arg)) {
        std::cout << g.name() << ": " << to_string(inertia(g)) << "\n";
        if (with_charpoly)
            std::cout << "  charpoly " << char_poly(g).to_string() << "\n";
    }
    return 0;
}

int cmd_bounds(const std::string& arg) {
    const CheckConfig cfg;
    for (const Graph& g : resolve_or_throw(arg)) {
        const Inertia in = inertia(g);
        std::cout << g.name() << " (order " << g.order() << ", inertia "
                  << to_string(in) << ")\n";

        std::cout << "  inertial bound  ";
        if (in.n_plus >= 1 && in.n_minus >= 1)
            std::cout << to_fraction_string(inertial_bound(in)) << "\n";
        else
            std::cout << "-\n";

        const Spectrum s = numeric_spectrum(g, cfg.spectrum_tol);
        std::cout << "  hoffman         ";
        if (g.order() >= 1 && s.values().back() < 0)
            std::cout << hoffman_bound(s) << "\n";
        else
            std::cout << "-\n";
        std::cout << "  hoffman chi     ";
        if (g.order() >= 2)
            std::cout << hoffman_full_chi(s) << "\n";
        else
            std::cout << "-\n";

        std::cout << "  chi             ";
        try {
            std::cout << chromatic_number(g, cfg.chi_vertex_budget) << "\n";
        } catch (const budget_error&) {
            std::cout << "skipped (budget)\n";
        }
        std::cout << "  chi_f           ";
        try {
            if (g.order() > cfg.chif_order_budget) throw budget_error("order");
            std::cout << to_fraction_string(fractional_chromatic(g, cfg.mis_cap)) << "\n";
        } catch (const budget_error&) {
            std::cout << "skipped (budget)\n";
        }
    }
    return 0;
}

int cmd_chi(const std::string& arg) {
    for (const Graph& g : resolve_or_throw(arg))
        std::cout << g.name() << ": " << chromatic_number(g) << "\n";
    return 0;
}

int cmd_chif(const std::string& arg) {
    for (const Graph& g : resolve_or_throw(arg))
        std::cout << g.name() << ": " << to_fraction_string(fractional_chromatic(g)) << "\n";
    return 0;
}

int cmd_alpha(const std::string& arg) {
    for (const Graph& g : resolve_or_throw(arg))
        std::cout << g.name() << ": " << independence_number(g) << "\n";
    return 0;
}

int cmd_verify(const std::string& corpus_text, const std::string& claims_text,
               std::uint64_t seed, int jobs, int trials, const std::string& format,
               const std::string& out_path) {
    std::vector<ClaimId> claims;
    if (claims_text.empty() || claims_text == "all") {
        claims.assign(kAllClaims.begin(), kAllClaims.end());
    } else {
        std::size_t pos = 0;
        while (pos <= claims_text.size()) {
            const std::size_t comma = claims_text.find(',', pos);
            const std::string tok = claims_text.substr(
                pos, comma == std::string::npos ? std::string::npos : comma - pos);
            const auto id = claim_from_string(tok);
            if (!id) throw std::runtime_error("unknown claim '" + tok + "'");
            claims.push_back(*id);
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
    }

    CheckConfig cfg;
    cfg.seed = seed;
    cfg.corollary3_trials = trials;
    const Report report = run_corpus(parse_corpus_spec(corpus_text), claims, cfg, jobs);

    std::string rendered;
    if (format == "json")
        rendered = report_to_json(report);
    else if (format == "csv")
        rendered = report_to_csv(report);
    else
        rendered = report_to_text(report);

    if (out_path.empty()) {
        std::cout << rendered;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open '" + out_path + "' for writing");
        out << rendered;
        if (!out.flush()) throw std::runtime_error("short write to '" + out_path + "'");
    }
    return any_violation(report) ? 2 : 0;
}

int cmd_srg(long long n, long long k, long long lambda, long long mu) {
    const SrgParams p{n, k, lambda, mu};
    std::cout << "SRG(" << n << ", " << k << ", " << lambda << ", " << mu << "): ";
    try {
        validate_srg(p);
    } catch (const std::invalid_argument& e) {
        std::cout << "infeasible (" << e.what() << ")\n";
        return 0;
    }
    const auto [f, g] = srg_multiplicities(p);
    const SrgParams co = srg_complement_params(p);
    std::cout << "feasible\n";
    std::cout << "  multiplicities  (f, g) = (" << f << ", " << g << ")\n";
    std::cout << "  complement      SRG(" << co.n << ", " << co.k << ", " << co.lambda
              << ", " << co.mu << ")\n";
    std::cout << "  inertia         " << to_string(srg_inertia(p)) << "\n";
    std::cout << "  chi_f lower     ";
    if (k > mu)
        std::cout << to_fraction_string(srg_chif_lower(p)) << "\n";
    else
        std::cout << "-\n";  // singular: eigenvalue r = 0
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact graph inertia, spectral chromatic bounds, and corpus verification"};
    app.require_subcommand(1);

    std::string graph_arg;
    bool with_charpoly = false;
    auto* sc_inertia = app.add_subcommand("inertia", "exact inertia (n+, n0, n-)");
    sc_inertia->add_option("graph", graph_arg, "graph6 string, @file, or family spec")->required();
    sc_inertia->add_flag("--charpoly", with_charpoly, "also print the characteristic polynomial");

    auto* sc_bounds = app.add_subcommand("bounds", "chromatic lower bounds table");
    sc_bounds->add_option("graph", graph_arg, "graph6 string, @file, or family spec")->required();

    auto* sc_chi = app.add_subcommand("chi", "exact chromatic number");
    sc_chi->add_option("graph", graph_arg, "graph6 string, @file, or family spec")->required();

    auto* sc_chif = app.add_subcommand("chif", "exact fractional chromatic number");
    sc_chif->add_option("graph", graph_arg, "graph6 string, @file, or family spec")->required();

    auto* sc_alpha = app.add_subcommand("alpha", "exact independence number");
    sc_alpha->add_option("graph", graph_arg, "graph6 string, @file, or family spec")->required();

    std::string corpus_text, claims_text, format = "text", out_path;
    std::uint64_t seed = 0;
    int jobs = 1, trials = 100;
    auto* sc_verify = app.add_subcommand("verify", "run claim checks over a corpus");
    sc_verify->add_option("--corpus", corpus_text, "exhaustive:N[-M], file:PATH, or family:SPEC")
        ->required();
    sc_verify->add_option("--claims", claims_text,
                          "comma-separated claim list (default: all of "
                          "theorem1,corollary1,conjecture1,theorem3,conjecture2,corollary3)");
    sc_verify->add_option("--seed", seed, "seed for randomized weight trials");
    sc_verify->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    sc_verify->add_option("--trials", trials, "weight trials per graph for corollary3")
        ->check(CLI::NonNegativeNumber);
    sc_verify->add_option("--format", format, "report format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    sc_verify->add_option("--out", out_path, "write the report to a file instead of stdout");

    long long srg_n = 0, srg_k = 0, srg_lambda = 0, srg_mu = 0;
    auto* sc_srg = app.add_subcommand("srg", "strongly regular parameter algebra");
    sc_srg->add_option("n", srg_n, "order")->required();
    sc_srg->add_option("k", srg_k, "degree")->required();
    sc_srg->add_option("lambda", srg_lambda, "common neighbours of adjacent pairs")->required();
    sc_srg->add_option("mu", srg_mu, "common neighbours of non-adjacent pairs")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (sc_inertia->parsed()) return cmd_inertia(graph_arg, with_charpoly);
        if (sc_bounds->parsed()) return cmd_bounds(graph_arg);
        if (sc_chi->parsed()) return cmd_chi(graph_arg);
        if (sc_chif->parsed()) return cmd_chif(graph_arg);
        if (sc_alpha->parsed()) return cmd_alpha(graph_arg);
        if (sc_verify->parsed())
            return cmd_verify(corpus_text, claims_text, seed, jobs, trials, format, out_path);
        if (sc_srg->parsed()) return cmd_srg(srg_n, srg_k, srg_lambda, srg_mu);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;  // unreachable with require_subcommand(1)
}
