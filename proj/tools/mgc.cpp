// mgc: generate, color, certify, and measure interval-greedy hypergraph
// coloring experiments. Exit codes: 0 success, 1 verification/search failure,
// 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "mgc/chains.hpp"
#include "mgc/engine.hpp"
#include "mgc/generators.hpp"
#include "mgc/harness.hpp"
#include "mgc/hypergraph.hpp"
#include "mgc/lll.hpp"

namespace {

std::uint64_t default_seed() {
    if (const char* env = std::getenv("MGC_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw CLI::ValidationError("MGC_SEED", "MGC_SEED is not an unsigned integer");
        }
    }
    return 0;
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << text;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct GenOptions {
    std::string out;
    int W = 9, n = 3;
    int vertices = 12, max_degree = 3, b = 1;
    long edges = -1;
    std::uint64_t seed = 0;
};

struct ColorOptions {
    std::string input, trace_path;
    int r = 2;
    double p = 0.25;
    std::uint64_t seed = 0;
    long max_restarts = 1000;
};

struct LllOptions {
    std::string family_case = "simple2";
    int n = 100, r = 2, b = 1, K = -1;
    double p = -1, tau0 = -1, d = -1, epsilon = 0.1;
    bool find_threshold = false;
    bool exact_factors = false;
};

struct ChainsOptions {
    std::string input;
    int vertex = 0, length = 2, not_b_disjoint = -1;
    bool cycles = false;
};

struct VdwOptions {
    int W = 9, n = 3, r = 2;
    double p = -1;
    std::uint64_t seed = 0;
    long max_restarts = 100000;
    bool exhaustive = false;
};

struct SweepOptions {
    std::string kind = "chains41";
    std::string input, out, csv;
    int k_max = 3;
    long trials = 1000, samples = 100000;
    int r = 2;
    double p = 0.25;
    std::uint64_t seed = 0;
};

int run_color(const ColorOptions& opt) {
    const mgc::Hypergraph h = mgc::load_hg_file(opt.input);
    const mgc::RestartResult result =
        mgc::color_with_restarts(h, opt.r, opt.p, opt.max_restarts, opt.seed);
    const mgc::IntervalLayout layout(opt.r, opt.p);
    nlohmann::json out;
    out["success"] = result.success;
    out["samples"] = result.stats.samples;
    out["degenerate_rejected"] = result.stats.degenerate_rejected;
    out["improper"] = result.stats.improper;
    if (result.success) {
        out["attempt"] = result.success_attempt;
        out["coloring"] = result.coloring;
        if (!opt.trace_path.empty()) {
            const mgc::MgcTrace trace = mgc::mgc_r(h, result.birth_times, layout);
            write_text_file(opt.trace_path,
                            mgc::trace_to_json(h, layout, result.birth_times, trace));
        }
    } else if (!opt.trace_path.empty() && result.last_improper) {
        write_text_file(opt.trace_path, mgc::trace_to_json(h, layout, result.last_improper_t,
                                                           *result.last_improper));
    }
    std::cout << out.dump(2) << '\n';
    return result.success ? 0 : 1;
}

int run_certify(const std::string& trace_path) {
    const mgc::StoredTrace stored = mgc::trace_from_json(read_text_file(trace_path));
    const mgc::IntervalLayout layout(stored.r, stored.p);

    // replay and compare against the stored run
    const mgc::MgcTrace replay = mgc::mgc_r(stored.hypergraph, stored.t, layout);
    const bool replay_ok = replay.final_colors == stored.trace.final_colors &&
                           replay.events == stored.trace.events &&
                           replay.outcome == stored.trace.outcome;
    if (!replay_ok) {
        std::cout << "replay mismatch: stored trace does not reproduce\n";
        return 1;
    }
    if (stored.trace.outcome != mgc::MgcOutcome::improper) {
        std::cout << "trace outcome is " << mgc::to_string(stored.trace.outcome)
                  << "; nothing to certify\n";
        return 1;
    }
    const mgc::Chain cert =
        mgc::extract_certificate(stored.hypergraph, stored.t, layout, stored.trace);
    const auto flags = mgc::classify_chain(stored.hypergraph, cert, stored.t, layout);
    nlohmann::json out;
    out["replay_ok"] = true;
    out["certificate_edges"] = cert.edges;
    out["certificate_links"] = cert.links;
    out["complete_conflicting"] = flags.complete_conflicting;
    std::cout << out.dump(2) << '\n';
    return flags.complete_conflicting ? 0 : 1;
}

int run_lll(const LllOptions& opt) {
    mgc::LllParams params;
    params.n = opt.n;
    params.r = opt.r;
    params.b = opt.b;
    params.epsilon = opt.epsilon;
    params.p = opt.p > 0 ? opt.p : mgc::default_p(opt.n);
    params.tau0 = opt.tau0 > 0 ? opt.tau0 : mgc::default_tau0(opt.n);

    std::function<std::vector<mgc::MonomialFamily>(const mgc::LllParams&)> builder;
    if (opt.family_case == "simple2") {
        params.K = opt.K > 0 ? opt.K : mgc::default_K_simple(opt.n);
        params.d = opt.d > 0 ? opt.d
                             : std::floor(std::pow(2.0, opt.n - 1) /
                                          (2 * std::exp(1.0) * std::log(opt.n)));
        builder = [](const mgc::LllParams& q) { return mgc::families_simple2(q); };
    } else if (opt.family_case == "vdw") {
        params.K = opt.K > 0 ? opt.K : mgc::default_K_simple(opt.n);
        params.d = opt.d > 0 ? opt.d
                             : std::floor(std::pow(static_cast<double>(opt.r), opt.n - 1) /
                                          (2 * std::exp(1.0) * std::log(opt.n)));
        builder = [](const mgc::LllParams& q) { return mgc::families_vdw(q); };
    } else if (opt.family_case == "bsimple") {
        params.K = opt.K > 0 ? opt.K : mgc::default_K_bsimple(opt.n);
        params.d = opt.d > 0 ? opt.d
                             : std::pow(static_cast<double>(opt.r), opt.n - opt.b) /
                                   ((1 + opt.epsilon) * std::exp(2.0) * std::log(opt.n));
        const bool exact = opt.exact_factors;
        builder = [exact](const mgc::LllParams& q) {
            return mgc::families_bsimple(q, std::nullopt, exact);
        };
    } else {
        throw CLI::ValidationError("--case", "must be simple2, vdw, or bsimple");
    }

    nlohmann::json out;
    out["case"] = opt.family_case;
    out["n"] = params.n;
    out["r"] = params.r;
    out["b"] = params.b;
    out["p"] = params.p;
    out["tau0"] = params.tau0;
    out["K"] = params.K;
    if (opt.find_threshold) {
        const double dstar = mgc::max_degree_threshold(params, builder);
        out["max_passing_degree"] = dstar;
        out["log2_max_passing_degree"] = std::log2(dstar);
        std::cout << out.dump(2) << '\n';
        return 0;
    }
    out["d"] = params.d;
    const mgc::LllReport report = mgc::lll_condition(builder(params), params.tau0);
    nlohmann::json families = nlohmann::json::array();
    for (const auto& f : report.families)
        families.push_back({{"name", f.name}, {"log_value", f.log_value}, {"value", f.value}});
    out["families"] = std::move(families);
    out["log_total"] = report.log_total;
    out["total"] = report.total;
    out["z0"] = report.z0;
    out["verdict"] = report.pass ? "pass" : "fail";
    std::cout << out.dump(2) << '\n';
    return report.pass ? 0 : 1;
}

int run_chains(const ChainsOptions& opt) {
    const mgc::Hypergraph h = mgc::load_hg_file(opt.input);
    std::vector<mgc::Chain> found;
    if (opt.cycles) found = mgc::enumerate_adc_at(h, opt.vertex, opt.length);
    else if (opt.not_b_disjoint >= 0)
        found = mgc::enumerate_non_b_disjoint_at(h, opt.vertex, opt.length, opt.not_b_disjoint);
    else found = mgc::enumerate_chains_at(h, opt.vertex, opt.length);
    for (const auto& c : found) {
        for (std::size_t i = 0; i < c.edges.size(); ++i) {
            if (i) std::cout << ' ';
            std::cout << c.edges[i];
        }
        std::cout << '\n';
    }
    std::cerr << found.size() << " chains\n";
    return 0;
}

int run_vdw(const VdwOptions& opt) {
    nlohmann::json out;
    out["W"] = opt.W;
    out["n"] = opt.n;
    out["r"] = opt.r;
    if (opt.exhaustive) {
        const mgc::Hypergraph h = mgc::gen_ap_hypergraph(opt.W, opt.n);
        const auto coloring = mgc::exhaustive_r_colorable(h, opt.r);
        out["colorable"] = coloring.has_value();
        if (coloring) {
            out["coloring"] = *coloring;
            out["ap_scan_ok"] = !mgc::coloring_has_mono_ap(*coloring, opt.n);
        }
        std::cout << out.dump(2) << '\n';
        return coloring ? 0 : 1;
    }
    const double p = opt.p > 0 ? opt.p : mgc::default_p(opt.n);
    const mgc::VdwSearchResult result =
        mgc::run_vdw_search(opt.W, opt.n, opt.r, p, opt.max_restarts, opt.seed);
    out["p"] = p;
    out["found"] = result.found;
    out["samples"] = result.stats.samples;
    out["degenerate_rejected"] = result.stats.degenerate_rejected;
    out["improper"] = result.stats.improper;
    if (result.found) {
        out["attempt"] = result.attempt;
        out["coloring"] = result.coloring;
        out["ap_scan_ok"] = result.ap_scan_ok;
    }
    std::cout << out.dump(2) << '\n';
    return result.found && result.ap_scan_ok ? 0 : 1;
}

int run_sweep(const SweepOptions& opt) {
    mgc::ExperimentReport report;
    if (opt.kind == "chains41" || opt.kind == "cycles42" || opt.kind == "cycles61") {
        const mgc::Hypergraph h = mgc::load_hg_file(opt.input);
        if (opt.kind == "chains41") report = mgc::sweep_chains41(h, opt.k_max);
        else if (opt.kind == "cycles42") report = mgc::sweep_cycles42(h, opt.k_max);
        else report = mgc::sweep_cycles61(h, opt.k_max);
    } else if (opt.kind == "probs52") {
        mgc::ProbSweepConfig config;
        config.samples = opt.samples;
        config.seed = opt.seed;
        report = mgc::sweep_probs52(config);
    } else if (opt.kind == "probs72") {
        mgc::BdisjointProbSweepConfig config;
        config.samples = opt.samples;
        config.seed = opt.seed;
        report = mgc::sweep_probs72(config);
    } else if (opt.kind == "success") {
        const mgc::Hypergraph h = mgc::load_hg_file(opt.input);
        mgc::SuccessRateConfig config;
        config.r = opt.r;
        config.p = opt.p;
        config.trials = opt.trials;
        config.seed = opt.seed;
        report = mgc::run_success_rate(h, config);
    } else {
        throw CLI::ValidationError("--kind", "unknown sweep kind");
    }
    if (!opt.out.empty()) mgc::write_report(report, opt.out);
    if (!opt.csv.empty()) write_text_file(opt.csv, mgc::aggregates_to_csv(report));
    std::cout << report.summary.dump(2) << '\n';
    const auto& agg = report.summary["aggregates"];
    const bool ok = !agg.contains("all_pass") || agg["all_pass"].get<bool>();
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"multipass greedy hypergraph coloring toolkit"};
    app.require_subcommand(1);

    GenOptions gen;
    ColorOptions color;
    LllOptions lll;
    ChainsOptions chains;
    VdwOptions vdw;
    SweepOptions sweep;
    std::string certify_trace;

    auto* gen_cmd = app.add_subcommand("gen", "generate instances");
    gen_cmd->require_subcommand(1);
    auto* gen_ap = gen_cmd->add_subcommand("ap", "arithmetic-progression hypergraph");
    gen_ap->add_option("--W", gen.W, "number of vertices")->required();
    gen_ap->add_option("--n", gen.n, "progression length")->required();
    gen_ap->add_option("-o,--output", gen.out, "output .hg file")->required();
    auto* gen_rand = gen_cmd->add_subcommand("random", "random bounded-degree instance");
    gen_rand->add_option("--vertices", gen.vertices)->required();
    gen_rand->add_option("--n", gen.n, "uniformity")->required();
    gen_rand->add_option("--max-degree", gen.max_degree);
    gen_rand->add_option("--b", gen.b, "pairwise intersection cap");
    gen_rand->add_option("--edges", gen.edges, "target edge count");
    gen_rand->add_option("--seed", gen.seed)->default_val(default_seed());
    gen_rand->add_option("-o,--output", gen.out)->required();

    auto* color_cmd = app.add_subcommand("color", "color an instance with restarts");
    color_cmd->add_option("--input", color.input)->required();
    color_cmd->add_option("--colors", color.r);
    color_cmd->add_option("--p", color.p, "transition mass");
    color_cmd->add_option("--seed", color.seed)->default_val(default_seed());
    color_cmd->add_option("--max-restarts", color.max_restarts);
    color_cmd->add_option("--trace", color.trace_path, "write run trace JSON here");

    auto* certify_cmd = app.add_subcommand("certify", "re-validate a stored improper trace");
    certify_cmd->add_option("--trace", certify_trace)->required();

    auto* chains_cmd = app.add_subcommand("chains", "enumerate chains through a vertex");
    chains_cmd->add_option("--input", chains.input)->required();
    chains_cmd->add_option("--vertex", chains.vertex)->required();
    chains_cmd->add_option("--length", chains.length)->required();
    chains_cmd->add_flag("--cycles", chains.cycles, "almost disjoint cycles only");
    chains_cmd->add_option("--not-b-disjoint", chains.not_b_disjoint,
                           "chains that are not b-disjoint for this b");

    auto* lll_cmd = app.add_subcommand("lll", "evaluate the local-lemma condition");
    lll_cmd->add_option("--case", lll.family_case, "simple2, vdw, or bsimple");
    lll_cmd->add_option("--n", lll.n)->required();
    lll_cmd->add_option("--r", lll.r);
    lll_cmd->add_option("--b", lll.b);
    lll_cmd->add_option("--p", lll.p);
    lll_cmd->add_option("--tau0", lll.tau0);
    lll_cmd->add_option("--K", lll.K);
    lll_cmd->add_option("--d", lll.d);
    lll_cmd->add_option("--epsilon", lll.epsilon);
    lll_cmd->add_flag("--find-threshold", lll.find_threshold,
                      "binary-search the largest passing degree");
    lll_cmd->add_flag("--exact-factors", lll.exact_factors,
                      "replace the constants 6 and 4 by their exact factors");

    auto* vdw_cmd = app.add_subcommand("vdw", "progression-free coloring search");
    vdw_cmd->add_option("--W", vdw.W)->required();
    vdw_cmd->add_option("--n", vdw.n)->required();
    vdw_cmd->add_option("--colors", vdw.r);
    vdw_cmd->add_option("--p", vdw.p);
    vdw_cmd->add_option("--seed", vdw.seed)->default_val(default_seed());
    vdw_cmd->add_option("--max-restarts", vdw.max_restarts);
    vdw_cmd->add_flag("--exhaustive", vdw.exhaustive, "exact search instead of restarts");

    auto* sweep_cmd = app.add_subcommand("sweep", "experiment sweeps with JSON reports");
    sweep_cmd->add_option("--kind", sweep.kind,
                          "chains41, cycles42, cycles61, probs52, probs72, or success");
    sweep_cmd->add_option("--input", sweep.input, "instance file for counting/success kinds");
    sweep_cmd->add_option("--k-max", sweep.k_max);
    sweep_cmd->add_option("--trials", sweep.trials);
    sweep_cmd->add_option("--samples", sweep.samples);
    sweep_cmd->add_option("--colors", sweep.r);
    sweep_cmd->add_option("--p", sweep.p);
    sweep_cmd->add_option("--seed", sweep.seed)->default_val(default_seed());
    sweep_cmd->add_option("-o,--output", sweep.out, "report base path");
    sweep_cmd->add_option("--csv", sweep.csv, "write aggregates CSV here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (gen_ap->parsed()) {
            mgc::save_hg_file(mgc::gen_ap_hypergraph(gen.W, gen.n), gen.out);
            std::cout << "wrote " << gen.out << '\n';
            return 0;
        }
        if (gen_rand->parsed()) {
            mgc::RandomSimpleSpec spec;
            spec.vertex_count = gen.vertices;
            spec.n = gen.n;
            spec.max_degree = gen.max_degree;
            spec.b = gen.b;
            spec.seed = gen.seed;
            spec.target_edges = gen.edges;
            mgc::save_hg_file(mgc::gen_random_simple(spec), gen.out);
            std::cout << "wrote " << gen.out << '\n';
            return 0;
        }
        if (color_cmd->parsed()) return run_color(color);
        if (certify_cmd->parsed()) return run_certify(certify_trace);
        if (chains_cmd->parsed()) return run_chains(chains);
        if (lll_cmd->parsed()) return run_lll(lll);
        if (vdw_cmd->parsed()) return run_vdw(vdw);
        if (sweep_cmd->parsed()) return run_sweep(sweep);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
