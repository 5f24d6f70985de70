#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "mgc/chains.hpp"
#include "mgc/engine.hpp"
#include "mgc/hypergraph.hpp"

#define MGC_VERSION "0.1.0"

namespace mgc {

// Every experiment produces one JSON record per trial or grid point plus a
// summary whose "aggregates" entry is recomputable from the records.
struct ExperimentReport {
    nlohmann::json summary;
    std::vector<nlohmann::json> records;
};

nlohmann::json recompute_aggregates(const ExperimentReport& report);
bool aggregates_consistent(const ExperimentReport& report);

// <base>.jsonl holds the records (one per line), <base>.summary.json the
// summary. Identical config and seed produce byte-identical files.
void write_report(const ExperimentReport& report, const std::string& base_path);
ExperimentReport read_report(const std::string& base_path);
std::string aggregates_to_csv(const ExperimentReport& report);

struct SuccessRateConfig {
    int r = 2;
    double p = 0.25;
    long trials = 100;
    std::uint64_t seed = 0;
    // Degenerate-rejected assignments are excluded from the success-rate
    // denominator by default; they fail the precondition rather than the run.
    bool include_degenerate = false;
};

// Per trial: sample an assignment from the trial substream, classify it, run
// the coloring procedure, and certify every improper run. Proper colorings
// are re-verified independently.
ExperimentReport run_success_rate(const Hypergraph& h, const SuccessRateConfig& config);

// Direct scan for a monochromatic n-term arithmetic progression, deliberately
// bypassing the hypergraph machinery.
bool coloring_has_mono_ap(const Coloring& coloring, int n);

struct VdwSearchResult {
    bool found = false;
    Coloring coloring;
    long attempt = -1;
    RestartStats stats;
    bool ap_scan_ok = false; // independent verification of the coloring
};

VdwSearchResult run_vdw_search(int W, int n, int r, double p, long max_restarts,
                               std::uint64_t seed);

// Counting sweeps: enumerate all chains (or cycles) of each length and check
// the per-vertex maxima against the closed-form bounds.
ExperimentReport sweep_chains41(const Hypergraph& h, int k_max);
ExperimentReport sweep_cycles42(const Hypergraph& h, int k_max);   // requires a simple instance
ExperimentReport sweep_cycles61(const Hypergraph& h, int k_max);   // singleton first/last bucket

// Fixed disjoint chain of k sets of the given size, consecutive sets sharing
// one vertex. Used as the instance for the probability sweeps.
SetChain make_disjoint_set_chain(int k, int set_size);

struct ProbSweepConfig {
    std::vector<int> m_values{1, 2, 3};
    std::vector<int> k_values{1, 2, 3};
    std::vector<int> r_values{2, 3};
    std::vector<double> p_values{0.1, 0.3};
    long samples = 1000000;
    std::uint64_t seed = 0;
};

// Monte-Carlo frequencies of alternating / conflicting / complete events on
// constructed chains, compared against the closed-form bounds; a grid point
// fails when the empirical frequency exceeds its bound by more than three
// standard errors.
ExperimentReport sweep_probs52(const ProbSweepConfig& config);

struct BdisjointProbSweepConfig {
    std::vector<int> n_values{10, 12};
    int b = 1;
    int k = 2;
    std::vector<int> r_values{2, 3};
    std::vector<double> p_values{0.1, 0.3};
    long samples = 1000000;
    std::uint64_t seed = 0;
};

ExperimentReport sweep_probs72(const BdisjointProbSweepConfig& config);

} // namespace mgc
