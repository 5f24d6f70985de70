#include "mgc/harness.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "mgc/generators.hpp"
#include "mgc/lll.hpp"
#include "mgc/rng.hpp"

namespace mgc {

namespace {

nlohmann::json aggregate_success_rate(const std::vector<nlohmann::json>& records,
                                      bool include_degenerate) {
    long proper = 0, improper = 0, degenerate = 0, cert_ok = 0;
    double pass_sum = 0.0;
    for (const auto& rec : records) {
        const std::string outcome = rec.at("outcome").get<std::string>();
        if (outcome == "proper") {
            ++proper;
            pass_sum += rec.at("passes").get<int>();
        } else if (outcome == "improper") {
            ++improper;
            pass_sum += rec.at("passes").get<int>();
            if (rec.at("certificate_ok").get<bool>()) ++cert_ok;
        } else {
            ++degenerate;
        }
    }
    const long run = proper + improper;
    const long denom = include_degenerate ? run + degenerate : run;
    nlohmann::json agg;
    agg["trials"] = static_cast<long>(records.size());
    agg["proper"] = proper;
    agg["improper"] = improper;
    agg["degenerate_rejected"] = degenerate;
    agg["success_rate"] = denom > 0 ? static_cast<double>(proper) / denom : 1.0;
    agg["mean_passes"] = run > 0 ? pass_sum / run : 0.0;
    agg["certificate_ok_rate"] = improper > 0 ? static_cast<double>(cert_ok) / improper : 1.0;
    return agg;
}

nlohmann::json aggregate_bound_sweep(const std::vector<nlohmann::json>& records) {
    bool all_pass = true;
    double worst = 0.0; // largest observed/bound ratio
    for (const auto& rec : records) {
        if (!rec.at("pass").get<bool>()) all_pass = false;
        const double bound = rec.at("bound").get<double>();
        const double observed = rec.at("observed").get<double>();
        if (bound > 0) worst = std::max(worst, observed / bound);
    }
    return {{"grid_points", static_cast<long>(records.size())},
            {"all_pass", all_pass},
            {"worst_observed_over_bound", worst}};
}

} // namespace

nlohmann::json recompute_aggregates(const ExperimentReport& report) {
    const std::string kind = report.summary.at("kind").get<std::string>();
    if (kind == "success-rate")
        return aggregate_success_rate(report.records,
                                      report.summary.at("include_degenerate").get<bool>());
    return aggregate_bound_sweep(report.records);
}

bool aggregates_consistent(const ExperimentReport& report) {
    return report.summary.at("aggregates") == recompute_aggregates(report);
}

void write_report(const ExperimentReport& report, const std::string& base_path) {
    std::ofstream lines(base_path + ".jsonl", std::ios::binary);
    if (!lines) throw std::runtime_error("cannot write " + base_path + ".jsonl");
    for (const auto& rec : report.records) lines << rec.dump() << '\n';
    std::ofstream summary(base_path + ".summary.json", std::ios::binary);
    if (!summary) throw std::runtime_error("cannot write " + base_path + ".summary.json");
    summary << report.summary.dump(2) << '\n';
}

ExperimentReport read_report(const std::string& base_path) {
    ExperimentReport report;
    std::ifstream lines(base_path + ".jsonl", std::ios::binary);
    if (!lines) throw std::runtime_error("cannot read " + base_path + ".jsonl");
    std::string line;
    while (std::getline(lines, line)) {
        if (line.empty()) continue;
        report.records.push_back(nlohmann::json::parse(line));
    }
    std::ifstream summary(base_path + ".summary.json", std::ios::binary);
    if (!summary) throw std::runtime_error("cannot read " + base_path + ".summary.json");
    report.summary = nlohmann::json::parse(summary);
    return report;
}

std::string aggregates_to_csv(const ExperimentReport& report) {
    const auto& agg = report.summary.at("aggregates");
    std::ostringstream header, values;
    bool first = true;
    for (auto it = agg.begin(); it != agg.end(); ++it) {
        if (!first) { header << ','; values << ','; }
        first = false;
        header << it.key();
        values << it.value().dump();
    }
    return header.str() + "\n" + values.str() + "\n";
}

ExperimentReport run_success_rate(const Hypergraph& h, const SuccessRateConfig& config) {
    if (config.trials < 1) throw std::invalid_argument("need trials >= 1");
    const IntervalLayout layout(config.r, config.p);
    ExperimentReport report;
    report.records.reserve(static_cast<std::size_t>(config.trials));
    for (long trial = 0; trial < config.trials; ++trial) {
        SplitMix64 rng = SplitMix64::substream(config.seed, static_cast<std::uint64_t>(trial));
        const BirthTimes t = sample_birth_times(h.vertex_count, rng);
        nlohmann::json rec;
        rec["trial"] = trial;
        bool degenerate = false;
        for (const auto& edge : h.edges)
            if (classify_edge(edge, t, layout).tag == EdgeTag::degenerate) { degenerate = true; break; }
        if (degenerate) {
            rec["outcome"] = to_string(MgcOutcome::rejected_degenerate);
        } else {
            const MgcTrace trace = mgc_r(h, t, layout);
            rec["outcome"] = to_string(trace.outcome);
            rec["passes"] = trace.passes;
            rec["recolorings"] = static_cast<long>(trace.events.size());
            if (trace.outcome == MgcOutcome::proper) {
                rec["verified"] = verify_coloring(h, trace.final_colors, config.r);
            } else {
                const Chain cert = extract_certificate(h, t, layout, trace);
                rec["certificate_length"] = cert.length();
                rec["certificate_ok"] =
                    classify_chain(h, cert, t, layout).complete_conflicting;
            }
        }
        report.records.push_back(std::move(rec));
    }
    report.summary = {{"kind", "success-rate"},
                      {"version", MGC_VERSION},
                      {"seed", config.seed},
                      {"r", config.r},
                      {"p", config.p},
                      {"trials", config.trials},
                      {"include_degenerate", config.include_degenerate},
                      {"vertex_count", h.vertex_count},
                      {"edge_count", h.edge_count()}};
    report.summary["aggregates"] = recompute_aggregates(report);
    return report;
}

bool coloring_has_mono_ap(const Coloring& coloring, int n) {
    const int W = static_cast<int>(coloring.size());
    for (int start = 0; start < W; ++start) {
        for (int diff = 1; start + (n - 1) * diff < W; ++diff) {
            bool mono = true;
            for (int i = 1; i < n && mono; ++i)
                mono = coloring[static_cast<std::size_t>(start + i * diff)] ==
                       coloring[static_cast<std::size_t>(start)];
            if (mono) return true;
        }
    }
    return false;
}

VdwSearchResult run_vdw_search(int W, int n, int r, double p, long max_restarts,
                               std::uint64_t seed) {
    const Hypergraph h = gen_ap_hypergraph(W, n);
    const RestartResult rr = color_with_restarts(h, r, p, max_restarts, seed);
    VdwSearchResult out;
    out.stats = rr.stats;
    out.found = rr.success;
    if (rr.success) {
        out.coloring = rr.coloring;
        out.attempt = rr.success_attempt;
        out.ap_scan_ok = !coloring_has_mono_ap(rr.coloring, n);
    }
    return out;
}

namespace {

// Enumerates objects of length k once and tallies, for every vertex, how many
// of them contain it.
template <typename Keep>
std::vector<long> per_vertex_counts(const Hypergraph& h, int k, Keep&& keep) {
    std::vector<long> counts(static_cast<std::size_t>(h.vertex_count), 0);
    std::vector<char> seen(static_cast<std::size_t>(h.vertex_count), 0);
    for_each_chain(h, k, [&](const Chain& c) {
        if (!keep(c)) return;
        std::vector<int> touched;
        for (int e : c.edges) {
            for (int v : h.edges[static_cast<std::size_t>(e)]) {
                if (!seen[static_cast<std::size_t>(v)]) {
                    seen[static_cast<std::size_t>(v)] = 1;
                    touched.push_back(v);
                }
            }
        }
        for (int v : touched) {
            ++counts[static_cast<std::size_t>(v)];
            seen[static_cast<std::size_t>(v)] = 0;
        }
    });
    return counts;
}

ExperimentReport count_sweep(const Hypergraph& h, int k_max, const std::string& kind,
                             int k_min, double (*bound_fn)(int, int, int),
                             bool (*keep_fn)(const Hypergraph&, const Chain&)) {
    const auto n_opt = uniformity(h);
    if (!n_opt) throw std::invalid_argument("counting sweeps need a uniform hypergraph");
    const int n = *n_opt;
    const int d = max_vertex_degree(h);
    ExperimentReport report;
    for (int k = k_min; k <= k_max; ++k) {
        const auto counts =
            per_vertex_counts(h, k, [&](const Chain& c) { return keep_fn(h, c); });
        long max_count = 0;
        int argmax = -1;
        for (std::size_t v = 0; v < counts.size(); ++v)
            if (counts[v] > max_count) { max_count = counts[v]; argmax = static_cast<int>(v); }
        const double bound = bound_fn(n, d, k);
        report.records.push_back({{"k", k},
                                  {"observed", static_cast<double>(max_count)},
                                  {"max_vertex", argmax},
                                  {"bound", bound},
                                  {"pass", static_cast<double>(max_count) <= bound}});
    }
    report.summary = {{"kind", kind},
                      {"version", MGC_VERSION},
                      {"n", n},
                      {"d", d},
                      {"vertex_count", h.vertex_count},
                      {"edge_count", h.edge_count()}};
    report.summary["aggregates"] = recompute_aggregates(report);
    return report;
}

} // namespace

ExperimentReport sweep_chains41(const Hypergraph& h, int k_max) {
    return count_sweep(h, k_max, "chains41", 1, chain_count_bound,
                       [](const Hypergraph&, const Chain&) { return true; });
}

ExperimentReport sweep_cycles42(const Hypergraph& h, int k_max) {
    if (simplicity_level(h) > 1)
        throw std::invalid_argument("this cycle bound applies to simple hypergraphs");
    return count_sweep(h, k_max, "cycles42", 3, adc_count_bound,
                       [](const Hypergraph& hg, const Chain& c) {
                           return is_almost_disjoint_cycle(chain_sets(hg, c));
                       });
}

ExperimentReport sweep_cycles61(const Hypergraph& h, int k_max) {
    return count_sweep(h, k_max, "cycles61", 3, ap_adc1_count_bound,
                       [](const Hypergraph& hg, const Chain& c) {
                           const SetChain sc = chain_sets(hg, c);
                           return is_almost_disjoint_cycle(sc) &&
                                  first_last_intersection_size(sc) == 1;
                       });
}

SetChain make_disjoint_set_chain(int k, int set_size) {
    if (k < 1 || set_size < 2) throw std::invalid_argument("need k >= 1 and sets of size >= 2");
    std::vector<std::vector<int>> sets;
    sets.reserve(static_cast<std::size_t>(k));
    const int stride = set_size - 1;
    for (int i = 0; i < k; ++i) {
        std::vector<int> s(static_cast<std::size_t>(set_size));
        for (int j = 0; j < set_size; ++j) s[static_cast<std::size_t>(j)] = i * stride + j;
        sets.push_back(std::move(s));
    }
    auto chain = make_set_chain(std::move(sets));
    if (!chain) throw std::logic_error("constructed chain invalid");
    return *chain;
}

namespace {

nlohmann::json mc_record(const char* event, double frequency, double bound, long samples) {
    const double se = std::sqrt(std::max(frequency * (1.0 - frequency), 0.0) /
                                static_cast<double>(samples));
    return {{"event", event},
            {"observed", frequency},
            {"bound", bound},
            {"standard_error", se},
            {"pass", frequency <= bound + 3.0 * se}};
}

} // namespace

ExperimentReport sweep_probs52(const ProbSweepConfig& config) {
    ExperimentReport report;
    std::uint64_t stream = 0;
    for (int m : config.m_values) {
        for (int k : config.k_values) {
            const SetChain chain = make_disjoint_set_chain(k, m + 2);
            const int vertices = k * (m + 1) + 1;
            for (int r : config.r_values) {
                for (double p : config.p_values) {
                    const IntervalLayout layout(r, p);
                    long alt = 0, conf = 0, comp = 0;
                    for (long s = 0; s < config.samples; ++s) {
                        SplitMix64 rng = SplitMix64::substream(config.seed + stream, static_cast<std::uint64_t>(s));
                        const BirthTimes t = sample_birth_times(vertices, rng);
                        const ConflictFlags f = conflict_flags(chain, t, layout);
                        alt += f.alternating;
                        conf += f.conflicting;
                        comp += f.complete;
                    }
                    ++stream;
                    const ChainProbBounds bounds = prob_bounds_chain(m, k, r, p);
                    const double N = static_cast<double>(config.samples);
                    for (auto rec : {mc_record("alternating", alt / N, bounds.alternating, config.samples),
                                     mc_record("conflicting", conf / N, bounds.conflicting, config.samples),
                                     mc_record("complete", comp / N, bounds.complete, config.samples)}) {
                        rec["m"] = m;
                        rec["k"] = k;
                        rec["r"] = r;
                        rec["p"] = p;
                        report.records.push_back(std::move(rec));
                    }
                }
            }
        }
    }
    report.summary = {{"kind", "probs52"},
                      {"version", MGC_VERSION},
                      {"seed", config.seed},
                      {"samples", config.samples}};
    report.summary["aggregates"] = recompute_aggregates(report);
    return report;
}

ExperimentReport sweep_probs72(const BdisjointProbSweepConfig& config) {
    ExperimentReport report;
    std::uint64_t stream = 0;
    for (int n : config.n_values) {
        const SetChain chain = make_disjoint_set_chain(config.k, n);
        const int vertices = config.k * (n - 1) + 1;
        for (int r : config.r_values) {
            for (double p : config.p_values) {
                const IntervalLayout layout(r, p);
                long conf = 0, comp = 0;
                for (long s = 0; s < config.samples; ++s) {
                    SplitMix64 rng = SplitMix64::substream(config.seed + stream, static_cast<std::uint64_t>(s));
                    const BirthTimes t = sample_birth_times(vertices, rng);
                    const ConflictFlags f = conflict_flags(chain, t, layout);
                    conf += f.conflicting;
                    comp += f.complete;
                }
                ++stream;
                const BdisjointProbBounds bounds =
                    prob_bounds_bdisjoint(n, config.b, config.k, r, p);
                const double N = static_cast<double>(config.samples);
                for (auto rec : {mc_record("conflicting", conf / N, bounds.conflicting, config.samples),
                                 mc_record("complete", comp / N, bounds.complete, config.samples)}) {
                    rec["n"] = n;
                    rec["b"] = config.b;
                    rec["k"] = config.k;
                    rec["r"] = r;
                    rec["p"] = p;
                    report.records.push_back(std::move(rec));
                }
            }
        }
    }
    report.summary = {{"kind", "probs72"},
                      {"version", MGC_VERSION},
                      {"seed", config.seed},
                      {"samples", config.samples},
                      {"b", config.b},
                      {"k", config.k}};
    report.summary["aggregates"] = recompute_aggregates(report);
    return report;
}

} // namespace mgc
