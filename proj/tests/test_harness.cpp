#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "mgc/generators.hpp"
#include "mgc/harness.hpp"

using namespace mgc;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct TempBase {
    std::string base;
    explicit TempBase(const std::string& name) : base("/tmp/mgc_test_" + name) {}
    ~TempBase() {
        std::remove((base + ".jsonl").c_str());
        std::remove((base + ".summary.json").c_str());
    }
};

} // namespace

TEST_CASE("success-rate study on trivial instances") {
    const Hypergraph edgeless = build_hypergraph(5, {});
    SuccessRateConfig cfg;
    cfg.trials = 50;
    cfg.seed = 3;
    const ExperimentReport ok = run_success_rate(edgeless, cfg);
    CHECK(ok.summary["aggregates"]["success_rate"] == 1.0);
    CHECK(aggregates_consistent(ok));

    // one singleton edge: improper when its vertex lands in a permanent
    // interval, degenerate-rejected otherwise; never proper
    const Hypergraph singleton = build_hypergraph(1, {{0}});
    const ExperimentReport never = run_success_rate(singleton, cfg);
    const auto& agg = never.summary["aggregates"];
    CHECK(agg["success_rate"] == 0.0);
    CHECK(agg["proper"] == 0);
    CHECK(agg["improper"].get<long>() + agg["degenerate_rejected"].get<long>() == 50);
    CHECK(agg["certificate_ok_rate"] == 1.0);
    for (const auto& rec : never.records) {
        if (rec["outcome"] == "improper") CHECK(rec["certificate_length"] == 1);
    }
}

TEST_CASE("the degenerate-inclusion flag changes only the denominator") {
    const Hypergraph h = gen_ap_hypergraph(10, 3);
    SuccessRateConfig cfg;
    cfg.p = 0.3;
    cfg.trials = 300;
    cfg.seed = 8;
    const ExperimentReport excl = run_success_rate(h, cfg);
    cfg.include_degenerate = true;
    const ExperimentReport incl = run_success_rate(h, cfg);
    const auto& a = excl.summary["aggregates"];
    const auto& b = incl.summary["aggregates"];
    CHECK(a["proper"] == b["proper"]);
    const long degenerate = a["degenerate_rejected"].get<long>();
    REQUIRE(degenerate > 0);
    const long run = a["proper"].get<long>() + a["improper"].get<long>();
    CHECK(a["success_rate"].get<double>() ==
          doctest::Approx(a["proper"].get<long>() / static_cast<double>(run)));
    CHECK(b["success_rate"].get<double>() ==
          doctest::Approx(b["proper"].get<long>() / static_cast<double>(run + degenerate)));
    CHECK(aggregates_consistent(incl));
}

TEST_CASE("certificates verify across a random study") {
    RandomSimpleSpec spec;
    spec.vertex_count = 40;
    spec.n = 4;
    spec.max_degree = 4;
    spec.b = 1;
    spec.seed = 11;
    const Hypergraph h = gen_random_simple(spec);
    SuccessRateConfig cfg;
    cfg.r = 2;
    cfg.p = 0.2;
    cfg.trials = 400;
    cfg.seed = 5;
    const ExperimentReport report = run_success_rate(h, cfg);
    CHECK(report.summary["aggregates"]["certificate_ok_rate"] == 1.0);
    CHECK(aggregates_consistent(report));
}

TEST_CASE("reports replay byte-identically and survive reload") {
    const Hypergraph h = gen_ap_hypergraph(10, 3);
    SuccessRateConfig cfg;
    cfg.p = 0.3;
    cfg.trials = 120;
    cfg.seed = 17;

    TempBase a("rep_a"), b("rep_b");
    write_report(run_success_rate(h, cfg), a.base);
    write_report(run_success_rate(h, cfg), b.base);
    CHECK(slurp(a.base + ".jsonl") == slurp(b.base + ".jsonl"));
    CHECK(slurp(a.base + ".summary.json") == slurp(b.base + ".summary.json"));

    const ExperimentReport back = read_report(a.base);
    CHECK(back.records.size() == 120);
    CHECK(aggregates_consistent(back));

    // and the files round-trip through another write
    TempBase c("rep_c");
    write_report(back, c.base);
    CHECK(slurp(a.base + ".jsonl") == slurp(c.base + ".jsonl"));
    CHECK(slurp(a.base + ".summary.json") == slurp(c.base + ".summary.json"));

    const std::string csv = aggregates_to_csv(back);
    CHECK(csv.find("success_rate") != std::string::npos);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 2);
}

TEST_CASE("direct progression scan agrees with hypergraph verification") {
    const Hypergraph h = gen_ap_hypergraph(12, 3);
    SplitMix64 rng(7);
    for (int it = 0; it < 200; ++it) {
        Coloring c(12);
        for (auto& x : c) x = static_cast<int>(rng.below(2));
        CHECK(coloring_has_mono_ap(c, 3) == !verify_coloring(h, c, 2));
    }
}

TEST_CASE("progression search at the known boundary") {
    const VdwSearchResult found = run_vdw_search(8, 3, 2, 0.3, 2000, 1);
    REQUIRE(found.found);
    CHECK(found.ap_scan_ok);

    const VdwSearchResult missing = run_vdw_search(9, 3, 2, 0.3, 400, 1);
    CHECK_FALSE(missing.found);
    CHECK(missing.stats.samples == 400);
}

TEST_CASE("counting sweeps pass on the worked instances") {
    const Hypergraph path = build_hypergraph(7, {{0, 1, 2}, {2, 3, 4}, {4, 5, 6}});
    const ExperimentReport chains = sweep_chains41(path, 3);
    CHECK(chains.summary["aggregates"]["all_pass"] == true);
    CHECK(aggregates_consistent(chains));

    const Hypergraph tri = build_hypergraph(3, {{0, 1}, {1, 2}, {0, 2}});
    const ExperimentReport cycles = sweep_cycles42(tri, 3);
    CHECK(cycles.summary["aggregates"]["all_pass"] == true);
    REQUIRE(cycles.records.size() == 1);
    CHECK(cycles.records[0]["observed"] == 6.0);
    CHECK(cycles.records[0]["bound"] == 192.0);

    const ExperimentReport ap = sweep_cycles61(gen_ap_hypergraph(10, 3), 3);
    CHECK(ap.summary["aggregates"]["all_pass"] == true);

    const Hypergraph dense = build_hypergraph(4, {{0, 1, 2}, {1, 2, 3}});
    CHECK_THROWS_AS(sweep_cycles42(dense, 3), std::invalid_argument);
}

TEST_CASE("probability sweeps hold at a reduced sample size") {
    ProbSweepConfig cfg;
    cfg.m_values = {1, 2};
    cfg.k_values = {1, 2};
    cfg.r_values = {2};
    cfg.p_values = {0.2};
    cfg.samples = 20000;
    cfg.seed = 23;
    const ExperimentReport p52 = sweep_probs52(cfg);
    CHECK(p52.summary["aggregates"]["all_pass"] == true);
    CHECK(aggregates_consistent(p52));

    BdisjointProbSweepConfig b72;
    b72.n_values = {10};
    b72.r_values = {2};
    b72.p_values = {0.1};
    b72.samples = 20000;
    b72.seed = 29;
    const ExperimentReport p72 = sweep_probs72(b72);
    CHECK(p72.summary["aggregates"]["all_pass"] == true);
}

TEST_CASE("constructed chains are disjoint and uniform") {
    for (int k : {1, 2, 4}) {
        for (int size : {3, 5}) {
            const SetChain c = make_disjoint_set_chain(k, size);
            CHECK(c.length() == k);
            CHECK(is_disjoint(c));
            for (const auto& s : c.sets) CHECK(static_cast<int>(s.size()) == size);
            CHECK(is_b_disjoint(c, 1));
        }
    }
}
