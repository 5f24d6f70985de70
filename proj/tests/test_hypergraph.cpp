#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "mgc/generators.hpp"
#include "mgc/hypergraph.hpp"
#include "mgc/rng.hpp"

using namespace mgc;

namespace {

// Independent oracle: scan all r^V color vectors in lexicographic order and
// return the first proper one. Only usable for tiny instances.
std::optional<Coloring> full_scan_colorable(const Hypergraph& h, int r) {
    Coloring c(static_cast<std::size_t>(h.vertex_count), 0);
    while (true) {
        if (verify_coloring(h, c, r)) return c;
        int i = h.vertex_count - 1;
        while (i >= 0 && c[static_cast<std::size_t>(i)] == r - 1) c[static_cast<std::size_t>(i--)] = 0;
        if (i < 0) return std::nullopt;
        ++c[static_cast<std::size_t>(i)];
    }
}

Hypergraph random_instance(SplitMix64& rng, int max_vertices) {
    const int v = 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_vertices - 1)));
    const int n = 2 + static_cast<int>(rng.below(2));
    if (n > v) return build_hypergraph(v, {});
    RandomSimpleSpec spec;
    spec.vertex_count = v;
    spec.n = n;
    spec.max_degree = 1 + static_cast<int>(rng.below(3));
    spec.b = std::min(n - 1, 1 + static_cast<int>(rng.below(2)));
    spec.seed = rng.next();
    return gen_random_simple(spec);
}

} // namespace

TEST_CASE("build_hypergraph constructs incidence and rejects bad input") {
    const Hypergraph h = build_hypergraph(5, {{0, 1, 2}, {2, 3, 4}});
    CHECK(h.edge_count() == 2);
    CHECK(h.incidence[2] == std::vector<int>{0, 1});
    CHECK(max_vertex_degree(h) == 2);

    CHECK_THROWS_AS(build_hypergraph(3, {{0, 1}, {0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(build_hypergraph(3, {{1, 0}, {0, 1}}), std::invalid_argument); // same set
    CHECK_THROWS_AS(build_hypergraph(2, {{0, 5}}), std::invalid_argument);
    CHECK_THROWS_AS(build_hypergraph(3, {{0, 0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(build_hypergraph(3, {{}}), std::invalid_argument);
}

TEST_CASE("degree, simplicity, uniformity") {
    CHECK(max_vertex_degree(build_hypergraph(3, {})) == 0);
    CHECK(max_vertex_degree(build_hypergraph(3, {{0, 1}, {1, 2}, {2, 0}})) == 2);

    CHECK(simplicity_level(build_hypergraph(5, {{0, 1, 2}, {2, 3, 4}})) == 1);
    CHECK(simplicity_level(build_hypergraph(4, {{0, 1, 2}, {1, 2, 3}})) == 2);
    CHECK(simplicity_level(build_hypergraph(3, {{0, 1, 2}})) == 0);

    CHECK(uniformity(build_hypergraph(5, {{0, 1, 2}, {2, 3, 4}})) == 3);
    CHECK(uniformity(build_hypergraph(3, {{0, 1}, {0, 1, 2}})) == std::nullopt);
    CHECK(uniformity(build_hypergraph(3, {})) == std::nullopt);
}

TEST_CASE("trim removes one maximum-degree vertex per edge") {
    const Hypergraph h = trim(build_hypergraph(5, {{0, 1, 2}, {2, 3, 4}}));
    CHECK(h.edges == std::vector<std::vector<int>>{{0, 1}, {3, 4}});

    // all degrees tie, lowest index goes
    CHECK(trim(build_hypergraph(2, {{0, 1}})).edges == std::vector<std::vector<int>>{{1}});
    CHECK(trim(build_hypergraph(4, {{0, 1}, {2, 3}})).edges ==
          std::vector<std::vector<int>>{{1}, {3}});

    CHECK_THROWS_AS(trim(build_hypergraph(2, {{0}})), std::invalid_argument);
    // vertex 1 has maximum degree in both {0,1} and {1,2}; both trim to ...
    CHECK_THROWS_AS(trim(build_hypergraph(4, {{0, 1}, {1, 2}, {0, 2}, {1, 3}, {0, 3}})),
                    std::invalid_argument);
}

TEST_CASE("trim keeps uniformity-1 and does not raise simplicity") {
    SplitMix64 rng(41);
    int trimmed = 0;
    for (int it = 0; it < 60; ++it) {
        const Hypergraph h = random_instance(rng, 12);
        const auto n = uniformity(h);
        if (!n || *n < 2) continue;
        try {
            const Hypergraph t = trim(h);
            ++trimmed;
            if (h.edge_count() > 0) CHECK(uniformity(t) == *n - 1);
            CHECK(simplicity_level(t) <= simplicity_level(h));
        } catch (const std::invalid_argument&) {
            // duplicate edges after trimming; possible at edge size b+1
        }
    }
    CHECK(trimmed > 10);
}

TEST_CASE("verify_coloring") {
    const Hypergraph h = build_hypergraph(2, {{0, 1}});
    CHECK_FALSE(verify_coloring(h, {0, 0}, 2));
    CHECK(verify_coloring(h, {0, 1}, 2));
    CHECK(verify_coloring(build_hypergraph(3, {}), {0, 0, 0}, 1));
    CHECK_THROWS_AS(verify_coloring(h, {0}, 2), std::invalid_argument);
    CHECK_THROWS_AS(verify_coloring(h, {0, 2}, 2), std::invalid_argument);
}

TEST_CASE("exhaustive_r_colorable basics") {
    const Hypergraph one_edge = build_hypergraph(2, {{0, 1}});
    CHECK(exhaustive_r_colorable(one_edge, 2) == Coloring{0, 1});

    const Hypergraph singleton = build_hypergraph(3, {{1}});
    CHECK(exhaustive_r_colorable(singleton, 2) == std::nullopt);
    CHECK(exhaustive_r_colorable(singleton, 5) == std::nullopt);

    // odd cycle: not 2-colorable, 3-colorable
    const Hypergraph c5 = build_hypergraph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    CHECK(exhaustive_r_colorable(c5, 2) == std::nullopt);
    CHECK(exhaustive_r_colorable(c5, 3).has_value());
}

TEST_CASE("exhaustive search equals full lexicographic scan on small instances") {
    SplitMix64 rng(7);
    for (int it = 0; it < 80; ++it) {
        const Hypergraph h = random_instance(rng, 8);
        for (int r = 1; r <= 3; ++r) {
            const auto fast = exhaustive_r_colorable(h, r);
            const auto slow = full_scan_colorable(h, r);
            CHECK(fast == slow);
            if (fast) CHECK(verify_coloring(h, *fast, r));
        }
    }
}

TEST_CASE("progression instances pin the first nontrivial threshold") {
    CHECK(exhaustive_r_colorable(gen_ap_hypergraph(9, 3), 2) == std::nullopt);
    const auto c8 = exhaustive_r_colorable(gen_ap_hypergraph(8, 3), 2);
    REQUIRE(c8.has_value());
    CHECK(verify_coloring(gen_ap_hypergraph(8, 3), *c8, 2));
}

TEST_CASE("non-colorable instances stay non-colorable after trimming") {
    // seven points, seven lines: the smallest simple 3-uniform instance
    // without a proper two-coloring
    const Hypergraph fano = build_hypergraph(
        7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}});
    REQUIRE(exhaustive_r_colorable(fano, 2) == std::nullopt);
    CHECK(exhaustive_r_colorable(trim(fano), 2) == std::nullopt);

    SplitMix64 rng(99);
    for (int it = 0; it < 200; ++it) {
        const Hypergraph h = random_instance(rng, 10);
        const auto n = uniformity(h);
        if (!n || *n < 2) continue;
        if (exhaustive_r_colorable(h, 2)) continue;
        try {
            const Hypergraph t = trim(h);
            CHECK(exhaustive_r_colorable(t, 2) == std::nullopt);
        } catch (const std::invalid_argument&) {
            // trim collision; nothing to compare
        }
    }
}

TEST_CASE("incidence can be rebuilt from edges") {
    SplitMix64 rng(3);
    for (int it = 0; it < 20; ++it) {
        const Hypergraph h = random_instance(rng, 12);
        CHECK(h.incidence == build_incidence(h.vertex_count, h.edges));
    }
}

TEST_CASE("hg text round-trips byte-identically and skips comments") {
    const Hypergraph h = build_hypergraph(5, {{0, 1, 2}, {2, 3, 4}});
    const std::string once = to_hg_text(h);
    const std::string twice = to_hg_text(from_hg_text(once));
    CHECK(once == twice);

    const Hypergraph parsed = from_hg_text("# comment\n\nHG 3 1 # trailing\n\n0 1 2\n");
    CHECK(parsed.vertex_count == 3);
    CHECK(parsed.edges == std::vector<std::vector<int>>{{0, 1, 2}});

    CHECK_THROWS(from_hg_text("HG 3 2\n0 1\n"));
    CHECK_THROWS(from_hg_text("0 1\n"));
    CHECK_THROWS(from_hg_text("HG 3 1\n0 x\n"));
}
