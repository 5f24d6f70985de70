#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "mgc/chains.hpp"
#include "mgc/generators.hpp"
#include "mgc/rng.hpp"

using namespace mgc;

namespace {

const IntervalLayout kTwo(2, 0.2);

SetChain random_chain(SplitMix64& rng, int max_len, int set_size) {
    // consecutive sets share exactly one vertex; occasionally reuse an old
    // vertex in a non-adjacent set so non-disjoint chains appear
    const int k = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_len)));
    std::vector<std::vector<int>> sets;
    int next_vertex = 0;
    std::vector<int> prev;
    std::vector<int> links;
    for (int i = 0; i < k; ++i) {
        std::vector<int> s;
        if (i > 0) {
            // pick the shared vertex from the previous set, avoiding used links
            int shared = -1;
            for (int v : prev)
                if (std::find(links.begin(), links.end(), v) == links.end()) { shared = v; break; }
            if (shared < 0) break;
            s.push_back(shared);
            links.push_back(shared);
        }
        while (static_cast<int>(s.size()) < set_size) {
            int v;
            if (i > 1 && rng.below(4) == 0) {
                // vertex from an earlier, non-adjacent set
                v = static_cast<int>(rng.below(static_cast<std::uint64_t>(next_vertex)));
            } else {
                v = next_vertex++;
            }
            if (std::find(s.begin(), s.end(), v) == s.end()) s.push_back(v);
        }
        std::sort(s.begin(), s.end());
        sets.push_back(std::move(s));
        prev = sets.back();
    }
    auto chain = make_set_chain(std::move(sets));
    if (!chain) return random_chain(rng, max_len, set_size);
    return *chain;
}

} // namespace

TEST_CASE("validate_chain") {
    const Hypergraph h = build_hypergraph(5, {{0, 1, 2}, {2, 3, 4}, {1, 2, 3}});
    const auto good = validate_chain(h, {0, 1});
    REQUIRE(good.has_value());
    CHECK(good->links == std::vector<int>{2});

    CHECK_FALSE(validate_chain(h, {0, 0}).has_value()); // |intersection| = 3
    CHECK_FALSE(validate_chain(h, {0, 2}).has_value()); // |intersection| = 2
    CHECK_FALSE(validate_chain(h, {}).has_value());
    CHECK_THROWS_AS(validate_chain(h, {0, 7}), std::invalid_argument);

    // repeated link vertex across different positions is rejected
    const Hypergraph h2 = build_hypergraph(4, {{0, 1}, {1, 2}, {1, 3}});
    CHECK_FALSE(validate_chain(h2, {0, 1, 2}).has_value());
}

TEST_CASE("disjoint and almost disjoint cycle predicates") {
    const Hypergraph path = build_hypergraph(7, {{0, 1, 2}, {2, 3, 4}, {4, 5, 6}});
    const auto pc = validate_chain(path, {0, 1, 2});
    REQUIRE(pc.has_value());
    CHECK(is_disjoint(chain_sets(path, *pc)));
    CHECK_FALSE(is_almost_disjoint_cycle(chain_sets(path, *pc)));

    const Hypergraph tri = build_hypergraph(3, {{0, 1}, {1, 2}, {0, 2}});
    const auto tc = validate_chain(tri, {0, 1, 2});
    REQUIRE(tc.has_value());
    CHECK(is_almost_disjoint_cycle(chain_sets(tri, *tc)));
    CHECK_FALSE(is_disjoint(chain_sets(tri, *tc)));

    const auto short_chain = validate_chain(tri, {0, 1});
    REQUIRE(short_chain.has_value());
    CHECK_FALSE(is_almost_disjoint_cycle(chain_sets(tri, *short_chain))); // k >= 3

    CHECK(first_last_intersection_size(chain_sets(tri, *tc)) == 1);
}

TEST_CASE("b-disjoint decision") {
    const Hypergraph h = build_hypergraph(6, {{0, 1, 2}, {2, 3, 4}, {0, 4, 5}});
    const auto chain = validate_chain(h, {0, 1, 2});
    REQUIRE(chain.has_value());
    const SetChain sc = chain_sets(h, *chain);
    CHECK_FALSE(is_b_disjoint(sc, 1)); // every order has a step adding one vertex
    CHECK(is_b_disjoint(sc, 2));

    // disjoint chains are b-disjoint for b >= 1, and for b = 0 only when k = 1
    const Hypergraph path = build_hypergraph(7, {{0, 1, 2}, {2, 3, 4}, {4, 5, 6}});
    const SetChain psc = chain_sets(path, *validate_chain(path, {0, 1, 2}));
    for (int b = 1; b <= 3; ++b) CHECK(is_b_disjoint(psc, b));
    CHECK_FALSE(is_b_disjoint(psc, 0));
    const SetChain single = chain_sets(path, *validate_chain(path, {1}));
    CHECK(is_b_disjoint(single, 0));
}

TEST_CASE("b-disjoint dynamic program equals connected-permutation enumeration") {
    SplitMix64 rng(31);
    for (int it = 0; it < 600; ++it) {
        const int size = 3 + static_cast<int>(rng.below(3));
        const SetChain sc = random_chain(rng, 7, size);
        for (int b = 0; b <= size; ++b)
            REQUIRE(is_b_disjoint(sc, b) == is_b_disjoint_exhaustive(sc, b));
    }
}

TEST_CASE("chain classification on the worked instance") {
    // u1=0 (P_R), u2=1 (B), u3=2 (R); e1={u1,u2}, e2={u1,u3}
    const Hypergraph h = build_hypergraph(3, {{0, 1}, {0, 2}});
    const BirthTimes t{0.95, 0.2, 0.6};

    const auto two = validate_chain(h, {0, 1});
    REQUIRE(two.has_value());
    const auto cls = classify_chain(h, *two, t, kTwo);
    CHECK(cls.alternating);
    CHECK(cls.conflicting);          // last of e1 is u2 in B
    CHECK(cls.complete_conflicting); // first of e2 is u3 in R

    const auto one = validate_chain(h, {0});
    REQUIRE(one.has_value());
    const auto cls1 = classify_chain(h, *one, t, kTwo);
    CHECK(cls1.conflicting);
    CHECK_FALSE(cls1.complete_conflicting); // first of e1 is u1 in P_R

    // a chain containing an easy edge is never alternating
    const BirthTimes teasy{0.95, 0.2, 0.1};
    const Hypergraph h2 = build_hypergraph(3, {{0, 1}, {1, 2}});
    const auto c2 = validate_chain(h2, {0, 1});
    REQUIRE(c2.has_value());
    const BirthTimes tmix{0.45, 0.2, 0.6}; // {1,2} hits B and R: easy
    CHECK_FALSE(classify_chain(h2, *c2, tmix, kTwo).alternating);
}

TEST_CASE("flag implications hold on fuzzed chains") {
    SplitMix64 rng(37);
    long alternating = 0, conflicting = 0, complete = 0;
    for (int r : {2, 3}) {
        const IntervalLayout lay(r, 0.35);
        for (int it = 0; it < 4000; ++it) {
            const SetChain sc = random_chain(rng, 4, 3);
            int max_vertex = 0;
            for (const auto& s : sc.sets) max_vertex = std::max(max_vertex, s.back());
            const BirthTimes t = sample_birth_times(max_vertex + 1, rng);
            const auto cls = classify_chain(sc, t, lay);
            if (cls.complete_conflicting) REQUIRE(cls.conflicting);
            if (cls.conflicting) REQUIRE(cls.alternating);
            alternating += cls.alternating;
            conflicting += cls.conflicting;
            complete += cls.complete_conflicting;

            // the two-color predicate agrees with the general one when r = 2
            if (r == 2)
                REQUIRE(is_alternating2(sc, t, lay) == is_alternating_r(sc, t, lay));
        }
    }
    CHECK(alternating > conflicting);
    CHECK(complete > 0);
}

TEST_CASE("every non-disjoint chain contains an almost disjoint cycle segment") {
    SplitMix64 rng(43);
    int non_disjoint = 0;
    for (int it = 0; it < 3000; ++it) {
        const SetChain sc = random_chain(rng, 6, 3);
        if (is_disjoint(sc)) continue;
        ++non_disjoint;
        bool found = false;
        const int k = sc.length();
        for (int from = 0; from < k && !found; ++from) {
            for (int len = 3; from + len <= k && !found; ++len) {
                std::vector<std::vector<int>> sub(sc.sets.begin() + from,
                                                  sc.sets.begin() + from + len);
                const auto sub_chain = make_set_chain(std::move(sub));
                REQUIRE(sub_chain.has_value());
                found = is_almost_disjoint_cycle(*sub_chain);
            }
        }
        REQUIRE(found);
    }
    CHECK(non_disjoint > 100);
}

TEST_CASE("enumeration matches hand counts and stays within the bounds") {
    const Hypergraph path = build_hypergraph(7, {{0, 1, 2}, {2, 3, 4}, {4, 5, 6}});
    const auto at0 = enumerate_chains_at(path, 0, 2);
    REQUIRE(at0.size() == 2); // (e1,e2) and (e2,e1)
    CHECK(at0[0].edges == std::vector<int>{0, 1});
    CHECK(at0[1].edges == std::vector<int>{1, 0});
    CHECK(chain_count_bound(3, 2, 2) == 24.0);
    CHECK(at0.size() <= chain_count_bound(3, 2, 2));

    const Hypergraph tri = build_hypergraph(3, {{0, 1}, {1, 2}, {0, 2}});
    const auto cycles = enumerate_adc_at(tri, 0, 3);
    CHECK(cycles.size() == 6);
    CHECK(adc_count_bound(2, 2, 3) == 192.0);
    CHECK_THROWS_AS(enumerate_adc_at(tri, 0, 2), std::invalid_argument);

    // non-b-disjoint chains around the 3-cycle of triples
    const Hypergraph h = build_hypergraph(6, {{0, 1, 2}, {2, 3, 4}, {0, 4, 5}});
    CHECK_FALSE(enumerate_non_b_disjoint_at(h, 0, 3, 1).empty());
    CHECK(enumerate_non_b_disjoint_at(h, 0, 3, 2).empty());
}

TEST_CASE("per-vertex chain and cycle counts respect the bounds on random instances") {
    SplitMix64 rng(51);
    for (int it = 0; it < 25; ++it) {
        RandomSimpleSpec spec;
        spec.n = 3;
        spec.vertex_count = 12;
        spec.max_degree = 3;
        spec.b = 1;
        spec.seed = rng.next();
        const Hypergraph h = gen_random_simple(spec);
        const int d = max_vertex_degree(h);
        if (d == 0) continue;
        for (int k = 1; k <= 4; ++k) {
            for (int v = 0; v < h.vertex_count; ++v) {
                const auto chains = enumerate_chains_at(h, v, k);
                REQUIRE(static_cast<double>(chains.size()) <= chain_count_bound(3, d, k));
                if (k >= 3) {
                    const auto cycles = enumerate_adc_at(h, v, k);
                    REQUIRE(static_cast<double>(cycles.size()) <= adc_count_bound(3, d, k));
                }
            }
        }
    }
}

TEST_CASE("certificate extraction on the worked instance") {
    const Hypergraph h = build_hypergraph(3, {{0, 1}, {0, 2}});
    const BirthTimes t{0.95, 0.2, 0.6};
    const MgcTrace trace = mgc2(h, t, kTwo);
    REQUIRE(trace.outcome == MgcOutcome::improper);
    const Chain cert = extract_certificate(h, t, kTwo, trace);
    CHECK(cert.edges == std::vector<int>{0, 1});
    CHECK(cert.links == std::vector<int>{0});

    // a single edge inside B certifies itself
    const Hypergraph single = build_hypergraph(2, {{0, 1}});
    const BirthTimes ts{0.1, 0.2};
    const MgcTrace st = mgc2(single, ts, kTwo);
    const Chain c1 = extract_certificate(single, ts, kTwo, st);
    CHECK(c1.edges == std::vector<int>{0});
    CHECK(classify_chain(single, c1, ts, kTwo).complete_conflicting);

    // proper runs have no certificate
    const MgcTrace ok = mgc2(single, {0.1, 0.6}, kTwo);
    CHECK_THROWS_AS(extract_certificate(single, {0.1, 0.6}, kTwo, ok), std::invalid_argument);
}

TEST_CASE("fuzzed improper runs always certify") {
    SplitMix64 rng(61);
    long improper = 0;
    for (int r : {2, 3}) {
        const IntervalLayout lay(r, 0.3);
        for (int it = 0; it < 600; ++it) {
            RandomSimpleSpec spec;
            spec.n = 3;
            spec.vertex_count = 8 + static_cast<int>(rng.below(8));
            spec.max_degree = 1 + static_cast<int>(rng.below(4));
            spec.b = 1;
            spec.seed = rng.next();
            const Hypergraph h = gen_random_simple(spec);
            const BirthTimes t = sample_birth_times(h.vertex_count, rng);
            try {
                const MgcTrace trace = mgc_r(h, t, lay);
                if (trace.outcome != MgcOutcome::improper) continue;
                ++improper;
                const Chain cert = extract_certificate(h, t, lay, trace);
                REQUIRE(classify_chain(h, cert, t, lay).complete_conflicting);
            } catch (const DegenerateEdgeError&) {
            }
        }
    }
    CHECK(improper > 50);
}
