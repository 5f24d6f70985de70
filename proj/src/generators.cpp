#include "mgc/generators.hpp"

#include <algorithm>
#include <stdexcept>

#include "mgc/rng.hpp"

namespace mgc {

Hypergraph gen_ap_hypergraph(int W, int n) {
    if (n < 2 || n > W) throw std::invalid_argument("need 2 <= n <= W");
    std::vector<std::vector<int>> edges;
    for (int start = 0; start < W; ++start) {
        for (int diff = 1; start + (n - 1) * diff < W; ++diff) {
            std::vector<int> edge(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) edge[static_cast<std::size_t>(i)] = start + i * diff;
            edges.push_back(std::move(edge));
        }
    }
    return build_hypergraph(W, std::move(edges));
}

long ap_edge_count(int W, int n) {
    if (n < 2 || n > W) throw std::invalid_argument("need 2 <= n <= W");
    long count = 0;
    for (long diff = 1; (static_cast<long>(n) - 1) * diff <= W - 1; ++diff)
        count += W - (static_cast<long>(n) - 1) * diff;
    return count;
}

Hypergraph gen_random_simple(const RandomSimpleSpec& spec) {
    if (spec.n < 2) throw std::invalid_argument("need n >= 2");
    if (spec.n > spec.vertex_count)
        throw std::invalid_argument("uniformity exceeds vertex count");
    if (spec.max_degree < 1) throw std::invalid_argument("need max_degree >= 1");
    if (spec.b < 1) throw std::invalid_argument("need b >= 1");

    const long target = spec.target_edges >= 0
                            ? spec.target_edges
                            : static_cast<long>(spec.vertex_count) * spec.max_degree / spec.n;
    SplitMix64 rng(spec.seed);
    std::vector<std::vector<int>> edges;
    std::vector<int> degree(static_cast<std::size_t>(spec.vertex_count), 0);
    std::vector<int> pool(static_cast<std::size_t>(spec.vertex_count));
    for (int v = 0; v < spec.vertex_count; ++v) pool[static_cast<std::size_t>(v)] = v;

    const long attempt_cap = 1000 * std::max<long>(target, 1) + 1000;
    for (long attempt = 0; attempt < attempt_cap && static_cast<long>(edges.size()) < target;
         ++attempt) {
        // partial Fisher-Yates draw of n distinct vertices
        for (int i = 0; i < spec.n; ++i) {
            const auto j = i + static_cast<int>(rng.below(
                                   static_cast<std::uint64_t>(spec.vertex_count - i)));
            std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
        }
        std::vector<int> candidate(pool.begin(), pool.begin() + spec.n);
        std::sort(candidate.begin(), candidate.end());

        bool ok = true;
        for (int v : candidate)
            if (degree[static_cast<std::size_t>(v)] + 1 > spec.max_degree) { ok = false; break; }
        for (std::size_t e = 0; ok && e < edges.size(); ++e) {
            int shared = 0;
            std::size_t i = 0, j = 0;
            const auto& other = edges[e];
            while (i < candidate.size() && j < other.size()) {
                if (candidate[i] < other[j]) ++i;
                else if (candidate[i] > other[j]) ++j;
                else { ++shared; ++i; ++j; }
            }
            if (shared > spec.b || shared == spec.n) ok = false;
        }
        if (!ok) continue;
        for (int v : candidate) ++degree[static_cast<std::size_t>(v)];
        edges.push_back(std::move(candidate));
    }
    if (edges.empty() && target > 0)
        throw std::runtime_error("random generator accepted no edge; parameters infeasible");
    return build_hypergraph(spec.vertex_count, std::move(edges));
}

} // namespace mgc
