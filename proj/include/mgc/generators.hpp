#pragma once

#include <cstdint>

#include "mgc/hypergraph.hpp"

namespace mgc {

// Hypergraph of the n-term arithmetic progressions inside {0,...,W-1}.
// Edges are ordered by start, then by difference.
Hypergraph gen_ap_hypergraph(int W, int n);

// Closed-form edge count: sum over differences g >= 1 with (n-1)g <= W-1 of
// W - (n-1)g.
long ap_edge_count(int W, int n);

struct RandomSimpleSpec {
    int vertex_count = 0;
    int n = 0;          // uniformity
    int max_degree = 1; // per-vertex cap
    int b = 1;          // pairwise intersection cap
    std::uint64_t seed = 0;
    long target_edges = -1; // default: floor(vertex_count * max_degree / n)
};

// Rejection sampling: candidate edges are drawn uniformly and kept when the
// degree and intersection caps still hold. Deterministic given the seed. The
// distribution is not uniform over all such hypergraphs and nothing here
// assumes it is.
Hypergraph gen_random_simple(const RandomSimpleSpec& spec);

} // namespace mgc
