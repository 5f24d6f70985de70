#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mgc/circle.hpp"
#include "mgc/hypergraph.hpp"

namespace mgc {

enum class MgcOutcome { proper, improper, rejected_degenerate };

std::string to_string(MgcOutcome o);
MgcOutcome outcome_from_string(const std::string& s);

struct RecolorEvent {
    int vertex;
    int from;
    int to;
    int pass; // 1-based pass number

    bool operator==(const RecolorEvent&) const = default;
};

struct MgcTrace {
    Coloring initial;
    std::vector<RecolorEvent> events;
    Coloring final_colors;
    MgcOutcome outcome = MgcOutcome::proper;
    int passes = 0;
};

// Raised when the input assignment makes some edge degenerate.
struct DegenerateEdgeError : std::invalid_argument {
    int edge_index;
    explicit DegenerateEdgeError(int e)
        : std::invalid_argument("edge " + std::to_string(e) + " is degenerate"),
          edge_index(e) {}
};

// Multipass greedy coloring, two colors. Vertices in B u P_B start blue (0),
// vertices in R u P_R start red (1). While some all-blue edge has its last
// vertex in P_B or some all-red edge has its last vertex in P_R, a pass scans
// P_B in birth-time order recoloring last vertices of all-blue edges to red,
// then P_R symmetrically. Requires an injective assignment with no degenerate
// edge (DegenerateEdgeError otherwise).
MgcTrace mgc2(const Hypergraph& h, const BirthTimes& t, const IntervalLayout& layout);

// Generalization to r colors: vertices in C_i u P_i start with color i, each
// pass scans all transition vertices in global birth-time order, and a vertex
// in P_i recolors i -> (i+1) mod r when it is currently the last vertex of an
// edge entirely colored i. For r = 2 this produces exactly the mgc2 run.
MgcTrace mgc_r(const Hypergraph& h, const BirthTimes& t, const IntervalLayout& layout);

struct RestartStats {
    long samples = 0;
    long degenerate_rejected = 0;
    long improper = 0;
};

struct RestartResult {
    bool success = false;
    Coloring coloring;            // valid iff success
    BirthTimes birth_times;       // assignment of the successful attempt
    long success_attempt = -1;    // 0-based attempt index
    RestartStats stats;
    // kept for replay / certification when the search fails
    std::optional<MgcTrace> last_improper;
    BirthTimes last_improper_t;
};

// Samples assignments from per-attempt substreams of `seed`, skips degenerate
// ones, and runs mgc_r until a proper coloring appears or max_restarts samples
// are drawn. Failure is reported in the result, not thrown.
RestartResult color_with_restarts(const Hypergraph& h, int r, double p, long max_restarts,
                                  std::uint64_t seed);

// Self-contained trace JSON (hypergraph, layout, assignment, run) so stored
// failures can be re-validated later. Round-trips byte-identically.
std::string trace_to_json(const Hypergraph& h, const IntervalLayout& layout,
                          const BirthTimes& t, const MgcTrace& trace);

struct StoredTrace {
    Hypergraph hypergraph;
    int r;
    double p;
    BirthTimes t;
    MgcTrace trace;
};

StoredTrace trace_from_json(const std::string& text);

} // namespace mgc
