#pragma once

#include <optional>
#include <string>
#include <vector>

namespace mgc {

// Per-vertex color indices in [0, r).
using Coloring = std::vector<int>;

// Immutable after construction (always go through build_hypergraph).
// Edges are stored as strictly increasing vertex-index sequences;
// incidence[v] lists the edges containing v, in edge-index order.
struct Hypergraph {
    int vertex_count = 0;
    std::vector<std::vector<int>> edges;
    std::vector<std::vector<int>> incidence;

    int edge_count() const { return static_cast<int>(edges.size()); }
};

// Validates and canonicalizes the edge list. Throws std::invalid_argument on
// out-of-range vertices, repeated vertices within an edge, or duplicate edges.
Hypergraph build_hypergraph(int vertex_count, std::vector<std::vector<int>> raw_edges);

std::vector<std::vector<int>> build_incidence(int vertex_count,
                                              const std::vector<std::vector<int>>& edges);

// Largest number of edges through a single vertex; 0 for an edgeless graph.
int max_vertex_degree(const Hypergraph& h);

// Smallest b such that every two distinct edges share at most b vertices
// (exact maximum over edge pairs; 0 when there are fewer than two edges).
int simplicity_level(const Hypergraph& h);

// n if every edge has exactly n vertices, nullopt otherwise. An edgeless
// hypergraph has no distinguished n and also yields nullopt.
std::optional<int> uniformity(const Hypergraph& h);

// Removes from each edge one vertex of maximum degree (ties broken by lowest
// vertex index). Throws if some edge has fewer than two vertices or if the
// trimmed edge set contains duplicates.
Hypergraph trim(const Hypergraph& h);

// True iff no edge is monochromatic. Throws on length mismatch or colors
// outside [0, r).
bool verify_coloring(const Hypergraph& h, const Coloring& coloring, int r);

// Lexicographically first proper r-coloring in color-vector order, or nullopt
// if none exists. Backtracking search; intended for vertex_count <= ~20.
std::optional<Coloring> exhaustive_r_colorable(const Hypergraph& h, int r);

// Text format:
//   HG <vertex_count> <edge_count>
//   <v0> <v1> ... one edge per line
// Blank lines and '#' comments are ignored on input. Writing is canonical, so
// write -> read -> write round-trips byte-identically.
std::string to_hg_text(const Hypergraph& h);
Hypergraph from_hg_text(const std::string& text);
Hypergraph load_hg_file(const std::string& path);
void save_hg_file(const Hypergraph& h, const std::string& path);

} // namespace mgc
