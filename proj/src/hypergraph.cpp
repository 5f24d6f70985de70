#include "mgc/hypergraph.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace mgc {

std::vector<std::vector<int>> build_incidence(int vertex_count,
                                              const std::vector<std::vector<int>>& edges) {
    std::vector<std::vector<int>> inc(static_cast<std::size_t>(vertex_count));
    for (std::size_t e = 0; e < edges.size(); ++e) {
        for (int v : edges[e]) inc[static_cast<std::size_t>(v)].push_back(static_cast<int>(e));
    }
    return inc;
}

Hypergraph build_hypergraph(int vertex_count, std::vector<std::vector<int>> raw_edges) {
    if (vertex_count < 0) throw std::invalid_argument("vertex_count must be nonnegative");
    for (std::size_t e = 0; e < raw_edges.size(); ++e) {
        auto& edge = raw_edges[e];
        if (edge.empty())
            throw std::invalid_argument("edge " + std::to_string(e) + " is empty");
        for (int v : edge) {
            if (v < 0 || v >= vertex_count)
                throw std::invalid_argument("edge " + std::to_string(e) +
                                            " contains out-of-range vertex " + std::to_string(v));
        }
        std::sort(edge.begin(), edge.end());
        if (std::adjacent_find(edge.begin(), edge.end()) != edge.end())
            throw std::invalid_argument("edge " + std::to_string(e) + " repeats a vertex");
    }
    std::set<std::vector<int>> seen;
    for (std::size_t e = 0; e < raw_edges.size(); ++e) {
        if (!seen.insert(raw_edges[e]).second)
            throw std::invalid_argument("duplicate edge at index " + std::to_string(e));
    }
    Hypergraph h;
    h.vertex_count = vertex_count;
    h.edges = std::move(raw_edges);
    h.incidence = build_incidence(vertex_count, h.edges);
    return h;
}

int max_vertex_degree(const Hypergraph& h) {
    std::size_t best = 0;
    for (const auto& inc : h.incidence) best = std::max(best, inc.size());
    return static_cast<int>(best);
}

namespace {

int sorted_intersection_size(const std::vector<int>& a, const std::vector<int>& b) {
    int count = 0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) ++i;
        else if (a[i] > b[j]) ++j;
        else { ++count; ++i; ++j; }
    }
    return count;
}

} // namespace

int simplicity_level(const Hypergraph& h) {
    int best = 0;
    for (std::size_t i = 0; i < h.edges.size(); ++i)
        for (std::size_t j = i + 1; j < h.edges.size(); ++j)
            best = std::max(best, sorted_intersection_size(h.edges[i], h.edges[j]));
    return best;
}

std::optional<int> uniformity(const Hypergraph& h) {
    if (h.edges.empty()) return std::nullopt;
    const std::size_t n = h.edges.front().size();
    for (const auto& e : h.edges)
        if (e.size() != n) return std::nullopt;
    return static_cast<int>(n);
}

Hypergraph trim(const Hypergraph& h) {
    std::vector<int> degree(static_cast<std::size_t>(h.vertex_count), 0);
    for (std::size_t v = 0; v < h.incidence.size(); ++v)
        degree[v] = static_cast<int>(h.incidence[v].size());

    std::vector<std::vector<int>> trimmed;
    trimmed.reserve(h.edges.size());
    for (std::size_t e = 0; e < h.edges.size(); ++e) {
        const auto& edge = h.edges[e];
        if (edge.size() < 2)
            throw std::invalid_argument("cannot trim edge " + std::to_string(e) +
                                        " of size " + std::to_string(edge.size()));
        // Vertex of maximum degree; edges are sorted, so the first maximum is
        // the lowest-index one.
        int drop = edge.front();
        for (int v : edge)
            if (degree[static_cast<std::size_t>(v)] > degree[static_cast<std::size_t>(drop)]) drop = v;
        std::vector<int> rest;
        rest.reserve(edge.size() - 1);
        for (int v : edge)
            if (v != drop) rest.push_back(v);
        trimmed.push_back(std::move(rest));
    }
    try {
        return build_hypergraph(h.vertex_count, std::move(trimmed));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("trimming produced duplicate edges");
    }
}

bool verify_coloring(const Hypergraph& h, const Coloring& coloring, int r) {
    if (static_cast<int>(coloring.size()) != h.vertex_count)
        throw std::invalid_argument("coloring length does not match vertex count");
    for (int c : coloring)
        if (c < 0 || c >= r) throw std::invalid_argument("color out of range");
    for (const auto& edge : h.edges) {
        const int first = coloring[static_cast<std::size_t>(edge.front())];
        bool mono = true;
        for (int v : edge)
            if (coloring[static_cast<std::size_t>(v)] != first) { mono = false; break; }
        if (mono) return false;
    }
    return true;
}

namespace {

// Backtracking over vertices in index order, colors tried in increasing
// order, which yields the lexicographically smallest proper color vector.
// An edge can be checked as soon as its largest vertex is colored.
bool color_search(const Hypergraph& h, int r, const std::vector<std::vector<int>>& closing,
                  std::size_t v, Coloring& colors) {
    if (v == static_cast<std::size_t>(h.vertex_count)) return true;
    for (int c = 0; c < r; ++c) {
        colors[v] = c;
        bool ok = true;
        for (int e : closing[v]) {
            const auto& edge = h.edges[static_cast<std::size_t>(e)];
            bool mono = true;
            for (int u : edge)
                if (colors[static_cast<std::size_t>(u)] != c) { mono = false; break; }
            if (mono) { ok = false; break; }
        }
        if (ok && color_search(h, r, closing, v + 1, colors)) return true;
    }
    colors[v] = -1;
    return false;
}

} // namespace

std::optional<Coloring> exhaustive_r_colorable(const Hypergraph& h, int r) {
    if (r < 1) throw std::invalid_argument("need r >= 1");
    // closing[v] = edges whose maximum vertex is v
    std::vector<std::vector<int>> closing(static_cast<std::size_t>(h.vertex_count));
    for (std::size_t e = 0; e < h.edges.size(); ++e)
        closing[static_cast<std::size_t>(h.edges[e].back())].push_back(static_cast<int>(e));
    Coloring colors(static_cast<std::size_t>(h.vertex_count), -1);
    if (!color_search(h, r, closing, 0, colors)) return std::nullopt;
    return colors;
}

std::string to_hg_text(const Hypergraph& h) {
    std::ostringstream out;
    out << "HG " << h.vertex_count << ' ' << h.edge_count() << '\n';
    for (const auto& edge : h.edges) {
        for (std::size_t i = 0; i < edge.size(); ++i) {
            if (i) out << ' ';
            out << edge[i];
        }
        out << '\n';
    }
    return out.str();
}

Hypergraph from_hg_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int vertex_count = -1;
    long declared_edges = -1;
    std::vector<std::vector<int>> edges;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        if (vertex_count < 0) {
            std::string tag;
            if (!(fields >> tag)) continue; // blank
            if (tag != "HG")
                throw std::runtime_error("line " + std::to_string(line_no) +
                                         ": expected 'HG <vertices> <edges>' header");
            if (!(fields >> vertex_count >> declared_edges) || vertex_count < 0 || declared_edges < 0)
                throw std::runtime_error("line " + std::to_string(line_no) + ": malformed header");
            continue;
        }
        std::vector<int> edge;
        int v;
        while (fields >> v) edge.push_back(v);
        if (!fields.eof())
            throw std::runtime_error("line " + std::to_string(line_no) + ": malformed edge");
        if (!edge.empty()) edges.push_back(std::move(edge));
    }
    if (vertex_count < 0) throw std::runtime_error("missing HG header");
    if (declared_edges != static_cast<long>(edges.size()))
        throw std::runtime_error("header declares " + std::to_string(declared_edges) +
                                 " edges but file has " + std::to_string(edges.size()));
    return build_hypergraph(vertex_count, std::move(edges));
}

Hypergraph load_hg_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_hg_text(buf.str());
}

void save_hg_file(const Hypergraph& h, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << to_hg_text(h);
}

} // namespace mgc
