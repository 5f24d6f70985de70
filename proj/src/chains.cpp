#include "mgc/chains.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

namespace mgc {

namespace {

std::vector<int> sorted_intersection(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) ++i;
        else if (a[i] > b[j]) ++j;
        else { out.push_back(a[i]); ++i; ++j; }
    }
    return out;
}

bool intersects(const std::vector<int>& a, const std::vector<int>& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) ++i;
        else if (a[i] > b[j]) ++j;
        else return true;
    }
    return false;
}

} // namespace

std::optional<SetChain> make_set_chain(std::vector<std::vector<int>> sets) {
    if (sets.empty()) return std::nullopt;
    for (auto& s : sets) {
        if (s.empty()) return std::nullopt;
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end()) return std::nullopt;
    }
    SetChain c;
    c.links.reserve(sets.size() - 1);
    for (std::size_t i = 0; i + 1 < sets.size(); ++i) {
        const auto inter = sorted_intersection(sets[i], sets[i + 1]);
        if (inter.size() != 1) return std::nullopt;
        c.links.push_back(inter.front());
    }
    std::unordered_set<int> seen(c.links.begin(), c.links.end());
    if (seen.size() != c.links.size()) return std::nullopt;
    c.sets = std::move(sets);
    return c;
}

std::optional<Chain> validate_chain(const Hypergraph& h, const std::vector<int>& edge_seq) {
    if (edge_seq.empty()) return std::nullopt;
    std::vector<std::vector<int>> sets;
    sets.reserve(edge_seq.size());
    for (int e : edge_seq) {
        if (e < 0 || e >= h.edge_count()) throw std::invalid_argument("edge index out of range");
        sets.push_back(h.edges[static_cast<std::size_t>(e)]);
    }
    auto sc = make_set_chain(std::move(sets));
    if (!sc) return std::nullopt;
    return Chain{edge_seq, std::move(sc->links)};
}

SetChain chain_sets(const Hypergraph& h, const Chain& c) {
    SetChain sc;
    sc.links = c.links;
    sc.sets.reserve(c.edges.size());
    for (int e : c.edges) sc.sets.push_back(h.edges[static_cast<std::size_t>(e)]);
    return sc;
}

bool is_disjoint(const SetChain& c) {
    const int k = c.length();
    for (int i = 0; i < k; ++i)
        for (int j = i + 2; j < k; ++j)
            if (intersects(c.sets[static_cast<std::size_t>(i)], c.sets[static_cast<std::size_t>(j)]))
                return false;
    return true;
}

int first_last_intersection_size(const SetChain& c) {
    return static_cast<int>(sorted_intersection(c.sets.front(), c.sets.back()).size());
}

namespace {

bool segment_disjoint(const SetChain& c, int from, int to) {
    for (int i = from; i <= to; ++i)
        for (int j = i + 2; j <= to; ++j)
            if (intersects(c.sets[static_cast<std::size_t>(i)], c.sets[static_cast<std::size_t>(j)]))
                return false;
    return true;
}

} // namespace

bool is_almost_disjoint_cycle(const SetChain& c) {
    const int k = c.length();
    if (k < 3) return false;
    if (!intersects(c.sets.front(), c.sets.back())) return false;
    return segment_disjoint(c, 0, k - 2) && segment_disjoint(c, 1, k - 1);
}

namespace {

int uniform_set_size(const SetChain& c) {
    const std::size_t n = c.sets.front().size();
    for (const auto& s : c.sets)
        if (s.size() != n) throw std::invalid_argument("b-disjointness needs uniform sets");
    return static_cast<int>(n);
}

int fresh_count(const SetChain& c, int candidate, int lo, int hi) {
    int fresh = 0;
    for (int v : c.sets[static_cast<std::size_t>(candidate)]) {
        bool found = false;
        for (int i = lo; i <= hi && !found; ++i)
            found = std::binary_search(c.sets[static_cast<std::size_t>(i)].begin(),
                                       c.sets[static_cast<std::size_t>(i)].end(), v);
        if (!found) ++fresh;
    }
    return fresh;
}

} // namespace

bool is_b_disjoint(const SetChain& c, int b) {
    if (b < 0) throw std::invalid_argument("b must be nonnegative");
    const int k = c.length();
    if (k == 1) return true;
    const int need = uniform_set_size(c) - b;
    // reach[l][r]: some connected order builds exactly positions [l,r] with
    // every extension contributing >= need fresh vertices.
    std::vector<std::vector<char>> reach(static_cast<std::size_t>(k),
                                         std::vector<char>(static_cast<std::size_t>(k), 0));
    for (int i = 0; i < k; ++i) reach[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    for (int len = 2; len <= k; ++len) {
        for (int l = 0; l + len - 1 < k; ++l) {
            const int r = l + len - 1;
            bool ok = false;
            if (reach[static_cast<std::size_t>(l + 1)][static_cast<std::size_t>(r)] &&
                fresh_count(c, l, l + 1, r) >= need)
                ok = true;
            if (!ok && reach[static_cast<std::size_t>(l)][static_cast<std::size_t>(r - 1)] &&
                fresh_count(c, r, l, r - 1) >= need)
                ok = true;
            reach[static_cast<std::size_t>(l)][static_cast<std::size_t>(r)] = ok ? 1 : 0;
        }
    }
    return reach[0][static_cast<std::size_t>(k - 1)] != 0;
}

namespace {

bool extend_all_orders(const SetChain& c, int need, int l, int r) {
    const int k = c.length();
    if (l == 0 && r == k - 1) return true;
    if (l > 0 && fresh_count(c, l - 1, l, r) >= need && extend_all_orders(c, need, l - 1, r))
        return true;
    if (r < k - 1 && fresh_count(c, r + 1, l, r) >= need && extend_all_orders(c, need, l, r + 1))
        return true;
    return false;
}

} // namespace

bool is_b_disjoint_exhaustive(const SetChain& c, int b) {
    if (b < 0) throw std::invalid_argument("b must be nonnegative");
    const int k = c.length();
    if (k == 1) return true;
    const int need = uniform_set_size(c) - b;
    for (int start = 0; start < k; ++start)
        if (extend_all_orders(c, need, start, start)) return true;
    return false;
}

namespace {

struct ClassifiedChain {
    std::vector<EdgeClass> cls;
    bool all_plain = true;
};

ClassifiedChain classify_sets(const SetChain& c, const BirthTimes& t, const IntervalLayout& layout) {
    ClassifiedChain out;
    out.cls.reserve(c.sets.size());
    for (const auto& s : c.sets) {
        out.cls.push_back(classify_edge(s, t, layout));
        if (out.cls.back().tag != EdgeTag::plain) out.all_plain = false;
    }
    return out;
}

// first(s_i) = links[i-1] = last(s_{i+1}); shared by both alternating forms.
bool links_are_extremes(const SetChain& c, const ClassifiedChain& cc) {
    for (std::size_t i = 0; i + 1 < c.sets.size(); ++i) {
        const int v = c.links[i];
        if (cc.cls[i].first != v) return false;
        if (cc.cls[i + 1].last != v) return false;
    }
    return true;
}

} // namespace

bool is_alternating2(const SetChain& c, const BirthTimes& t, const IntervalLayout& layout) {
    const ClassifiedChain cc = classify_sets(c, t, layout);
    if (!cc.all_plain) return false;
    if (!links_are_extremes(c, cc)) return false;
    for (int v : c.links)
        if (!classify_point(t[static_cast<std::size_t>(v)], layout).transition) return false;
    return true;
}

bool is_alternating_r(const SetChain& c, const BirthTimes& t, const IntervalLayout& layout) {
    const ClassifiedChain cc = classify_sets(c, t, layout);
    if (!cc.all_plain) return false;
    if (!links_are_extremes(c, cc)) return false;
    int prev_index = -1;
    for (std::size_t i = 0; i < c.links.size(); ++i) {
        const PointClass pc = classify_point(t[static_cast<std::size_t>(c.links[i])], layout);
        if (!pc.transition) return false;
        if (i > 0 && pc.index != (prev_index - 1 + layout.r) % layout.r) return false;
        prev_index = pc.index;
    }
    return true;
}

ConflictFlags conflict_flags(const SetChain& c, const BirthTimes& t, const IntervalLayout& layout) {
    ConflictFlags out;
    out.alternating = layout.r == 2 ? is_alternating2(c, t, layout)
                                    : is_alternating_r(c, t, layout);
    if (!out.alternating) return out;
    const EdgeClass head = classify_edge(c.sets.front(), t, layout);
    out.conflicting = classify_point(t[static_cast<std::size_t>(head.last)], layout).permanent();
    if (out.conflicting) {
        const EdgeClass tail = classify_edge(c.sets.back(), t, layout);
        out.complete =
            classify_point(t[static_cast<std::size_t>(tail.first)], layout).permanent();
    }
    return out;
}

ChainClassification classify_chain(const SetChain& c, const BirthTimes& t,
                                   const IntervalLayout& layout, int b) {
    ChainClassification out;
    out.b = b;
    out.disjoint = is_disjoint(c);
    out.almost_disjoint_cycle = is_almost_disjoint_cycle(c);
    out.b_disjoint = is_b_disjoint(c, b);
    const ConflictFlags flags = conflict_flags(c, t, layout);
    out.alternating = flags.alternating;
    out.conflicting = flags.conflicting;
    out.complete_conflicting = flags.complete;
    return out;
}

ChainClassification classify_chain(const Hypergraph& h, const Chain& c, const BirthTimes& t,
                                   const IntervalLayout& layout, int b) {
    return classify_chain(chain_sets(h, c), t, layout, b);
}

Chain extract_certificate(const Hypergraph& h, const BirthTimes& t, const IntervalLayout& layout,
                          const MgcTrace& trace) {
    if (trace.outcome != MgcOutcome::improper)
        throw std::invalid_argument("certificate extraction needs an improper run");
    const int r = layout.r;

    std::vector<EdgeClass> cls(h.edges.size());
    std::vector<std::vector<int>> by_last(static_cast<std::size_t>(h.vertex_count));
    for (std::size_t e = 0; e < h.edges.size(); ++e) {
        cls[e] = classify_edge(h.edges[e], t, layout);
        if (cls[e].tag == EdgeTag::degenerate) throw DegenerateEdgeError(static_cast<int>(e));
        if (cls[e].tag == EdgeTag::plain)
            by_last[static_cast<std::size_t>(cls[e].last)].push_back(static_cast<int>(e));
    }

    // first monochromatic edge starts the chain
    int start = -1;
    for (std::size_t e = 0; e < h.edges.size() && start < 0; ++e) {
        const int color = trace.final_colors[static_cast<std::size_t>(h.edges[e].front())];
        bool mono = true;
        for (int v : h.edges[e])
            if (trace.final_colors[static_cast<std::size_t>(v)] != color) { mono = false; break; }
        if (mono) start = static_cast<int>(e);
    }
    if (start < 0) throw std::logic_error("improper trace without a monochromatic edge");

    std::vector<std::size_t> event_of(static_cast<std::size_t>(h.vertex_count),
                                      trace.events.size());
    for (std::size_t i = 0; i < trace.events.size(); ++i) {
        auto& slot = event_of[static_cast<std::size_t>(trace.events[i].vertex)];
        if (slot != trace.events.size()) throw std::logic_error("vertex recolored twice in trace");
        slot = i;
    }

    std::vector<int> chain_edges{start};
    std::unordered_set<int> used_links;
    std::size_t prev_event = trace.events.size() + 1;

    while (true) {
        if (chain_edges.size() > trace.events.size() + 1)
            throw std::logic_error("certificate extraction did not terminate");
        const int fm = chain_edges.back();
        const int w = cls[static_cast<std::size_t>(fm)].first;
        if (classify_point(t[static_cast<std::size_t>(w)], layout).permanent()) break;

        const std::size_t ei = event_of[static_cast<std::size_t>(w)];
        if (ei >= trace.events.size())
            throw std::logic_error("first vertex in a transition interval was never recolored");
        if (ei >= prev_event)
            throw std::logic_error("recoloring causes are not strictly ordered");
        const int j = trace.events[ei].from;
        if (j != (cls[static_cast<std::size_t>(fm)].home - 1 + r) % r)
            throw std::logic_error("recolor event color mismatch");

        if (used_links.count(w))
            throw std::logic_error("corresponding vertex reused during extraction");

        // coloring just before event ei
        Coloring col = trace.initial;
        for (std::size_t i = 0; i < ei; ++i)
            col[static_cast<std::size_t>(trace.events[i].vertex)] = trace.events[i].to;

        int chosen = -1;
        for (int g : by_last[static_cast<std::size_t>(w)]) {
            bool all_j = true;
            for (int v : h.edges[static_cast<std::size_t>(g)])
                if (col[static_cast<std::size_t>(v)] != j) { all_j = false; break; }
            if (!all_j) continue;
            const auto inter = sorted_intersection(h.edges[static_cast<std::size_t>(fm)],
                                                   h.edges[static_cast<std::size_t>(g)]);
            if (inter.size() != 1 || inter.front() != w) continue;
            chosen = g;
            break;
        }
        if (chosen < 0) throw std::logic_error("no edge explains a recoloring; engine bug");
        chain_edges.push_back(chosen);
        used_links.insert(w);
        prev_event = ei;
    }

    auto chain = validate_chain(h, chain_edges);
    if (!chain) throw std::logic_error("extracted certificate is not a chain");
    const auto flags = classify_chain(h, *chain, t, layout);
    if (!flags.complete_conflicting)
        throw std::logic_error("extracted certificate is not complete conflicting");
    return *chain;
}

namespace {

struct ChainEnumerator {
    const Hypergraph& h;
    int k;
    const std::function<void(const Chain&)>& fn;
    // adjacency restricted to pairs sharing exactly one vertex
    std::vector<std::vector<std::pair<int, int>>> adj; // edge -> (next edge, shared vertex)
    Chain current;
    std::vector<char> link_used;

    ChainEnumerator(const Hypergraph& hg, int len, const std::function<void(const Chain&)>& f)
        : h(hg), k(len), fn(f), link_used(static_cast<std::size_t>(hg.vertex_count), 0) {
        adj.resize(h.edges.size());
        for (std::size_t e = 0; e < h.edges.size(); ++e) {
            std::unordered_set<int> cands;
            for (int v : h.edges[e])
                for (int f2 : h.incidence[static_cast<std::size_t>(v)]) cands.insert(f2);
            std::vector<int> ordered(cands.begin(), cands.end());
            std::sort(ordered.begin(), ordered.end());
            for (int f2 : ordered) {
                const auto inter = sorted_intersection(h.edges[e], h.edges[static_cast<std::size_t>(f2)]);
                if (inter.size() == 1) adj[e].emplace_back(f2, inter.front());
            }
        }
        current.edges.reserve(static_cast<std::size_t>(k));
        current.links.reserve(static_cast<std::size_t>(k));
    }

    void extend(int e) {
        current.edges.push_back(e);
        if (static_cast<int>(current.edges.size()) == k) {
            fn(current);
        } else {
            for (const auto& [nxt, link] : adj[static_cast<std::size_t>(e)]) {
                if (link_used[static_cast<std::size_t>(link)]) continue;
                link_used[static_cast<std::size_t>(link)] = 1;
                current.links.push_back(link);
                extend(nxt);
                current.links.pop_back();
                link_used[static_cast<std::size_t>(link)] = 0;
            }
        }
        current.edges.pop_back();
    }

    void run() {
        for (int e = 0; e < h.edge_count(); ++e) extend(e);
    }
};

bool chain_contains_vertex(const Hypergraph& h, const Chain& c, int v) {
    for (int e : c.edges)
        if (std::binary_search(h.edges[static_cast<std::size_t>(e)].begin(),
                               h.edges[static_cast<std::size_t>(e)].end(), v))
            return true;
    return false;
}

} // namespace

void for_each_chain(const Hypergraph& h, int k, const std::function<void(const Chain&)>& fn) {
    if (k < 1) throw std::invalid_argument("chain length must be >= 1");
    ChainEnumerator(h, k, fn).run();
}

std::vector<Chain> enumerate_chains_at(const Hypergraph& h, int v, int k) {
    std::vector<Chain> out;
    for_each_chain(h, k, [&](const Chain& c) {
        if (chain_contains_vertex(h, c, v)) out.push_back(c);
    });
    return out;
}

std::vector<Chain> enumerate_adc_at(const Hypergraph& h, int v, int k) {
    if (k < 3) throw std::invalid_argument("almost disjoint cycles need length >= 3");
    std::vector<Chain> out;
    for_each_chain(h, k, [&](const Chain& c) {
        if (!chain_contains_vertex(h, c, v)) return;
        if (is_almost_disjoint_cycle(chain_sets(h, c))) out.push_back(c);
    });
    return out;
}

std::vector<Chain> enumerate_non_b_disjoint_at(const Hypergraph& h, int v, int k, int b) {
    std::vector<Chain> out;
    for_each_chain(h, k, [&](const Chain& c) {
        if (!chain_contains_vertex(h, c, v)) return;
        if (!is_b_disjoint(chain_sets(h, c), b)) out.push_back(c);
    });
    return out;
}

double chain_count_bound(int n, int d, int k) {
    return static_cast<double>(d) * k * std::pow(static_cast<double>(n) * d, k - 1);
}

double adc_count_bound(int n, int d, int k) {
    if (k < 3) throw std::invalid_argument("cycle bound needs k >= 3");
    return static_cast<double>(k) * d * (k - 1) * std::pow(static_cast<double>(n) * d, k - 2) *
           static_cast<double>(n) * n;
}

double ap_adc1_count_bound(int n, int d, int k) {
    if (k < 3) throw std::invalid_argument("cycle bound needs k >= 3");
    return static_cast<double>(k) * k * d * std::pow(static_cast<double>(n) * d, k - 2) *
           std::pow(static_cast<double>(n), 4);
}

} // namespace mgc
