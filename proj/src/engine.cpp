#include "mgc/engine.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

namespace mgc {

std::string to_string(MgcOutcome o) {
    switch (o) {
        case MgcOutcome::proper: return "proper";
        case MgcOutcome::improper: return "improper";
        case MgcOutcome::rejected_degenerate: return "rejected-degenerate";
    }
    throw std::logic_error("bad outcome");
}

MgcOutcome outcome_from_string(const std::string& s) {
    if (s == "proper") return MgcOutcome::proper;
    if (s == "improper") return MgcOutcome::improper;
    if (s == "rejected-degenerate") return MgcOutcome::rejected_degenerate;
    throw std::invalid_argument("unknown outcome '" + s + "'");
}

namespace {

void check_assignment(const Hypergraph& h, const BirthTimes& t) {
    if (static_cast<int>(t.size()) != h.vertex_count)
        throw std::invalid_argument("birth time count does not match vertex count");
    for (double x : t)
        if (!(x >= 0.0) || !(x < 1.0)) throw std::invalid_argument("birth time outside [0,1)");
    if (!birth_times_injective(t)) throw std::invalid_argument("birth times not injective");
}

struct Prepared {
    std::vector<PointClass> point;        // per vertex
    std::vector<EdgeClass> edge;          // per edge
    std::vector<std::vector<int>> by_last; // plain edges keyed by their last vertex
    std::vector<int> transition_order;    // transition vertices by birth time
};

Prepared prepare(const Hypergraph& h, const BirthTimes& t, const IntervalLayout& layout) {
    Prepared prep;
    prep.point.resize(static_cast<std::size_t>(h.vertex_count));
    for (int v = 0; v < h.vertex_count; ++v)
        prep.point[static_cast<std::size_t>(v)] = classify_point(t[static_cast<std::size_t>(v)], layout);

    prep.edge.resize(h.edges.size());
    prep.by_last.resize(static_cast<std::size_t>(h.vertex_count));
    for (std::size_t e = 0; e < h.edges.size(); ++e) {
        prep.edge[e] = classify_edge(h.edges[e], t, layout);
        if (prep.edge[e].tag == EdgeTag::degenerate) throw DegenerateEdgeError(static_cast<int>(e));
        if (prep.edge[e].tag == EdgeTag::plain)
            prep.by_last[static_cast<std::size_t>(prep.edge[e].last)].push_back(static_cast<int>(e));
    }

    for (int v = 0; v < h.vertex_count; ++v)
        if (prep.point[static_cast<std::size_t>(v)].transition) prep.transition_order.push_back(v);
    std::sort(prep.transition_order.begin(), prep.transition_order.end(),
              [&](int a, int b) { return t[static_cast<std::size_t>(a)] < t[static_cast<std::size_t>(b)]; });
    return prep;
}

bool all_colored(const Hypergraph& h, const Coloring& c, int e, int color) {
    for (int v : h.edges[static_cast<std::size_t>(e)])
        if (c[static_cast<std::size_t>(v)] != color) return false;
    return true;
}

// A monochromatic edge colored i whose last vertex lies in P_i keeps the
// pass loop alive. Only plain edges can be monochromatic once degenerate
// inputs are rejected.
bool pending_edge(const Hypergraph& h, const Prepared& prep, const Coloring& c) {
    for (std::size_t e = 0; e < h.edges.size(); ++e) {
        if (prep.edge[e].tag != EdgeTag::plain) continue;
        const int color = c[static_cast<std::size_t>(h.edges[e].front())];
        if (!all_colored(h, c, static_cast<int>(e), color)) continue;
        const PointClass& pc = prep.point[static_cast<std::size_t>(prep.edge[e].last)];
        if (pc.transition && pc.index == color) return true;
    }
    return false;
}

MgcTrace finish(const Hypergraph& h, const IntervalLayout& layout, MgcTrace trace) {
    trace.outcome = verify_coloring(h, trace.final_colors, layout.r) ? MgcOutcome::proper
                                                                     : MgcOutcome::improper;
    return trace;
}

} // namespace

MgcTrace mgc2(const Hypergraph& h, const BirthTimes& t, const IntervalLayout& layout) {
    if (layout.r != 2) throw std::invalid_argument("mgc2 requires a two-color layout");
    check_assignment(h, t);
    const Prepared prep = prepare(h, t, layout);

    MgcTrace trace;
    Coloring c(static_cast<std::size_t>(h.vertex_count));
    for (int v = 0; v < h.vertex_count; ++v)
        c[static_cast<std::size_t>(v)] = prep.point[static_cast<std::size_t>(v)].index;
    trace.initial = c;

    std::vector<int> pb, pr;
    for (int v : prep.transition_order)
        (prep.point[static_cast<std::size_t>(v)].index == 0 ? pb : pr).push_back(v);

    const int pass_cap = static_cast<int>(prep.transition_order.size()) + 1;
    while (pending_edge(h, prep, c)) {
        if (++trace.passes > pass_cap) throw std::logic_error("mgc2 failed to terminate");
        for (int v : pb) {
            if (c[static_cast<std::size_t>(v)] != 0) continue;
            for (int e : prep.by_last[static_cast<std::size_t>(v)]) {
                if (all_colored(h, c, e, 0)) {
                    c[static_cast<std::size_t>(v)] = 1;
                    trace.events.push_back({v, 0, 1, trace.passes});
                    break;
                }
            }
        }
        for (int v : pr) {
            if (c[static_cast<std::size_t>(v)] != 1) continue;
            for (int e : prep.by_last[static_cast<std::size_t>(v)]) {
                if (all_colored(h, c, e, 1)) {
                    c[static_cast<std::size_t>(v)] = 0;
                    trace.events.push_back({v, 1, 0, trace.passes});
                    break;
                }
            }
        }
    }
    trace.final_colors = std::move(c);
    return finish(h, layout, std::move(trace));
}

MgcTrace mgc_r(const Hypergraph& h, const BirthTimes& t, const IntervalLayout& layout) {
    check_assignment(h, t);
    const Prepared prep = prepare(h, t, layout);
    const int r = layout.r;

    MgcTrace trace;
    Coloring c(static_cast<std::size_t>(h.vertex_count));
    for (int v = 0; v < h.vertex_count; ++v)
        c[static_cast<std::size_t>(v)] = prep.point[static_cast<std::size_t>(v)].index;
    trace.initial = c;

    const int pass_cap = static_cast<int>(prep.transition_order.size()) + 1;
    while (pending_edge(h, prep, c)) {
        if (++trace.passes > pass_cap) throw std::logic_error("mgc_r failed to terminate");
        for (int v : prep.transition_order) {
            const int i = prep.point[static_cast<std::size_t>(v)].index;
            if (c[static_cast<std::size_t>(v)] != i) continue; // already recolored
            for (int e : prep.by_last[static_cast<std::size_t>(v)]) {
                if (all_colored(h, c, e, i)) {
                    c[static_cast<std::size_t>(v)] = (i + 1) % r;
                    trace.events.push_back({v, i, (i + 1) % r, trace.passes});
                    break;
                }
            }
        }
    }
    trace.final_colors = std::move(c);
    return finish(h, layout, std::move(trace));
}

namespace {

bool has_degenerate_edge(const Hypergraph& h, const BirthTimes& t, const IntervalLayout& layout) {
    for (const auto& edge : h.edges)
        if (classify_edge(edge, t, layout).tag == EdgeTag::degenerate) return true;
    return false;
}

} // namespace

RestartResult color_with_restarts(const Hypergraph& h, int r, double p, long max_restarts,
                                  std::uint64_t seed) {
    if (max_restarts < 1) throw std::invalid_argument("need max_restarts >= 1");
    const IntervalLayout layout(r, p);
    RestartResult result;
    for (long attempt = 0; attempt < max_restarts; ++attempt) {
        SplitMix64 rng = SplitMix64::substream(seed, static_cast<std::uint64_t>(attempt));
        BirthTimes t = sample_birth_times(h.vertex_count, rng);
        ++result.stats.samples;
        if (has_degenerate_edge(h, t, layout)) {
            ++result.stats.degenerate_rejected;
            continue;
        }
        MgcTrace trace = mgc_r(h, t, layout);
        if (trace.outcome == MgcOutcome::proper) {
            result.success = true;
            result.coloring = trace.final_colors;
            result.birth_times = std::move(t);
            result.success_attempt = attempt;
            return result;
        }
        ++result.stats.improper;
        result.last_improper = std::move(trace);
        result.last_improper_t = std::move(t);
    }
    return result;
}

std::string trace_to_json(const Hypergraph& h, const IntervalLayout& layout,
                          const BirthTimes& t, const MgcTrace& trace) {
    nlohmann::json j;
    j["format"] = "mgc-trace-v1";
    j["vertex_count"] = h.vertex_count;
    j["edges"] = h.edges;
    j["r"] = layout.r;
    j["p"] = layout.p;
    j["t"] = t;
    j["initial"] = trace.initial;
    j["final"] = trace.final_colors;
    j["outcome"] = to_string(trace.outcome);
    j["passes"] = trace.passes;
    nlohmann::json events = nlohmann::json::array();
    for (const auto& e : trace.events)
        events.push_back({{"vertex", e.vertex}, {"from", e.from}, {"to", e.to}, {"pass", e.pass}});
    j["events"] = std::move(events);
    return j.dump(2) + "\n";
}

StoredTrace trace_from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    if (j.value("format", "") != "mgc-trace-v1")
        throw std::invalid_argument("not an mgc trace file");
    StoredTrace st{build_hypergraph(j.at("vertex_count").get<int>(),
                                    j.at("edges").get<std::vector<std::vector<int>>>()),
                   j.at("r").get<int>(),
                   j.at("p").get<double>(),
                   j.at("t").get<BirthTimes>(),
                   {}};
    if (!birth_times_injective(st.t)) throw std::invalid_argument("stored birth times not injective");
    st.trace.initial = j.at("initial").get<Coloring>();
    st.trace.final_colors = j.at("final").get<Coloring>();
    st.trace.outcome = outcome_from_string(j.at("outcome").get<std::string>());
    st.trace.passes = j.at("passes").get<int>();
    for (const auto& e : j.at("events"))
        st.trace.events.push_back({e.at("vertex").get<int>(), e.at("from").get<int>(),
                                   e.at("to").get<int>(), e.at("pass").get<int>()});
    return st;
}

} // namespace mgc
