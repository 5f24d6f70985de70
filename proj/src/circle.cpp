#include "mgc/circle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

#include <json.hpp>

namespace mgc {

IntervalLayout::IntervalLayout(int r_, double p_) : r(r_), p(p_) {
    if (r < 2) throw std::invalid_argument("layout needs r >= 2");
    if (!(p > 0.0) || !(p < 1.0)) throw std::invalid_argument("p must lie in (0,1)");
    if (r == 2 && !(p < 0.5)) throw std::invalid_argument("p must lie in (0,1/2) for r=2");
}

PointClass classify_point(double x, const IntervalLayout& layout) {
    if (!(x >= 0.0) || !(x < 1.0)) throw std::invalid_argument("point outside [0,1)");
    int i = static_cast<int>(x * layout.r);
    if (i >= layout.r) i = layout.r - 1;
    // Guard against rounding at block boundaries; intervals are half-open.
    while (i > 0 && x < layout.block_start(i)) --i;
    while (i + 1 < layout.r && x >= layout.block_end(i)) ++i;
    return PointClass{i, x >= layout.transition_start(i)};
}

double clockwise_distance(double x, double y) {
    double d = y - x;
    if (d < 0.0) d += 1.0;
    if (d >= 1.0) d -= 1.0;
    if (d < 0.0) d = 0.0;
    return d;
}

EdgeClass classify_edge(std::span<const int> edge, const BirthTimes& t,
                        const IntervalLayout& layout) {
    if (edge.empty()) throw std::invalid_argument("cannot classify an empty vertex set");
    for (std::size_t i = 0; i < edge.size(); ++i)
        for (std::size_t j = i + 1; j < edge.size(); ++j)
            if (t[static_cast<std::size_t>(edge[i])] == t[static_cast<std::size_t>(edge[j])])
                throw std::invalid_argument("birth times not injective on the vertex set");

    int home = -1;
    bool multiple_homes = false;
    bool any_permanent = false;
    for (int v : edge) {
        const PointClass pc = classify_point(t[static_cast<std::size_t>(v)], layout);
        if (pc.permanent()) {
            any_permanent = true;
            if (home == -1) home = pc.index;
            else if (home != pc.index) multiple_homes = true;
        }
    }
    if (!any_permanent) return EdgeClass{EdgeTag::degenerate, -1, -1, -1};
    if (multiple_homes) return EdgeClass{EdgeTag::easy, -1, -1, -1};

    // All permanent birth times sit in C_home. The edge is plain iff every
    // vertex lies in the arc P_{home-1} u C_home u P_home.
    const int prev = (home - 1 + layout.r) % layout.r;
    for (int v : edge) {
        const PointClass pc = classify_point(t[static_cast<std::size_t>(v)], layout);
        const bool in_arc = (pc.index == home) || (pc.transition && pc.index == prev);
        if (!in_arc) return EdgeClass{EdgeTag::easy, -1, -1, -1};
    }

    const double arc_start = layout.transition_start(prev);
    int first = edge[0], last = edge[0];
    double dmin = clockwise_distance(arc_start, t[static_cast<std::size_t>(edge[0])]);
    double dmax = dmin;
    for (std::size_t i = 1; i < edge.size(); ++i) {
        const double d = clockwise_distance(arc_start, t[static_cast<std::size_t>(edge[i])]);
        if (d < dmin) { dmin = d; first = edge[i]; }
        if (d > dmax) { dmax = d; last = edge[i]; }
    }
    return EdgeClass{EdgeTag::plain, home, first, last};
}

bool birth_times_injective(const BirthTimes& t) {
    std::unordered_set<double> seen;
    seen.reserve(t.size() * 2);
    for (double x : t)
        if (!seen.insert(x).second) return false;
    return true;
}

BirthTimes sample_birth_times(int vertex_count, SplitMix64& rng) {
    if (vertex_count < 0) throw std::invalid_argument("vertex_count must be nonnegative");
    constexpr int kMaxRetries = 64;
    for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
        BirthTimes t(static_cast<std::size_t>(vertex_count));
        for (double& x : t) x = rng.uniform01();
        if (birth_times_injective(t)) return t;
    }
    throw std::runtime_error("could not sample injective birth times");
}

std::string birth_times_to_json(const BirthTimes& t) {
    return nlohmann::json(t).dump();
}

BirthTimes birth_times_from_json(const std::string& text) {
    const auto parsed = nlohmann::json::parse(text);
    if (!parsed.is_array()) throw std::invalid_argument("expected a JSON array of reals");
    BirthTimes t;
    t.reserve(parsed.size());
    for (const auto& x : parsed) {
        if (!x.is_number()) throw std::invalid_argument("birth time entries must be numbers");
        const double v = x.get<double>();
        if (!(v >= 0.0) || !(v < 1.0)) throw std::invalid_argument("birth time outside [0,1)");
        t.push_back(v);
    }
    if (!birth_times_injective(t)) throw std::invalid_argument("birth times not injective");
    return t;
}

} // namespace mgc
