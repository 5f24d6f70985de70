#pragma once

#include <span>
#include <string>
#include <vector>

#include "mgc/rng.hpp"

namespace mgc {

// Partition of the unit circle [0,1) into r permanent intervals C_i and r
// transition intervals P_i, laid out as C_0 P_0 C_1 P_1 ... C_{r-1} P_{r-1}
// with |C_i| = (1-p)/r and |P_i| = p/r.
//
// For r = 2 this specializes to the four-interval layout
//   B = C_0 = [0,(1-p)/2)        P_B = P_0 = [(1-p)/2, 1/2)
//   R = C_1 = [1/2, 1-p/2)       P_R = P_1 = [1-p/2, 1)
// and p is restricted to (0, 1/2); the generalized layout accepts p in (0,1).
struct IntervalLayout {
    int r;
    double p;

    IntervalLayout(int r_, double p_);

    double block_start(int i) const { return static_cast<double>(i) / r; }
    double transition_start(int i) const { return (static_cast<double>(i) + 1.0 - p) / r; }
    double block_end(int i) const { return (static_cast<double>(i) + 1.0) / r; }
};

// Which interval a point falls in. index is the color index i; transition
// distinguishes P_i from C_i.
struct PointClass {
    int index = -1;
    bool transition = false;

    bool permanent() const { return !transition; }
};

// Unique half-open interval containing x. Throws if x is outside [0,1).
PointClass classify_point(double x, const IntervalLayout& layout);

// Length of the clockwise arc from x to y, i.e. (y - x) mod 1.
double clockwise_distance(double x, double y);

enum class EdgeTag { degenerate, easy, plain };

// Classification of an edge (or any vertex set) against birth times:
//   degenerate  no vertex lands in any permanent interval C_i
//   easy        the birth times fit in no arc P_{i-1} u C_i u P_i
//   plain       all birth times lie in the arc of a unique home color i;
//               first/last are the extremes in the clockwise order the arc
//               induces (equal only for singleton sets)
struct EdgeClass {
    EdgeTag tag = EdgeTag::plain;
    int home = -1;
    int first = -1;
    int last = -1;
};

// Per-vertex birth times in [0,1); all values pairwise distinct.
using BirthTimes = std::vector<double>;

EdgeClass classify_edge(std::span<const int> edge, const BirthTimes& t,
                        const IntervalLayout& layout);

// i.i.d. uniform birth times; the whole assignment is resampled on a
// collision (bounded retries, then an error).
BirthTimes sample_birth_times(int vertex_count, SplitMix64& rng);

bool birth_times_injective(const BirthTimes& t);

// JSON array of reals, round-trip exact. Deserialization re-checks range and
// injectivity.
std::string birth_times_to_json(const BirthTimes& t);
BirthTimes birth_times_from_json(const std::string& text);

} // namespace mgc
