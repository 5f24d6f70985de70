#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "mgc/circle.hpp"
#include "mgc/engine.hpp"
#include "mgc/hypergraph.hpp"

namespace mgc {

// An edge sequence (s_1,...,s_k) where consecutive edges share exactly one
// vertex and those shared singletons are pairwise distinct. links[i] is the
// vertex shared by sets i and i+1 (the corresponding vertex sequence).
struct SetChain {
    std::vector<std::vector<int>> sets; // each sorted ascending
    std::vector<int> links;             // size k-1

    int length() const { return static_cast<int>(sets.size()); }
};

// Same structure, by edge index into a hypergraph.
struct Chain {
    std::vector<int> edges;
    std::vector<int> links;

    int length() const { return static_cast<int>(edges.size()); }
};

// nullopt when the sequence violates the chain conditions.
std::optional<SetChain> make_set_chain(std::vector<std::vector<int>> sets);
std::optional<Chain> validate_chain(const Hypergraph& h, const std::vector<int>& edge_seq);
SetChain chain_sets(const Hypergraph& h, const Chain& c);

// Non-consecutive sets pairwise disjoint.
bool is_disjoint(const SetChain& c);

// k >= 3, first and last set intersect, and both length-(k-1) end segments
// are disjoint chains. The first/last intersection may be arbitrarily large;
// callers bucketing by its size can use first_last_intersection_size.
bool is_almost_disjoint_cycle(const SetChain& c);
int first_last_intersection_size(const SetChain& c);

// Some connected permutation (every prefix an interval of positions) orders
// the sets so that each set after the first contributes at least n-b vertices
// unseen in the previous ones. Sets must be uniform. The _exhaustive variant
// enumerates all connected permutations and is kept as a cross-check oracle.
bool is_b_disjoint(const SetChain& c, int b);
bool is_b_disjoint_exhaustive(const SetChain& c, int b);

// Alternating chain predicates. Both require every set to classify as plain
// and every link to equal first(s_i) = last(s_{i+1}). The two-color form asks
// only that links have transition birth times; the r-color form additionally
// requires links to march through cyclically descending transition intervals.
// They coincide for r = 2.
bool is_alternating2(const SetChain& c, const BirthTimes& t, const IntervalLayout& layout);
bool is_alternating_r(const SetChain& c, const BirthTimes& t, const IntervalLayout& layout);

// Just the alternating/conflicting/complete flags, cheap enough for
// Monte-Carlo loops (no structural predicates).
struct ConflictFlags {
    bool alternating = false;
    bool conflicting = false;
    bool complete = false;
};

ConflictFlags conflict_flags(const SetChain& c, const BirthTimes& t, const IntervalLayout& layout);

struct ChainClassification {
    bool disjoint = false;
    bool almost_disjoint_cycle = false;
    bool b_disjoint = false;
    int b = 1;
    bool alternating = false;
    bool conflicting = false;          // alternating and s_1 ends in C
    bool complete_conflicting = false; // conflicting and s_k starts in C
};

ChainClassification classify_chain(const SetChain& c, const BirthTimes& t,
                                   const IntervalLayout& layout, int b = 1);
ChainClassification classify_chain(const Hypergraph& h, const Chain& c, const BirthTimes& t,
                                   const IntervalLayout& layout, int b = 1);

// Rebuilds, from an improper run's trace, a complete conflicting chain: start
// at a monochromatic edge and repeatedly append the edge that caused the
// recoloring of the current first vertex (recovered by replaying the event
// list). The result is verified against classify_chain before returning;
// failure to extend signals an engine bug and throws std::logic_error.
Chain extract_certificate(const Hypergraph& h, const BirthTimes& t, const IntervalLayout& layout,
                          const MgcTrace& trace);

// Exhaustive enumeration of chains of length k (ordered; a chain and its
// reversal are distinct). Depth-first extension with the chain invariants as
// pruning; desk scale only.
void for_each_chain(const Hypergraph& h, int k, const std::function<void(const Chain&)>& fn);

std::vector<Chain> enumerate_chains_at(const Hypergraph& h, int v, int k);
std::vector<Chain> enumerate_adc_at(const Hypergraph& h, int v, int k);
std::vector<Chain> enumerate_non_b_disjoint_at(const Hypergraph& h, int v, int k, int b);

// Per-vertex counting bounds the enumerations are checked against.
double chain_count_bound(int n, int d, int k);    // d k (nd)^{k-1}
double adc_count_bound(int n, int d, int k);      // k d (k-1) (nd)^{k-2} n^2, k >= 3
double ap_adc1_count_bound(int n, int d, int k);  // k^2 d (nd)^{k-2} n^4, k >= 3

} // namespace mgc
