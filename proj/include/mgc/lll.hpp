#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace mgc {

// Parameters shared by the polynomial families. d is real-valued so the
// threshold search can move it continuously.
struct LllParams {
    int n = 0;      // uniformity
    int r = 2;      // colors
    int b = 1;      // simplicity level
    double p = 0;   // transition mass
    double d = 0;   // maximum vertex degree
    int K = 1;      // chain-length cutoff
    double tau0 = 0;
    double epsilon = 0.1;

    double z0() const { return 1.0 / (1.0 - tau0); }
};

// Conventional parameter choices: p = ln(n)/n, tau0 = 1/n, and the two
// chain-length cutoffs used by the polynomial families.
double default_p(int n);
double default_tau0(int n);
int default_K_simple(int n);  // ceil(ln n) + 4
int default_K_bsimple(int n); // floor(ln n)

// One monomial Pr * count * z^exponent of a dominating local polynomial.
// Probability and multiplicity are carried in the natural-log domain; the
// multiplicities reach d^K and would overflow otherwise.
struct MonomialTerm {
    double log_prob;
    int z_exponent;
    double log_count;
};

struct MonomialFamily {
    std::string name;
    std::vector<MonomialTerm> terms;

    // log of sum over terms of exp(log_prob + log_count + exponent*ln z),
    // combined by log-sum-exp with compensated summation.
    double log_value(double z) const;
};

struct FamilyValue {
    std::string name;
    double log_value;
    double value; // exp(log_value); may underflow to 0
};

struct LllReport {
    std::vector<FamilyValue> families;
    double log_total;
    double total;
    double tau0;
    double z0;
    bool pass; // total w(z0) <= tau0
};

// Evaluates every family at z0 = 1/(1-tau0) and compares the total against
// tau0. Rejects NaN inputs.
LllReport lll_condition(const std::vector<MonomialFamily>& families, double tau0);

// Univariate / bivariate polynomials with caller-supplied coefficients, used
// for the multiplicity polynomials that have no explicit closed form. c[i] is
// the coefficient of k^i; c2[i][j] the coefficient of n^i k^j.
struct Poly1 {
    std::vector<double> c;
    double operator()(double k) const;
};

struct Poly2 {
    std::vector<std::vector<double>> c;
    double operator()(double n, double k) const;
};

// Simple two-color family set {w_D, w_CC, w_AC}:
//   w_D            p^n d z^n
//   w_CC term k    2 (p/2)^{k-1} ((1-p/k)/2)^{k(n-2)} * d k (nd)^{k-1} * z^{kn}
//   w_AC term k>=3 2 (p/2)^{k-1} ((1+p/k)/2)^{k(n-2)} * d^{k-1} n^k k^2 * z^{kn}
std::vector<MonomialFamily> families_simple2(const LllParams& params);

// Arithmetic-progression family set {w_D, w_CC, w_AC1, w_AC2}. w_AC2 carries
// a non-explicit multiplicity polynomial u(n,k) and is only built when u is
// supplied.
std::vector<MonomialFamily> families_vdw(const LllParams& params,
                                         const std::optional<Poly2>& u = std::nullopt);

// b-simple family set {w_D, w_DC, w_NC, w_DI, w_NI}. w_NC / w_NI need the
// non-explicit u(k) and are only built when u is supplied. The numeric
// constants 6 and 4 stand for ((1+p)/(1-p/k))^{k^2} and (1+p)^{K^2}; their
// defining inequalities are checked for the given parameters and violation is
// an error unless exact_factors is set, in which case the exact factors are
// used instead of the constants.
std::vector<MonomialFamily> families_bsimple(const LllParams& params,
                                             const std::optional<Poly1>& u = std::nullopt,
                                             bool exact_factors = false);

// Closed-form probability bounds for an (m+2)-uniform disjoint chain of sets
// (or almost disjoint cycle of sets with singleton first/last intersection)
// of length k under a uniform assignment:
//   alternating  r (p/r)^{k-1} ((1+p/k)/r)^{mk}
//   conflicting  r (p/r)^{k-1} (1/r)^{mk}
//   complete     r (p/r)^{k-1} ((1-p/k)/r)^{mk}
struct ChainProbBounds {
    double alternating;
    double conflicting;
    double complete;
};

ChainProbBounds prob_bounds_chain(int m, int k, int r, double p);

// Bounds for an n-uniform b-disjoint chain of length k, valid under the
// hypothesis n - b - k - 2 > k:
//   conflicting  r (p/r)^{k-1} (1/r)^{(n-b-1)k} (1+p)^{k^2}
//   complete     r (p/r)^{k-1} ((1-p/k)/r)^{(n-b-1)k} ((1+p)/(1-p/k))^{k^2}
struct BdisjointProbBounds {
    double conflicting;
    double complete;
};

BdisjointProbBounds prob_bounds_bdisjoint(int n, int b, int k, int r, double p);

// Largest d for which the condition of lll_condition still passes, located by
// binary search on log d to relative precision 1e-6. The builder must produce
// families whose values are monotone increasing in d. Throws when even d = 1
// fails.
double max_degree_threshold(const LllParams& base,
                            const std::function<std::vector<MonomialFamily>(const LllParams&)>& builder);

} // namespace mgc
