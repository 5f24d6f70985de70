#include "mgc/lll.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace mgc {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double log_sum_exp(const std::vector<double>& xs) {
    double m = kNegInf;
    for (double x : xs) m = std::max(m, x);
    if (m == kNegInf) return kNegInf;
    // Kahan-compensated accumulation; terms span a huge dynamic range.
    double sum = 0.0, comp = 0.0;
    for (double x : xs) {
        const double term = std::exp(x - m);
        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return m + std::log(sum);
}

void check_finite(double x, const char* what) {
    if (std::isnan(x)) throw std::invalid_argument(std::string(what) + " is NaN");
}

} // namespace

double default_p(int n) { return std::log(static_cast<double>(n)) / n; }
double default_tau0(int n) { return 1.0 / n; }
int default_K_simple(int n) { return static_cast<int>(std::ceil(std::log(static_cast<double>(n)))) + 4; }
int default_K_bsimple(int n) { return static_cast<int>(std::floor(std::log(static_cast<double>(n)))); }

double MonomialFamily::log_value(double z) const {
    if (!(z >= 1.0)) throw std::invalid_argument("families are evaluated at z >= 1");
    const double lz = std::log(z);
    std::vector<double> vals;
    vals.reserve(terms.size());
    for (const auto& t : terms) vals.push_back(t.log_prob + t.log_count + t.z_exponent * lz);
    return log_sum_exp(vals);
}

LllReport lll_condition(const std::vector<MonomialFamily>& families, double tau0) {
    if (!(tau0 > 0.0) || !(tau0 < 1.0)) throw std::invalid_argument("tau0 must lie in (0,1)");
    LllReport report;
    report.tau0 = tau0;
    report.z0 = 1.0 / (1.0 - tau0);
    std::vector<double> family_logs;
    for (const auto& fam : families) {
        for (const auto& t : fam.terms) {
            check_finite(t.log_prob, "log probability");
            check_finite(t.log_count, "log multiplicity");
            if (t.z_exponent < 1) throw std::invalid_argument("z exponent must be >= 1");
        }
        const double lv = fam.log_value(report.z0);
        report.families.push_back({fam.name, lv, std::exp(lv)});
        family_logs.push_back(lv);
    }
    report.log_total = log_sum_exp(family_logs);
    report.total = std::exp(report.log_total);
    report.pass = report.log_total <= std::log(tau0);
    return report;
}

double Poly1::operator()(double k) const {
    double v = 0.0;
    for (std::size_t i = c.size(); i-- > 0;) v = v * k + c[i];
    return v;
}

double Poly2::operator()(double n, double k) const {
    double v = 0.0;
    for (std::size_t i = c.size(); i-- > 0;) {
        double row = 0.0;
        for (std::size_t j = c[i].size(); j-- > 0;) row = row * k + c[i][j];
        v = v * n + row;
    }
    return v;
}

namespace {

void check_params(const LllParams& q, bool need_r2) {
    if (q.n < 2) throw std::invalid_argument("need n >= 2");
    if (need_r2 && q.r != 2) throw std::invalid_argument("this family set needs r = 2");
    if (q.r < 2) throw std::invalid_argument("need r >= 2");
    if (!(q.p > 0.0) || !(q.p < 1.0)) throw std::invalid_argument("p must lie in (0,1)");
    if (q.r == 2 && !(q.p < 0.5)) throw std::invalid_argument("p must lie in (0,1/2) for r=2");
    if (!(q.d > 0.0)) throw std::invalid_argument("need d > 0");
    if (q.K < 1) throw std::invalid_argument("need K >= 1");
}

} // namespace

std::vector<MonomialFamily> families_simple2(const LllParams& q) {
    check_params(q, true);
    const double ln_d = std::log(q.d);
    const double ln_n = std::log(static_cast<double>(q.n));

    MonomialFamily wd{"w_D", {}};
    wd.terms.push_back({q.n * std::log(q.p), q.n, ln_d});

    MonomialFamily wcc{"w_CC", {}};
    for (int k = 1; k <= q.K; ++k) {
        const double lp = std::log(2.0) + (k - 1) * std::log(q.p / 2) +
                          static_cast<double>(k) * (q.n - 2) * std::log((1 - q.p / k) / 2);
        const double lc = ln_d + std::log(static_cast<double>(k)) + (k - 1) * (ln_n + ln_d);
        wcc.terms.push_back({lp, k * q.n, lc});
    }

    MonomialFamily wac{"w_AC", {}};
    for (int k = 3; k <= q.K; ++k) {
        const double lp = std::log(2.0) + (k - 1) * std::log(q.p / 2) +
                          static_cast<double>(k) * (q.n - 2) * std::log((1 + q.p / k) / 2);
        const double lc = (k - 1) * ln_d + k * ln_n + 2 * std::log(static_cast<double>(k));
        wac.terms.push_back({lp, k * q.n, lc});
    }
    return {wd, wcc, wac};
}

std::vector<MonomialFamily> families_vdw(const LllParams& q, const std::optional<Poly2>& u) {
    check_params(q, false);
    const double ln_d = std::log(q.d);
    const double ln_n = std::log(static_cast<double>(q.n));
    const double ln_r = std::log(static_cast<double>(q.r));

    MonomialFamily wd{"w_D", {}};
    wd.terms.push_back({q.n * std::log(q.p), q.n, ln_d});

    MonomialFamily wcc{"w_CC", {}};
    for (int k = 1; k <= q.K; ++k) {
        const double lp = ln_r + (k - 1) * std::log(q.p / q.r) +
                          static_cast<double>(k) * (q.n - 2) * std::log((1 - q.p / k) / q.r);
        const double lc = ln_d + std::log(static_cast<double>(k)) + (k - 1) * (ln_n + ln_d);
        wcc.terms.push_back({lp, k * q.n, lc});
    }

    MonomialFamily wac1{"w_AC1", {}};
    for (int k = 3; k <= q.K; ++k) {
        const double lp = ln_r + (k - 1) * std::log(q.p / q.r) +
                          static_cast<double>(k) * (q.n - 2) * std::log((1 + q.p / k) / q.r);
        const double lc = (k - 1) * ln_d + (k + 2) * ln_n + 2 * std::log(static_cast<double>(k));
        wac1.terms.push_back({lp, k * q.n, lc});
    }

    std::vector<MonomialFamily> out{wd, wcc, wac1};
    if (u) {
        MonomialFamily wac2{"w_AC2", {}};
        for (int k = 3; k <= q.K; ++k) {
            const double uk = (*u)(static_cast<double>(q.n), static_cast<double>(k));
            if (!(uk > 0.0)) throw std::invalid_argument("u(n,k) must be positive");
            const double lp = ln_r + (k - 2) * std::log(q.p / q.r) +
                              static_cast<double>(k - 1) * (q.n - 2) *
                                  std::log((1 + q.p / (k - 1)) / q.r);
            const double lc = (k - 2) * (ln_d + ln_n) + std::log(uk);
            wac2.terms.push_back({lp, k * q.n, lc});
        }
        out.push_back(std::move(wac2));
    }
    return out;
}

std::vector<MonomialFamily> families_bsimple(const LllParams& q, const std::optional<Poly1>& u,
                                             bool exact_factors) {
    check_params(q, false);
    if (q.b < 1) throw std::invalid_argument("need b >= 1");
    if (q.K < 2) throw std::invalid_argument("the length-K families need K >= 2");
    if (q.n - q.b - 1 < 1) throw std::invalid_argument("need n >= b + 2");
    const double ln_d = std::log(q.d);
    const double ln_n = std::log(static_cast<double>(q.n));
    const double ln_r = std::log(static_cast<double>(q.r));

    // ((1+p)/(1-p/k))^{k^2} for k < K and (1+p)^{K^2} are replaced by the
    // constants 6 and 4 when those bounds actually hold.
    const auto log_dc_factor = [&](int k) {
        const double exact = static_cast<double>(k) * k *
                             (std::log1p(q.p) - std::log1p(-q.p / k));
        if (exact_factors) return exact;
        if (exact >= std::log(6.0))
            throw std::invalid_argument(
                "(1+p)/(1-p/k) raised to k^2 is not below 6 for these parameters");
        return std::log(6.0);
    };
    const double exact_di = static_cast<double>(q.K) * q.K * std::log1p(q.p);
    double log_di_factor;
    if (exact_factors) {
        log_di_factor = exact_di;
    } else {
        if (exact_di >= std::log(4.0))
            throw std::invalid_argument("(1+p)^(K^2) is not below 4 for these parameters");
        log_di_factor = std::log(4.0);
    }

    MonomialFamily wd{"w_D", {}};
    wd.terms.push_back({q.n * std::log(q.p), q.n, ln_d});

    MonomialFamily wdc{"w_DC", {}};
    for (int k = 1; k <= q.K - 1; ++k) {
        const double lp = log_dc_factor(k) + ln_r + (k - 1) * std::log(q.p / q.r) +
                          static_cast<double>(q.n - q.b - 1) * k * std::log((1 - q.p / k) / q.r);
        const double lc = ln_d + std::log(static_cast<double>(k)) + (k - 1) * (ln_n + ln_d);
        wdc.terms.push_back({lp, k * q.n, lc});
    }

    MonomialFamily wdi{"w_DI", {}};
    {
        const int k = q.K;
        const double lp = log_di_factor + ln_r + (k - 1) * std::log(q.p / q.r) -
                          static_cast<double>(q.n - q.b - 1) * k * ln_r;
        const double lc = ln_d + std::log(static_cast<double>(k)) + (k - 1) * (ln_n + ln_d);
        wdi.terms.push_back({lp, k * q.n, lc});
    }

    std::vector<MonomialFamily> out{wd, wdc, wdi};
    if (u) {
        const auto nc_term = [&](int k) {
            const double uk = (*u)(static_cast<double>(k));
            if (!(uk > 0.0)) throw std::invalid_argument("u(k) must be positive");
            const double lp = ln_r + (k - 1) * std::log(q.p / q.r) -
                              static_cast<double>(q.n - static_cast<double>(q.K) * q.b) * k * ln_r;
            const double lc = (k - 1) * ln_d + (k + q.b) * ln_n + std::log(uk);
            return MonomialTerm{lp, k * q.n, lc};
        };
        MonomialFamily wnc{"w_NC", {}};
        for (int k = 3; k <= q.K - 1; ++k) wnc.terms.push_back(nc_term(k));
        MonomialFamily wni{"w_NI", {}};
        wni.terms.push_back(nc_term(q.K));
        out.push_back(std::move(wnc));
        out.push_back(std::move(wni));
    }
    return out;
}

ChainProbBounds prob_bounds_chain(int m, int k, int r, double p) {
    if (m < 0 || k < 1 || r < 2) throw std::invalid_argument("need m >= 0, k >= 1, r >= 2");
    if (!(p > 0.0) || !(p < 1.0)) throw std::invalid_argument("p must lie in (0,1)");
    const double head = r * std::pow(p / r, k - 1);
    const double mk = static_cast<double>(m) * k;
    return ChainProbBounds{
        head * std::pow((1 + p / k) / r, mk),
        head * std::pow(1.0 / r, mk),
        head * std::pow((1 - p / k) / r, mk),
    };
}

BdisjointProbBounds prob_bounds_bdisjoint(int n, int b, int k, int r, double p) {
    if (k < 1 || r < 2 || b < 0) throw std::invalid_argument("need k >= 1, r >= 2, b >= 0");
    if (!(p > 0.0) || !(p < 1.0)) throw std::invalid_argument("p must lie in (0,1)");
    if (!(n - b - k - 2 > k))
        throw std::invalid_argument("hypothesis n - b - k - 2 > k violated");
    const double head = r * std::pow(p / r, k - 1);
    const double exp_nb = static_cast<double>(n - b - 1) * k;
    const double k2 = static_cast<double>(k) * k;
    return BdisjointProbBounds{
        head * std::pow(1.0 / r, exp_nb) * std::pow(1 + p, k2),
        head * std::pow((1 - p / k) / r, exp_nb) * std::pow((1 + p) / (1 - p / k), k2),
    };
}

double max_degree_threshold(const LllParams& base,
                            const std::function<std::vector<MonomialFamily>(const LllParams&)>& builder) {
    const auto passes = [&](double d) {
        LllParams q = base;
        q.d = d;
        return lll_condition(builder(q), q.tau0).pass;
    };
    if (!passes(1.0)) throw std::runtime_error("condition fails already at d = 1");
    double lo = 1.0, hi = 2.0;
    int guard = 0;
    while (passes(hi)) {
        lo = hi;
        hi *= 2.0;
        if (++guard > 2000 || hi > 1e300)
            throw std::runtime_error("condition does not fail for any representable d");
    }
    while (std::log(hi) - std::log(lo) > 1e-6) {
        const double mid = std::exp(0.5 * (std::log(lo) + std::log(hi)));
        (passes(mid) ? lo : hi) = mid;
    }
    return lo;
}

} // namespace mgc
