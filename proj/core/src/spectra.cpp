#include "patmat/spectra.hpp"

#include <algorithm>
#include <cmath>

#include "patmat/eigensolve.hpp"
#include "patmat/errors.hpp"
#include "patmat/quadrature.hpp"
#include "patmat/rng.hpp"
#include "patmat/words.hpp"

namespace patmat {

namespace {

constexpr double kPi = 3.14159265358979323846;

// sup over jump points of |F_e - F|, with F right-continuous and nondecreasing
template <typename Cdf>
double ks_against(const std::vector<double>& sorted, const Cdf& ref) {
    std::size_t n = sorted.size();
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double f = ref(sorted[i]);
        double below = static_cast<double>(i) / n;
        double above = static_cast<double>(i + 1) / n;
        worst = std::max(worst, std::max(f - below, above - f));
    }
    return worst;
}

}  // namespace

double ESD::cdf(double x) const {
    auto it = std::upper_bound(values.begin(), values.end(), x);
    return static_cast<double>(it - values.begin()) / values.size();
}

double ESD::moment(int k) const {
    if (k < 0) {
        throw config_error("moment order must be nonnegative");
    }
    double total = 0.0;
    for (double v : values) {
        double p = 1.0;
        for (int i = 0; i < k; ++i) {
            p *= v;
        }
        total += p;
    }
    return total / values.size();
}

std::vector<double> eigenvalues(const MatrixRealization& a) {
    EigenDecomposition eig = symmetric_eigen(a.data, a.n);
    int n = a.n;
    double scale = 0.0;
    double value_sum = 0.0;
    double abs_sum = 0.0;
    for (double v : eig.values) {
        scale = std::max(scale, std::fabs(v));
        value_sum += v;
        abs_sum += std::fabs(v);
    }
    scale = std::max(scale, 1e-300);

    // five deterministic pseudo-random eigenpairs
    KeyedStream picker(a.seed, Label{n, 1306});
    for (int pick = 0; pick < 5; ++pick) {
        int j = static_cast<int>(picker.next_u64() % static_cast<std::uint64_t>(n));
        double resid2 = 0.0;
        for (int i = 0; i < n; ++i) {
            double row = 0.0;
            const double* ai = a.data.data() + static_cast<std::size_t>(i) * n;
            for (int l = 0; l < n; ++l) {
                row += ai[l] * eig.vectors[static_cast<std::size_t>(l) * n + j];
            }
            double d = row - eig.values[j] * eig.vectors[static_cast<std::size_t>(i) * n + j];
            resid2 += d * d;
        }
        if (std::sqrt(resid2) > 1e-8 * scale) {
            throw numeric_error("eigenpair residual check failed");
        }
    }

    double trace = 0.0;
    for (int i = 0; i < n; ++i) {
        trace += a.entry(i + 1, i + 1);
    }
    if (std::fabs(trace - value_sum) > 1e-8 * std::max(1.0, abs_sum)) {
        throw numeric_error("eigenvalue sum disagrees with the trace");
    }
    return eig.values;
}

ESD esd(const MatrixRealization& a) {
    ESD e;
    e.n = a.n;
    e.values = eigenvalues(a);
    double root = std::sqrt(static_cast<double>(a.n));
    for (double& v : e.values) {
        v /= root;
    }
    return e;
}

SemicircleRef::SemicircleRef() {
    // mass check under x = 2 sin(theta), where the integrand is smooth
    auto f = [](double theta) {
        double c = std::cos(theta);
        return (2.0 / kPi) * c * c;
    };
    double mass = adaptive_simpson(f, -0.5 * kPi, 0.5 * kPi, 1e-13);
    if (std::fabs(mass - 1.0) > 1e-10) {
        throw numeric_error("semicircle density mass check failed");
    }
}

double SemicircleRef::density(double x) const {
    if (x <= -2.0 || x >= 2.0) {
        return 0.0;
    }
    return std::sqrt(4.0 - x * x) / (2.0 * kPi);
}

double SemicircleRef::cdf(double x) const {
    if (x <= -2.0) {
        return 0.0;
    }
    if (x >= 2.0) {
        return 1.0;
    }
    return 0.5 + x * std::sqrt(4.0 - x * x) / (4.0 * kPi) + std::asin(0.5 * x) / kPi;
}

double SemicircleRef::moment(int k) const {
    if (k < 0) {
        throw config_error("moment order must be nonnegative");
    }
    if (k % 2 == 1) {
        return 0.0;
    }
    return static_cast<double>(catalan_count(k / 2));
}

namespace {
const SemicircleRef& shared_semicircle() {
    static const SemicircleRef ref;
    return ref;
}
}  // namespace

double semicircle_density(double x) { return shared_semicircle().density(x); }
double semicircle_cdf(double x) { return shared_semicircle().cdf(x); }
double semicircle_moment(int k) { return shared_semicircle().moment(k); }

double ks_distance(const ESD& e, const SemicircleRef& ref) {
    if (e.values.empty()) {
        throw config_error("ks_distance needs a nonempty spectrum");
    }
    return ks_against(e.values, [&](double x) { return ref.cdf(x); });
}

double ks_distance(const ESD& a, const ESD& b) {
    if (a.values.empty() || b.values.empty()) {
        throw config_error("ks_distance needs nonempty spectra");
    }
    // walk the merged jump points of the two step functions
    double worst = 0.0;
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.values.size() || j < b.values.size()) {
        double x;
        if (j >= b.values.size() || (i < a.values.size() && a.values[i] <= b.values[j])) {
            x = a.values[i];
        } else {
            x = b.values[j];
        }
        while (i < a.values.size() && a.values[i] <= x) {
            ++i;
        }
        while (j < b.values.size() && b.values[j] <= x) {
            ++j;
        }
        double fa = static_cast<double>(i) / a.values.size();
        double fb = static_cast<double>(j) / b.values.size();
        worst = std::max(worst, std::fabs(fa - fb));
    }
    return worst;
}

double dbl_upper_bound(const MatrixRealization& a, const MatrixRealization& b) {
    if (a.n != b.n) {
        throw config_error("dbl_upper_bound needs matrices of equal dimension");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < a.data.size(); ++i) {
        double d = b.data[i] - a.data[i];
        sum += d * d;
    }
    return std::sqrt(sum / a.n);
}

RankBoundCheck rank_bound_check(const MatrixRealization& a,
                                const MatrixRealization& b) {
    if (a.n != b.n) {
        throw config_error("rank_bound_check needs matrices of equal dimension");
    }
    int n = a.n;
    std::vector<double> diff(a.data.size());
    for (std::size_t i = 0; i < diff.size(); ++i) {
        diff[i] = a.data[i] - b.data[i];
    }
    std::vector<double> dvals = symmetric_eigenvalues(std::move(diff), n);
    double top = 0.0;
    for (double v : dvals) {
        top = std::max(top, std::fabs(v));
    }
    RankBoundCheck out;
    for (double v : dvals) {
        if (std::fabs(v) > 1e-8 * top) {
            ++out.rank;
        }
    }
    if (top == 0.0) {
        out.rank = 0;
    }

    std::vector<double> va = symmetric_eigenvalues(a.data, n);
    std::vector<double> vb = symmetric_eigenvalues(b.data, n);
    ESD ea{n, std::move(va)};
    ESD eb{n, std::move(vb)};
    out.sup_gap = ks_distance(ea, eb);
    out.holds = out.sup_gap <= static_cast<double>(out.rank) / n + 1e-10;
    return out;
}

TraceMomentMC trace_moment_mc(const PatternMap& map, int n,
                              const EntryDistribution& dist, int r, int reps,
                              std::uint64_t seed) {
    if (r < 0) {
        throw config_error("moment order must be nonnegative");
    }
    if (reps < 1) {
        throw config_error("trace_moment_mc needs at least one repetition");
    }
    TraceMomentMC out;
    out.r = r;
    out.reps = reps;
    out.per_rep.reserve(reps);
    for (int rep = 0; rep < reps; ++rep) {
        MatrixRealization h =
            build_matrix(map, n, dist, derive_seed(seed, static_cast<std::uint64_t>(rep)));
        out.per_rep.push_back(esd(h).moment(r));
    }
    double sum = 0.0;
    for (double v : out.per_rep) {
        sum += v;
    }
    out.mean = sum / reps;
    double ss = 0.0;
    for (double v : out.per_rep) {
        ss += (v - out.mean) * (v - out.mean);
    }
    out.variance = reps > 1 ? ss / (reps - 1) : 0.0;
    out.std_error = std::sqrt(out.variance / reps);
    return out;
}

std::vector<VarianceRow> variance_decay(const PatternMap& map,
                                        const std::vector<int>& dims,
                                        const EntryDistribution& dist, int r,
                                        int reps, std::uint64_t seed) {
    if (reps < 8) {
        throw config_error("variance_decay needs reps >= 8");
    }
    std::vector<VarianceRow> rows;
    rows.reserve(dims.size());
    for (int n : dims) {
        TraceMomentMC mc = trace_moment_mc(map, n, dist, r, reps, seed);
        rows.push_back(VarianceRow{n, mc.variance});
    }
    return rows;
}

Histogram histogram(const ESD& e, int bins, double lo, double hi) {
    if (bins < 1) {
        throw config_error("histogram needs at least one bin");
    }
    if (!(hi > lo)) {
        throw config_error("histogram needs hi > lo");
    }
    Histogram h;
    h.lo = lo;
    h.hi = hi;
    h.width = (hi - lo) / bins;
    h.counts.assign(bins, 0);
    h.density.assign(bins, 0.0);
    for (double v : e.values) {
        if (v < lo || v > hi) {
            ++h.outside;
            continue;
        }
        int idx = v == hi ? bins - 1
                          : static_cast<int>((v - lo) / h.width);
        idx = std::min(idx, bins - 1);
        ++h.counts[idx];
    }
    for (int i = 0; i < bins; ++i) {
        h.density[i] = static_cast<double>(h.counts[i]) / (e.values.size() * h.width);
    }
    return h;
}

}  // namespace patmat
