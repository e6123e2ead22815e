#pragma once

#include <cstdint>
#include <vector>

#include "patmat/sampler.hpp"

namespace patmat {

// Empirical spectral distribution of A / sqrt(n): the uniform measure on the
// scaled eigenvalues.
struct ESD {
    int n = 0;
    std::vector<double> values;  // ascending

    // P(lambda <= x), right-continuous
    double cdf(double x) const;
    // (1/n) sum values^k
    double moment(int k) const;
};

// Eigenvalues of A, ascending. Spot-checks five eigenpair residuals against
// 1e-8 * ||A|| and the eigenvalue sum against the trace before returning.
std::vector<double> eigenvalues(const MatrixRealization& a);

ESD esd(const MatrixRealization& a);

// Reference semicircle measure: density sqrt(4 - x^2) / (2 pi) on [-2, 2].
// Construction integrates the density numerically and refuses to proceed if
// the mass is off from 1 by more than 1e-10.
class SemicircleRef {
  public:
    SemicircleRef();
    double density(double x) const;
    double cdf(double x) const;
    // k-th moment: 0 for odd k, the (k/2)-th Catalan number for even k
    double moment(int k) const;
};

double semicircle_density(double x);
double semicircle_cdf(double x);
double semicircle_moment(int k);

// one-sample and two-sample Kolmogorov-Smirnov distances
double ks_distance(const ESD& e, const SemicircleRef& ref);
double ks_distance(const ESD& a, const ESD& b);

// sqrt(Tr((B - A)^2) / n); dominates the squared L1 eigenvalue gap by the
// Hoffman-Wielandt inequality
double dbl_upper_bound(const MatrixRealization& a, const MatrixRealization& b);

// Rank bound: sup_x |F^A(x) - F^B(x)| <= rank(A - B) / n.
struct RankBoundCheck {
    double sup_gap = 0.0;
    int rank = 0;
    bool holds = false;
};
RankBoundCheck rank_bound_check(const MatrixRealization& a,
                                const MatrixRealization& b);

// Monte Carlo average of the r-th ESD moment Tr((H / sqrt(n))^r) / n over
// independent repetitions. Per-repetition values are kept and aggregated in
// index order, so results are reproducible.
struct TraceMomentMC {
    int r = 0;
    int reps = 0;
    double mean = 0.0;
    double variance = 0.0;
    double std_error = 0.0;
    std::vector<double> per_rep;
};
TraceMomentMC trace_moment_mc(const PatternMap& map, int n,
                              const EntryDistribution& dist, int r, int reps,
                              std::uint64_t seed);

// sample variance of the r-th ESD moment at each dimension; wants reps >= 8
struct VarianceRow {
    int n = 0;
    double variance = 0.0;
};
std::vector<VarianceRow> variance_decay(const PatternMap& map,
                                        const std::vector<int>& dims,
                                        const EntryDistribution& dist, int r,
                                        int reps, std::uint64_t seed);

// Equal-width bins on [lo, hi), each half-open, the last one closed at hi.
struct Histogram {
    double lo = 0.0;
    double hi = 0.0;
    double width = 0.0;
    std::vector<long long> counts;
    std::vector<double> density;  // counts / (n * width)
    long long outside = 0;
};
Histogram histogram(const ESD& e, int bins, double lo, double hi);

}  // namespace patmat
