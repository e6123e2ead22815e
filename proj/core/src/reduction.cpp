#include "patmat/reduction.hpp"

#include <cmath>

#include "patmat/errors.hpp"
#include "patmat/numtheory.hpp"
#include "patmat/sampler.hpp"
#include "patmat/spectra.hpp"

namespace patmat {

namespace {

double trace_gap(const TruncatedPair& pair) {
    double sum = 0.0;
    for (std::size_t i = 0; i < pair.h.data.size(); ++i) {
        double d = pair.h.data[i] - pair.sigma_u * pair.h_hat.data[i];
        sum += d * d;
    }
    double n = static_cast<double>(pair.h.n);
    return sum / (n * n);
}

}  // namespace

double lidskii_trace_gap(const PatternMap& map, int n, const EntryDistribution& dist,
                         double u, std::uint64_t seed) {
    return trace_gap(build_truncated_pair(map, n, dist, u, seed));
}

double truncation_gap_target(const EntryDistribution& dist, double u) {
    TruncationParams p = truncation_params(dist, u);
    return 1.0 - p.sigma2_u - 2.0 * p.m_u * p.m_u;
}

double teicher_ratio(int n, double eps) {
    if (n < 16) {
        throw config_error("teicher_ratio needs n >= 16");
    }
    if (eps <= 0.0) {
        throw config_error("teicher_ratio needs eps > 0");
    }
    double mm = static_cast<double>(max_mult_multiplicity(n));
    double an = static_cast<double>(distinct_products(n).cardinality);
    double n2 = static_cast<double>(n) * n;
    return (mm / n2) * std::pow(an, 2.0 / (2.0 + eps)) * std::log(static_cast<double>(n));
}

TruncationRow coupled_dbl_report(const PatternMap& map, int n,
                                 const EntryDistribution& dist, double u,
                                 std::uint64_t seed) {
    TruncatedPair pair = build_truncated_pair(map, n, dist, u, seed);
    TruncationRow row;
    row.dist_name = dist.name();
    row.n = n;
    row.u = u;
    row.seed = seed;
    row.m_u = pair.m_u;
    row.sigma_u = pair.sigma_u;
    row.lidskii_gap = trace_gap(pair);
    row.target = truncation_gap_target(dist, u);

    double hat2 = 0.0;
    for (double v : pair.h_hat.data) {
        hat2 += v * v;
    }
    double nn = static_cast<double>(n) * n;
    double shrink = 1.0 - pair.sigma_u;
    row.rhs = 2.0 * row.lidskii_gap + (2.0 / nn) * shrink * shrink * hat2;

    ESD eh = esd(pair.h);
    ESD ehat = esd(pair.h_hat);
    double l1 = 0.0;
    for (int i = 0; i < n; ++i) {
        l1 += std::fabs(eh.values[i] - ehat.values[i]);
    }
    row.l1_gap = l1 / n;
    row.dominated = row.rhs >= row.l1_gap * row.l1_gap - 1e-12;
    return row;
}

}  // namespace patmat
