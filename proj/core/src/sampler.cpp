#include "patmat/sampler.hpp"

#include <cmath>

#include "patmat/errors.hpp"

namespace patmat {

namespace {

MatrixRealization make_frame(const PatternMap& map, int n,
                             const EntryDistribution& dist, std::uint64_t seed) {
    if (n < 1) {
        throw config_error("matrix dimension must be positive");
    }
    if (n > kMatrixLimit) {
        throw budget_error("build_matrix budget is n <= 4000");
    }
    if (n > map.domain_limit()) {
        throw config_error("matrix dimension exceeds the pattern map domain");
    }
    MatrixRealization m;
    m.n = n;
    m.map_name = map.name();
    m.dist_name = dist.name();
    m.seed = seed;
    m.data.assign(static_cast<std::size_t>(n) * n, 0.0);
    return m;
}

}  // namespace

double sample_label_value(const EntryDistribution& dist, std::uint64_t seed,
                          const Label& lab) {
    return dist.sample(seed, lab);
}

MatrixRealization build_matrix(const PatternMap& map, int n,
                               const EntryDistribution& dist, std::uint64_t seed) {
    MatrixRealization m = make_frame(map, n, dist, seed);
    for (int i = 1; i <= n; ++i) {
        for (int j = i; j <= n; ++j) {
            double v = dist.sample(seed, map.evaluate(i, j));
            m.entry(i, j) = v;
            m.entry(j, i) = v;
        }
    }
    return m;
}

TruncatedPair build_truncated_pair(const PatternMap& map, int n,
                                   const EntryDistribution& dist, double u,
                                   std::uint64_t seed) {
    TruncationParams p = truncation_params(dist, u);
    if (!(p.sigma2_u > 0.0)) {
        throw config_error("truncation level leaves zero variance");
    }
    TruncatedPair pair;
    pair.u = u;
    pair.m_u = p.m_u;
    pair.sigma_u = std::sqrt(p.sigma2_u);
    pair.h = make_frame(map, n, dist, seed);
    pair.h_hat = make_frame(map, n, dist, seed);
    pair.h_hat.dist_name = EntryDistribution::truncated(dist, u).name();
    for (int i = 1; i <= n; ++i) {
        for (int j = i; j <= n; ++j) {
            double x = dist.sample(seed, map.evaluate(i, j));
            double kept = std::fabs(x) <= u ? x : 0.0;
            double hat = (kept + pair.m_u) / pair.sigma_u;
            pair.h.entry(i, j) = x;
            pair.h.entry(j, i) = x;
            pair.h_hat.entry(i, j) = hat;
            pair.h_hat.entry(j, i) = hat;
        }
    }
    return pair;
}

}  // namespace patmat
