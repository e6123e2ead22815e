#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "patmat/dist.hpp"
#include "patmat/pattern.hpp"

namespace patmat {

// build_matrix rejects dimensions above this
inline constexpr int kMatrixLimit = 4000;

// One sampled symmetric matrix. Entries with equal pattern labels hold the
// same value because each draw is a pure function of (seed, label).
struct MatrixRealization {
    int n = 0;
    std::string map_name;
    std::string dist_name;
    std::uint64_t seed = 0;
    std::vector<double> data;  // row-major n*n

    // 1-based indices, matching the index set the pattern maps act on
    double entry(int i, int j) const {
        return data[static_cast<std::size_t>(i - 1) * n + (j - 1)];
    }
    double& entry(int i, int j) {
        return data[static_cast<std::size_t>(i - 1) * n + (j - 1)];
    }
};

// the single shared draw attached to (seed, label)
double sample_label_value(const EntryDistribution& dist, std::uint64_t seed,
                          const Label& lab);

MatrixRealization build_matrix(const PatternMap& map, int n,
                               const EntryDistribution& dist, std::uint64_t seed);

// H together with its truncated companion built from the same draws:
// h_hat(i,j) = (x 1_{|x|<=u} + m_u) / sigma_u where x = h(i,j).
struct TruncatedPair {
    MatrixRealization h;
    MatrixRealization h_hat;
    double u = 0.0;
    double m_u = 0.0;
    double sigma_u = 0.0;
};

TruncatedPair build_truncated_pair(const PatternMap& map, int n,
                                   const EntryDistribution& dist, double u,
                                   std::uint64_t seed);

}  // namespace patmat
