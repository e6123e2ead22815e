#pragma once

#include <cstdint>
#include <string>

#include "patmat/dist.hpp"
#include "patmat/pattern.hpp"

namespace patmat {

// (1/n^2) Tr((H - sigma_u Hhat)^2) for the coupled pair at level u. The
// entries of H - sigma_u Hhat are exactly X 1_{|X|>u} - m_u, so in expectation
// this equals 1 - sigma2_u - 2 m_u^2.
double lidskii_trace_gap(const PatternMap& map, int n, const EntryDistribution& dist,
                         double u, std::uint64_t seed);

// that expectation, from the truncation parameters alone
double truncation_gap_target(const EntryDistribution& dist, double u);

// (max_k m(k;n) / n^2) * |A_n|^{2/(2+eps)} * log n
double teicher_ratio(int n, double eps);

// One coupled realization at level u, with the quantities the difference
// bound chains together:
//   rhs       = 2 * lidskii_gap + (2/n^2) (1 - sigma_u)^2 Tr(Hhat^2)
//   l1_gap    = (1/n) sum_i |lambda_i(H/sqrt n) - lambda_i(Hhat/sqrt n)|
//   dominated = rhs >= l1_gap^2 (up to 1e-12)
struct TruncationRow {
    std::string dist_name;
    int n = 0;
    double u = 0.0;
    std::uint64_t seed = 0;
    double m_u = 0.0;
    double sigma_u = 0.0;
    double lidskii_gap = 0.0;
    double target = 0.0;
    double rhs = 0.0;
    double l1_gap = 0.0;
    bool dominated = false;
};
TruncationRow coupled_dbl_report(const PatternMap& map, int n,
                                 const EntryDistribution& dist, double u,
                                 std::uint64_t seed);

}  // namespace patmat
