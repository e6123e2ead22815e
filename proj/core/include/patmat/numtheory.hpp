#pragma once

#include <cstdint>
#include <vector>

namespace patmat {

// Exact divisor census of one integer, by trial division up to sqrt(n).
struct DivisorStats {
    long long n = 0;
    long long d = 0;                  // number of divisors
    std::vector<long long> divisors;  // ascending, contains 1 and n
};
DivisorStats divisor_count(long long n);

// m(k;n): how many cells of the n x n multiplication table hold the value k.
long long mult_multiplicity(long long k, int n);

// The set A_n of distinct products of the n x n table.
struct MultTableStats {
    int n = 0;
    std::vector<long long> products;  // ascending
    long long cardinality = 0;        // |A_n|

    long long multiplicity(long long k) const;  // m(k;n)
};
MultTableStats distinct_products(int n);

// max over k in A_n of m(k;n), via a full product-count array (budget n <= 10^4).
long long max_mult_multiplicity(int n);

// d(k) for all 0 <= k <= limit by a linear sieve (budget limit <= 10^8);
// entry 0 is unused and set to 0.
std::vector<std::uint16_t> divisor_sieve(long long limit);
long long max_divisor_count_up_to(long long limit);

// |A_n| (log n)^c (log log n)^{3/2} / n^2 with the printed 6-decimal constant.
extern const double kFordExponent;  // 0.086071
double ford_ratio(int n);

// max_{k <= n^2} d(k) * |A_n|^{2/(2+eps)} * log(n) / n^2.
double lem0_ratio(int n, double eps);

// #{(x,y,z) in [n]^3 : xy/z in [n]}, computed as sum_z sum_k m(kz;n), and /n^3.
struct PropMultiCount {
    long long count = 0;
    double ratio = 0.0;
};
PropMultiCount prop_multi_count(int n);

}  // namespace patmat
