#include "patmat/numtheory.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "patmat/checked.hpp"
#include "patmat/errors.hpp"

namespace patmat {

namespace {
constexpr long long kSieveLimit = 100000000;  // 10^8 cells, ~300 MB working set
constexpr int kCountArrayLimit = 10000;       // n^2 product-count cells
constexpr int kDistinctLimit = 30000;         // distinct_products exact mode
}  // namespace

const double kFordExponent = 0.086071;

DivisorStats divisor_count(long long n) {
    if (n < 1) throw config_error("divisor_count needs n >= 1");
    DivisorStats s;
    s.n = n;
    std::vector<long long> high;
    for (long long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            s.divisors.push_back(d);
            if (d != n / d) high.push_back(n / d);
        }
    }
    s.divisors.insert(s.divisors.end(), high.rbegin(), high.rend());
    s.d = static_cast<long long>(s.divisors.size());
    return s;
}

long long mult_multiplicity(long long k, int n) {
    if (k < 1 || n < 1) throw config_error("mult_multiplicity needs k, n >= 1");
    long long count = 0;
    for (long long l = 1; l * l <= k; ++l) {
        if (k % l == 0) {
            long long q = k / l;
            if (l <= n && q <= n) count += (l == q) ? 1 : 2;
        }
    }
    return count;
}

long long MultTableStats::multiplicity(long long k) const { return mult_multiplicity(k, n); }

MultTableStats distinct_products(int n) {
    if (n < 1) throw config_error("distinct_products needs n >= 1");
    if (n > kDistinctLimit)
        throw budget_error("distinct_products exact-mode budget is n <= " +
                           std::to_string(kDistinctLimit) + ", got n=" + std::to_string(n));
    long long n2 = static_cast<long long>(n) * n;
    std::vector<bool> hit(static_cast<std::size_t>(n2) + 1, false);
    for (long long x = 1; x <= n; ++x)
        for (long long y = x; y <= n; ++y) hit[static_cast<std::size_t>(x * y)] = true;
    MultTableStats s;
    s.n = n;
    for (long long k = 1; k <= n2; ++k)
        if (hit[static_cast<std::size_t>(k)]) s.products.push_back(k);
    s.cardinality = static_cast<long long>(s.products.size());
    return s;
}

long long max_mult_multiplicity(int n) {
    if (n < 1) throw config_error("max_mult_multiplicity needs n >= 1");
    if (n > kCountArrayLimit)
        throw budget_error("max_mult_multiplicity budget is n <= " +
                           std::to_string(kCountArrayLimit) + " (n^2 count cells), got n=" +
                           std::to_string(n));
    long long n2 = static_cast<long long>(n) * n;
    std::vector<std::uint16_t> count(static_cast<std::size_t>(n2) + 1, 0);
    for (long long x = 1; x <= n; ++x)
        for (long long y = 1; y <= n; ++y) ++count[static_cast<std::size_t>(x * y)];
    long long best = 0;
    for (long long k = 1; k <= n2; ++k) best = std::max(best, (long long)count[(std::size_t)k]);
    return best;
}

std::vector<std::uint16_t> divisor_sieve(long long limit) {
    if (limit < 1) throw config_error("divisor_sieve needs limit >= 1");
    if (limit > kSieveLimit)
        throw budget_error("divisor_sieve budget is limit <= " + std::to_string(kSieveLimit) +
                           ", got " + std::to_string(limit));
    std::size_t size = static_cast<std::size_t>(limit) + 1;
    // linear sieve carrying d(k) and the exponent of the smallest prime of k
    std::vector<std::uint16_t> d(size, 0);
    std::vector<std::uint8_t> e(size, 0);
    std::vector<std::int64_t> primes;
    d[1] = 1;
    for (long long i = 2; i <= limit; ++i) {
        if (d[static_cast<std::size_t>(i)] == 0) {
            primes.push_back(i);
            d[static_cast<std::size_t>(i)] = 2;
            e[static_cast<std::size_t>(i)] = 1;
        }
        for (long long p : primes) {
            long long ip = i * p;
            if (ip > limit) break;
            std::size_t idx = static_cast<std::size_t>(ip);
            std::size_t is = static_cast<std::size_t>(i);
            if (i % p == 0) {
                e[idx] = static_cast<std::uint8_t>(e[is] + 1);
                d[idx] = static_cast<std::uint16_t>(d[is] / (e[is] + 1) * (e[is] + 2));
                break;
            }
            e[idx] = 1;
            d[idx] = static_cast<std::uint16_t>(d[is] * 2);
        }
    }
    return d;
}

long long max_divisor_count_up_to(long long limit) {
    auto d = divisor_sieve(limit);
    std::uint16_t best = 0;
    for (long long k = 1; k <= limit; ++k) best = std::max(best, d[static_cast<std::size_t>(k)]);
    return best;
}

double ford_ratio(int n) {
    if (n < 16) throw config_error("ford_ratio needs n >= 16 so log log n > 0");
    double an = static_cast<double>(distinct_products(n).cardinality);
    double ln = std::log(static_cast<double>(n));
    return an * std::pow(ln, kFordExponent) * std::pow(std::log(ln), 1.5) /
           (static_cast<double>(n) * n);
}

double lem0_ratio(int n, double eps) {
    if (n < 16) throw config_error("lem0_ratio needs n >= 16");
    if (eps <= 0) throw config_error("lem0_ratio needs eps > 0");
    long long n2 = static_cast<long long>(n) * n;
    double dmax = static_cast<double>(max_divisor_count_up_to(n2));
    double an = static_cast<double>(distinct_products(n).cardinality);
    return dmax * std::pow(an, 2.0 / (2.0 + eps)) * std::log(static_cast<double>(n)) /
           static_cast<double>(n2);
}

PropMultiCount prop_multi_count(int n) {
    if (n < 1) throw config_error("prop_multi_count needs n >= 1");
    if (n > kCountArrayLimit)
        throw budget_error("prop_multi_count budget is n <= " + std::to_string(kCountArrayLimit) +
                           " (n^2 count cells), got n=" + std::to_string(n));
    long long n2 = static_cast<long long>(n) * n;
    // count[p] = m(p;n), then follow the double sum over z and k of m(kz;n)
    std::vector<std::uint16_t> count(static_cast<std::size_t>(n2) + 1, 0);
    for (long long x = 1; x <= n; ++x)
        for (long long y = 1; y <= n; ++y) ++count[static_cast<std::size_t>(x * y)];
    long long total = 0;
    for (long long z = 1; z <= n; ++z)
        for (long long k = 1; k <= n; ++k) total += count[static_cast<std::size_t>(k * z)];
    PropMultiCount r;
    r.count = total;
    r.ratio = static_cast<double>(total) / (static_cast<double>(n) * n * n);
    return r;
}

}  // namespace patmat
