#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include "patmat/label.hpp"

namespace patmat {

// m_u = E[X 1_{|X|>u}] and sigma2_u = E[X^2 1_{|X|<=u}] - m_u^2 for a
// standardized entry distribution at truncation level u.
struct TruncationParams {
    double m_u = 0.0;
    double sigma2_u = 0.0;
};

// Raw (pre-standardization) statistics of the heavy-tail density
// C / (x^{3+eps0} (log x)^2) on [e, infinity).
struct HeavyTailStandardization {
    double eps0 = 0.0;
    double normalizer = 0.0;
    double raw_mean = 0.0;
    double raw_second_moment = 0.0;
    double raw_sd = 0.0;
};

// A standardized (mean 0, variance 1) entry distribution. Sampling is a pure
// function of (seed, label), so any two calls agree and coupled constructions
// can replay the same draws.
class EntryDistribution {
  public:
    enum class Kind { gaussian, rademacher, uniform, heavy_tail, truncated };

    static EntryDistribution gaussian();
    static EntryDistribution rademacher();
    // uniform on [-sqrt(3), sqrt(3)]
    static EntryDistribution uniform();
    // standardized heavy tail with E|X|^p finite exactly for p < 2 + eps0
    static EntryDistribution heavy_tail(double eps0);
    // (X 1_{|X|<=u} + m_u) / sigma_u for X drawn from base
    static EntryDistribution truncated(const EntryDistribution& base, double u);

    Kind kind() const { return kind_; }
    std::string name() const;

    // least M with |X| <= M almost surely; infinity when the support is unbounded
    double support_bound() const;

    double eps0() const;              // heavy_tail only
    double trunc_level() const;       // truncated only
    const EntryDistribution& base() const;  // truncated only

    double sample(std::uint64_t seed, const Label& lab) const;

    // E[X^j 1_{a <= X <= b}] for j in {0, 1, 2}; atoms at a or b count
    double partial_moment(int j, double a, double b) const;

  private:
    struct HeavyTailImpl;
    struct TruncatedImpl;

    EntryDistribution() = default;

    Kind kind_ = Kind::gaussian;
    std::shared_ptr<const HeavyTailImpl> heavy_;
    std::shared_ptr<const TruncatedImpl> trunc_;
};

// Truncation parameters of any standardized entry distribution, computed from
// its partial moments.
TruncationParams truncation_params(const EntryDistribution& dist, double u);

HeavyTailStandardization heavy_tail_standardization(double eps0);

// E[|X|^p 1_{X <= hi}] for the standardized heavy tail. For p >= 2 + eps0 the
// value keeps growing as hi does, which is how the divergence shows up at
// finite precision.
double heavy_tail_abs_moment_truncated(double eps0, double p, double hi);

// integral of exp(-beta t) / t^2 over [a, b] with a >= 1; b may be +infinity
// when beta > 0, and beta < 0 requires finite b
double exp_power_integral(double beta, double a, double b);

}  // namespace patmat
