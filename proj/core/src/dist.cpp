#include "patmat/dist.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include "patmat/errors.hpp"
#include "patmat/quadrature.hpp"
#include "patmat/rng.hpp"

namespace patmat {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kSqrt3 = 1.7320508075688772935;

double std_normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

double std_normal_pdf(double x) {
    return std::exp(-0.5 * x * x) / std::sqrt(2.0 * 3.14159265358979323846);
}

std::string format_compact(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

}  // namespace

double exp_power_integral(double beta, double a, double b) {
    if (!(a >= 1.0)) {
        throw config_error("exp_power_integral requires a >= 1");
    }
    if (b <= a) {
        return 0.0;
    }
    if (beta == 0.0) {
        return 1.0 / a - (std::isinf(b) ? 0.0 : 1.0 / b);
    }
    if (beta < 0.0 && std::isinf(b)) {
        throw config_error("exp_power_integral diverges for beta < 0 and b = infinity");
    }
    auto f = [beta](double t) { return std::exp(-beta * t) / (t * t); };
    auto tail = [beta](double t) { return std::exp(-beta * t) / t; };
    return integrate_geometric(f, a, b, tail);
}

// ---------------------------------------------------------------------------
// heavy tail

struct EntryDistribution::HeavyTailImpl {
    double eps0 = 0.0;
    double normalizer = 0.0;  // C
    double raw_mean = 0.0;
    double raw_m2 = 0.0;
    double raw_sd = 0.0;

    // inverse-cdf table over t = log x, geometric knots from 1 to t_max
    std::vector<double> knots;
    std::vector<double> cdf;

    explicit HeavyTailImpl(double e0) : eps0(e0) {
        if (!(eps0 >= 0.0)) {
            throw config_error("heavy_tail requires eps0 >= 0");
        }
        double beta0 = 2.0 + eps0;
        normalizer = 1.0 / exp_power_integral(beta0, 1.0, kInf);
        raw_mean = normalizer * exp_power_integral(1.0 + eps0, 1.0, kInf);
        raw_m2 = normalizer * exp_power_integral(eps0, 1.0, kInf);
        raw_sd = std::sqrt(raw_m2 - raw_mean * raw_mean);
        build_table();
    }

    // E[X^m 1_{xlo <= X <= xhi}] of the raw variable
    double raw_partial(int m, double xlo, double xhi) const {
        double lo = std::max(xlo, std::exp(1.0));
        if (xhi <= lo) {
            return 0.0;
        }
        double tlo = std::log(lo);
        double thi = std::isinf(xhi) ? kInf : std::log(xhi);
        return normalizer * exp_power_integral(2.0 + eps0 - m, tlo, thi);
    }

    double standardized_cdf(double y) const {
        double x = raw_mean + y * raw_sd;
        return raw_partial(0, -kInf, x);
    }

    void build_table() {
        double beta0 = 2.0 + eps0;
        double t_max = 16.0;
        while (normalizer * exp_power_integral(beta0, t_max, kInf) > 1e-13) {
            t_max *= 2.0;
            if (t_max > 1e9) {
                throw numeric_error("heavy-tail table: tail cutoff not found");
            }
        }
        const int cells = 4096;
        knots.resize(cells + 1);
        cdf.resize(cells + 1);
        double step = std::log(t_max) / cells;
        for (int i = 0; i <= cells; ++i) {
            knots[i] = std::exp(step * i);
        }
        cdf[0] = 0.0;
        for (int i = 0; i < cells; ++i) {
            cdf[i + 1] =
                cdf[i] + normalizer * exp_power_integral(beta0, knots[i], knots[i + 1]);
        }
        self_test();
    }

    // the linear interpolant must reproduce the cdf to sup error 1e-3
    void self_test() const {
        double worst = 0.0;
        double beta0 = 2.0 + eps0;
        for (std::size_t i = 0; i + 1 < knots.size(); i += 16) {
            double q = 0.5 * (cdf[i] + cdf[i + 1]);
            double t = invert(q);
            double truth = cdf[i] + normalizer * exp_power_integral(beta0, knots[i], t);
            worst = std::max(worst, std::fabs(truth - q));
        }
        if (worst >= 1e-3) {
            throw numeric_error("heavy-tail inverse-cdf table failed its accuracy check");
        }
    }

    double invert(double q) const {
        if (q <= 0.0) {
            return knots.front();
        }
        if (q >= cdf.back()) {
            return knots.back();
        }
        auto it = std::upper_bound(cdf.begin(), cdf.end(), q);
        std::size_t i = static_cast<std::size_t>(it - cdf.begin()) - 1;
        double span = cdf[i + 1] - cdf[i];
        double frac = span > 0.0 ? (q - cdf[i]) / span : 0.0;
        return knots[i] + frac * (knots[i + 1] - knots[i]);
    }

    double sample(std::uint64_t seed, const Label& lab) const {
        KeyedStream stream(seed, lab);
        double t = invert(stream.next_unit_halfopen());
        return (std::exp(t) - raw_mean) / raw_sd;
    }
};

// ---------------------------------------------------------------------------
// truncation transform

struct EntryDistribution::TruncatedImpl {
    std::shared_ptr<const EntryDistribution> base;
    double u = 0.0;
    double m_u = 0.0;
    double sigma_u = 0.0;
};

// ---------------------------------------------------------------------------
// EntryDistribution

EntryDistribution EntryDistribution::gaussian() {
    EntryDistribution d;
    d.kind_ = Kind::gaussian;
    return d;
}

EntryDistribution EntryDistribution::rademacher() {
    EntryDistribution d;
    d.kind_ = Kind::rademacher;
    return d;
}

EntryDistribution EntryDistribution::uniform() {
    EntryDistribution d;
    d.kind_ = Kind::uniform;
    return d;
}

EntryDistribution EntryDistribution::heavy_tail(double eps0) {
    EntryDistribution d;
    d.kind_ = Kind::heavy_tail;
    d.heavy_ = std::make_shared<const HeavyTailImpl>(eps0);
    return d;
}

EntryDistribution EntryDistribution::truncated(const EntryDistribution& base, double u) {
    if (!(u > 0.0)) {
        throw config_error("truncation level must be positive");
    }
    TruncationParams p = truncation_params(base, u);
    if (!(p.sigma2_u > 0.0)) {
        throw config_error("truncation level leaves zero variance");
    }
    EntryDistribution d;
    d.kind_ = Kind::truncated;
    auto impl = std::make_shared<TruncatedImpl>();
    impl->base = std::make_shared<const EntryDistribution>(base);
    impl->u = u;
    impl->m_u = p.m_u;
    impl->sigma_u = std::sqrt(p.sigma2_u);
    d.trunc_ = std::move(impl);
    return d;
}

std::string EntryDistribution::name() const {
    switch (kind_) {
        case Kind::gaussian:
            return "gaussian";
        case Kind::rademacher:
            return "rademacher";
        case Kind::uniform:
            return "uniform";
        case Kind::heavy_tail:
            return "heavytail(" + format_compact(heavy_->eps0) + ")";
        case Kind::truncated:
            return "truncated(" + trunc_->base->name() + "," +
                   format_compact(trunc_->u) + ")";
    }
    return "unknown";
}

double EntryDistribution::support_bound() const {
    switch (kind_) {
        case Kind::gaussian:
            return kInf;
        case Kind::rademacher:
            return 1.0;
        case Kind::uniform:
            return kSqrt3;
        case Kind::heavy_tail:
            return kInf;
        case Kind::truncated:
            return (trunc_->u + std::fabs(trunc_->m_u)) / trunc_->sigma_u;
    }
    return kInf;
}

double EntryDistribution::eps0() const {
    if (kind_ != Kind::heavy_tail) {
        throw config_error("eps0 applies to the heavy-tail distribution only");
    }
    return heavy_->eps0;
}

double EntryDistribution::trunc_level() const {
    if (kind_ != Kind::truncated) {
        throw config_error("trunc_level applies to truncated distributions only");
    }
    return trunc_->u;
}

const EntryDistribution& EntryDistribution::base() const {
    if (kind_ != Kind::truncated) {
        throw config_error("base applies to truncated distributions only");
    }
    return *trunc_->base;
}

double EntryDistribution::sample(std::uint64_t seed, const Label& lab) const {
    switch (kind_) {
        case Kind::gaussian: {
            KeyedStream stream(seed, lab);
            return stream.next_gaussian();
        }
        case Kind::rademacher: {
            KeyedStream stream(seed, lab);
            return (stream.next_u64() & 1ULL) ? 1.0 : -1.0;
        }
        case Kind::uniform: {
            KeyedStream stream(seed, lab);
            return (2.0 * stream.next_unit_halfopen() - 1.0) * kSqrt3;
        }
        case Kind::heavy_tail:
            return heavy_->sample(seed, lab);
        case Kind::truncated: {
            double x = trunc_->base->sample(seed, lab);
            double kept = std::fabs(x) <= trunc_->u ? x : 0.0;
            return (kept + trunc_->m_u) / trunc_->sigma_u;
        }
    }
    throw config_error("unknown distribution kind");
}

double EntryDistribution::partial_moment(int j, double a, double b) const {
    if (j < 0 || j > 2) {
        throw config_error("partial_moment supports j in {0, 1, 2}");
    }
    if (b < a) {
        return 0.0;
    }
    auto power = [](double v, int e) {
        double r = 1.0;
        for (int i = 0; i < e; ++i) {
            r *= v;
        }
        return r;
    };
    switch (kind_) {
        case Kind::gaussian: {
            auto anti = [&](double x) {
                if (std::isinf(x)) {
                    switch (j) {
                        case 0:
                            return x > 0.0 ? 1.0 : 0.0;
                        case 1:
                            return 0.0;
                        default:
                            return x > 0.0 ? 1.0 : 0.0;
                    }
                }
                switch (j) {
                    case 0:
                        return std_normal_cdf(x);
                    case 1:
                        return -std_normal_pdf(x);
                    default:
                        return std_normal_cdf(x) - x * std_normal_pdf(x);
                }
            };
            return anti(b) - anti(a);
        }
        case Kind::rademacher: {
            double total = 0.0;
            for (double atom : {-1.0, 1.0}) {
                if (a <= atom && atom <= b) {
                    total += 0.5 * power(atom, j);
                }
            }
            return total;
        }
        case Kind::uniform: {
            double lo = std::max(a, -kSqrt3);
            double hi = std::min(b, kSqrt3);
            if (hi <= lo) {
                return 0.0;
            }
            return (power(hi, j + 1) - power(lo, j + 1)) / ((j + 1) * 2.0 * kSqrt3);
        }
        case Kind::heavy_tail: {
            double xlo = std::isinf(a) ? -kInf : heavy_->raw_mean + a * heavy_->raw_sd;
            double xhi = std::isinf(b) ? kInf : heavy_->raw_mean + b * heavy_->raw_sd;
            double total = 0.0;
            double binom[3][3] = {{1, 0, 0}, {1, 1, 0}, {1, 2, 1}};
            for (int i = 0; i <= j; ++i) {
                total += binom[j][i] * power(-heavy_->raw_mean, j - i) *
                         heavy_->raw_partial(i, xlo, xhi);
            }
            return total / power(heavy_->raw_sd, j);
        }
        case Kind::truncated: {
            const TruncatedImpl& t = *trunc_;
            // continuous part: base values inside the kept band that land in [a, b]
            double lo = std::max(a * t.sigma_u - t.m_u, -t.u);
            double hi = std::min(b * t.sigma_u - t.m_u, t.u);
            double total = 0.0;
            if (lo <= hi) {
                double binom[3][3] = {{1, 0, 0}, {1, 1, 0}, {1, 2, 1}};
                for (int i = 0; i <= j; ++i) {
                    total += binom[j][i] * power(t.m_u, j - i) *
                             t.base->partial_moment(i, lo, hi);
                }
                total /= power(t.sigma_u, j);
            }
            // atom at m_u / sigma_u carrying the clipped mass
            double clipped = 1.0 - t.base->partial_moment(0, -t.u, t.u);
            double atom = t.m_u / t.sigma_u;
            if (clipped > 0.0 && a <= atom && atom <= b) {
                total += clipped * power(atom, j);
            }
            return total;
        }
    }
    throw config_error("unknown distribution kind");
}

TruncationParams truncation_params(const EntryDistribution& dist, double u) {
    if (!(u > 0.0)) {
        throw config_error("truncation level must be positive");
    }
    TruncationParams p;
    p.m_u = -dist.partial_moment(1, -u, u);
    p.sigma2_u = dist.partial_moment(2, -u, u) - p.m_u * p.m_u;
    return p;
}

HeavyTailStandardization heavy_tail_standardization(double eps0) {
    if (!(eps0 >= 0.0)) {
        throw config_error("heavy_tail requires eps0 >= 0");
    }
    HeavyTailStandardization out;
    out.eps0 = eps0;
    out.normalizer = 1.0 / exp_power_integral(2.0 + eps0, 1.0, kInf);
    out.raw_mean = out.normalizer * exp_power_integral(1.0 + eps0, 1.0, kInf);
    out.raw_second_moment = out.normalizer * exp_power_integral(eps0, 1.0, kInf);
    out.raw_sd = std::sqrt(out.raw_second_moment - out.raw_mean * out.raw_mean);
    return out;
}

double heavy_tail_abs_moment_truncated(double eps0, double p, double hi) {
    if (!(eps0 >= 0.0) || !(p >= 0.0) || !(hi > 0.0) || std::isinf(hi)) {
        throw config_error(
            "heavy_tail_abs_moment_truncated requires eps0 >= 0, p >= 0, finite hi > 0");
    }
    HeavyTailStandardization s = heavy_tail_standardization(eps0);
    double x_hi = s.raw_mean + hi * s.raw_sd;
    if (x_hi <= std::exp(1.0)) {
        return 0.0;
    }
    double t_hi = std::log(x_hi);
    auto f = [&](double t) {
        double y = std::fabs((std::exp(t) - s.raw_mean) / s.raw_sd);
        return std::pow(y, p) * s.normalizer * std::exp(-(2.0 + eps0) * t) / (t * t);
    };
    auto tail = [](double) { return 0.0; };
    return integrate_geometric(f, 1.0, t_hi, tail);
}

}  // namespace patmat
