#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include <boost/math/special_functions/expint.hpp>

#include "doctest.h"
#include "patmat/dist.hpp"
#include "patmat/errors.hpp"
#include "patmat/rng.hpp"

namespace {

using namespace patmat;

constexpr double kInf = std::numeric_limits<double>::infinity();

double phi(double x) { return std::exp(-0.5 * x * x) / std::sqrt(2.0 * 3.14159265358979323846); }
double Phi(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

// Composite-Simpson integral, written here as an oracle independent of the
// production quadrature.
template <typename F>
double simpson(F f, double a, double b, int cells = 20000) {
    double h = (b - a) / (2.0 * cells);
    double sum = f(a) + f(b);
    for (int i = 1; i < 2 * cells; ++i) sum += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
    return sum * h / 3.0;
}

std::vector<double> draw(const EntryDistribution& d, std::uint64_t seed, int count) {
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i)
        out.push_back(d.sample(seed, Label{i, 0}));
    return out;
}

double mean_of(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x;
    return s / static_cast<double>(v.size());
}

double moment_of(const std::vector<double>& v, int p) {
    double s = 0.0;
    for (double x : v) s += std::pow(x, p);
    return s / static_cast<double>(v.size());
}

double empirical_cdf(const std::vector<double>& v, double x) {
    long long c = 0;
    for (double t : v)
        if (t <= x) ++c;
    return static_cast<double>(c) / static_cast<double>(v.size());
}

}  // namespace

TEST_SUITE("rng_dist") {

TEST_CASE("keyed stream is a pure function of seed and label") {
    KeyedStream a(42, Label{7, 9});
    KeyedStream b(42, Label{7, 9});
    for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());

    KeyedStream c(42, Label{9, 7});  // swapped components must differ
    KeyedStream d(42, Label{7, 9});
    CHECK(c.next_u64() != d.next_u64());

    KeyedStream e(43, Label{7, 9});  // different seed must differ
    KeyedStream f(42, Label{7, 9});
    CHECK(e.next_u64() != f.next_u64());
}

TEST_CASE("derive_seed separates repetition streams") {
    CHECK(derive_seed(1, 0) == derive_seed(1, 0));
    CHECK(derive_seed(1, 0) != derive_seed(1, 1));
    CHECK(derive_seed(1, 0) != derive_seed(2, 0));
    // spot-check dispersion: 1000 derived seeds are pairwise distinct
    std::vector<std::uint64_t> seen;
    for (std::uint64_t i = 0; i < 1000; ++i) seen.push_back(derive_seed(5, i));
    std::sort(seen.begin(), seen.end());
    CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
}

TEST_CASE("unit samplers stay in range and look uniform") {
    KeyedStream s(7, Label{1, 2});
    const int n = 200000;
    double sum = 0.0, sum2 = 0.0;
    for (int i = 0; i < n; ++i) {
        double u = s.next_unit_halfopen();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
        sum += u;
        sum2 += u * u;
    }
    // mean 1/2 (se ~ 0.00065), second moment 1/3 (se ~ 0.00067)
    CHECK(sum / n == doctest::Approx(0.5).epsilon(0.01));
    CHECK(sum2 / n == doctest::Approx(1.0 / 3.0).epsilon(0.01));

    KeyedStream t(7, Label{1, 3});
    for (int i = 0; i < 10000; ++i) {
        double u = t.next_unit_open();
        CHECK(u > 0.0);
        CHECK(u <= 1.0);
    }
}

TEST_CASE("box-muller gaussian has the right low moments") {
    KeyedStream s(11, Label{4, 4});
    const int n = 200000;
    double m1 = 0.0, m2 = 0.0, m3 = 0.0, m4 = 0.0;
    for (int i = 0; i < n; ++i) {
        double g = s.next_gaussian();
        m1 += g;
        m2 += g * g;
        m3 += g * g * g;
        m4 += g * g * g * g;
    }
    m1 /= n;
    m2 /= n;
    m3 /= n;
    m4 /= n;
    CHECK(std::abs(m1) < 0.01);           // se ~ 0.0022
    CHECK(m2 == doctest::Approx(1.0).epsilon(0.02));
    CHECK(std::abs(m3) < 0.05);           // se ~ 0.0088
    CHECK(m4 == doctest::Approx(3.0).epsilon(0.04));
}

TEST_CASE("distribution names and support bounds") {
    CHECK(EntryDistribution::gaussian().name() == "gaussian");
    CHECK(EntryDistribution::rademacher().name() == "rademacher");
    CHECK(EntryDistribution::uniform().name() == "uniform");
    CHECK(EntryDistribution::heavy_tail(0.5).name() == "heavytail(0.5)");
    CHECK(EntryDistribution::truncated(EntryDistribution::gaussian(), 2.0).name() ==
          "truncated(gaussian,2)");

    CHECK(EntryDistribution::rademacher().support_bound() == 1.0);
    CHECK(EntryDistribution::uniform().support_bound() ==
          doctest::Approx(std::sqrt(3.0)).epsilon(1e-15));
    CHECK(std::isinf(EntryDistribution::gaussian().support_bound()));
    CHECK(std::isinf(EntryDistribution::heavy_tail(0.5).support_bound()));

    // truncated gaussian at u=2: m=0, so the bound is u / sigma
    EntryDistribution tg = EntryDistribution::truncated(EntryDistribution::gaussian(), 2.0);
    TruncationParams p = truncation_params(EntryDistribution::gaussian(), 2.0);
    CHECK(tg.support_bound() ==
          doctest::Approx(2.0 / std::sqrt(p.sigma2_u)).epsilon(1e-12));
    CHECK(tg.trunc_level() == 2.0);
    CHECK(tg.base().name() == "gaussian");

    CHECK_THROWS_AS(EntryDistribution::gaussian().eps0(), config_error);
    CHECK_THROWS_AS(EntryDistribution::gaussian().trunc_level(), config_error);
    CHECK_THROWS_AS(EntryDistribution::heavy_tail(-0.5), config_error);
    CHECK_THROWS_AS(EntryDistribution::truncated(EntryDistribution::gaussian(), 0.0),
                    config_error);
    // degenerate truncation: a sign entry cut below 1 keeps no variance
    CHECK_THROWS_AS(EntryDistribution::truncated(EntryDistribution::rademacher(), 0.5),
                    config_error);
}

TEST_CASE("gaussian partial moments match the closed forms and quadrature") {
    EntryDistribution g = EntryDistribution::gaussian();
    CHECK(g.partial_moment(0, -kInf, kInf) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(g.partial_moment(1, -kInf, kInf) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(g.partial_moment(2, -kInf, kInf) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(g.partial_moment(0, -1.0, 1.0) ==
          doctest::Approx(Phi(1.0) - Phi(-1.0)).epsilon(1e-12));
    CHECK(g.partial_moment(1, 0.0, kInf) == doctest::Approx(phi(0.0)).epsilon(1e-12));
    CHECK(g.partial_moment(2, -1.0, 1.0) ==
          doctest::Approx(Phi(1.0) - Phi(-1.0) - 2.0 * phi(1.0)).epsilon(1e-12));

    // quadrature oracle on generic windows
    for (auto [a, b] : std::vector<std::pair<double, double>>{
             {-2.0, -0.5}, {-1.0, 1.0}, {0.3, 2.5}}) {
        for (int j = 0; j <= 2; ++j) {
            double expect = simpson([j](double x) { return std::pow(x, j) * phi(x); }, a, b);
            CAPTURE(a);
            CAPTURE(b);
            CAPTURE(j);
            CHECK(g.partial_moment(j, a, b) == doctest::Approx(expect).epsilon(1e-8));
        }
    }
    CHECK_THROWS_AS(g.partial_moment(3, 0.0, 1.0), config_error);
}

TEST_CASE("two-point and flat partial moments include their atoms") {
    EntryDistribution r = EntryDistribution::rademacher();
    CHECK(r.partial_moment(0, -1.0, 1.0) == doctest::Approx(1.0));
    CHECK(r.partial_moment(0, -0.5, 2.0) == doctest::Approx(0.5));
    CHECK(r.partial_moment(0, 1.0, 1.0) == doctest::Approx(0.5));   // the +1 atom alone
    CHECK(r.partial_moment(0, -1.0, -1.0) == doctest::Approx(0.5));  // the -1 atom alone
    CHECK(r.partial_moment(1, -1.0, 1.0) == doctest::Approx(0.0));
    CHECK(r.partial_moment(1, 0.0, 1.0) == doctest::Approx(0.5));
    CHECK(r.partial_moment(1, -1.0, 0.5) == doctest::Approx(-0.5));
    CHECK(r.partial_moment(2, -1.0, 1.0) == doctest::Approx(1.0));
    CHECK(r.partial_moment(2, -0.99, 1.0) == doctest::Approx(0.5));

    EntryDistribution u = EntryDistribution::uniform();
    double s3 = std::sqrt(3.0);
    CHECK(u.partial_moment(0, -s3, s3) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(u.partial_moment(2, -kInf, kInf) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(u.partial_moment(0, 0.0, s3) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(u.partial_moment(1, 0.0, s3) == doctest::Approx(s3 / 4.0).epsilon(1e-12));
    CHECK(u.partial_moment(2, -1.0, 1.0) ==
          doctest::Approx(1.0 / (3.0 * s3)).epsilon(1e-12));
}

TEST_CASE("truncation parameters for the closed-form distributions") {
    // sign entries: cutting at u >= 1 changes nothing
    TruncationParams r1 = truncation_params(EntryDistribution::rademacher(), 1.0);
    CHECK(r1.m_u == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(r1.sigma2_u == doctest::Approx(1.0).epsilon(1e-15));
    TruncationParams r2 = truncation_params(EntryDistribution::rademacher(), 2.0);
    CHECK(r2.sigma2_u == doctest::Approx(1.0).epsilon(1e-15));
    // cutting below the atoms keeps nothing
    TruncationParams r0 = truncation_params(EntryDistribution::rademacher(), 0.5);
    CHECK(r0.sigma2_u == doctest::Approx(0.0).epsilon(1e-15));

    // flat entries: inert once u covers the support
    TruncationParams uf = truncation_params(EntryDistribution::uniform(), 2.0);
    CHECK(uf.m_u == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(uf.sigma2_u == doctest::Approx(1.0).epsilon(1e-12));
    TruncationParams up = truncation_params(EntryDistribution::uniform(), 1.0);
    CHECK(up.sigma2_u == doctest::Approx(1.0 / (3.0 * std::sqrt(3.0))).epsilon(1e-12));

    // gaussian: sigma^2(u) = 2 Phi(u) - 1 - 2 u phi(u), mean term zero
    double prev = 0.0;
    for (double u : {0.5, 1.0, 2.0, 3.0}) {
        TruncationParams p = truncation_params(EntryDistribution::gaussian(), u);
        CAPTURE(u);
        CHECK(p.m_u == doctest::Approx(0.0).epsilon(1e-12));
        double expect = 2.0 * Phi(u) - 1.0 - 2.0 * u * phi(u);
        CHECK(p.sigma2_u == doctest::Approx(expect).epsilon(1e-10));
        CHECK(p.sigma2_u > prev);
        CHECK(p.sigma2_u < 1.0);
        prev = p.sigma2_u;
    }
    CHECK(truncation_params(EntryDistribution::gaussian(), 8.0).sigma2_u ==
          doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("truncation parameters for the heavy tail") {
    EntryDistribution h = EntryDistribution::heavy_tail(0.5);
    double prev_sigma2 = 0.0;
    double prev_target = 2.0;
    for (double u : {5.0, 10.0, 20.0, 40.0}) {
        TruncationParams p = truncation_params(h, u);
        CAPTURE(u);
        // identity: E[X^2 1_{|X|<=u}] = sigma^2 + m^2
        CHECK(p.sigma2_u + p.m_u * p.m_u ==
              doctest::Approx(h.partial_moment(2, -u, u)).epsilon(1e-10));
        CHECK(p.sigma2_u > prev_sigma2);
        CHECK(p.sigma2_u < 1.0);
        double target = 1.0 - p.sigma2_u - 2.0 * p.m_u * p.m_u;
        CHECK(target >= 0.0);
        CHECK(target < prev_target);
        prev_sigma2 = p.sigma2_u;
        prev_target = target;
    }
}

TEST_CASE("exp_power_integral against the exponential-integral oracle") {
    // integral over [x, inf) of exp(-bt)/t^2 dt = E2(b*x)/x
    for (double b : {0.25, 0.5, 1.0, 2.0, 3.3}) {
        CAPTURE(b);
        CHECK(exp_power_integral(b, 1.0, kInf) ==
              doctest::Approx(boost::math::expint(2, b)).epsilon(1e-9));
        CHECK(exp_power_integral(b, 2.0, kInf) ==
              doctest::Approx(boost::math::expint(2, 2.0 * b) / 2.0).epsilon(1e-9));
        CHECK(exp_power_integral(b, 1.5, 40.0) ==
              doctest::Approx(boost::math::expint(2, 1.5 * b) / 1.5 -
                              boost::math::expint(2, 40.0 * b) / 40.0)
                  .epsilon(1e-9));
    }
    // frozen spot values
    CHECK(exp_power_integral(1.0, 1.0, kInf) ==
          doctest::Approx(0.14849550677592205).epsilon(1e-9));
    CHECK(exp_power_integral(0.5, 1.0, kInf) ==
          doctest::Approx(0.326643862324553).epsilon(1e-9));

    // beta = 0 closed form 1/a - 1/b
    CHECK(exp_power_integral(0.0, 2.0, 8.0) == doctest::Approx(0.375).epsilon(1e-12));
    CHECK(exp_power_integral(0.0, 1.0, kInf) == doctest::Approx(1.0).epsilon(1e-12));

    // negative beta needs a finite upper end; compare against Simpson
    double v = exp_power_integral(-0.5, 1.0, 4.0);
    double expect = simpson([](double t) { return std::exp(0.5 * t) / (t * t); }, 1.0, 4.0);
    CHECK(v == doctest::Approx(expect).epsilon(1e-8));

    CHECK_THROWS_AS(exp_power_integral(1.0, 0.5, 2.0), config_error);
    CHECK_THROWS_AS(exp_power_integral(-1.0, 1.0, kInf), config_error);
}

TEST_CASE("heavy-tail standardization constants") {
    struct Pin {
        double eps0, c, mean, m2, sd;
    };
    for (Pin pin : {Pin{0.0, 26.6423249452, 3.9562655444, 26.6423249452, 3.3151603109},
                    Pin{0.5, 50.5109078616, 3.6923870935, 16.4990780334, 1.6927361240},
                    Pin{1.0, 93.9679608705, 3.5270180461, 13.9538199702, 1.2304323114}}) {
        HeavyTailStandardization s = heavy_tail_standardization(pin.eps0);
        CAPTURE(pin.eps0);
        CHECK(s.eps0 == pin.eps0);
        CHECK(s.normalizer == doctest::Approx(pin.c).epsilon(1e-8));
        CHECK(s.raw_mean == doctest::Approx(pin.mean).epsilon(1e-8));
        CHECK(s.raw_second_moment == doctest::Approx(pin.m2).epsilon(1e-8));
        CHECK(s.raw_sd == doctest::Approx(pin.sd).epsilon(1e-8));

        // the same numbers straight from the exponential integral
        double c = 1.0 / boost::math::expint(2, 2.0 + pin.eps0);
        CHECK(s.normalizer == doctest::Approx(c).epsilon(1e-9));
        CHECK(s.raw_mean ==
              doctest::Approx(c * boost::math::expint(2, 1.0 + pin.eps0)).epsilon(1e-9));
        // E2(0) degenerates to the closed form 1
        double m2 = pin.eps0 == 0.0 ? c : c * boost::math::expint(2, pin.eps0);
        CHECK(s.raw_second_moment == doctest::Approx(m2).epsilon(1e-9));
    }
}

TEST_CASE("heavy-tail truncated absolute moments") {
    // p = 2: converges to 1 as the cutoff grows
    double v2a = heavy_tail_abs_moment_truncated(0.5, 2.0, 1e2);
    double v2b = heavy_tail_abs_moment_truncated(0.5, 2.0, 1e4);
    double v2c = heavy_tail_abs_moment_truncated(0.5, 2.0, 1e6);
    CHECK(v2a == doctest::Approx(0.9396354890).epsilon(1e-4));
    CHECK(v2b == doctest::Approx(0.9979005688).epsilon(1e-4));
    CHECK(v2c == doctest::Approx(0.9998948404).epsilon(1e-4));
    CHECK(v2a < v2b);
    CHECK(v2b < v2c);
    CHECK(v2c < 1.0 + 1e-9);

    // p = 3 > 2 + eps0: keeps growing without bound
    double v3a = heavy_tail_abs_moment_truncated(0.5, 3.0, 1e2);
    double v3b = heavy_tail_abs_moment_truncated(0.5, 3.0, 1e4);
    double v3c = heavy_tail_abs_moment_truncated(0.5, 3.0, 1e6);
    CHECK(v3a == doctest::Approx(10.62496650).epsilon(1e-4));
    CHECK(v3b == doctest::Approx(48.77373086).epsilon(1e-4));
    CHECK(v3c == doctest::Approx(200.6014522).epsilon(1e-4));
    CHECK(v3b > 2.0 * v3a);
    CHECK(v3c > 2.0 * v3b);

    CHECK_THROWS_AS(heavy_tail_abs_moment_truncated(0.5, 3.0, kInf), config_error);
    CHECK_THROWS_AS(heavy_tail_abs_moment_truncated(-1.0, 2.0, 10.0), config_error);
}

TEST_CASE("sampling moments match the standardization") {
    const int n = 200000;
    for (const EntryDistribution& d :
         {EntryDistribution::gaussian(), EntryDistribution::rademacher(),
          EntryDistribution::uniform(),
          EntryDistribution::truncated(EntryDistribution::gaussian(), 2.0)}) {
        std::vector<double> v = draw(d, 99, n);
        CAPTURE(d.name());
        CHECK(std::abs(mean_of(v)) < 0.01);
        CHECK(moment_of(v, 2) == doctest::Approx(1.0).epsilon(0.02));
        double bound = d.support_bound();
        if (std::isfinite(bound)) {
            for (double x : v) REQUIRE(std::abs(x) <= bound + 1e-12);
        }
    }

    // the sign distribution takes exactly the two values +-1
    for (double x : draw(EntryDistribution::rademacher(), 5, 1000))
        CHECK(std::abs(x) == 1.0);
}

TEST_CASE("heavy-tail sampling matches its cdf") {
    EntryDistribution h = EntryDistribution::heavy_tail(0.5);
    const int n = 100000;
    std::vector<double> v = draw(h, 31, n);

    // hard lower edge of the standardized support
    HeavyTailStandardization s = heavy_tail_standardization(0.5);
    double edge = (std::exp(1.0) - s.raw_mean) / s.raw_sd;
    double lo = *std::min_element(v.begin(), v.end());
    CHECK(lo >= edge - 1e-9);
    CHECK(lo <= edge + 0.01);

    // mean converges at the usual rate (variance exists)
    CHECK(std::abs(mean_of(v)) < 0.02);

    // empirical cdf against the exact partial moment at fixed points
    for (double x : {-0.3, 0.0, 1.0, 3.0}) {
        double expect = h.partial_moment(0, -kInf, x);
        double got = empirical_cdf(v, x);
        double tol = 4.0 * std::sqrt(expect * (1.0 - expect) / n) + 1e-3;
        CAPTURE(x);
        CHECK(std::abs(got - expect) < tol);
    }
}

TEST_CASE("truncated sampling replays the base draw") {
    EntryDistribution g = EntryDistribution::gaussian();
    EntryDistribution tg = EntryDistribution::truncated(g, 2.0);
    TruncationParams p = truncation_params(g, 2.0);
    double sigma = std::sqrt(p.sigma2_u);
    for (int i = 0; i < 1000; ++i) {
        Label lab{i, 3};
        double x = g.sample(77, lab);
        double expect = ((std::abs(x) <= 2.0 ? x : 0.0) + p.m_u) / sigma;
        CHECK(tg.sample(77, lab) == expect);
    }

    // cutting a sign entry at u >= 1 reproduces it bit for bit
    EntryDistribution r = EntryDistribution::rademacher();
    EntryDistribution tr = EntryDistribution::truncated(r, 1.0);
    for (int i = 0; i < 1000; ++i) {
        Label lab{i, 0};
        CHECK(tr.sample(123, lab) == r.sample(123, lab));
    }
}

TEST_CASE("truncated partial moments carry the atom") {
    EntryDistribution tg = EntryDistribution::truncated(EntryDistribution::gaussian(), 2.0);
    CHECK(tg.partial_moment(0, -kInf, kInf) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(tg.partial_moment(1, -kInf, kInf) == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(tg.partial_moment(2, -kInf, kInf) == doctest::Approx(1.0).epsilon(1e-10));
    // the excess mass collapses onto m/sigma = 0
    CHECK(tg.partial_moment(0, 0.0, 0.0) ==
          doctest::Approx(2.0 * (1.0 - Phi(2.0))).epsilon(1e-10));

    EntryDistribution tu = EntryDistribution::truncated(EntryDistribution::uniform(), 1.0);
    CHECK(tu.partial_moment(0, -kInf, kInf) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(tu.partial_moment(2, -kInf, kInf) == doctest::Approx(1.0).epsilon(1e-10));
    // atom mass: P(|X| > 1) for a flat entry on [-sqrt(3), sqrt(3)]
    CHECK(tu.partial_moment(0, 0.0, 0.0) ==
          doctest::Approx(1.0 - 1.0 / std::sqrt(3.0)).epsilon(1e-10));
}

}  // TEST_SUITE
