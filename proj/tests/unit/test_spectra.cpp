#include <algorithm>
#include <cmath>
#include <vector>

#include <Eigen/Dense>

#include "doctest.h"
#include "patmat/circuits.hpp"
#include "patmat/errors.hpp"
#include "patmat/spectra.hpp"
#include "patmat/words.hpp"

namespace {

using namespace patmat;

MatrixRealization from_rows(const std::vector<std::vector<double>>& rows) {
    MatrixRealization m;
    m.n = static_cast<int>(rows.size());
    for (const auto& r : rows)
        for (double v : r) m.data.push_back(v);
    return m;
}

std::vector<double> eigen_library_values(const MatrixRealization& a) {
    Eigen::MatrixXd mat(a.n, a.n);
    for (int i = 0; i < a.n; ++i)
        for (int j = 0; j < a.n; ++j) mat(i, j) = a.data[static_cast<std::size_t>(i) * a.n + j];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(mat);
    std::vector<double> out(solver.eigenvalues().data(),
                            solver.eigenvalues().data() + a.n);
    std::sort(out.begin(), out.end());
    return out;
}

// trace of the k-th matrix power by plain repeated multiplication
double trace_power(const MatrixRealization& a, int k) {
    int n = a.n;
    std::vector<double> acc(a.data);  // a^1
    for (int step = 1; step < k; ++step) {
        std::vector<double> next(static_cast<std::size_t>(n) * n, 0.0);
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < n; ++l) {
                double aij = acc[static_cast<std::size_t>(i) * n + l];
                if (aij == 0.0) continue;
                for (int j = 0; j < n; ++j)
                    next[static_cast<std::size_t>(i) * n + j] +=
                        aij * a.data[static_cast<std::size_t>(l) * n + j];
            }
        acc = std::move(next);
    }
    double tr = 0.0;
    for (int i = 0; i < n; ++i) tr += acc[static_cast<std::size_t>(i) * n + i];
    return tr;
}

double semicircle_quantile(const SemicircleRef& ref, double p) {
    double lo = -2.0, hi = 2.0;
    for (int it = 0; it < 80; ++it) {
        double mid = 0.5 * (lo + hi);
        (ref.cdf(mid) < p ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

TEST_SUITE("spectra") {

TEST_CASE("eigenvalues agree with closed forms and the library solver") {
    MatrixRealization d = from_rows({{3, 0, 0}, {0, 1, 0}, {0, 0, 2}});
    std::vector<double> vd = eigenvalues(d);
    REQUIRE(vd.size() == 3);
    CHECK(vd[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(vd[1] == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(vd[2] == doctest::Approx(3.0).epsilon(1e-12));

    MatrixRealization two = from_rows({{1, 2}, {2, 1}});
    std::vector<double> v2 = eigenvalues(two);
    CHECK(v2[0] == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(v2[1] == doctest::Approx(3.0).epsilon(1e-12));

    for (std::uint64_t seed : {1ull, 2ull}) {
        MatrixRealization m =
            build_matrix(PatternMap::mul(), 16, EntryDistribution::gaussian(), seed);
        std::vector<double> mine = eigenvalues(m);
        std::vector<double> lib = eigen_library_values(m);
        REQUIRE(mine.size() == lib.size());
        CHECK(std::is_sorted(mine.begin(), mine.end()));
        for (std::size_t i = 0; i < mine.size(); ++i) {
            CAPTURE(i);
            CHECK(mine[i] == doctest::Approx(lib[i]).epsilon(1e-9).scale(1.0));
        }
    }
}

TEST_CASE("esd scales by the square root of the dimension") {
    MatrixRealization m =
        build_matrix(PatternMap::additive(), 9, EntryDistribution::uniform(), 77);
    std::vector<double> raw = eigenvalues(m);
    ESD e = esd(m);
    CHECK(e.n == 9);
    REQUIRE(e.values.size() == 9);
    for (int i = 0; i < 9; ++i)
        CHECK(e.values[i] == doctest::Approx(raw[i] / 3.0).epsilon(1e-14));
}

TEST_CASE("esd cdf is the right-continuous step function") {
    ESD e;
    e.n = 4;
    e.values = {1.0, 2.0, 2.0, 3.0};
    CHECK(e.cdf(0.5) == 0.0);
    CHECK(e.cdf(1.0) == 0.25);
    CHECK(e.cdf(1.5) == 0.25);
    CHECK(e.cdf(2.0) == 0.75);
    CHECK(e.cdf(2.5) == 0.75);
    CHECK(e.cdf(3.0) == 1.0);
    CHECK(e.cdf(99.0) == 1.0);
}

TEST_CASE("esd moments equal normalized traces of matrix powers") {
    for (const PatternMap& map : {PatternMap::mul(), PatternMap::additive()}) {
        MatrixRealization m = build_matrix(map, 24, EntryDistribution::gaussian(), 5);
        ESD e = esd(m);
        CHECK(e.moment(0) == doctest::Approx(1.0).epsilon(1e-14));
        for (int k = 1; k <= 8; ++k) {
            double expect = trace_power(m, k) / (24.0 * std::pow(24.0, 0.5 * k));
            CAPTURE(map.name());
            CAPTURE(k);
            CHECK(e.moment(k) == doctest::Approx(expect).epsilon(1e-9));
        }
    }
    ESD e;
    e.values = {1.0};
    CHECK_THROWS_AS(e.moment(-1), config_error);
}

TEST_CASE("semicircle reference density, cdf, and moments") {
    SemicircleRef ref;
    CHECK(ref.density(0.0) == doctest::Approx(1.0 / 3.14159265358979323846).epsilon(1e-14));
    CHECK(ref.density(2.0) == 0.0);
    CHECK(ref.density(-2.0) == 0.0);
    CHECK(ref.density(3.0) == 0.0);
    CHECK(ref.density(1.0) == doctest::Approx(std::sqrt(3.0) / (2.0 * 3.14159265358979323846))
                                  .epsilon(1e-14));

    CHECK(ref.cdf(-2.5) == 0.0);
    CHECK(ref.cdf(0.0) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(ref.cdf(2.5) == 1.0);
    for (double x : {-1.5, -0.3, 0.7, 1.9})
        CHECK(ref.cdf(-x) == doctest::Approx(1.0 - ref.cdf(x)).epsilon(1e-12));

    // cdf' == density, checked by a symmetric difference quotient
    for (double x : {-1.5, -0.5, 0.0, 0.4, 1.8}) {
        double h = 1e-6;
        double slope = (ref.cdf(x + h) - ref.cdf(x - h)) / (2.0 * h);
        CAPTURE(x);
        CHECK(slope == doctest::Approx(ref.density(x)).epsilon(1e-6));
    }

    CHECK(ref.moment(0) == 1.0);
    CHECK(ref.moment(1) == 0.0);
    CHECK(ref.moment(2) == 1.0);
    CHECK(ref.moment(3) == 0.0);
    CHECK(ref.moment(4) == 2.0);
    CHECK(ref.moment(6) == 5.0);
    for (int k = 0; k <= 10; ++k)
        CHECK(ref.moment(2 * k) == static_cast<double>(catalan_count(k)));
    CHECK_THROWS_AS(ref.moment(-2), config_error);

    // the free functions are the same measure
    CHECK(semicircle_density(0.3) == ref.density(0.3));
    CHECK(semicircle_cdf(0.3) == ref.cdf(0.3));
    CHECK(semicircle_moment(8) == ref.moment(8));
}

TEST_CASE("one-sample ks distance") {
    SemicircleRef ref;

    // points planted at the quantiles achieve the floor 1/(2n) exactly
    const int n = 500;
    ESD q;
    q.n = n;
    for (int i = 1; i <= n; ++i)
        q.values.push_back(semicircle_quantile(ref, (i - 0.5) / n));
    CHECK(ks_distance(q, ref) == doctest::Approx(1.0 / (2.0 * n)).epsilon(1e-6));

    // a spectrum collapsed at zero sits half the mass away
    ESD z;
    z.n = 3;
    z.values = {0.0, 0.0, 0.0};
    CHECK(ks_distance(z, ref) == doctest::Approx(0.5).epsilon(1e-12));

    ESD empty;
    CHECK_THROWS_AS(ks_distance(empty, ref), config_error);
}

TEST_CASE("two-sample ks distance") {
    ESD a;
    a.values = {0.0, 1.0};
    ESD b;
    b.values = {0.5, 1.5};
    CHECK(ks_distance(a, b) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(ks_distance(b, a) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(ks_distance(a, a) == 0.0);

    ESD lo;
    lo.values = {-2.0, -1.0};
    ESD hi;
    hi.values = {1.0, 2.0};
    CHECK(ks_distance(lo, hi) == doctest::Approx(1.0).epsilon(1e-12));

    ESD empty;
    CHECK_THROWS_AS(ks_distance(a, empty), config_error);
}

TEST_CASE("esd of a large sample is close to the semicircle") {
    MatrixRealization m =
        build_matrix(PatternMap::mul(), 1000, EntryDistribution::gaussian(), 2024);
    ESD e = esd(m);
    SemicircleRef ref;
    CHECK(ks_distance(e, ref) < 0.1);
    CHECK(e.moment(2) == doctest::Approx(1.0).epsilon(0.1));
    CHECK(e.moment(4) == doctest::Approx(2.0).epsilon(0.2));
}

TEST_CASE("frobenius-over-n bound and eigenvalue domination") {
    // diagonal difference: the bound is sqrt(sum of squares / n)
    MatrixRealization zero = from_rows({{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}});
    MatrixRealization diag = from_rows({{1, 0, 0, 0}, {0, 2, 0, 0}, {0, 0, 3, 0}, {0, 0, 0, 4}});
    CHECK(dbl_upper_bound(zero, diag) == doctest::Approx(std::sqrt(7.5)).epsilon(1e-14));
    CHECK(dbl_upper_bound(diag, diag) == 0.0);
    CHECK(dbl_upper_bound(zero, diag) == dbl_upper_bound(diag, zero));

    // dominates the mean absolute eigenvalue gap, squared
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        int n = 10 + static_cast<int>(seed % 3) * 7;
        MatrixRealization a =
            build_matrix(PatternMap::mul(), n, EntryDistribution::gaussian(), 100 + seed);
        MatrixRealization b =
            build_matrix(PatternMap::mul(), n, EntryDistribution::uniform(), 200 + seed);
        std::vector<double> va = eigenvalues(a);
        std::vector<double> vb = eigenvalues(b);
        double l2 = 0.0, l1 = 0.0;
        for (int i = 0; i < n; ++i) {
            l2 += (va[i] - vb[i]) * (va[i] - vb[i]);
            l1 += std::fabs(va[i] - vb[i]);
        }
        double bound = dbl_upper_bound(a, b);
        CAPTURE(seed);
        CHECK(bound * bound + 1e-10 >= l2 / n);
        CHECK(bound * bound + 1e-10 >= (l1 / n) * (l1 / n));
    }

    MatrixRealization m3 = from_rows({{0, 0}, {0, 0}});
    CHECK_THROWS_AS(dbl_upper_bound(zero, m3), config_error);
}

TEST_CASE("rank bound on low-rank perturbations") {
    MatrixRealization a =
        build_matrix(PatternMap::additive(), 30, EntryDistribution::gaussian(), 9);

    RankBoundCheck same = rank_bound_check(a, a);
    CHECK(same.rank == 0);
    CHECK(same.sup_gap == 0.0);
    CHECK(same.holds);

    // rank one: an outer product added on top
    MatrixRealization b = a;
    std::vector<double> v(30);
    for (int i = 0; i < 30; ++i) v[i] = 0.1 * (i + 1);
    for (int i = 1; i <= 30; ++i)
        for (int j = 1; j <= 30; ++j) b.entry(i, j) += v[i - 1] * v[j - 1];
    RankBoundCheck one = rank_bound_check(a, b);
    CHECK(one.rank == 1);
    CHECK(one.holds);
    CHECK(one.sup_gap <= 1.0 / 30.0 + 1e-10);

    // rank two: bumps on two diagonal cells
    MatrixRealization c = a;
    c.entry(3, 3) += 5.0;
    c.entry(17, 17) -= 2.0;
    RankBoundCheck two = rank_bound_check(a, c);
    CHECK(two.rank == 2);
    CHECK(two.holds);
    CHECK(two.sup_gap <= 2.0 / 30.0 + 1e-10);

    MatrixRealization small = from_rows({{0.0}});
    CHECK_THROWS_AS(rank_bound_check(a, small), config_error);
}

TEST_CASE("monte carlo trace moments") {
    PatternMap mul = PatternMap::mul();
    EntryDistribution r = EntryDistribution::rademacher();

    TraceMomentMC mc = trace_moment_mc(mul, 8, r, 4, 200, 31);
    CHECK(mc.r == 4);
    CHECK(mc.reps == 200);
    REQUIRE(mc.per_rep.size() == 200);

    // aggregate fields recomputed from the kept per-repetition values
    double sum = 0.0;
    for (double v : mc.per_rep) sum += v;
    CHECK(mc.mean == doctest::Approx(sum / 200.0).epsilon(1e-14));
    double ss = 0.0;
    for (double v : mc.per_rep) ss += (v - mc.mean) * (v - mc.mean);
    CHECK(mc.variance == doctest::Approx(ss / 199.0).epsilon(1e-12));
    CHECK(mc.std_error == doctest::Approx(std::sqrt(mc.variance / 200.0)).epsilon(1e-12));

    // exact expectation for sign entries: the combinatorial circuit count
    double exact = static_cast<double>(expected_trace_rademacher(mul, 8, 4)) /
                   (8.0 * 8.0 * 8.0);
    CHECK(std::abs(mc.mean - exact) < 4.0 * mc.std_error + 1e-12);

    // reproducible, and longer runs extend shorter ones rep by rep
    TraceMomentMC again = trace_moment_mc(mul, 8, r, 4, 200, 31);
    CHECK(again.per_rep == mc.per_rep);
    TraceMomentMC head = trace_moment_mc(mul, 8, r, 4, 50, 31);
    for (int i = 0; i < 50; ++i) CHECK(head.per_rep[i] == mc.per_rep[i]);
    TraceMomentMC other = trace_moment_mc(mul, 8, r, 4, 50, 32);
    CHECK(other.per_rep != head.per_rep);

    // order zero is identically one
    TraceMomentMC m0 = trace_moment_mc(mul, 6, r, 0, 3, 1);
    for (double v : m0.per_rep) CHECK(v == doctest::Approx(1.0).epsilon(1e-12));

    CHECK_THROWS_AS(trace_moment_mc(mul, 8, r, -1, 5, 1), config_error);
    CHECK_THROWS_AS(trace_moment_mc(mul, 8, r, 2, 0, 1), config_error);
}

TEST_CASE("moment fluctuations die out as the dimension grows") {
    PatternMap mul = PatternMap::mul();
    EntryDistribution g = EntryDistribution::gaussian();
    std::vector<VarianceRow> rows = variance_decay(mul, {16, 32, 64, 128}, g, 4, 8, 7);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].n == 16);
    CHECK(rows[3].n == 128);
    for (const VarianceRow& row : rows) CHECK(row.variance > 0.0);
    CHECK(rows[3].variance < rows[0].variance);
    CHECK(rows[3].variance < rows[1].variance);

    // each row is exactly the matching monte carlo variance
    TraceMomentMC mc = trace_moment_mc(mul, 32, g, 4, 8, 7);
    CHECK(rows[1].variance == doctest::Approx(mc.variance).epsilon(1e-14));

    CHECK_THROWS_AS(variance_decay(mul, {16}, g, 4, 7, 7), config_error);
}

TEST_CASE("histogram bins are half-open with a closed top") {
    ESD e;
    e.n = 6;
    e.values = {-1.0, -0.5, 0.0, 0.25, 0.5, 1.0};
    Histogram h = histogram(e, 4, -1.0, 1.0);
    CHECK(h.width == doctest::Approx(0.5).epsilon(1e-15));
    REQUIRE(h.counts.size() == 4);
    CHECK(h.counts[0] == 1);  // [-1.0, -0.5)
    CHECK(h.counts[1] == 1);  // [-0.5, 0.0)
    CHECK(h.counts[2] == 2);  // [0.0, 0.5)
    CHECK(h.counts[3] == 2);  // [0.5, 1.0] closed: includes the endpoint
    CHECK(h.outside == 0);
    for (int i = 0; i < 4; ++i)
        CHECK(h.density[i] == doctest::Approx(h.counts[i] / (6.0 * 0.5)).epsilon(1e-14));

    ESD wide;
    wide.n = 4;
    wide.values = {-5.0, 0.1, 0.2, 7.0};
    Histogram hw = histogram(wide, 2, 0.0, 1.0);
    CHECK(hw.outside == 2);
    CHECK(hw.counts[0] == 2);
    CHECK(hw.counts[1] == 0);

    CHECK_THROWS_AS(histogram(e, 0, -1.0, 1.0), config_error);
    CHECK_THROWS_AS(histogram(e, 4, 1.0, 1.0), config_error);
}

TEST_CASE("histogram of a large sample tracks the semicircle shape") {
    MatrixRealization m =
        build_matrix(PatternMap::mul(), 1000, EntryDistribution::rademacher(), 515);
    ESD e = esd(m);
    Histogram h = histogram(e, 20, -2.2, 2.2);
    SemicircleRef ref;
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
        double left = -2.2 + i * h.width;
        double expect = (ref.cdf(left + h.width) - ref.cdf(left)) / h.width;
        worst = std::max(worst, std::fabs(h.density[i] - expect));
    }
    CHECK(worst < 0.1);
    CHECK(h.outside <= 20);
}

}  // TEST_SUITE
