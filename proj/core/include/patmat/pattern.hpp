#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "patmat/label.hpp"
#include "patmat/rational.hpp"

namespace patmat {

// Symmetric label map S on the positive quadrant. Cells with equal labels share
// one random variable in a patterned matrix. Labels are exact 64-bit values;
// evaluation never goes through floating point.
class PatternMap {
  public:
    enum class Kind { mul, s_alpha, additive, custom_table };

    // S(x,y) = x*y
    static PatternMap mul();
    // S(x,y) = x + y
    static PatternMap additive();
    // S_alpha(x,y) = x^2 + y^2 + alpha*x*y with exact rational alpha = num/den >= 0.
    // Label is the single integer den*(x^2+y^2) + num*x*y.
    static PatternMap s_alpha(std::int64_t num, std::int64_t den = 1);
    // S_alpha with alpha irrational: equality of labels then forces both
    // components equal, so the label is the exact pair (x^2+y^2, x*y).
    static PatternMap s_alpha_irrational();
    // Explicit table, 1-based domain [n_max]^2; exists to build counterexamples.
    static PatternMap custom_table(int n_max, std::vector<std::vector<std::int64_t>> table);

    Kind kind() const { return kind_; }
    bool alpha_is_irrational() const { return irrational_; }
    Rational alpha() const;  // s_alpha with rational alpha only
    int domain_limit() const;  // n_max for custom_table, otherwise a large bound
    std::string name() const;

    // pre: 1 <= x, y (and <= n_max for custom_table); deterministic, symmetric.
    Label evaluate(int x, int y) const;

  private:
    PatternMap() = default;
    Kind kind_ = Kind::mul;
    std::int64_t alpha_num_ = 0;
    std::int64_t alpha_den_ = 1;
    bool irrational_ = false;
    int n_max_ = 0;
    std::vector<std::vector<std::int64_t>> table_;
};

// Exhaustive scan of [n]^2; first violating (x,y) in row-major order, or pass.
std::optional<std::pair<int, int>> check_symmetry(const PatternMap& map, int n);

// For every y in [n], x -> S(x,y) must be injective on [n]; returns the first
// violating (x, x', y) with x < x', or pass.
std::optional<std::tuple<int, int, int>> check_coordinatewise_injectivity(const PatternMap& map,
                                                                          int n);

// Level-set census of [n]^2: the multiset of |S_i ∩ [n]^2| over labels hit,
// their squared sum (= number of label-equal quadruples), and its ratio to n^3.
struct LevelSetSummary {
    int n = 0;
    std::vector<long long> sizes;   // ascending
    long long quadruple_count = 0;  // sum of sizes^2
    Rational ratio;                 // quadruple_count / n^3, exact
};
LevelSetSummary level_set_summary(const PatternMap& map, int n);

struct TrendRow {
    int n = 0;
    Rational ratio;
};
struct SmallDimensionTrend {
    std::vector<TrendRow> rows;
    bool strictly_decreasing = false;
};
// Exact quadruple ratios on an ascending n grid; flags strict monotone decay.
SmallDimensionTrend small_dimension_trend(const PatternMap& map, const std::vector<int>& ns);

// (label, y) -> x lookup realizing the coordinatewise inverse on [n]^2.
// Construction fails loudly if the map is not injective there.
class InverseIndex {
  public:
    InverseIndex(const PatternMap& map, int n);
    std::optional<int> lookup(const Label& lab, int y) const;
    int n() const { return n_; }

  private:
    struct Entry {
        Label lab;
        int y;
        int x;
    };
    int n_ = 0;
    std::vector<Entry> entries_;  // sorted by (lab, y)
};
InverseIndex build_inverse_index(const PatternMap& map, int n);

}  // namespace patmat
