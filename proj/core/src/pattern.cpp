#include "patmat/pattern.hpp"

#include <algorithm>
#include <unordered_map>

#include "patmat/checked.hpp"
#include "patmat/errors.hpp"

namespace patmat {

namespace {
constexpr int kExactModeLimit = 30000;   // O(n^2) hashing ceiling for exact census work
constexpr int kIndexLimit = 4000;        // inverse index stores n^2 entries
}  // namespace

PatternMap PatternMap::mul() {
    PatternMap m;
    m.kind_ = Kind::mul;
    return m;
}

PatternMap PatternMap::additive() {
    PatternMap m;
    m.kind_ = Kind::additive;
    return m;
}

PatternMap PatternMap::s_alpha(std::int64_t num, std::int64_t den) {
    if (den <= 0 || num < 0) throw config_error("s_alpha needs alpha = num/den >= 0 with den > 0");
    Rational a(num, den);
    PatternMap m;
    m.kind_ = Kind::s_alpha;
    m.alpha_num_ = a.num;
    m.alpha_den_ = a.den;
    return m;
}

PatternMap PatternMap::s_alpha_irrational() {
    PatternMap m;
    m.kind_ = Kind::s_alpha;
    m.irrational_ = true;
    return m;
}

PatternMap PatternMap::custom_table(int n_max, std::vector<std::vector<std::int64_t>> table) {
    if (n_max < 1 || table.size() != static_cast<std::size_t>(n_max))
        throw config_error("custom_table needs an n_max x n_max table");
    for (auto& row : table)
        if (row.size() != static_cast<std::size_t>(n_max))
            throw config_error("custom_table rows must have n_max entries");
    PatternMap m;
    m.kind_ = Kind::custom_table;
    m.n_max_ = n_max;
    m.table_ = std::move(table);
    return m;
}

Rational PatternMap::alpha() const {
    if (kind_ != Kind::s_alpha || irrational_)
        throw config_error("alpha() is defined only for rational s_alpha maps");
    return Rational(alpha_num_, alpha_den_);
}

int PatternMap::domain_limit() const {
    return kind_ == Kind::custom_table ? n_max_ : (1 << 30);
}

std::string PatternMap::name() const {
    switch (kind_) {
        case Kind::mul:
            return "mul";
        case Kind::additive:
            return "additive";
        case Kind::s_alpha:
            return irrational_ ? "salpha(irrational)" : "salpha(" + Rational(alpha_num_, alpha_den_).str() + ")";
        case Kind::custom_table:
            return "custom_table(" + std::to_string(n_max_) + ")";
    }
    return "?";
}

Label PatternMap::evaluate(int x, int y) const {
    if (x < 1 || y < 1) throw config_error("pattern map domain is positive integers");
    std::int64_t xl = x, yl = y;
    switch (kind_) {
        case Kind::mul:
            return Label{checked_mul(xl, yl), 0};
        case Kind::additive:
            return Label{checked_add(xl, yl), 0};
        case Kind::s_alpha: {
            std::int64_t sq = checked_add(checked_mul(xl, xl), checked_mul(yl, yl));
            std::int64_t xy = checked_mul(xl, yl);
            if (irrational_) return Label{sq, xy};
            return Label{checked_add(checked_mul(alpha_den_, sq), checked_mul(alpha_num_, xy)), 0};
        }
        case Kind::custom_table:
            if (x > n_max_ || y > n_max_)
                throw config_error("custom_table evaluated outside its n_max=" +
                                   std::to_string(n_max_) + " domain");
            return Label{table_[x - 1][y - 1], 0};
    }
    throw config_error("unreachable pattern kind");
}

std::optional<std::pair<int, int>> check_symmetry(const PatternMap& map, int n) {
    if (n < 1) throw config_error("check_symmetry needs n >= 1");
    for (int x = 1; x <= n; ++x)
        for (int y = x + 1; y <= n; ++y)
            if (!(map.evaluate(x, y) == map.evaluate(y, x))) return std::make_pair(x, y);
    return std::nullopt;
}

std::optional<std::tuple<int, int, int>> check_coordinatewise_injectivity(const PatternMap& map,
                                                                          int n) {
    if (n < 1) throw config_error("check_coordinatewise_injectivity needs n >= 1");
    std::unordered_map<Label, int, LabelHash> seen;
    for (int y = 1; y <= n; ++y) {
        seen.clear();
        seen.reserve(static_cast<std::size_t>(n) * 2);
        for (int x = 1; x <= n; ++x) {
            auto [it, fresh] = seen.try_emplace(map.evaluate(x, y), x);
            if (!fresh) return std::make_tuple(it->second, x, y);
        }
    }
    return std::nullopt;
}

LevelSetSummary level_set_summary(const PatternMap& map, int n) {
    if (n < 1) throw config_error("level_set_summary needs n >= 1");
    if (n > kExactModeLimit)
        throw budget_error("level_set_summary exact-mode budget is n <= " +
                           std::to_string(kExactModeLimit) + ", got n=" + std::to_string(n));
    std::unordered_map<Label, long long, LabelHash> census;
    census.reserve(static_cast<std::size_t>(n) * n / 2 + 8);
    for (int x = 1; x <= n; ++x) {
        census[map.evaluate(x, x)] += 1;
        for (int y = x + 1; y <= n; ++y) census[map.evaluate(x, y)] += 2;  // (x,y) and (y,x)
    }
    LevelSetSummary s;
    s.n = n;
    s.sizes.reserve(census.size());
    long long quad = 0;
    for (auto& [lab, c] : census) {
        s.sizes.push_back(c);
        quad = checked_add(quad, checked_mul(c, c));
    }
    std::sort(s.sizes.begin(), s.sizes.end());
    s.quadruple_count = quad;
    std::int64_t n3 = checked_mul(checked_mul(static_cast<std::int64_t>(n), n), n);
    s.ratio = Rational(quad, n3);
    return s;
}

SmallDimensionTrend small_dimension_trend(const PatternMap& map, const std::vector<int>& ns) {
    if (ns.empty()) throw config_error("small_dimension_trend needs a nonempty n grid");
    for (std::size_t i = 0; i < ns.size(); ++i) {
        if (ns[i] < 2) throw config_error("small_dimension_trend grid entries must be >= 2");
        if (i > 0 && ns[i] <= ns[i - 1])
            throw config_error("small_dimension_trend grid must be ascending");
    }
    SmallDimensionTrend t;
    for (int n : ns) t.rows.push_back({n, level_set_summary(map, n).ratio});
    t.strictly_decreasing = true;
    for (std::size_t i = 1; i < t.rows.size(); ++i)
        if (!(t.rows[i].ratio < t.rows[i - 1].ratio)) t.strictly_decreasing = false;
    return t;
}

InverseIndex::InverseIndex(const PatternMap& map, int n) : n_(n) {
    if (n < 1) throw config_error("inverse index needs n >= 1");
    if (n > kIndexLimit)
        throw budget_error("inverse index budget is n <= " + std::to_string(kIndexLimit) +
                           " (n^2 entries), got n=" + std::to_string(n));
    entries_.reserve(static_cast<std::size_t>(n) * n);
    for (int y = 1; y <= n; ++y)
        for (int x = 1; x <= n; ++x) entries_.push_back({map.evaluate(x, y), y, x});
    std::sort(entries_.begin(), entries_.end(), [](const Entry& a, const Entry& b) {
        return std::tie(a.lab, a.y, a.x) < std::tie(b.lab, b.y, b.x);
    });
    for (std::size_t i = 1; i < entries_.size(); ++i) {
        if (entries_[i].lab == entries_[i - 1].lab && entries_[i].y == entries_[i - 1].y)
            throw injectivity_error("duplicate (label, y) while building inverse index: y=" +
                                    std::to_string(entries_[i].y) + ", x=" +
                                    std::to_string(entries_[i - 1].x) + " and x=" +
                                    std::to_string(entries_[i].x));
    }
}

std::optional<int> InverseIndex::lookup(const Label& lab, int y) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), std::make_pair(lab, y),
                               [](const Entry& e, const std::pair<Label, int>& key) {
                                   return std::tie(e.lab, e.y) <
                                          std::tie(key.first, key.second);
                               });
    if (it == entries_.end() || !(it->lab == lab) || it->y != y) return std::nullopt;
    return it->x;
}

InverseIndex build_inverse_index(const PatternMap& map, int n) { return InverseIndex(map, n); }

}  // namespace patmat
