#include "patmat/circuits.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "patmat/errors.hpp"

namespace patmat {

namespace {

constexpr long long kEnumBudget = 100000000;  // 10^8 tuples for any exhaustive sweep

// n^e if it stays within the budget, else a budget error naming the caller.
long long powed_budget(const char* who, int n, int e) {
    long long v = 1;
    for (int i = 0; i < e; ++i) {
        v *= n;
        if (v > kEnumBudget)
            throw budget_error(std::string(who) + " budget is n^" + std::to_string(e) +
                               " <= " + std::to_string(kEnumBudget) + ", got n=" +
                               std::to_string(n));
    }
    return v;
}

// Odometer over [1..n]^len; returns false once the sweep is complete.
bool advance(std::vector<int>& idx, int n) {
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (idx[i] < n) {
            ++idx[i];
            return true;
        }
        idx[i] = 1;
    }
    return false;
}

std::vector<int> label_multiplicities(const std::vector<Label>& labels) {
    // per-edge multiplicity of its own label
    std::vector<int> mult(labels.size(), 0);
    for (std::size_t i = 0; i < labels.size(); ++i)
        for (std::size_t j = 0; j < labels.size(); ++j)
            if (labels[i] == labels[j]) ++mult[i];
    return mult;
}

}  // namespace

Circuit::Circuit(int n_, std::vector<int> v) : n(n_), values(std::move(v)) {
    if (n < 1 || values.size() < 2) throw config_error("circuit needs n >= 1 and length >= 1");
    r = static_cast<int>(values.size()) - 1;
    if (values.front() != values.back())
        throw config_error("circuit must close: pi(0) != pi(r)");
    for (int v_ : values)
        if (v_ < 1 || v_ > n) throw config_error("circuit value outside [n]");
}

MatchProfile match_profile(const Circuit& c, const PatternMap& map) {
    MatchProfile p;
    p.edge_labels.reserve(c.r);
    for (int i = 1; i <= c.r; ++i)
        p.edge_labels.push_back(map.evaluate(c.values[i - 1], c.values[i]));
    auto mult = label_multiplicities(p.edge_labels);

    p.s_matched = true;
    p.pair_matched = true;
    for (std::size_t i = 0; i < mult.size(); ++i) {
        if (mult[i] < 2) p.s_matched = false;
        if (mult[i] != 2) p.pair_matched = false;
        if (mult[i] >= 3) p.has_order3 = true;
    }
    if (c.r == 0) p.pair_matched = false;

    // multiset of per-label multiplicities: count each distinct label once
    std::vector<Label> seen;
    for (std::size_t i = 0; i < p.edge_labels.size(); ++i) {
        if (std::find(seen.begin(), seen.end(), p.edge_labels[i]) == seen.end()) {
            seen.push_back(p.edge_labels[i]);
            p.multiplicity_multiset.push_back(mult[i]);
        }
    }
    std::sort(p.multiplicity_multiset.begin(), p.multiplicity_multiset.end());

    if (p.pair_matched) {
        // word = equality classes of the edge labels, first occurrence order
        std::vector<int> classes;
        classes.reserve(c.r);
        for (const Label& l : p.edge_labels) {
            auto it = std::find(seen.begin(), seen.end(), l);
            classes.push_back(static_cast<int>(it - seen.begin()) + 1);
        }
        p.word = canonicalize(classes);
    }
    return p;
}

PairMatchedCount count_pair_matched(const PatternMap& map, int k, int n) {
    if (k < 1 || n < 1) throw config_error("count_pair_matched needs k, n >= 1");
    powed_budget("count_pair_matched", n, 2 * k);
    const int r = 2 * k;
    PairMatchedCount out;
    std::vector<int> pi(r, 1);  // pi(0..r-1); pi(r) = pi(0)
    std::vector<Label> labels(r);
    do {
        for (int i = 1; i <= r; ++i)
            labels[i - 1] = map.evaluate(pi[i - 1], i == r ? pi[0] : pi[i]);
        auto mult = label_multiplicities(labels);
        if (std::all_of(mult.begin(), mult.end(), [](int m) { return m == 2; })) {
            ++out.total;
            std::vector<int> classes;
            std::vector<Label> seen;
            for (const Label& l : labels) {
                auto it = std::find(seen.begin(), seen.end(), l);
                if (it == seen.end()) {
                    seen.push_back(l);
                    classes.push_back(static_cast<int>(seen.size()));
                } else {
                    classes.push_back(static_cast<int>(it - seen.begin()) + 1);
                }
            }
            ++out.by_word[canonicalize(classes)];
        }
    } while (advance(pi, n));
    return out;
}

Order3Count count_order3_matched(const PatternMap& map, int r, int n) {
    if (r < 1 || n < 1) throw config_error("count_order3_matched needs r, n >= 1");
    powed_budget("count_order3_matched", n, r);
    Order3Count out;
    std::vector<int> pi(r, 1);
    std::vector<Label> labels(r);
    do {
        for (int i = 1; i <= r; ++i)
            labels[i - 1] = map.evaluate(pi[i - 1], i == r ? pi[0] : pi[i]);
        auto mult = label_multiplicities(labels);
        bool s_matched = std::all_of(mult.begin(), mult.end(), [](int m) { return m >= 2; });
        bool order3 = std::any_of(mult.begin(), mult.end(), [](int m) { return m >= 3; });
        if (s_matched && order3) ++out.count;
    } while (advance(pi, n));
    out.normalized = static_cast<double>(out.count) /
                     std::pow(static_cast<double>(n), 1.0 + static_cast<double>(r) / 2.0);
    return out;
}

long long count_matched_quadruples(const PatternMap& map, int r, int n) {
    if (r < 1 || n < 1) throw config_error("count_matched_quadruples needs r, n >= 1");
    // (n^r)^4 <= 10^8 quadruples, i.e. at most 100 circuits
    long long circuits = 1;
    for (int i = 0; i < r; ++i) {
        circuits *= n;
        if (circuits > 100)
            throw budget_error("count_matched_quadruples budget is (n^r)^4 <= " +
                               std::to_string(kEnumBudget) + " (n^r <= 100), got n=" +
                               std::to_string(n) + ", r=" + std::to_string(r));
    }

    // precompute every circuit's sorted label list and whether it is S-matched alone
    struct Entry {
        std::vector<Label> sorted_labels;
        bool self_matched;
    };
    std::vector<Entry> all;
    all.reserve(static_cast<std::size_t>(circuits));
    std::vector<int> pi(r, 1);
    do {
        std::vector<Label> labels(r);
        for (int i = 1; i <= r; ++i)
            labels[i - 1] = map.evaluate(pi[i - 1], i == r ? pi[0] : pi[i]);
        auto mult = label_multiplicities(labels);
        Entry e;
        e.self_matched = std::all_of(mult.begin(), mult.end(), [](int m) { return m >= 2; });
        std::sort(labels.begin(), labels.end());
        e.sorted_labels = std::move(labels);
        all.push_back(std::move(e));
    } while (advance(pi, n));

    long long matched = 0;
    std::vector<Label> merged;
    merged.reserve(static_cast<std::size_t>(4) * r);
    for (std::size_t a = 0; a < all.size(); ++a) {
        if (all[a].self_matched) continue;  // the quadruple may contain no S-matched circuit
        for (std::size_t b = 0; b < all.size(); ++b) {
            if (all[b].self_matched) continue;
            for (std::size_t c = 0; c < all.size(); ++c) {
                if (all[c].self_matched) continue;
                for (std::size_t d = 0; d < all.size(); ++d) {
                    if (all[d].self_matched) continue;
                    merged.clear();
                    for (auto idx : {a, b, c, d})
                        merged.insert(merged.end(), all[idx].sorted_labels.begin(),
                                      all[idx].sorted_labels.end());
                    std::sort(merged.begin(), merged.end());
                    bool ok = true;
                    std::size_t i = 0;
                    while (i < merged.size()) {
                        std::size_t j = i;
                        while (j < merged.size() && merged[j] == merged[i]) ++j;
                        if (j - i < 2) {
                            ok = false;
                            break;
                        }
                        i = j;
                    }
                    if (ok) ++matched;
                }
            }
        }
    }
    return matched;
}

EquationSystem build_equation_system(const Word& w, const PatternMap& map, int n) {
    if (!is_partition_word(w))
        throw config_error("build_equation_system requires a partition word, got '" + w.str() +
                           "'");
    if (n < 1) throw config_error("build_equation_system needs n >= 1");
    EquationSystem sys;
    sys.word = w;
    sys.k = static_cast<int>(w.size()) / 2;
    sys.n = n;
    sys.map_name = map.name();
    sys.letter_positions.assign(sys.k, {0, 0});
    for (int pos = 1; pos <= 2 * sys.k; ++pos) {
        int letter = w.letters[pos - 1];
        auto& lp = sys.letter_positions[letter - 1];
        (lp.first == 0 ? lp.first : lp.second) = pos;
    }
    for (auto& [first, second] : sys.letter_positions) {
        sys.dependent.push_back(first - 1);
        sys.undetermined.push_back(second - 1);
    }
    sys.undetermined.push_back(2 * sys.k);
    std::sort(sys.dependent.begin(), sys.dependent.end(), std::greater<int>());
    std::sort(sys.undetermined.begin(), sys.undetermined.end());
    return sys;
}

std::vector<std::string> equation_lines(const EquationSystem& sys) {
    std::vector<std::string> lines;
    auto var = [](int i) { return "x" + std::to_string(i); };
    for (auto& [f, s] : sys.letter_positions)
        lines.push_back("S(" + var(f - 1) + "," + var(f) + ") = S(" + var(s - 1) + "," + var(s) +
                        ")");
    lines.push_back(var(0) + " = " + var(2 * sys.k));
    return lines;
}

SolutionCount solution_count(const Word& w, const PatternMap& map, int n, CountMode mode) {
    if (!is_partition_word(w))
        throw config_error("solution_count requires a partition word, got '" + w.str() + "'");
    if (n < 1) throw config_error("solution_count needs n >= 1");
    const int k = static_cast<int>(w.size()) / 2;
    const int vars = 2 * k + 1;
    SolutionCount out;

    if (w.empty()) {
        // the system degenerates to the single closure variable x0
        out.count = n;
        out.p = Rational(1, 1);
        return out;
    }

    EquationSystem sys = build_equation_system(w, map, n);

    if (mode == CountMode::brute_force) {
        powed_budget("solution_count (brute force)", n, vars);
        std::vector<int> x(vars, 1);
        long long count = 0;
        do {
            if (x.front() != x.back()) continue;
            bool ok = true;
            for (auto& [f, s] : sys.letter_positions) {
                if (!(map.evaluate(x[f - 1], x[f]) == map.evaluate(x[s - 1], x[s]))) {
                    ok = false;
                    break;
                }
            }
            if (ok) ++count;
        } while (advance(x, n));
        out.count = count;
    } else {
        long long denom_budget = powed_budget("solution_count (solver)", n, k + 1);
        (void)denom_budget;
        InverseIndex inv(map, n);

        // resolution plan: for the dependent variable x_{f-1} of each letter,
        // the equation S(x_{f-1}, x_f) = S(x_{s-1}, x_s) is solved for x_{f-1}
        // through the inverse index once the right-hand side is known.
        struct Step {
            int dep, arg, rhs1, rhs2;
        };
        std::vector<Step> plan;
        for (auto& [f, s] : sys.letter_positions) plan.push_back({f - 1, f, s - 1, s});
        std::sort(plan.begin(), plan.end(), [](const Step& a, const Step& b) {
            return a.dep > b.dep;
        });

        std::vector<int> x(vars, 0);
        std::vector<int> u(sys.undetermined.size(), 1);
        long long count = 0;
        do {
            for (std::size_t i = 0; i < u.size(); ++i) x[sys.undetermined[i]] = u[i];
            bool ok = true;
            for (const Step& st : plan) {
                auto hit = inv.lookup(map.evaluate(x[st.rhs1], x[st.rhs2]), x[st.arg]);
                if (!hit) {
                    ok = false;
                    break;
                }
                x[st.dep] = *hit;
            }
            if (ok && x.front() == x.back()) ++count;
        } while (advance(u, n));
        out.count = count;
    }

    long long denom = 1;
    for (int i = 0; i < k + 1; ++i) denom *= n;
    out.p = Rational(out.count, denom);
    return out;
}

long long expected_trace_rademacher(const PatternMap& map, int n, int r) {
    if (r < 1 || n < 1) throw config_error("expected_trace_rademacher needs n, r >= 1");
    powed_budget("expected_trace_rademacher", n, r);
    long long count = 0;
    std::vector<int> pi(r, 1);
    std::vector<Label> labels(r);
    do {
        for (int i = 1; i <= r; ++i)
            labels[i - 1] = map.evaluate(pi[i - 1], i == r ? pi[0] : pi[i]);
        auto mult = label_multiplicities(labels);
        if (std::all_of(mult.begin(), mult.end(), [](int m) { return m % 2 == 0; })) ++count;
    } while (advance(pi, n));
    return count;
}

}  // namespace patmat
