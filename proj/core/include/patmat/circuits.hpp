#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "patmat/label.hpp"
#include "patmat/pattern.hpp"
#include "patmat/rational.hpp"
#include "patmat/words.hpp"

namespace patmat {

// Closed index path pi(0..r) in [n] with pi(0) = pi(r); step i is the edge
// (pi(i-1), pi(i)) carrying label S(pi(i-1), pi(i)).
struct Circuit {
    int n = 0;
    int r = 0;
    std::vector<int> values;  // size r+1

    Circuit(int n_, std::vector<int> v);
};

// Edge labels of one circuit and how often each label occurs along it.
struct MatchProfile {
    std::vector<Label> edge_labels;       // in edge order
    std::vector<int> multiplicity_multiset;  // ascending, one entry per distinct label
    bool s_matched = false;               // every label occurs >= 2 times
    bool pair_matched = false;            // every label occurs exactly twice
    bool has_order3 = false;              // some label occurs >= 3 times
    std::optional<Word> word;             // label-equality classes, when pair_matched
};
MatchProfile match_profile(const Circuit& c, const PatternMap& map);

// Exact census of pair-matched circuits of length 2k, bucketed by their word.
struct PairMatchedCount {
    long long total = 0;
    std::map<Word, long long> by_word;
};
PairMatchedCount count_pair_matched(const PatternMap& map, int k, int n);

// S-matched circuits of length r with at least one label of multiplicity >= 3.
struct Order3Count {
    long long count = 0;
    double normalized = 0.0;  // count / n^{1+r/2}
};
Order3Count count_order3_matched(const PatternMap& map, int r, int n);

// Quadruples of length-r circuits where every edge is matched inside its own
// circuit or across the quadruple, and no single circuit is S-matched alone.
long long count_matched_quadruples(const PatternMap& map, int r, int n);

// The equation system of a partition word w of length 2k: variables x0..x_2k
// written between the letters, one equation per letter pair, plus the closure
// x0 = x_2k. Dependent variables precede first occurrences; the k+1
// undetermined ones precede second occurrences or are x_2k.
struct EquationSystem {
    Word word;
    int k = 0;
    int n = 0;
    std::string map_name;
    std::vector<std::pair<int, int>> letter_positions;  // (first, second), 1-based, letter order
    std::vector<int> dependent;     // variable indices, decreasing = resolution order
    std::vector<int> undetermined;  // ascending
};
EquationSystem build_equation_system(const Word& w, const PatternMap& map, int n);
std::vector<std::string> equation_lines(const EquationSystem& sys);

// Number of solutions of the system in [n]^{2k+1} and p = count / n^{k+1}.
// Solver mode sweeps the undetermined variables and resolves the dependent
// ones right to left through the inverse index; brute force sweeps everything.
// Both enforce the closure equation, and they agree exactly.
enum class CountMode { solver, brute_force };
struct SolutionCount {
    long long count = 0;
    Rational p;
};
SolutionCount solution_count(const Word& w, const PatternMap& map, int n,
                             CountMode mode = CountMode::solver);

// Exact E[Tr((H_n^S)^r)] for entries with P(X=1) = P(X=-1) = 1/2: the number
// of length-r circuits whose every label multiplicity is even.
long long expected_trace_rademacher(const PatternMap& map, int n, int r);

}  // namespace patmat
