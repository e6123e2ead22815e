#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace patmat {

// Word over positive integer letter ids. Canonical form: the first occurrences
// of the distinct letters appear in increasing id order 1,2,3,...  A partition
// word is a canonical word in which every letter occurs exactly twice.
struct Word {
    std::vector<int> letters;

    Word() = default;
    explicit Word(std::vector<int> l) : letters(std::move(l)) {}

    bool operator==(const Word&) const = default;
    auto operator<=>(const Word&) const = default;

    std::size_t size() const { return letters.size(); }
    bool empty() const { return letters.empty(); }

    // "1221"; ids above 9 are dot-separated ("1.2.10"); empty word prints as a dash.
    std::string str() const;
    // inverse of str(); also accepts "" for the empty word
    static Word parse(std::string_view s);
};

// Relabel symbols by order of first occurrence; idempotent on canonical words.
Word canonicalize(const std::vector<int>& seq);
Word canonicalize(std::string_view seq);  // each character is one symbol

bool is_canonical(const Word& w);
bool is_partition_word(const Word& w);

// (2k-1)!! with the empty-product convention at k=0.
long long double_factorial_odd(int k);

// All canonical pair-partition words of length 2k in lexicographic order,
// (2k-1)!! of them. Budget error above k = 8.
std::vector<Word> enumerate_partition_words(int k);

// One deletion of an adjacent equal pair per step, leftmost pair first.
// Intermediate steps keep the original ids; final is recanonicalized.
struct ReductionTrace {
    std::vector<Word> steps;  // steps.front() is the input
    Word final;
};
ReductionTrace reduce(const Word& w);

// Catalan = nonempty partition word whose reduction reaches the empty word.
// The empty word gets its own value so the "at least one double letter" clause
// of the definition stays literal; callers pick the convention they need.
enum class CatalanClass { empty_word, catalan, non_catalan };
CatalanClass catalan_class(const Word& w);  // pre: is_partition_word(w)
bool is_catalan(const Word& w);             // catalan_class(w) == catalan

// Exact Catalan number C_k = (2k)!/((k+1)!k!).
long long catalan_count(int k);

// Structure of a nonempty reduced word: either one tail letter a closing at the
// very end (w1 a b w2 a) or closing inside (w1 a b w2 a c w3); b and c must
// already occur in w1. The empty word is Case0.
struct Case0 {};
struct Case1 {
    Word w1;
    int a = 0;
    int b = 0;
    Word w2;
};
struct Case2 {
    Word w1;
    int a = 0;
    int b = 0;
    Word w2;
    int c = 0;
    Word w3;
};
using ReducedClass = std::variant<Case0, Case1, Case2>;

// pre: w is a canonical partition-structured word with no adjacent equal pair.
ReducedClass classify_reduced(const Word& w);

}  // namespace patmat
