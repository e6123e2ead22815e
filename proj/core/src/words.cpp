#include "patmat/words.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "patmat/errors.hpp"

namespace patmat {

std::string Word::str() const {
    if (letters.empty()) return "-";
    bool small = std::all_of(letters.begin(), letters.end(), [](int l) { return l <= 9; });
    std::string out;
    for (std::size_t i = 0; i < letters.size(); ++i) {
        if (!small && i > 0) out += '.';
        out += std::to_string(letters[i]);
    }
    return out;
}

Word Word::parse(std::string_view s) {
    Word w;
    if (s.empty() || s == "-") return w;
    if (s.find('.') != std::string_view::npos) {
        std::size_t pos = 0;
        while (pos < s.size()) {
            std::size_t dot = s.find('.', pos);
            if (dot == std::string_view::npos) dot = s.size();
            if (dot == pos) throw config_error("bad word token: '" + std::string(s) + "'");
            w.letters.push_back(std::stoi(std::string(s.substr(pos, dot - pos))));
            pos = dot + 1;
        }
    } else {
        for (char ch : s) {
            if (ch < '1' || ch > '9')
                throw config_error("bad word character '" + std::string(1, ch) + "' in '" + std::string(s) + "'");
            w.letters.push_back(ch - '0');
        }
    }
    return w;
}

Word canonicalize(const std::vector<int>& seq) {
    std::unordered_map<int, int> relabel;
    Word w;
    w.letters.reserve(seq.size());
    int next = 1;
    for (int sym : seq) {
        auto [it, fresh] = relabel.try_emplace(sym, next);
        if (fresh) ++next;
        w.letters.push_back(it->second);
    }
    return w;
}

Word canonicalize(std::string_view seq) {
    std::vector<int> syms(seq.begin(), seq.end());
    return canonicalize(syms);
}

bool is_canonical(const Word& w) {
    int next = 1;
    std::unordered_map<int, bool> seen;
    for (int l : w.letters) {
        if (!seen.count(l)) {
            if (l != next) return false;
            seen[l] = true;
            ++next;
        }
    }
    return true;
}

bool is_partition_word(const Word& w) {
    if (!is_canonical(w)) return false;
    std::map<int, int> count;
    for (int l : w.letters) ++count[l];
    for (auto& [l, c] : count)
        if (c != 2) return false;
    return true;
}

long long double_factorial_odd(int k) {
    long long r = 1;
    for (int j = 3; j <= 2 * k - 1; j += 2) r *= j;
    return r;
}

namespace {

void gen_words(int k, std::vector<int>& cur, std::vector<int>& open, int next_new,
               std::vector<Word>& out) {
    if (static_cast<int>(cur.size()) == 2 * k) {
        out.push_back(Word(cur));
        return;
    }
    // candidates in increasing id order keeps the output lexicographically sorted
    std::size_t oi = 0;
    int cand_new = (next_new <= k) ? next_new : 0;
    while (true) {
        int cand;
        bool is_open;
        if (oi < open.size() && (cand_new == 0 || open[oi] < cand_new)) {
            cand = open[oi++];
            is_open = true;
        } else if (cand_new != 0) {
            cand = cand_new;
            cand_new = 0;
            is_open = false;
        } else {
            break;
        }
        cur.push_back(cand);
        if (is_open) {
            std::vector<int> rest;
            rest.reserve(open.size() - 1);
            for (int l : open)
                if (l != cand) rest.push_back(l);
            gen_words(k, cur, rest, next_new, out);
        } else {
            open.push_back(cand);  // open is sorted; cand is the largest id so far
            gen_words(k, cur, open, next_new + 1, out);
            open.pop_back();
        }
        cur.pop_back();
    }
}

}  // namespace

std::vector<Word> enumerate_partition_words(int k) {
    if (k < 0) throw config_error("k must be nonnegative");
    if (k > 8)
        throw budget_error("enumerate_partition_words budget is k <= 8 ((2k-1)!! words), got k=" +
                           std::to_string(k));
    std::vector<Word> out;
    if (k == 0) {
        out.push_back(Word{});
        return out;
    }
    out.reserve(static_cast<std::size_t>(double_factorial_odd(k)));
    std::vector<int> cur, open;
    gen_words(k, cur, open, 1, out);
    return out;
}

ReductionTrace reduce(const Word& w) {
    ReductionTrace tr;
    tr.steps.push_back(w);
    Word cur = w;
    while (true) {
        std::size_t hit = cur.size();
        for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
            if (cur.letters[i] == cur.letters[i + 1]) {
                hit = i;
                break;
            }
        }
        if (hit == cur.size()) break;
        cur.letters.erase(cur.letters.begin() + hit, cur.letters.begin() + hit + 2);
        tr.steps.push_back(cur);
    }
    tr.final = canonicalize(cur.letters);
    return tr;
}

CatalanClass catalan_class(const Word& w) {
    if (!is_partition_word(w))
        throw config_error("catalan_class requires a partition word, got '" + w.str() + "'");
    if (w.empty()) return CatalanClass::empty_word;
    return reduce(w).final.empty() ? CatalanClass::catalan : CatalanClass::non_catalan;
}

bool is_catalan(const Word& w) { return catalan_class(w) == CatalanClass::catalan; }

long long catalan_count(int k) {
    if (k < 0) throw config_error("catalan_count needs k >= 0");
    if (k > 33) throw overflow_error("catalan_count exceeds 64 bits beyond k=33");
    long long c = 1;
    for (int j = 0; j < k; ++j) c = c * 2 * (2 * j + 1) / (j + 2);
    return c;
}

ReducedClass classify_reduced(const Word& w) {
    if (w.empty()) return Case0{};
    if (!is_canonical(w)) throw config_error("classify_reduced requires a canonical word");
    std::map<int, std::vector<int>> occ;  // letter -> positions (0-based)
    for (std::size_t i = 0; i < w.size(); ++i) {
        occ[w.letters[i]].push_back(static_cast<int>(i));
        if (i + 1 < w.size() && w.letters[i] == w.letters[i + 1])
            throw config_error("classify_reduced input not reduced: '" + w.str() + "'");
    }
    for (auto& [l, pos] : occ)
        if (pos.size() != 2)
            throw config_error("classify_reduced requires each letter exactly twice, got '" +
                               w.str() + "'");

    // a = letter of the last first-occurrence position
    int p = -1, a = 0;
    for (auto& [l, pos] : occ) {
        if (pos[0] > p) {
            p = pos[0];
            a = l;
        }
    }
    int q = occ[a][1];
    int len = static_cast<int>(w.size());
    int b = w.letters[p + 1];

    auto slice = [&](int lo, int hi) {  // [lo, hi) of 0-based positions
        Word s;
        if (lo < hi) s.letters.assign(w.letters.begin() + lo, w.letters.begin() + hi);
        return s;
    };
    Word w1 = slice(0, p);
    auto in_w1 = [&](int letter) {
        return std::find(w1.letters.begin(), w1.letters.end(), letter) != w1.letters.end();
    };
    if (!in_w1(b))
        throw config_error("classify_reduced: letter after the tail letter is new in '" + w.str() +
                           "'; input is not the reduction of a partition word");

    if (q == len - 1) {
        return Case1{w1, a, b, slice(p + 2, q)};
    }
    int c = w.letters[q + 1];
    if (!in_w1(c))
        throw config_error("classify_reduced: letter after the second tail letter is new in '" +
                           w.str() + "'");
    return Case2{w1, a, b, slice(p + 2, q), c, slice(q + 2, len)};
}

}  // namespace patmat
