#pragma once

// The cut bijection of Christoffel words: length-k factors crossing the
// palindromic cut, read left to right, pair off with the length-(n-k)
// factors crossing it read right to left, and the pairs are Parikh
// complements. Also the suffix-by-prefix product decomposition of the
// factor set that the bijection rests on.

#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "words/christoffel.hpp"
#include "words/word.hpp"

namespace words {

enum class CrossingOrder { left_to_right, right_to_left };

// factors of length k with an occurrence window [t, t+k-1] (1-based)
// touching position cut or cut+1; each factor listed once, at its first
// window in the requested direction
inline std::vector<Word> crossing_factors(const Word& w, int cut, int k, CrossingOrder order) {
    const int n = static_cast<int>(w.size());
    if (cut < 1 || cut > n - 1) throw std::invalid_argument("crossing_factors: cut out of range");
    if (k < 1 || k > n) throw std::invalid_argument("crossing_factors: k out of range");
    const int t_lo = std::max(1, cut - k + 1);
    const int t_hi = std::min(n - k + 1, cut + 1);
    std::vector<Word> out;
    std::set<Word> seen;
    const auto visit = [&](int t) {
        Word f = w.substr(static_cast<std::size_t>(t - 1), static_cast<std::size_t>(k));
        if (seen.insert(f).second) out.push_back(std::move(f));
    };
    if (order == CrossingOrder::left_to_right)
        for (int t = t_lo; t <= t_hi; ++t) visit(t);
    else
        for (int t = t_hi; t >= t_lo; --t) visit(t);
    return out;
}

struct BijectionTable {
    Word word;
    int k = 0;
    int cut = 0;  // 0 only for single-letter words
    std::vector<std::pair<Word, Word>> pairs;
};

// k = 0 and k = n are the trivial pair (epsilon, w) / (w, epsilon); the
// construction itself checks the Parikh-complement claim and that both
// sides have the same count
inline BijectionTable bijection_table(const Word& w, int k) {
    if (!is_christoffel(w)) throw std::invalid_argument("bijection_table: non-Christoffel input");
    const int n = static_cast<int>(w.size());
    if (k < 0 || k > n) throw std::invalid_argument("bijection_table: k out of range");
    BijectionTable table;
    table.word = w;
    table.k = k;
    if (n >= 2) table.cut = palindromic_factorization(w).cut;
    if (k == 0) {
        table.pairs = {{Word(), w}};
        return table;
    }
    if (k == n) {
        table.pairs = {{w, Word()}};
        return table;
    }
    const auto f = crossing_factors(w, table.cut, k, CrossingOrder::left_to_right);
    const auto g = crossing_factors(w, table.cut, n - k, CrossingOrder::right_to_left);
    if (f.size() != g.size())
        throw std::logic_error("cut bijection: side counts differ for " + w.str());
    const ParikhVector whole = parikh(w);
    table.pairs.reserve(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (parikh(f[i]) + parikh(g[i]) != whole)
            throw std::logic_error("cut bijection: Parikh complement violated for " + w.str());
        table.pairs.emplace_back(f[i], g[i]);
    }
    return table;
}

// { s·t : s suffix of u, t prefix of v } for the palindromic cut u·v;
// asserts the product is unambiguous and reproduces the factor set
inline std::set<Word> suffix_prefix_product(const Word& w) {
    const PalindromicCut pc = palindromic_factorization(w);
    const std::string& u = pc.left.str();
    const std::string& v = pc.right.str();
    std::set<Word> out;
    for (std::size_t i = 0; i <= u.size(); ++i)
        for (std::size_t j = 0; j <= v.size(); ++j)
            out.insert(Word(u.substr(i) + v.substr(0, j)));
    if (out.size() != (u.size() + 1) * (v.size() + 1))
        throw std::logic_error("suffix-prefix product ambiguous for " + w.str());
    if (out != factor_set(w))
        throw std::logic_error("suffix-prefix product does not cover the factors of " + w.str());
    return out;
}

}  // namespace words
