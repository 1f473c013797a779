#pragma once

// Christoffel word generation, the palindromic cut, and the lattice-path
// reading (a = east step, b = north step).

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "words/spectrum.hpp"
#include "words/word.hpp"

namespace words {

// lower Christoffel word with p letters a and q letters b: letter t is 'a'
// exactly when t*q mod (p+q) grows over (t-1)*q mod (p+q), i.e. no wrap
// happened at step t
inline Word generate_lower(int p, int q) {
    if (p < 0 || q < 0 || p + q < 1 || std::gcd(p, q) != 1)
        throw std::invalid_argument("generate_lower: non-coprime Parikh vector");
    const int n = p + q;
    if (n == 1) return Word(p == 1 ? "a" : "b");
    std::string s;
    s.reserve(static_cast<std::size_t>(n));
    for (int t = 1; t <= n; ++t) {
        const long long cur = static_cast<long long>(t) * q % n;
        const long long prev = static_cast<long long>(t - 1) * q % n;
        s += (cur > prev) ? 'a' : 'b';
    }
    return Word(s);
}

inline Word generate_upper(int p, int q) {
    if (p < 0 || q < 0 || p + q < 1 || std::gcd(p, q) != 1)
        throw std::invalid_argument("generate_upper: non-coprime Parikh vector");
    return reversal(generate_lower(p, q));
}

// single letters count; otherwise w must be the lower or upper word of its
// own (coprime) Parikh vector
inline bool is_christoffel(const Word& w) {
    if (w.empty()) throw std::invalid_argument("is_christoffel: undefined on empty word");
    if (w.size() == 1) return true;
    const ParikhVector pv = parikh(w);
    if (std::gcd(pv.a, pv.b) != 1) return false;
    const Word lower = generate_lower(pv.a, pv.b);
    return w == lower || w == reversal(lower);
}

struct PalindromicCut {
    Word word;
    int cut = 0;  // letters in the left part
    Word left;
    Word right;
};

// the unique split w = u·v into two non-empty palindromes, found by
// scanning every cut and insisting exactly one works
inline PalindromicCut palindromic_factorization(const Word& w) {
    if (w.size() < 2 || !is_christoffel(w))
        throw std::invalid_argument("palindromic cut undefined");
    const int n = static_cast<int>(w.size());
    PalindromicCut out;
    int found = 0;
    for (int c = 1; c <= n - 1; ++c) {
        Word u = w.substr(0, static_cast<std::size_t>(c));
        Word v = w.substr(static_cast<std::size_t>(c), static_cast<std::size_t>(n - c));
        if (is_palindrome(u) && is_palindrome(v)) {
            ++found;
            out = PalindromicCut{w, c, std::move(u), std::move(v)};
        }
    }
    if (found != 1)
        throw std::logic_error("palindromic factorization not unique for " + w.str());
    return out;
}

using LatticePath = std::vector<ParikhVector>;

// the |w|+1 lattice points visited from the origin
inline LatticePath path(const Word& w) {
    LatticePath pts;
    pts.reserve(w.size() + 1);
    ParikhVector at{0, 0};
    pts.push_back(at);
    for (char c : w) {
        (c == 'a') ? ++at.a : ++at.b;
        pts.push_back(at);
    }
    return pts;
}

// lattice points on the paths of w and of its reversal; for a Christoffel
// word this is exactly the support of the spectrum
inline SupportSet predicted_support(const Word& w) {
    if (!is_christoffel(w)) throw std::invalid_argument("predicted_support: non-Christoffel input");
    SupportSet pts;
    pts.reserve(2 * w.size() + 2);
    for (const ParikhVector& pt : path(w)) pts.push_back(pt);
    for (const ParikhVector& pt : path(reversal(w))) pts.push_back(pt);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

}  // namespace words
