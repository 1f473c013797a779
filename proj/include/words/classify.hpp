#pragma once

// Word-class predicates: balanced, Lyndon, unbordered, trapezoidal,
// Christoffel by three independent routes, conjugate-of-Christoffel.

#include <stdexcept>
#include <vector>

#include "words/christoffel.hpp"
#include "words/spectrum.hpp"
#include "words/word.hpp"

namespace words {

// min and max a-count over the length-k windows differ by at most 1, every
// k; same condition as the pairwise |count_a(x) - count_a(y)| <= 1 over
// equal-length factors, checked against that form in the tests
inline bool is_balanced(const Word& w) {
    const int n = static_cast<int>(w.size());
    std::vector<int> pref(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 0; i < n; ++i) pref[i + 1] = pref[i] + (w[i] == 'a');
    for (int k = 1; k <= n; ++k) {
        int lo = k + 1, hi = -1;
        for (int t = 0; t + k <= n; ++t) {
            const int cnt = pref[t + k] - pref[t];
            lo = std::min(lo, cnt);
            hi = std::max(hi, cnt);
        }
        if (hi - lo > 1) return false;
    }
    return true;
}

// finite Sturmian words are the factors of Christoffel words; those are
// exactly the balanced binary words
inline bool is_sturmian_finite(const Word& w) { return is_balanced(w); }

// strictly smaller than every proper non-empty suffix
inline bool is_lyndon(const Word& w) {
    if (w.empty()) throw std::invalid_argument("is_lyndon: undefined on empty word");
    const std::string& s = w.str();
    for (std::size_t i = 1; i < s.size(); ++i)
        if (s.compare(i, std::string::npos, s) <= 0) return false;
    return true;
}

// no non-empty proper prefix equals a suffix
inline bool is_unbordered(const Word& w) {
    if (w.empty()) throw std::invalid_argument("is_unbordered: undefined on empty word");
    const std::string& s = w.str();
    for (std::size_t k = 1; k < s.size(); ++k)
        if (s.compare(0, k, s, s.size() - k, k) == 0) return false;
    return true;
}

// at most k+1 distinct factors of every length k
inline bool is_trapezoidal(const Word& w) {
    const ComplexityProfile c = complexity_profile(w);
    for (std::size_t k = 0; k < c.size(); ++k)
        if (c[k] > static_cast<std::int64_t>(k) + 1) return false;
    return true;
}

// route 2: balanced + Lyndon detects the lower form; the upper form is
// Lyndon after the letter exchange
inline bool is_christoffel_by_lyndon(const Word& w) {
    if (w.empty()) throw std::invalid_argument("is_christoffel_by_lyndon: undefined on empty word");
    return is_balanced(w) && (is_lyndon(w) || is_lyndon(exchanged(w)));
}

// route 3: balanced + unbordered
inline bool is_christoffel_by_border(const Word& w) {
    if (w.empty()) throw std::invalid_argument("is_christoffel_by_border: undefined on empty word");
    return is_balanced(w) && is_unbordered(w);
}

inline bool is_conjugate_of_christoffel(const Word& u) {
    if (u.empty()) throw std::invalid_argument("is_conjugate_of_christoffel: undefined on empty word");
    for (const Word& c : conjugates(u))
        if (is_christoffel(c)) return true;
    return false;
}

struct ClassificationReport {
    Word word;
    bool balanced = false;
    bool lyndon = false;
    bool unbordered = false;
    bool primitive = false;
    bool trapezoidal = false;
    bool christoffel = false;
    bool conjugate_of_christoffel = false;
};

// fills every predicate and insists the three Christoffel routes agree
inline ClassificationReport classify(const Word& w) {
    if (w.empty()) throw std::invalid_argument("classify: undefined on empty word");
    ClassificationReport r;
    r.word = w;
    r.balanced = is_balanced(w);
    r.lyndon = is_lyndon(w);
    r.unbordered = is_unbordered(w);
    r.primitive = is_primitive(w);
    r.trapezoidal = is_trapezoidal(w);
    r.christoffel = is_christoffel(w);
    r.conjugate_of_christoffel = is_conjugate_of_christoffel(w);
    const bool by_lyndon = r.balanced && (r.lyndon || is_lyndon(exchanged(w)));
    const bool by_border = r.balanced && r.unbordered;
    if (r.christoffel != by_lyndon || r.christoffel != by_border)
        throw std::logic_error("Christoffel detection routes disagree on " + w.str());
    return r;
}

}  // namespace words
