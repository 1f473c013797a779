#pragma once

// The Parikh factor spectrum delta_w : (i,j) -> number of distinct factors
// with i letters a and j letters b, plus the derived length profile, the
// support, and the symmetry predicates. delta_naive is the auditable
// oracle; delta_fast walks a suffix automaton and must agree with it.

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "words/suffix_automaton.hpp"
#include "words/word.hpp"

namespace words {

struct FactorSpectrum {
    ParikhVector total;
    // sorted by Parikh vector, keys unique, values positive
    std::vector<std::pair<ParikhVector, std::int64_t>> counts;

    std::int64_t at(ParikhVector v) const {
        auto it = std::lower_bound(
            counts.begin(), counts.end(), v,
            [](const auto& entry, ParikhVector key) { return entry.first < key; });
        return (it != counts.end() && it->first == v) ? it->second : 0;
    }

    friend bool operator==(const FactorSpectrum&, const FactorSpectrum&) = default;
};

using SupportSet = std::vector<ParikhVector>;       // sorted, unique
using ComplexityProfile = std::vector<std::int64_t>;  // c(0) .. c(n)

// group the brute-force factor set by Parikh vector
inline FactorSpectrum delta_naive(const Word& w) {
    std::map<ParikhVector, std::int64_t> acc;
    for (const Word& f : factor_set(w)) ++acc[parikh(f)];
    FactorSpectrum out;
    out.total = parikh(w);
    out.counts.assign(acc.begin(), acc.end());
    return out;
}

// same spectrum from the suffix automaton: each (state, length) pair is one
// distinct factor, and its Parikh vector is resolved from any end position
// (all occurrences of a factor share one Parikh vector) via a prefix-sum
// table of a-counts
inline FactorSpectrum delta_fast(const Word& w) {
    const int n = static_cast<int>(w.size());
    const ParikhVector total = parikh(w);
    const std::size_t cols = static_cast<std::size_t>(total.b) + 1;
    std::vector<std::int64_t> grid((static_cast<std::size_t>(total.a) + 1) * cols, 0);
    const auto cell = [&](int i, int j) -> std::int64_t& {
        return grid[static_cast<std::size_t>(i) * cols + static_cast<std::size_t>(j)];
    };

    std::vector<int> pref_a(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 0; i < n; ++i) pref_a[i + 1] = pref_a[i] + (w[i] == 'a');

    cell(0, 0) = 1;  // the empty factor
    if (n > 0) {
        const SuffixAutomaton sam(w);
        const auto& st = sam.states();
        for (std::size_t s = 1; s < st.size(); ++s) {
            const int end = st[s].first_end;
            for (int len = sam.min_len(s); len <= st[s].len; ++len) {
                const int i = pref_a[end] - pref_a[end - len];
                cell(i, len - i) += 1;
            }
        }
    }

    FactorSpectrum out;
    out.total = total;
    for (int i = 0; i <= total.a; ++i)
        for (int j = 0; j <= total.b; ++j)
            if (cell(i, j) != 0) out.counts.push_back({{i, j}, cell(i, j)});
    return out;
}

// c(k) = sum of delta over the antidiagonal i + j = k
inline ComplexityProfile complexity_profile(const FactorSpectrum& s) {
    ComplexityProfile c(static_cast<std::size_t>(s.total.a + s.total.b) + 1, 0);
    for (const auto& [v, cnt] : s.counts) c[static_cast<std::size_t>(v.a + v.b)] += cnt;
    return c;
}

inline ComplexityProfile complexity_profile(const Word& w) {
    return complexity_profile(delta_fast(w));
}

inline bool is_strongly_factor_symmetric(const FactorSpectrum& s) {
    for (const auto& [v, cnt] : s.counts)
        if (s.at({s.total.a - v.a, s.total.b - v.b}) != cnt) return false;
    return true;
}

inline bool is_strongly_factor_symmetric(const Word& w) {
    return is_strongly_factor_symmetric(delta_fast(w));
}

inline bool is_factor_symmetric(const ComplexityProfile& c) {
    return std::equal(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(c.size() / 2), c.rbegin());
}

inline bool is_factor_symmetric(const Word& w) {
    return is_factor_symmetric(complexity_profile(w));
}

inline SupportSet support(const FactorSpectrum& s) {
    SupportSet out;
    out.reserve(s.counts.size());
    for (const auto& [v, cnt] : s.counts) out.push_back(v);
    return out;
}

inline SupportSet support(const Word& w) { return support(delta_fast(w)); }

inline bool is_support_symmetric(const FactorSpectrum& s) {
    for (const auto& [v, cnt] : s.counts)
        if (s.at({s.total.a - v.a, s.total.b - v.b}) == 0) return false;
    return true;
}

inline bool is_support_symmetric(const Word& w) {
    return is_support_symmetric(delta_fast(w));
}

// true when the support meets the antidiagonal i + j = p in exactly one
// point; coincides with p being a period of w
inline bool period_antidiagonal_check(const Word& w, int p) {
    const int n = static_cast<int>(w.size());
    if (p < 1 || p > n - 1) throw std::invalid_argument("period_antidiagonal_check: p out of range");
    int hits = 0;
    for (const auto& [v, cnt] : delta_fast(w).counts) hits += (v.a + v.b == p);
    return hits == 1;
}

// factor array as text: one line per row j = q .. 0, entries i = 0..p
inline std::string to_grid(const FactorSpectrum& s) {
    std::string out;
    for (int j = s.total.b; j >= 0; --j) {
        for (int i = 0; i <= s.total.a; ++i) {
            if (i) out += ' ';
            out += std::to_string(s.at({i, j}));
        }
        out += '\n';
    }
    return out;
}

}  // namespace words
