#pragma once

// String attractors: every distinct factor must have an occurrence crossing
// one of the chosen positions. Circular attractors ask the same of the
// circular factors, with windows of w·w mapped back onto positions 1..n.

#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "words/christoffel.hpp"
#include "words/word.hpp"

namespace words {

using PositionSet = std::set<int>;  // 1-based letter positions

namespace detail {

inline void check_attractor_args(const Word& w, const PositionSet& k, const char* who) {
    if (w.empty()) throw std::invalid_argument(std::string(who) + ": undefined on empty word");
    for (int pos : k)
        if (pos < 1 || pos > static_cast<int>(w.size()))
            throw std::invalid_argument(std::string(who) + ": position out of range");
}

// bit p-1 set when some occurrence of the factor contains position p;
// one mask per distinct non-empty factor (words up to 24 letters)
inline std::vector<std::uint32_t> coverage_masks(const std::string& s) {
    const int n = static_cast<int>(s.size());
    std::unordered_map<std::string_view, std::uint32_t> mask;
    for (int t = 0; t < n; ++t)
        for (int e = t; e < n; ++e)
            mask[std::string_view(s).substr(static_cast<std::size_t>(t), static_cast<std::size_t>(e - t + 1))] |=
                (1u << (e + 1)) - (1u << t);
    std::vector<std::uint32_t> need;
    need.reserve(mask.size());
    for (const auto& [f, m] : mask) need.push_back(m);
    std::sort(need.begin(), need.end());
    need.erase(std::unique(need.begin(), need.end()), need.end());
    return need;
}

// circular variant: windows of s·s of length <= n starting in the first
// copy, window positions folded mod n
inline std::vector<std::uint32_t> circular_coverage_masks(const std::string& s) {
    const int n = static_cast<int>(s.size());
    const std::string doubled = s + s;
    std::unordered_map<std::string_view, std::uint32_t> mask;
    for (int t = 0; t < n; ++t)
        for (int len = 1; len <= n; ++len) {
            std::uint32_t m = 0;
            for (int i = t; i < t + len; ++i) m |= 1u << (i % n);
            mask[std::string_view(doubled).substr(static_cast<std::size_t>(t), static_cast<std::size_t>(len))] |= m;
        }
    std::vector<std::uint32_t> need;
    need.reserve(mask.size());
    for (const auto& [f, m] : mask) need.push_back(m);
    std::sort(need.begin(), need.end());
    need.erase(std::unique(need.begin(), need.end()), need.end());
    return need;
}

// subsets in size order, lexicographic within a size; first hit wins
inline PositionSet smallest_covering_set(int n, const std::vector<std::uint32_t>& need) {
    for (int size = 1; size <= n; ++size) {
        std::vector<int> comb(static_cast<std::size_t>(size));
        std::iota(comb.begin(), comb.end(), 1);
        while (true) {
            std::uint32_t chosen = 0;
            for (int pos : comb) chosen |= 1u << (pos - 1);
            bool ok = true;
            for (std::uint32_t m : need)
                if (!(m & chosen)) {
                    ok = false;
                    break;
                }
            if (ok) return PositionSet(comb.begin(), comb.end());
            int i = size - 1;
            while (i >= 0 && comb[static_cast<std::size_t>(i)] == n - (size - 1 - i)) --i;
            if (i < 0) break;
            ++comb[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < size; ++j)
                comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return PositionSet{};  // unreachable: {1..n} always covers
}

}  // namespace detail

// every distinct non-empty factor has an occurrence whose window contains a
// position of k
inline bool is_attractor(const Word& w, const PositionSet& k) {
    detail::check_attractor_args(w, k, "is_attractor");
    const std::string& s = w.str();
    const int n = static_cast<int>(s.size());
    const std::vector<int> ks(k.begin(), k.end());
    std::unordered_set<std::string_view> all, covered;
    for (int t = 0; t < n; ++t)
        for (int e = t; e < n; ++e) {
            const std::string_view f =
                std::string_view(s).substr(static_cast<std::size_t>(t), static_cast<std::size_t>(e - t + 1));
            all.insert(f);
            const auto it = std::lower_bound(ks.begin(), ks.end(), t + 1);
            if (it != ks.end() && *it <= e + 1) covered.insert(f);
        }
    return covered.size() == all.size();
}

// every distinct circular factor has a circular occurrence meeting k; an
// occurrence is a window of w·w of length <= n starting in 1..n, its
// positions taken mod n back into 1..n
inline bool is_circular_attractor(const Word& w, const PositionSet& k) {
    detail::check_attractor_args(w, k, "is_circular_attractor");
    const int n = static_cast<int>(w.size());
    const std::string doubled = w.str() + w.str();
    std::map<std::string_view, bool> hit;
    for (int t = 0; t < n; ++t)
        for (int len = 1; len <= n; ++len) {
            const std::string_view f =
                std::string_view(doubled).substr(static_cast<std::size_t>(t), static_cast<std::size_t>(len));
            bool meets = false;
            for (int pos : k)
                if ((pos > t && pos <= t + len) || (pos + n > t && pos + n <= t + len)) {
                    meets = true;
                    break;
                }
            auto [it, inserted] = hit.try_emplace(f, meets);
            if (!inserted) it->second = it->second || meets;
        }
    for (const auto& [f, meets] : hit)
        if (!meets) return false;
    return true;
}

inline constexpr int kMinimumAttractorMaxLength = 24;

// smallest attractor; ties broken by the lexicographically least position
// set, matching the subset enumeration order
inline PositionSet minimum_attractor(const Word& w) {
    const int n = static_cast<int>(w.size());
    if (n < 1 || n > kMinimumAttractorMaxLength)
        throw std::invalid_argument("minimum_attractor: search bound exceeded");
    return detail::smallest_covering_set(n, detail::coverage_masks(w.str()));
}

inline PositionSet minimum_circular_attractor(const Word& w) {
    const int n = static_cast<int>(w.size());
    if (n < 1 || n > kMinimumAttractorMaxLength)
        throw std::invalid_argument("minimum_circular_attractor: search bound exceeded");
    return detail::smallest_covering_set(n, detail::circular_coverage_masks(w.str()));
}

// the two letters adjacent to the palindromic cut; an attractor for every
// Christoffel word, which the sweeps verify
inline PositionSet cut_attractor(const Word& w) {
    const PalindromicCut pc = palindromic_factorization(w);
    return PositionSet{pc.cut, pc.cut + 1};
}

}  // namespace words
