#pragma once

// Exhaustive parameter spaces for the verification sweeps. Words stream in
// length-then-lexicographic order so counterexample reports are stable.

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "words/word.hpp"

namespace words {

// every word of the given length, lexicographic order
template <typename F>
void for_each_word(int length, F&& f) {
    std::string s(static_cast<std::size_t>(length), 'a');
    const std::uint64_t count = std::uint64_t{1} << length;
    for (std::uint64_t bits = 0; bits < count; ++bits) {
        for (int i = 0; i < length; ++i)
            s[static_cast<std::size_t>(i)] = ((bits >> (length - 1 - i)) & 1) ? 'b' : 'a';
        f(Word(s));
    }
}

// coprime (p,q) with 1 <= p+q <= max_sum, ordered by sum then by p
inline std::vector<ParikhVector> coprime_pairs(int max_sum) {
    std::vector<ParikhVector> out;
    for (int s = 1; s <= max_sum; ++s)
        for (int p = 0; p <= s; ++p)
            if (std::gcd(p, s - p) == 1) out.push_back({p, s - p});
    return out;
}

}  // namespace words
