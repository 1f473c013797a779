#pragma once

// Suffix automaton over {a,b}. Each state is a right-extension class of
// factors covering the length interval (len(link), len]; together the
// (state, length) pairs enumerate every distinct non-empty factor exactly
// once, which is what the fast spectrum path walks.

#include <array>
#include <cstddef>
#include <vector>

#include "words/word.hpp"

namespace words {

class SuffixAutomaton {
public:
    struct State {
        int len = 0;        // longest factor in the class
        int link = -1;      // suffix link
        int first_end = 0;  // 1-based end position of the earliest occurrence
        std::array<int, 2> next{-1, -1};
    };

    explicit SuffixAutomaton(const Word& w) {
        states_.reserve(2 * w.size() + 2);
        states_.emplace_back();
        for (std::size_t i = 0; i < w.size(); ++i)
            extend(w[i] == 'b' ? 1 : 0, static_cast<int>(i) + 1);
    }

    const std::vector<State>& states() const noexcept { return states_; }

    // shortest factor length represented by state s (s != root)
    int min_len(std::size_t s) const { return states_[static_cast<std::size_t>(states_[s].link)].len + 1; }

private:
    void extend(int c, int end_pos) {
        const int cur = static_cast<int>(states_.size());
        states_.emplace_back();
        states_[cur].len = states_[last_].len + 1;
        states_[cur].first_end = end_pos;
        int p = last_;
        while (p != -1 && states_[p].next[c] == -1) {
            states_[p].next[c] = cur;
            p = states_[p].link;
        }
        if (p == -1) {
            states_[cur].link = 0;
        } else {
            const int q = states_[p].next[c];
            if (states_[p].len + 1 == states_[q].len) {
                states_[cur].link = q;
            } else {
                const int clone = static_cast<int>(states_.size());
                states_.push_back(states_[q]);  // keeps q's transitions and first_end
                states_[clone].len = states_[p].len + 1;
                while (p != -1 && states_[p].next[c] == q) {
                    states_[p].next[c] = clone;
                    p = states_[p].link;
                }
                states_[q].link = clone;
                states_[cur].link = clone;
            }
        }
        last_ = cur;
    }

    std::vector<State> states_;
    int last_ = 0;
};

}  // namespace words
