#pragma once

// Binary words over the ordered alphabet {a,b} and the exact, brute-force
// primitives every other header treats as ground truth.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace words {

class Word {
public:
    Word() = default;

    explicit Word(std::string_view letters) : s_(letters) {
        for (char c : s_)
            if (c != 'a' && c != 'b')
                throw std::invalid_argument("word may contain only letters 'a' and 'b'");
    }

    static bool valid(std::string_view letters) {
        return std::all_of(letters.begin(), letters.end(),
                           [](char c) { return c == 'a' || c == 'b'; });
    }

    std::size_t size() const noexcept { return s_.size(); }
    bool empty() const noexcept { return s_.empty(); }
    char operator[](std::size_t i) const { return s_[i]; }
    const std::string& str() const noexcept { return s_; }

    auto begin() const noexcept { return s_.begin(); }
    auto end() const noexcept { return s_.end(); }

    Word substr(std::size_t pos, std::size_t len) const {
        Word out;
        out.s_ = s_.substr(pos, len);
        return out;
    }

    friend auto operator<=>(const Word&, const Word&) = default;

private:
    std::string s_;
};

inline std::ostream& operator<<(std::ostream& os, const Word& w) { return os << w.str(); }

struct ParikhVector {
    int a = 0;
    int b = 0;

    friend auto operator<=>(const ParikhVector&, const ParikhVector&) = default;
    friend ParikhVector operator+(ParikhVector l, ParikhVector r) { return {l.a + r.a, l.b + r.b}; }
};

inline ParikhVector parikh(const Word& w) {
    int a = 0;
    for (char c : w) a += (c == 'a');
    return {a, static_cast<int>(w.size()) - a};
}

inline Word reversal(const Word& w) {
    return Word(std::string(w.str().rbegin(), w.str().rend()));
}

// letter exchange a <-> b
inline Word exchanged(const Word& w) {
    std::string s = w.str();
    for (char& c : s) c = (c == 'a') ? 'b' : 'a';
    return Word(s);
}

// the |w| rotations by shift 0..n-1, duplicates retained; [epsilon] for epsilon
inline std::vector<Word> conjugates(const Word& w) {
    if (w.empty()) return {Word()};
    std::vector<Word> out;
    out.reserve(w.size());
    const std::string& s = w.str();
    for (std::size_t r = 0; r < s.size(); ++r)
        out.push_back(Word(s.substr(r) + s.substr(0, r)));
    return out;
}

inline bool is_palindrome(const Word& w) {
    const std::string& s = w.str();
    return std::equal(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(s.size() / 2), s.rbegin());
}

// all p in 1..n with w[i] = w[i+p] wherever both sides exist, ascending;
// n itself always qualifies
inline std::vector<int> periods(const Word& w) {
    if (w.empty()) throw std::invalid_argument("periods: undefined on empty word");
    const int n = static_cast<int>(w.size());
    std::vector<int> out;
    for (int p = 1; p <= n; ++p) {
        bool ok = true;
        for (int i = 0; i + p < n; ++i)
            if (w[i] != w[i + p]) {
                ok = false;
                break;
            }
        if (ok) out.push_back(p);
    }
    return out;
}

// no x and k >= 2 with w = x^k; equivalently the smallest period does not
// properly divide |w|
inline bool is_primitive(const Word& w) {
    if (w.empty()) throw std::invalid_argument("is_primitive: undefined on empty word");
    const int n = static_cast<int>(w.size());
    const int shortest = periods(w).front();
    return !(shortest < n && n % shortest == 0);
}

inline Word power(const Word& u, int k) {
    if (u.empty()) throw std::invalid_argument("power: empty base word");
    if (k < 1) throw std::invalid_argument("power: exponent must be at least 1");
    std::string s;
    s.reserve(u.size() * static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) s += u.str();
    return Word(s);
}

// every distinct contiguous subword, epsilon and w included; the oracle all
// counting paths are checked against
inline std::set<Word> factor_set(const Word& w) {
    std::set<Word> out;
    out.insert(Word());
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t len = 1; i + len <= w.size(); ++len)
            out.insert(w.substr(i, len));
    return out;
}

// distinct length-k windows of u·u starting at positions 1..|u|
inline std::set<Word> circular_factor_set(const Word& u, int k) {
    if (k < 0 || k > static_cast<int>(u.size()))
        throw std::invalid_argument("circular_factor_set: k out of range");
    std::set<Word> out;
    if (k == 0) {
        out.insert(Word());
        return out;
    }
    const Word doubled = Word(u.str() + u.str());
    for (std::size_t t = 0; t < u.size(); ++t)
        out.insert(doubled.substr(t, static_cast<std::size_t>(k)));
    return out;
}

// the same set built from the rotations themselves; kept as the cross-check
// construction for circular_factor_set
inline std::set<Word> circular_factor_set_via_conjugates(const Word& u, int k) {
    if (k < 0 || k > static_cast<int>(u.size()))
        throw std::invalid_argument("circular_factor_set: k out of range");
    std::set<Word> out;
    if (k == 0) {
        out.insert(Word());
        return out;
    }
    for (const Word& c : conjugates(u))
        for (std::size_t t = 0; t + static_cast<std::size_t>(k) <= c.size(); ++t)
            out.insert(c.substr(t, static_cast<std::size_t>(k)));
    return out;
}

}  // namespace words

template <>
struct std::hash<words::Word> {
    std::size_t operator()(const words::Word& w) const noexcept {
        return std::hash<std::string>{}(w.str());
    }
};
