#pragma once

// Exhaustive verification sweeps. Each one enumerates its whole parameter
// space up to a bound, evaluates the executable form of one claim, and
// reports counterexamples — the expected count is zero everywhere.

#include <chrono>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "words/attractor.hpp"
#include "words/bijection.hpp"
#include "words/christoffel.hpp"
#include "words/classify.hpp"
#include "words/enumerate.hpp"
#include "words/spectrum.hpp"
#include "words/word.hpp"

namespace words {

struct VerificationRun {
    std::string theorem;
    int bound = 0;
    int max_power = 0;  // only the power sweeps set this
    std::uint64_t checked_count = 0;
    std::vector<Word> counterexamples;
    double elapsed_seconds = 0.0;

    bool passed() const { return counterexamples.empty(); }

    friend bool operator==(const VerificationRun& l, const VerificationRun& r) {
        return l.theorem == r.theorem && l.bound == r.bound && l.max_power == r.max_power &&
               l.checked_count == r.checked_count && l.counterexamples == r.counterexamples;
    }
};

namespace detail {

struct Stopwatch {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

// full check of one word's bijection tables: equal side counts, distinct
// sides, Parikh complements, and coverage of all factors of both lengths
inline bool cut_bijection_holds(const Word& w) {
    const int n = static_cast<int>(w.size());
    std::map<int, std::set<Word>> by_len;
    for (const Word& f : factor_set(w)) by_len[static_cast<int>(f.size())].insert(f);
    const ParikhVector whole = parikh(w);
    for (int k = 0; k <= n; ++k) {
        BijectionTable table;
        try {
            table = bijection_table(w, k);
        } catch (const std::logic_error&) {
            return false;
        }
        std::set<Word> fs, gs;
        for (const auto& [f, g] : table.pairs) {
            if (parikh(f) + parikh(g) != whole) return false;
            fs.insert(f);
            gs.insert(g);
        }
        if (fs.size() != table.pairs.size() || gs.size() != table.pairs.size()) return false;
        if (fs != by_len[k] || gs != by_len[n - k]) return false;
    }
    return true;
}

}  // namespace detail

// T1: every Christoffel word, both forms, is strongly factor-symmetric
inline VerificationRun verify_christoffel_strong_symmetry(int max_sum) {
    VerificationRun run;
    run.theorem = "T1";
    run.bound = max_sum;
    const detail::Stopwatch timer;
    for (const ParikhVector pv : coprime_pairs(max_sum))
        for (const Word& w : {generate_lower(pv.a, pv.b), generate_upper(pv.a, pv.b)}) {
            ++run.checked_count;
            if (!is_strongly_factor_symmetric(w)) run.counterexamples.push_back(w);
        }
    run.elapsed_seconds = timer.seconds();
    return run;
}

// T2: a primitive balanced word with symmetric support is Christoffel
inline VerificationRun verify_symmetric_support_implies_christoffel(int max_length) {
    VerificationRun run;
    run.theorem = "T2";
    run.bound = max_length;
    const detail::Stopwatch timer;
    for (int n = 1; n <= max_length; ++n)
        for_each_word(n, [&](const Word& w) {
            ++run.checked_count;
            if (!is_balanced(w) || !is_primitive(w)) return;
            if (!is_support_symmetric(w)) return;
            if (!is_christoffel(w)) run.counterexamples.push_back(w);
        });
    run.elapsed_seconds = timer.seconds();
    return run;
}

// T3: u^k (u primitive, k >= 2) is strongly factor-symmetric exactly when
// u is a Christoffel word
inline VerificationRun verify_power_strong_symmetry(int max_root_length, int max_power = 3) {
    VerificationRun run;
    run.theorem = "T3";
    run.bound = max_root_length;
    run.max_power = max_power;
    const detail::Stopwatch timer;
    for (int n = 1; n <= max_root_length; ++n)
        for_each_word(n, [&](const Word& u) {
            if (!is_primitive(u)) return;
            const bool christoffel = is_christoffel(u);
            for (int k = 2; k <= max_power; ++k) {
                ++run.checked_count;
                if (is_strongly_factor_symmetric(power(u, k)) != christoffel)
                    run.counterexamples.push_back(power(u, k));
            }
        });
    run.elapsed_seconds = timer.seconds();
    return run;
}

// T4: the cut bijection works for every Christoffel word and every k
inline VerificationRun verify_cut_bijection(int max_sum) {
    VerificationRun run;
    run.theorem = "T4";
    run.bound = max_sum;
    const detail::Stopwatch timer;
    for (const ParikhVector pv : coprime_pairs(max_sum))
        for (const Word& w : {generate_lower(pv.a, pv.b), generate_upper(pv.a, pv.b)}) {
            ++run.checked_count;
            if (!detail::cut_bijection_holds(w)) run.counterexamples.push_back(w);
        }
    run.elapsed_seconds = timer.seconds();
    return run;
}

// T5: the support of the spectrum is exactly the two lattice paths
inline VerificationRun verify_support_prediction(int max_sum) {
    VerificationRun run;
    run.theorem = "T5";
    run.bound = max_sum;
    const detail::Stopwatch timer;
    for (const ParikhVector pv : coprime_pairs(max_sum))
        for (const Word& w : {generate_lower(pv.a, pv.b), generate_upper(pv.a, pv.b)}) {
            ++run.checked_count;
            if (predicted_support(w) != support(w)) run.counterexamples.push_back(w);
        }
    run.elapsed_seconds = timer.seconds();
    return run;
}

// T6: u^k (u primitive, k >= 2) is factor-symmetric exactly when u is a
// conjugate of a Christoffel word
inline VerificationRun verify_power_factor_symmetry(int max_root_length, int max_power = 3) {
    VerificationRun run;
    run.theorem = "T6";
    run.bound = max_root_length;
    run.max_power = max_power;
    const detail::Stopwatch timer;
    for (int n = 1; n <= max_root_length; ++n)
        for_each_word(n, [&](const Word& u) {
            if (!is_primitive(u)) return;
            const bool conj = is_conjugate_of_christoffel(u);
            for (int k = 2; k <= max_power; ++k) {
                ++run.checked_count;
                if (is_factor_symmetric(power(u, k)) != conj)
                    run.counterexamples.push_back(power(u, k));
            }
        });
    run.elapsed_seconds = timer.seconds();
    return run;
}

// P-period: p < n is a period exactly when the support antidiagonal at
// level p is a singleton
inline VerificationRun verify_period_antidiagonal(int max_length) {
    VerificationRun run;
    run.theorem = "P-period";
    run.bound = max_length;
    const detail::Stopwatch timer;
    for (int n = 2; n <= max_length; ++n)
        for_each_word(n, [&](const Word& w) {
            ++run.checked_count;
            std::vector<int> level_hits(static_cast<std::size_t>(n) + 1, 0);
            for (const auto& [v, cnt] : delta_fast(w).counts) ++level_hits[static_cast<std::size_t>(v.a + v.b)];
            const std::vector<int> ps = periods(w);
            for (int p = 1; p <= n - 1; ++p) {
                const bool is_period = std::binary_search(ps.begin(), ps.end(), p);
                if ((level_hits[static_cast<std::size_t>(p)] == 1) != is_period) {
                    run.counterexamples.push_back(w);
                    return;
                }
            }
        });
    run.elapsed_seconds = timer.seconds();
    return run;
}

// P-product: the factor set is the unambiguous product of the suffixes of u
// by the prefixes of v, so it has (|u|+1)(|v|+1) elements
inline VerificationRun verify_suffix_prefix_product(int max_sum) {
    VerificationRun run;
    run.theorem = "P-product";
    run.bound = max_sum;
    const detail::Stopwatch timer;
    for (const ParikhVector pv : coprime_pairs(max_sum)) {
        if (pv.a + pv.b < 2) continue;
        for (const Word& w : {generate_lower(pv.a, pv.b), generate_upper(pv.a, pv.b)}) {
            ++run.checked_count;
            try {
                const std::set<Word> product = suffix_prefix_product(w);
                if (product.size() != factor_set(w).size()) run.counterexamples.push_back(w);
            } catch (const std::logic_error&) {
                run.counterexamples.push_back(w);
            }
        }
    }
    run.elapsed_seconds = timer.seconds();
    return run;
}

// P-attractor: the two cut positions attract every factor
inline VerificationRun verify_cut_attractor(int max_sum) {
    VerificationRun run;
    run.theorem = "P-attractor";
    run.bound = max_sum;
    const detail::Stopwatch timer;
    for (const ParikhVector pv : coprime_pairs(max_sum)) {
        if (pv.a + pv.b < 2) continue;
        for (const Word& w : {generate_lower(pv.a, pv.b), generate_upper(pv.a, pv.b)}) {
            ++run.checked_count;
            if (!is_attractor(w, cut_attractor(w))) run.counterexamples.push_back(w);
        }
    }
    run.elapsed_seconds = timer.seconds();
    return run;
}

struct TheoremInfo {
    std::string id;
    std::string description;
    int max_bound = 0;
    bool takes_power = false;
};

inline const std::vector<TheoremInfo>& theorem_catalog() {
    static const std::vector<TheoremInfo> catalog = {
        {"T1", "every Christoffel word is strongly factor-symmetric (bound: max p+q)", 24, false},
        {"T2", "primitive + balanced + symmetric support implies Christoffel (bound: max length)", 18, false},
        {"T3", "u^k strongly factor-symmetric iff u is Christoffel, u primitive (bound: max |u|)", 10, true},
        {"T4", "the cut bijection pairs length-k with length-(n-k) factors (bound: max p+q)", 18, false},
        {"T5", "spectrum support = lattice points of the two Christoffel paths (bound: max p+q)", 24, false},
        {"T6", "u^k factor-symmetric iff u is a conjugate of a Christoffel word (bound: max |u|)", 10, true},
        {"P-period", "p is a period iff the support antidiagonal at p is a singleton (bound: max length)", 14, false},
        {"P-product", "factors = unambiguous suffixes(u) x prefixes(v) product (bound: max p+q)", 18, false},
        {"P-attractor", "the palindromic cut positions form an attractor (bound: max p+q)", 18, false},
    };
    return catalog;
}

inline VerificationRun run_theorem(const std::string& id, int bound, int max_power = 3) {
    const TheoremInfo* info = nullptr;
    for (const TheoremInfo& t : theorem_catalog())
        if (t.id == id) info = &t;
    if (info == nullptr) throw std::invalid_argument("unknown theorem id: " + id);
    if (bound < 1 || bound > info->max_bound)
        throw std::invalid_argument(id + ": bound must be in 1.." + std::to_string(info->max_bound));
    if (info->takes_power && (max_power < 2 || max_power > 4))
        throw std::invalid_argument(id + ": max power must be in 2..4");
    if (id == "T1") return verify_christoffel_strong_symmetry(bound);
    if (id == "T2") return verify_symmetric_support_implies_christoffel(bound);
    if (id == "T3") return verify_power_strong_symmetry(bound, max_power);
    if (id == "T4") return verify_cut_bijection(bound);
    if (id == "T5") return verify_support_prediction(bound);
    if (id == "T6") return verify_power_factor_symmetry(bound, max_power);
    if (id == "P-period") return verify_period_antidiagonal(bound);
    if (id == "P-product") return verify_suffix_prefix_product(bound);
    return verify_cut_attractor(bound);
}

struct ScanResult {
    int length = 0;
    std::vector<Word> words;

    friend bool operator==(const ScanResult&, const ScanResult&) = default;
};

inline constexpr int kScanMaxLength = 18;

// the open search space: primitive trapezoidal words that are strongly
// factor-symmetric without being balanced (Christoffel words and their
// factors are all balanced, so these sit strictly outside that family)
inline std::vector<ScanResult> scan_strongly_symmetric_unbalanced(int max_length) {
    if (max_length < 1 || max_length > kScanMaxLength)
        throw std::invalid_argument("scan: max length must be in 1.." + std::to_string(kScanMaxLength));
    std::vector<ScanResult> out;
    for (int n = 1; n <= max_length; ++n) {
        ScanResult result;
        result.length = n;
        for_each_word(n, [&](const Word& w) {
            if (is_balanced(w) || !is_primitive(w)) return;
            const FactorSpectrum spectrum = delta_fast(w);
            const ComplexityProfile profile = complexity_profile(spectrum);
            for (std::size_t k = 0; k < profile.size(); ++k)
                if (profile[k] > static_cast<std::int64_t>(k) + 1) return;  // not trapezoidal
            if (is_strongly_factor_symmetric(spectrum)) result.words.push_back(w);
        });
        out.push_back(std::move(result));
    }
    return out;
}

}  // namespace words
