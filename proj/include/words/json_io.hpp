#pragma once

// JSON views of the library types (nlohmann::json). Words serialize as
// their ASCII letters, the empty word as "".

#include <json.hpp>

#include "words/attractor.hpp"
#include "words/bijection.hpp"
#include "words/christoffel.hpp"
#include "words/classify.hpp"
#include "words/spectrum.hpp"
#include "words/verify.hpp"
#include "words/word.hpp"

namespace words {

inline void to_json(nlohmann::json& j, const Word& w) { j = w.str(); }

inline void to_json(nlohmann::json& j, const ParikhVector& v) {
    j = nlohmann::json::array({v.a, v.b});
}

// {"word", "parikh", "counts": [[i, j, delta], ...]} with counts sorted by (i,j)
inline nlohmann::json spectrum_json(const Word& w, const FactorSpectrum& s) {
    nlohmann::json counts = nlohmann::json::array();
    for (const auto& [v, cnt] : s.counts) counts.push_back({v.a, v.b, cnt});
    return {{"word", w.str()}, {"parikh", {s.total.a, s.total.b}}, {"counts", std::move(counts)}};
}

inline void to_json(nlohmann::json& j, const ClassificationReport& r) {
    j = {{"word", r.word.str()},
         {"balanced", r.balanced},
         {"lyndon", r.lyndon},
         {"unbordered", r.unbordered},
         {"primitive", r.primitive},
         {"trapezoidal", r.trapezoidal},
         {"christoffel", r.christoffel},
         {"conjugate_of_christoffel", r.conjugate_of_christoffel}};
}

inline void to_json(nlohmann::json& j, const PalindromicCut& pc) {
    j = {{"word", pc.word.str()}, {"cut", pc.cut}, {"left", pc.left.str()}, {"right", pc.right.str()}};
}

inline void to_json(nlohmann::json& j, const BijectionTable& t) {
    nlohmann::json pairs = nlohmann::json::array();
    for (const auto& [f, g] : t.pairs) pairs.push_back({f.str(), g.str()});
    j = {{"word", t.word.str()}, {"k", t.k}, {"cut", t.cut}, {"pairs", std::move(pairs)}};
}

inline void to_json(nlohmann::json& j, const VerificationRun& run) {
    j = {{"theorem", run.theorem},
         {"bound", run.bound},
         {"checked_count", run.checked_count},
         {"passed", run.passed()},
         {"counterexamples", run.counterexamples}};
    if (run.max_power != 0) j["max_power"] = run.max_power;
}

inline void to_json(nlohmann::json& j, const ScanResult& r) {
    j = {{"length", r.length}, {"words", r.words}};
}

}  // namespace words
