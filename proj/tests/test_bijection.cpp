#include <catch2/catch_amalgamated.hpp>

#include <map>

#include "words/bijection.hpp"
#include "words/enumerate.hpp"
#include "words/spectrum.hpp"
#include "words/verify.hpp"

using namespace words;

namespace {
Word W(const char* s) { return Word(s); }
}

TEST_CASE("crossing factors", "[bijection]") {
    CHECK(crossing_factors(W("aababab"), 2, 4, CrossingOrder::left_to_right) ==
          std::vector<Word>{W("aaba"), W("abab"), W("baba")});
    CHECK(crossing_factors(W("aababab"), 2, 3, CrossingOrder::right_to_left) ==
          std::vector<Word>{W("bab"), W("aba"), W("aab")});
    CHECK(crossing_factors(W("ab"), 1, 1, CrossingOrder::left_to_right) ==
          std::vector<Word>{W("a"), W("b")});
    CHECK_THROWS_AS(crossing_factors(W("ab"), 0, 1, CrossingOrder::left_to_right),
                    std::invalid_argument);
    CHECK_THROWS_AS(crossing_factors(W("ab"), 1, 3, CrossingOrder::left_to_right),
                    std::invalid_argument);
}

TEST_CASE("bijection tables", "[bijection]") {
    const BijectionTable t = bijection_table(W("aababab"), 4);
    CHECK(t.cut == 2);
    CHECK(t.pairs == std::vector<std::pair<Word, Word>>{
                         {W("aaba"), W("bab")}, {W("abab"), W("aba")}, {W("baba"), W("aab")}});

    CHECK(bijection_table(W("ab"), 1).pairs ==
          std::vector<std::pair<Word, Word>>{{W("a"), W("b")}, {W("b"), W("a")}});

    CHECK(bijection_table(W("aabab"), 5).pairs ==
          std::vector<std::pair<Word, Word>>{{W("aabab"), Word()}});
    CHECK(bijection_table(W("ab"), 0).pairs ==
          std::vector<std::pair<Word, Word>>{{Word(), W("ab")}});

    const BijectionTable t2 = bijection_table(W("aabab"), 2);
    REQUIRE(t2.pairs.size() == 3);
    for (const auto& [f, g] : t2.pairs) CHECK(parikh(f) + parikh(g) == ParikhVector{3, 2});

    CHECK_THROWS_AS(bijection_table(W("aabb"), 2), std::invalid_argument);
    CHECK_THROWS_AS(bijection_table(W("aabab"), 6), std::invalid_argument);
    CHECK_THROWS_AS(bijection_table(W("aabab"), -1), std::invalid_argument);
}

TEST_CASE("bijection invariants across the sweep range", "[bijection]") {
    for (const ParikhVector pv : coprime_pairs(12)) {
        const Word lower = generate_lower(pv.a, pv.b);
        CHECK(detail::cut_bijection_holds(lower));
        CHECK(detail::cut_bijection_holds(reversal(lower)));
    }
}

TEST_CASE("the bijection accounts for the spectrum symmetry", "[bijection]") {
    // pairing each Parikh class (i,j) against (p-i, q-j) through the table
    // reproduces delta(i,j) = delta(p-i, q-j)
    for (const ParikhVector pv : coprime_pairs(12)) {
        const Word w = generate_lower(pv.a, pv.b);
        const int n = static_cast<int>(w.size());
        const FactorSpectrum s = delta_fast(w);
        for (int k = 0; k <= n; ++k) {
            std::map<ParikhVector, std::int64_t> f_classes, g_complement_classes;
            for (const auto& [f, g] : bijection_table(w, k).pairs) {
                ++f_classes[parikh(f)];
                ++g_complement_classes[ParikhVector{pv.a - parikh(g).a, pv.b - parikh(g).b}];
            }
            CHECK(f_classes == g_complement_classes);
            for (const auto& [v, cnt] : f_classes) {
                CHECK(s.at(v) == cnt);
                CHECK(s.at({pv.a - v.a, pv.b - v.b}) == cnt);
            }
        }
    }
}

TEST_CASE("suffix-prefix product", "[bijection]") {
    const std::set<Word> p1 = suffix_prefix_product(W("aabab"));
    CHECK(p1.size() == 12);
    CHECK(p1 == factor_set(W("aabab")));

    CHECK(suffix_prefix_product(W("ab")) == std::set<Word>{Word(), W("a"), W("b"), W("ab")});

    const std::set<Word> p3 = suffix_prefix_product(W("aababab"));
    CHECK(p3.size() == 18);
    CHECK(p3 == factor_set(W("aababab")));

    CHECK_THROWS_AS(suffix_prefix_product(W("aabb")), std::invalid_argument);
}

TEST_CASE("factor counts match the cut dimensions", "[bijection]") {
    for (const ParikhVector pv : coprime_pairs(12)) {
        if (pv.a + pv.b < 2) continue;
        const Word lower = generate_lower(pv.a, pv.b);
        for (const Word& w : {lower, reversal(lower)}) {
            const PalindromicCut cut = palindromic_factorization(w);
            CHECK(factor_set(w).size() == (cut.left.size() + 1) * (cut.right.size() + 1));
        }
    }
}
