#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "words/enumerate.hpp"
#include "words/json_io.hpp"
#include "words/spectrum.hpp"

using namespace words;

namespace {

Word W(const char* s) { return Word(s); }

FactorSpectrum spectrum_of(ParikhVector total,
                           std::vector<std::pair<ParikhVector, std::int64_t>> counts) {
    return FactorSpectrum{total, std::move(counts)};
}

}  // namespace

TEST_CASE("spectrum of aabab", "[spectrum]") {
    const FactorSpectrum expected = spectrum_of(
        {3, 2}, {{{0, 0}, 1}, {{0, 1}, 1}, {{1, 0}, 1}, {{1, 1}, 2}, {{1, 2}, 1},
                 {{2, 0}, 1}, {{2, 1}, 2}, {{2, 2}, 1}, {{3, 1}, 1}, {{3, 2}, 1}});
    CHECK(delta_naive(W("aabab")) == expected);
    CHECK(delta_fast(W("aabab")) == expected);
    CHECK(expected.at({3, 0}) == 0);
    CHECK(expected.at({0, 2}) == 0);
}

TEST_CASE("spectrum of aabb is all ones on the 3x3 grid", "[spectrum]") {
    const FactorSpectrum s = delta_naive(W("aabb"));
    CHECK(s.total == ParikhVector{2, 2});
    REQUIRE(s.counts.size() == 9);
    for (int i = 0; i <= 2; ++i)
        for (int j = 0; j <= 2; ++j) CHECK(s.at({i, j}) == 1);
}

TEST_CASE("spectrum spot values of aabaabaabab", "[spectrum]") {
    const FactorSpectrum s = delta_fast(W("aabaabaabab"));
    CHECK(s.at({1, 1}) == 2);
    CHECK(s.at({2, 1}) == 3);
    CHECK(s.at({4, 1}) == 1);
    CHECK(s.at({3, 2}) == 3);
    CHECK(s.at({5, 3}) == 3);
    CHECK(s.at({6, 4}) == 1);
}

TEST_CASE("spectrum of the empty word", "[spectrum]") {
    const FactorSpectrum s = delta_fast(Word());
    CHECK(s.total == ParikhVector{0, 0});
    REQUIRE(s.counts.size() == 1);
    CHECK(s.at({0, 0}) == 1);
    CHECK(delta_naive(Word()) == s);
}

TEST_CASE("fast path agrees with the oracle exhaustively", "[spectrum]") {
    for (int n = 0; n <= 12; ++n)
        for_each_word(n, [&](const Word& w) { CHECK(delta_fast(w) == delta_naive(w)); });
}

TEST_CASE("fast path agrees with the oracle on random words", "[spectrum]") {
    std::mt19937 rng(1234);
    std::uniform_int_distribution<int> len(1, 120);
    for (int trial = 0; trial < 200; ++trial) {
        const Word w = oracles::random_word(rng, len(rng));
        REQUIRE(delta_fast(w) == delta_naive(w));
    }
}

TEST_CASE("spectrum invariants", "[spectrum]") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        const Word w = oracles::random_word(rng, 1 + trial % 50);
        const FactorSpectrum s = delta_fast(w);
        CHECK(s.total == parikh(w));
        CHECK(s.at({0, 0}) == 1);
        CHECK(s.at(s.total) == 1);
        for (const auto& [v, cnt] : s.counts) {
            CHECK(cnt > 0);
            CHECK((v.a >= 0 && v.a <= s.total.a));
            CHECK((v.b >= 0 && v.b <= s.total.b));
        }
        // antidiagonal sums are the per-length distinct factor counts
        const ComplexityProfile c = complexity_profile(s);
        CHECK(c == oracles::profile_by_window_sets(w));
    }
}

TEST_CASE("complexity profiles", "[spectrum]") {
    CHECK(complexity_profile(W("aabab")) == ComplexityProfile{1, 2, 3, 3, 2, 1});
    CHECK(complexity_profile(W("aaaa")) == ComplexityProfile{1, 1, 1, 1, 1});
    CHECK(complexity_profile(W("aabb")) == ComplexityProfile{1, 2, 3, 2, 1});
}

TEST_CASE("strong factor symmetry", "[spectrum]") {
    CHECK(is_strongly_factor_symmetric(W("aabab")));
    CHECK(is_strongly_factor_symmetric(W("aabb")));
    CHECK_FALSE(is_strongly_factor_symmetric(W("aabbaabb")));
}

TEST_CASE("factor symmetry", "[spectrum]") {
    CHECK(is_factor_symmetric(W("aabab")));
    CHECK(is_factor_symmetric(Word()));
    CHECK_FALSE(is_factor_symmetric(W("aabbaabb")));
}

TEST_CASE("strong symmetry equals polynomial reciprocity", "[spectrum]") {
    for (int n = 0; n <= 12; ++n)
        for_each_word(n, [&](const Word& w) {
            const FactorSpectrum s = delta_fast(w);
            CHECK(is_strongly_factor_symmetric(s) == oracles::polynomial_reciprocal(s));
        });
}

TEST_CASE("support", "[spectrum]") {
    SupportSet expected;
    for (int i = 0; i <= 3; ++i)
        for (int j = 0; j <= 2; ++j)
            if (!(i == 3 && j == 0) && !(i == 0 && j == 2)) expected.push_back({i, j});
    std::sort(expected.begin(), expected.end());
    CHECK(support(W("aabab")) == expected);

    CHECK(support(W("aabb")).size() == 9);
    CHECK(support(W("aabaabaabab")).size() == 22);
}

TEST_CASE("support symmetry", "[spectrum]") {
    CHECK(is_support_symmetric(W("aabab")));
    CHECK(is_support_symmetric(W("aab")));
    for (int n = 1; n <= 10; ++n)
        for_each_word(n, [&](const Word& w) {
            if (is_strongly_factor_symmetric(w)) CHECK(is_support_symmetric(w));
        });
}

TEST_CASE("period against the antidiagonal singleton", "[spectrum]") {
    CHECK(period_antidiagonal_check(W("abab"), 2));
    CHECK_FALSE(period_antidiagonal_check(W("aabab"), 2));
    CHECK(period_antidiagonal_check(W("aaaa"), 1));
    CHECK_THROWS_AS(period_antidiagonal_check(W("abab"), 0), std::invalid_argument);
    CHECK_THROWS_AS(period_antidiagonal_check(W("abab"), 4), std::invalid_argument);
}

TEST_CASE("antidiagonal singletons coincide with periods exhaustively", "[spectrum]") {
    for (int n = 2; n <= 12; ++n)
        for_each_word(n, [&](const Word& w) {
            const std::vector<int> ps = periods(w);
            for (int p = 1; p <= n - 1; ++p)
                CHECK(period_antidiagonal_check(w, p) ==
                      std::binary_search(ps.begin(), ps.end(), p));
        });
}

TEST_CASE("trapezoidal profiles rise by one, plateau, fall by one", "[spectrum]") {
    for (int n = 0; n <= 12; ++n)
        for_each_word(n, [&](const Word& w) {
            const ComplexityProfile c = complexity_profile(w);
            bool trapezoidal = true;
            for (std::size_t k = 0; k < c.size(); ++k)
                if (c[k] > static_cast<std::int64_t>(k) + 1) trapezoidal = false;
            if (!trapezoidal) return;
            // differences must be a block of +1s, then 0s, then -1s
            int phase = 0;
            for (std::size_t k = 0; k + 1 < c.size(); ++k) {
                const std::int64_t d = c[k + 1] - c[k];
                REQUIRE((d == 1 || d == 0 || d == -1));
                if (d == 1) CHECK(phase == 0);
                if (d == 0) { CHECK(phase <= 1); phase = 1; }
                if (d == -1) phase = 2;
                if (phase == 2) CHECK(d == -1);
            }
        });
}

TEST_CASE("grid rendering is exact", "[spectrum]") {
    CHECK(to_grid(delta_fast(W("aabab"))) == "0 1 1 1\n1 2 2 1\n1 1 1 0\n");
    CHECK(to_grid(delta_fast(W("aabb"))) == "1 1 1\n1 1 1\n1 1 1\n");
    CHECK(to_grid(delta_fast(Word())) == "1\n");
}

TEST_CASE("spectrum JSON shape", "[spectrum]") {
    const nlohmann::json j = spectrum_json(W("aabab"), delta_fast(W("aabab")));
    CHECK(j["word"] == "aabab");
    CHECK(j["parikh"] == nlohmann::json::array({3, 2}));
    const auto& counts = j["counts"];
    REQUIRE(counts.size() == 10);
    CHECK(counts[0] == nlohmann::json::array({0, 0, 1}));
    // sorted lexicographically by (i, j)
    for (std::size_t i = 1; i < counts.size(); ++i) {
        const auto prev = std::pair{counts[i - 1][0].get<int>(), counts[i - 1][1].get<int>()};
        const auto cur = std::pair{counts[i][0].get<int>(), counts[i][1].get<int>()};
        CHECK(prev < cur);
    }
}
