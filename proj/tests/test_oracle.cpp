#include "doctest.h"
#include "spherica/oracle.hpp"

#include <random>

using namespace spherica;

TEST_CASE("brute positive equality")
{
    DynkinDiagram a2(Family::A, 2);
    CHECK(oracle::brute_equal_positive(BraidWord::parse(a2, "1 2 1"), BraidWord::parse(a2, "2 1 2")));
    CHECK_FALSE(oracle::brute_equal_positive(BraidWord::parse(a2, "1 2"), BraidWord::parse(a2, "2 1")));
    auto x = BraidWord::parse(a2, "1 1 2 1");
    CHECK(oracle::brute_equal_positive(x, x));
    CHECK_FALSE(oracle::brute_equal_positive(x, BraidWord::parse(a2, "1 1 2")));

    DynkinDiagram a3(Family::A, 3);
    CHECK(oracle::brute_equal_positive(BraidWord::parse(a3, "1 3"), BraidWord::parse(a3, "3 1")));

    auto big = BraidWord::parse(a2, "1 2 1 2 1 2 1 2 1 2 1");
    CHECK_THROWS_AS(oracle::brute_equal_positive(big, big), CapExceeded);
    CHECK_THROWS_AS(oracle::brute_equal_positive(BraidWord::parse(a2, "-1"), BraidWord::parse(a2, "-1")),
                    std::invalid_argument);
}

TEST_CASE("cayley check")
{
    auto r = oracle::cayley_check(DynkinDiagram(Family::A, 2));
    CHECK(r.ok);
    CHECK(r.element_count == 6);
    r = oracle::cayley_check(DynkinDiagram(Family::A, 3));
    CHECK(r.ok);
    CHECK(r.element_count == 24);
    r = oracle::cayley_check(DynkinDiagram(Family::D, 4));
    CHECK(r.ok);
    CHECK(r.element_count == 192);
    CHECK_THROWS_AS(oracle::cayley_check(DynkinDiagram(Family::E, 7)), CapExceeded);
}

TEST_CASE("equals agrees with the brute oracle on short A2 words")
{
    DynkinDiagram a2(Family::A, 2);
    std::vector<BraidWord> words;
    for (int len = 1; len <= 4; ++len)
        for (int mask = 0; mask < (1 << len); ++mask) {
            std::vector<BraidLetter> ls;
            for (int k = 0; k < len; ++k)
                ls.push_back({(mask >> k & 1) + 1, 1});
            words.emplace_back(a2, ls);
        }
    for (const auto& a : words)
        for (const auto& b : words)
            CHECK(equals(a, b) == oracle::brute_equal_positive(a, b));
}
