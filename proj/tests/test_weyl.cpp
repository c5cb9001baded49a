#include "doctest.h"
#include "spherica/weyl.hpp"

#include <algorithm>
#include <random>

using namespace spherica;

namespace {

WeylElement random_element(const DynkinDiagram& d, int steps, std::mt19937& rng)
{
    std::uniform_int_distribution<int> node(1, d.rank());
    auto w = WeylElement::identity(d);
    for (int i = 0; i < steps; ++i)
        w = w * WeylElement::generator(d, node(rng));
    return w;
}

}  // namespace

TEST_CASE("generators")
{
    DynkinDiagram a2(Family::A, 2);
    auto s1 = WeylElement::generator(a2, 1);
    CHECK(s1.image_of_simple(1) == Root{-1, 0});
    CHECK(s1.image_of_simple(2) == Root{1, 1});
    CHECK((s1 * s1).is_identity());
    CHECK(s1.length() == 1);
    CHECK_THROWS_AS(WeylElement::generator(a2, 3), std::invalid_argument);
}

TEST_CASE("relations")
{
    DynkinDiagram a2(Family::A, 2);
    auto s1 = WeylElement::generator(a2, 1);
    auto s2 = WeylElement::generator(a2, 2);
    CHECK(s1 * s2 * s1 == s2 * s1 * s2);

    DynkinDiagram a3(Family::A, 3);
    auto t1 = WeylElement::generator(a3, 1);
    auto t3 = WeylElement::generator(a3, 3);
    CHECK(t1 * t3 == t3 * t1);

    std::mt19937 rng(7);
    for (int c = 0; c < 20; ++c) {
        auto w = random_element(a3, c, rng);
        CHECK((w.inverse() * w).is_identity());
        CHECK(w.inverse().length() == w.length());
    }
}

TEST_CASE("length and descents")
{
    DynkinDiagram a2(Family::A, 2);
    CHECK(WeylElement::identity(a2).length() == 0);
    CHECK(WeylElement::identity(a2).right_descents().empty());

    auto s1 = WeylElement::generator(a2, 1);
    auto s2 = WeylElement::generator(a2, 2);
    auto s1s2 = s1 * s2;
    CHECK(s1s2.right_descents() == std::vector<int>{2});
    CHECK(s1s2.left_descents() == std::vector<int>{1});

    auto w0 = longest_element(a2);
    CHECK(w0.length() == 3);
    CHECK(w0 == s1 * s2 * s1);
    CHECK(w0.right_descents() == std::vector<int>{1, 2});
    CHECK((w0 * w0).is_identity());

    // maximal length by enumeration
    int max_len = 0;
    for (const auto& w : enumerate(a2))
        max_len = std::max(max_len, w.length());
    CHECK(max_len == 3);

    auto d4 = DynkinDiagram(Family::D, 4);
    CHECK(longest_element(d4).length() == 12);
    CHECK(longest_element(d4).length() == static_cast<int>(positive_roots(d4).size()));
    CHECK(longest_element(DynkinDiagram(Family::A, 1)) == WeylElement::generator(DynkinDiagram(Family::A, 1), 1));
    CHECK(longest_element(DynkinDiagram(Family::E, 6)).length() == 36);
}

TEST_CASE("reduced words")
{
    DynkinDiagram a2(Family::A, 2);
    CHECK(reduced_word(WeylElement::identity(a2)).empty());
    CHECK(reduced_word(WeylElement::generator(a2, 2)) == std::vector<int>{2});
    CHECK(reduced_word(longest_element(a2)) == std::vector<int>{1, 2, 1});

    std::mt19937 rng(11);
    for (auto d : {DynkinDiagram(Family::A, 3), DynkinDiagram(Family::D, 4)}) {
        for (int c = 0; c < 30; ++c) {
            auto w = random_element(d, c % 15, rng);
            auto word = reduced_word(w);
            CHECK(static_cast<int>(word.size()) == w.length());
            auto prod = WeylElement::identity(d);
            for (int i : word)
                prod = prod * WeylElement::generator(d, i);
            CHECK(prod == w);
        }
    }
}

TEST_CASE("reduced factorizations and stripping")
{
    DynkinDiagram a2(Family::A, 2);
    auto s1 = WeylElement::generator(a2, 1);
    auto s2 = WeylElement::generator(a2, 2);
    CHECK(is_reduced_factorization(s1, s2));
    CHECK_FALSE(is_reduced_factorization(s1, s1));
    CHECK_FALSE(is_reduced_factorization(longest_element(a2), s1));

    CHECK(strip_right(s1 * s2, 2) == s1);
    CHECK(strip_right(s1, 1).is_identity());
    CHECK_THROWS_AS(strip_right(s1, 2), std::invalid_argument);
}

TEST_CASE("length changes by one under a generator")
{
    std::mt19937 rng(13);
    DynkinDiagram d4(Family::D, 4);
    for (int c = 0; c < 40; ++c) {
        auto w = random_element(d4, c % 16, rng);
        for (int i = 1; i <= 4; ++i) {
            int diff = (w * WeylElement::generator(d4, i)).length() - w.length();
            CHECK((diff == 1 || diff == -1));
        }
    }
}

TEST_CASE("enumeration")
{
    CHECK(enumerate(DynkinDiagram(Family::A, 2)).size() == 6);
    CHECK(enumerate(DynkinDiagram(Family::A, 3)).size() == 24);
    CHECK(enumerate(DynkinDiagram(Family::D, 4)).size() == 192);
    CHECK(weyl_order(DynkinDiagram(Family::E, 7)) == 2903040);
    CHECK_THROWS_AS(enumerate(DynkinDiagram(Family::E, 7)), CapExceeded);
}

TEST_CASE("descent sets of w0 and nonemptiness")
{
    for (auto d : {DynkinDiagram(Family::A, 2), DynkinDiagram(Family::A, 3)}) {
        auto all = enumerate(d);
        for (const auto& w : all) {
            if (w.is_identity())
                continue;
            CHECK_FALSE(w.right_descents().empty());
            CHECK_FALSE(w.left_descents().empty());
        }
        std::vector<int> every;
        for (int i = 1; i <= d.rank(); ++i)
            every.push_back(i);
        CHECK(longest_element(d).right_descents() == every);
        CHECK(longest_element(d).left_descents() == every);
    }
}

TEST_CASE("w0 automorphism")
{
    CHECK(w0_automorphism(DynkinDiagram(Family::A, 2)) == std::vector<int>{2, 1});
    CHECK(w0_automorphism(DynkinDiagram(Family::A, 3)) == std::vector<int>{3, 2, 1});
    CHECK(w0_automorphism(DynkinDiagram(Family::D, 4)) == std::vector<int>{1, 2, 3, 4});
    CHECK(w0_automorphism(DynkinDiagram(Family::E, 6)) == std::vector<int>{6, 2, 5, 4, 3, 1});
    CHECK(w0_automorphism(DynkinDiagram(Family::E, 8)) ==
          std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8});
}

TEST_CASE("exchange-style descent characterization")
{
    // i is a left descent of v iff l(s_i v) < l(v) iff some reduced word of v starts with i.
    DynkinDiagram a3(Family::A, 3);
    for (const auto& v : enumerate(a3)) {
        if (v.is_identity())
            continue;
        auto ld = v.left_descents();
        for (int i = 1; i <= 3; ++i) {
            bool descent = std::binary_search(ld.begin(), ld.end(), i);
            bool shorter = (WeylElement::generator(a3, i) * v).length() < v.length();
            CHECK(descent == shorter);
        }
        CHECK(std::binary_search(ld.begin(), ld.end(), reduced_word(v).front()));
    }
}
