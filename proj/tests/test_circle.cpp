#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "fgpal/circle.hpp"
#include "fgpal/format.hpp"
#include "fgpal/oracle.hpp"
#include "util.hpp"

using namespace fgpal;
using testutil::W;

TEST_SUITE_BEGIN("circle");

TEST_CASE("build_diagram lays out the labels") {
    const CircleDiagram d = build_diagram(2, 3);
    CHECK(d.point_count == 5);
    CHECK(d.step == 2);
    CHECK(to_string(Word(Rank(2), d.labels)) == "xxyyy");

    const CircleDiagram single = build_diagram(0, 1);
    CHECK(single.point_count == 1);
    CHECK(single.step == 0);
    CHECK(to_string(Word(Rank(2), single.labels)) == "y");

    const CircleDiagram negative = build_diagram(-2, 3);
    CHECK(to_string(Word(Rank(2), negative.labels)) == "XXyyy");

    CHECK_THROWS_AS(build_diagram(2, 2), NotCoprimeError);
    CHECK_THROWS_AS(build_diagram(0, 0), ZeroPairError);
    CHECK_THROWS_AS(build_diagram(0, 2), NotCoprimeError);
}

TEST_CASE("oz_word reads every |X|-th label") {
    const CircleDiagram d = build_diagram(2, 3);
    CHECK(oz_word(d, FirstPoint{1}) == W("xyyxy"));  // visits p1 p3 p5 p2 p4
    CHECK(oz_word(d, FirstPoint{5}) == W("yxyxy"));  // visits p5 p2 p4 p1 p3
    CHECK(oz_word(build_diagram(1, 0), FirstPoint{1}) == W("x"));
    CHECK_THROWS_AS(oz_word(d, FirstPoint{0}), PreconditionViolatedError);
    CHECK_THROWS_AS(oz_word(d, FirstPoint{6}), PreconditionViolatedError);
}

TEST_CASE("conjugacy_class lists distinct rotations") {
    CHECK(conjugacy_class(1, 1) == std::vector{W("xy"), W("yx")});
    CHECK(conjugacy_class(1, 0) == std::vector{W("x")});

    const auto cls = conjugacy_class(2, 3);
    REQUIRE(cls.size() == 5);
    CHECK(std::set<Word>(cls.begin(), cls.end()).size() == 5);
    CHECK(std::find(cls.begin(), cls.end(), W("xyyxy")) != cls.end());
    CHECK(std::find(cls.begin(), cls.end(), W("yxyxy")) != cls.end());

    // The class is exactly the rotation set of any one member.
    for (int X : {1, 2, 3, -4})
        for (int Y : {1, 5, -2}) {
            if (std::gcd(std::abs(X), std::abs(Y)) != 1) continue;
            auto members = conjugacy_class(X, Y);
            auto rots = rotations(members.front());
            std::sort(members.begin(), members.end());
            std::sort(rots.begin(), rots.end());
            CHECK(members == rots);
        }
}

TEST_CASE("oz words carry the requested exponent sums") {
    for (int X = -6; X <= 6; ++X)
        for (int Y = -6; Y <= 6; ++Y) {
            if ((X == 0 && Y == 0) || std::gcd(std::abs(X), std::abs(Y)) != 1) continue;
            const int n = std::abs(X) + std::abs(Y);
            for (const Word& w : conjugacy_class(X, Y)) {
                CHECK(w.length() == n);
                CHECK(is_cyclically_reduced(w));
                CHECK(exponent_pair(w) == ExponentPair{X, Y});
                CHECK(is_primitive_fast(w));
            }
        }
}

TEST_CASE("fast primitivity on known words") {
    CHECK(is_primitive_fast(W("xyyxy")));
    CHECK(is_primitive_fast(W("x")));
    CHECK(is_primitive_fast(W("xY")));
    CHECK_FALSE(is_primitive_fast(W("xxyy")));   // exponent sums not coprime
    CHECK_FALSE(is_primitive_fast(W("xyXy")));   // mixed signs: |X|+|Y| = 2 != 4
    CHECK_FALSE(is_primitive_fast(W("xxyyy")));  // coprime sums but x's not consecutive
    CHECK_FALSE(is_primitive_fast(W("yyy")));

    CHECK_THROWS_AS(is_primitive_fast(W("1")), EmptyWordError);
    CHECK_THROWS_AS(is_primitive_fast(W("xyX")), NotCyclicallyReducedError);
}

TEST_CASE("is_primitive conjugation-invariantly wraps the fast test") {
    CHECK(is_primitive(W("xyxyX")));  // x (yxy) x^-1
    CHECK(is_primitive(W("X")));
    CHECK_FALSE(is_primitive(W("1")));
    CHECK_FALSE(is_primitive(W("xyxXYX")));  // x y x x^-1 y^-1 x^-1 reduces to empty
}

TEST_CASE("fast primitivity agrees with the whitehead oracle up to length 7") {
    for (const Word& w : enumerate_words(7)) {
        if (w.empty() || !is_cyclically_reduced(w)) continue;
        CAPTURE(to_string(w));
        CHECK(is_primitive_fast(w) == whitehead_primitive(w));
    }
}

TEST_CASE("smaller construction words prefix larger ones") {
    // For 0 < X < Y, 0 < A < B with AY - BX = 1 and A + B > X + Y, the
    // (X, Y) word read from p_1 starts the (A, B) word read from p_1.
    int checked = 0;
    for (int X = 1; X <= 6; ++X)
        for (int Y = X + 1; Y <= 7; ++Y)
            for (int A = 1; A <= 6; ++A)
                for (int B = A + 1; B <= 7; ++B) {
                    if (static_cast<long long>(A) * Y - static_cast<long long>(B) * X != 1) continue;
                    if (A + B <= X + Y) continue;
                    const Word small = oz_word(build_diagram(X, Y), FirstPoint{1});
                    const Word large = oz_word(build_diagram(A, B), FirstPoint{1});
                    INFO(X, ",", Y, " vs ", A, ",", B);
                    CHECK(starts_with(large, small));
                    ++checked;
                }
    CHECK(checked > 0);
}

TEST_SUITE_END();
