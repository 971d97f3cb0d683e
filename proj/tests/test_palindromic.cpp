#include <doctest.h>

#include <numeric>
#include <random>

#include "fgpal/circle.hpp"
#include "fgpal/format.hpp"
#include "fgpal/oracle.hpp"
#include "fgpal/palindromic.hpp"
#include "util.hpp"

using namespace fgpal;
using testutil::W;

TEST_SUITE_BEGIN("palindromic");

TEST_CASE("first point formula lands on the symmetry point") {
    CHECK(palindromic_first_point(2, 3).k == 5);
    CHECK(palindromic_first_point(2, 3).symmetry_point == 4);
    CHECK(palindromic_first_point(1, 2).k == 3);
    CHECK(palindromic_first_point(1, 2).symmetry_point == 1);
    // |X| > |Y| branch: the multiplier is the step |X|, not min(|X|, |Y|).
    CHECK(palindromic_first_point(3, 2).k == 1);
    CHECK(palindromic_first_point(1, 0).k == 1);

    CHECK_THROWS_AS(palindromic_first_point(1, 1), EvenSumError);
    CHECK_THROWS_AS(palindromic_first_point(2, 4), NotCoprimeError);
}

TEST_CASE("palindromic primitives for known pairs") {
    CHECK(palindromic_primitive(2, 3) == W("yxyxy"));
    CHECK(palindromic_primitive(1, 2) == W("yxy"));
    CHECK(palindromic_primitive(3, 2) == W("xyxyx"));
    CHECK(palindromic_primitive(1, 0) == W("x"));
    CHECK(palindromic_primitive(0, -1) == W("Y"));
    CHECK(palindromic_primitive(-2, 3) == W("yXyXy"));
    CHECK(palindromic_primitive(2, -3) == W("YxYxY"));

    CHECK_THROWS_AS(palindromic_primitive(1, 1), EvenSumError);
    CHECK_THROWS_AS(palindromic_primitive(3, 3), NotCoprimeError);
}

TEST_CASE("the palindromic rotation is unique and matches the formula") {
    for (int X = -11; X <= 11; ++X)
        for (int Y = -11; Y <= 11; ++Y) {
            const int n = std::abs(X) + std::abs(Y);
            if (n == 0 || n > 11 || n % 2 == 0) continue;
            if (std::gcd(std::abs(X), std::abs(Y)) != 1) continue;
            INFO(X, ",", Y);

            const auto cls = conjugacy_class(X, Y);
            int palindromes = 0;
            Word found = W("1");
            for (const Word& w : cls)
                if (is_palindrome(w)) {
                    ++palindromes;
                    found = w;
                }
            CHECK(palindromes == 1);
            CHECK(palindromic_primitive(X, Y) == found);
            CHECK(is_primitive_fast(found));
            CHECK(whitehead_primitive(found));
        }
}

TEST_CASE("symmetry congruence 2k = 1 + |X| has the symmetry point as unique solution") {
    for (int ax = 0; ax <= 9; ++ax)
        for (int ay = 0; ay <= 9; ++ay) {
            const int n = ax + ay;
            if (n == 0 || n % 2 == 0 || std::gcd(ax, ay) != 1) continue;
            int solutions = 0;
            int solution = 0;
            for (int k = 1; k <= n; ++k)
                if ((2 * k) % n == (1 + ax) % n) {
                    ++solutions;
                    solution = k;
                }
            CHECK(solutions == 1);
            CHECK(solution == palindromic_first_point(ax, ay).symmetry_point);
        }
}

TEST_CASE("near-palindromic pair for known pairs") {
    const NearPalindromicPair p11 = near_palindromic_pair(1, 1);
    CHECK(p11.x_form == W("xy"));
    CHECK(p11.y_form == W("yx"));
    CHECK(p11.epsilon == 1);
    CHECK(p11.delta == 1);

    const NearPalindromicPair p13 = near_palindromic_pair(1, 3);
    CHECK(p13.x_form == W("xyyy"));
    CHECK(p13.y_form == W("yyxy"));

    const NearPalindromicPair p31 = near_palindromic_pair(3, 1);
    CHECK(p31.x_form == W("xxyx"));
    CHECK(p31.y_form == W("yxxx"));

    const NearPalindromicPair neg = near_palindromic_pair(-1, -3);
    CHECK(neg.epsilon == -1);
    CHECK(neg.delta == -1);
    CHECK(neg.x_form.front() == make_letter(0, -1));

    CHECK_THROWS_AS(near_palindromic_pair(1, 2), OddSumError);
    CHECK_THROWS_AS(near_palindromic_pair(3, 3), NotCoprimeError);
}

TEST_CASE("even-total classes have no palindrome and unique near forms") {
    for (int X = -5; X <= 9; X += 2)
        for (int Y = -9; Y <= 9; Y += 2) {
            const int n = std::abs(X) + std::abs(Y);
            if (n == 0 || n > 10 || std::gcd(std::abs(X), std::abs(Y)) != 1) continue;
            INFO(X, ",", Y);
            const NearPalindromicPair pair = near_palindromic_pair(X, Y);
            CHECK(pair.x_form.length() == n);
            CHECK(is_palindrome(subword(pair.x_form, 1, n)));
            CHECK(is_palindrome(subword(pair.y_form, 1, n)));
            CHECK(pair.epsilon == (X > 0 ? 1 : -1));
            CHECK(pair.delta == (Y > 0 ? 1 : -1));
        }
}

TEST_CASE("commutator criterion for bases") {
    CHECK(is_basis(W("x"), W("y")));
    CHECK(is_basis(W("y"), W("x")));
    CHECK(is_basis(W("x"), W("xyx")));
    CHECK(is_basis(W("xy"), W("y")));
    CHECK_FALSE(is_basis(W("x"), W("yy")));
    CHECK_FALSE(is_basis(W("x"), W("x")));
    CHECK_FALSE(is_basis(W("xy"), W("yx")));
    CHECK_FALSE(is_basis(W("1"), W("y")));
    CHECK_FALSE(is_basis(W("xyXY"), W("y")));
}

TEST_CASE("random whitehead images of the standard basis stay bases") {
    std::mt19937 rng(21);
    const auto& moves = whitehead_moves();
    std::uniform_int_distribution<std::size_t> pick(0, moves.size() - 1);
    for (int trial = 0; trial < 50; ++trial) {
        Word u = W("x");
        Word v = W("y");
        for (int step = 0; step < 6; ++step) {
            const WhiteheadMove& m = moves[pick(rng)];
            u = apply_whitehead(m, u);
            v = apply_whitehead(m, v);
        }
        INFO(to_string(u), " ", to_string(v));
        CHECK(is_basis(u, v));
        CHECK_FALSE(is_basis(u, u));
    }
}

TEST_CASE("palindromic bases for known quadruples") {
    CHECK(palindromic_basis(1, 0, 0, 1) == std::pair{W("x"), W("y")});
    CHECK(palindromic_basis(1, 2, 0, 1) == std::pair{W("yxy"), W("y")});
    CHECK(palindromic_basis(2, 3, 1, 2) == std::pair{W("yxyxy"), W("yxy")});
    // Determinant -1 is accepted as-is.
    CHECK(palindromic_basis(0, 1, 1, 0) == std::pair{W("y"), W("x")});

    CHECK_THROWS_AS(palindromic_basis(1, 0, 0, 2), BadDeterminantError);
    CHECK_THROWS_AS(palindromic_basis(1, 1, 0, 1), EvenSumError);
    CHECK_THROWS_AS(palindromic_basis(1, 2, 1, 1), EvenSumError);
}

TEST_CASE("palindromic pairs with unit determinant form bases") {
    for (int A = -7; A <= 7; ++A)
        for (int B = -7; B <= 7; ++B)
            for (int X = -7; X <= 7; ++X)
                for (int Y = -7; Y <= 7; ++Y) {
                    const long long det =
                        static_cast<long long>(A) * Y - static_cast<long long>(B) * X;
                    if (det != 1 && det != -1) continue;
                    if ((std::abs(A) + std::abs(B)) % 2 == 0) continue;
                    if ((std::abs(X) + std::abs(Y)) % 2 == 0) continue;
                    const auto [p, q] = palindromic_basis(A, B, X, Y);
                    INFO(A, ",", B, ",", X, ",", Y);
                    CHECK(is_palindrome(p));
                    CHECK(is_palindrome(q));
                }
}

TEST_SUITE_END();
