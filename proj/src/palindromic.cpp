#include "fgpal/palindromic.hpp"

#include <cstdlib>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>

#include "fgpal/circle.hpp"
#include "fgpal/format.hpp"

namespace fgpal {

namespace {

void check_coprime(int X, int Y) {
    if (std::gcd(std::abs(X), std::abs(Y)) != 1)
        throw NotCoprimeError("|" + std::to_string(X) + "| and |" + std::to_string(Y) +
                              "| are not coprime");
}

int normalize_index(long long k, int n) {
    return static_cast<int>(((k - 1) % n + n) % n) + 1;
}

}  // namespace

FirstPointSolution palindromic_first_point(int X, int Y) {
    check_coprime(X, Y);
    const int ax = std::abs(X);
    const int ay = std::abs(Y);
    const int n = ax + ay;
    if (n % 2 == 0)
        throw EvenSumError("palindromic_first_point: X + Y is even, no palindrome exists");

    const int sym = (ax % 2 == 1) ? (ax + 1) / 2 : ax + (ay + 1) / 2;
    // k + |X|*(n-1)/2 = sym (mod n); the multiplier is the reading step |X|.
    const long long k = sym - static_cast<long long>(n - 1) / 2 * ax;
    return {normalize_index(k, n), sym};
}

Word palindromic_primitive(int X, int Y) {
    const FirstPointSolution fp = palindromic_first_point(X, Y);
    const Word w = oz_word(build_diagram(X, Y), FirstPoint{fp.k});
    if (!is_palindrome(w))
        throw std::logic_error("palindromic_primitive: reading from p_" + std::to_string(fp.k) +
                               " is not a palindrome");
    return w;
}

NearPalindromicPair near_palindromic_pair(int X, int Y) {
    check_coprime(X, Y);
    if ((std::abs(X) + std::abs(Y)) % 2 != 0)
        throw OddSumError("near_palindromic_pair: X + Y is odd, the class has a palindrome");

    std::optional<Word> x_form;
    std::optional<Word> y_form;
    for (const Word& w : conjugacy_class(X, Y)) {
        if (is_palindrome(w))
            throw std::logic_error("near_palindromic_pair: unexpected palindrome " + to_string(w));
        if (!is_palindrome(subword(w, 1, w.length()))) continue;
        std::optional<Word>& slot = w.front().gen == 0 ? x_form : y_form;
        if (slot)
            throw std::logic_error("near_palindromic_pair: duplicate form " + to_string(w));
        slot = w;
    }
    if (!x_form || !y_form)
        throw std::logic_error("near_palindromic_pair: a form is missing for (" +
                               std::to_string(X) + ", " + std::to_string(Y) + ")");
    const int epsilon = x_form->front().sign;
    const int delta = y_form->front().sign;
    if (epsilon != (X >= 0 ? 1 : -1) || delta != (Y >= 0 ? 1 : -1))
        throw std::logic_error("near_palindromic_pair: prefix sign mismatch");
    return {*x_form, *y_form, epsilon, delta};
}

std::pair<Word, Word> palindromic_basis(int A, int B, int X, int Y) {
    const long long det = static_cast<long long>(A) * Y - static_cast<long long>(B) * X;
    if (det != 1 && det != -1)
        throw BadDeterminantError("palindromic_basis: AY - BX = " + std::to_string(det));
    if ((std::abs(A) + std::abs(B)) % 2 == 0)
        throw EvenSumError("palindromic_basis: A + B is even");
    if ((std::abs(X) + std::abs(Y)) % 2 == 0)
        throw EvenSumError("palindromic_basis: X + Y is even");

    Word p = palindromic_primitive(A, B);
    Word q = palindromic_primitive(X, Y);
    if (!is_basis(p, q))
        throw std::logic_error("palindromic_basis: commutator criterion rejected {" +
                               to_string(p) + ", " + to_string(q) + "}");
    return {std::move(p), std::move(q)};
}

bool is_basis(const Word& u, const Word& v) {
    if (u.rank().n() != 2 || v.rank().n() != 2)
        throw RankMismatchError("is_basis: rank-2 words only");

    const Word commutator =
        concat_group(concat_group(concat_group(u, v), invert(u)), invert(v));
    const Word core = cyclic_reduce(commutator).second;
    if (core.length() != 4) return false;

    static const std::vector<Word> targets = [] {
        std::vector<Word> all;
        const Word xyXY = parse_word("xyXY");
        for (const Word& r : rotations(xyXY)) all.push_back(r);
        for (const Word& r : rotations(invert(xyXY))) all.push_back(r);
        return all;
    }();
    for (const Word& t : targets)
        if (core == t) return true;
    return false;
}

}  // namespace fgpal
