#include "fgpal/decomposition.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "fgpal/circle.hpp"
#include "fgpal/format.hpp"

namespace fgpal {

namespace {

bool palindrome_range(std::span<const Letter> ls, int begin, int end) {
    for (int i = begin, j = end; i + 1 < j; ++i, --j)
        if (!(ls[static_cast<std::size_t>(i)] == ls[static_cast<std::size_t>(j - 1)])) return false;
    return true;
}

void check_pingpong_inputs(const Word& p, const Word& w, Side side) {
    if (!(p.rank() == w.rank()))
        throw RankMismatchError("pingpong_decompose: rank mismatch");
    if (!is_palindrome(p))
        throw PreconditionViolatedError("p is not a palindrome: " + to_string(p));
    if (w.empty()) throw PreconditionViolatedError("w must be nonempty");
    const Word& left = side == Side::Prefix ? p : w;
    const Word& right = side == Side::Prefix ? w : p;
    if (!left.empty() && !right.empty() && left.back().is_inverse_of(right.front()))
        throw PreconditionViolatedError("concatenation cancels at the seam");
    const Word s = concat_wc(left, right);
    if (!is_palindrome(s))
        throw PreconditionViolatedError("concatenation " + to_string(s) + " is not a palindrome");
}

/// Group-level witness pair for w = a p q a^-1 (q may be absent):
/// u = a p rev(a), v = rev(a)^-1 q a^-1. Both are palindromes and u v = w;
/// no seam cancels because palindromes start and end with the same letter.
std::pair<Word, Word> conjugated_factors(const Word& a, const Word& p,
                                         const std::optional<Word>& q) {
    const Word rev_a = reverse(a);
    const Word u = concat_wc(concat_wc(a, p), rev_a);
    Word v = invert(rev_a);
    if (q) v = concat_wc(v, *q);
    v = concat_wc(v, invert(a));
    return {u, v};
}

}  // namespace

std::optional<std::pair<Word, Word>> split_concat_two_palindromes(const Word& w) {
    if (w.empty()) throw PreconditionViolatedError("split_concat_two_palindromes: empty word");
    const auto ls = w.letters();
    const int n = w.length();
    for (int k = 1; k < n; ++k)
        if (palindrome_range(ls, 0, k) && palindrome_range(ls, k, n))
            return std::make_pair(subword(w, 0, k), subword(w, k, n));
    return std::nullopt;
}

std::vector<std::pair<Word, Word>> all_double_palindrome_splits(const Word& w) {
    if (w.empty()) throw PreconditionViolatedError("all_double_palindrome_splits: empty word");
    const auto ls = w.letters();
    const int n = w.length();
    std::vector<std::pair<Word, Word>> out;
    for (int k = 1; k < n; ++k)
        if (palindrome_range(ls, 0, k) && palindrome_range(ls, k, n))
            out.emplace_back(subword(w, 0, k), subword(w, k, n));
    return out;
}

Word easy_case_extract(const Word& p, const Word& w, Side side) {
    check_pingpong_inputs(p, w, side);
    if (p.length() > w.length())
        throw PreconditionViolatedError("easy_case_extract: |p| exceeds |w|");

    if (p.length() == w.length()) {
        if (!(p == w)) throw std::logic_error("easy_case_extract: equal lengths but p != w");
        return Word(w.rank());
    }
    Word q = side == Side::Prefix ? subword(w, 0, w.length() - p.length())
                                  : subword(w, p.length(), w.length());
    const bool fits = side == Side::Prefix ? ends_with(w, p) : starts_with(w, p);
    if (!fits || !is_palindrome(q))
        throw std::logic_error("easy_case_extract: extraction failed for " + to_string(w));
    return q;
}

PingPongResult pingpong_decompose(const Word& p, const Word& w, Side side) {
    check_pingpong_inputs(p, w, side);

    // Invariant: the side-appropriate concatenation of (cp, cw) is a reduced
    // palindrome, namely the previous cp. The witnesses q and r extracted at
    // the bottom satisfy every intermediate statement unchanged; only m grows.
    Word cp = p;
    Word cw = w;
    Side o = side;
    int m = 0;
    while (cp.length() > cw.length()) {
        const Word rev = reverse(cw);
        if (o == Side::Prefix) {
            if (!starts_with(cp, rev))
                throw std::logic_error("pingpong_decompose: lost the reversed-prefix invariant");
            cp = subword(cp, cw.length(), cp.length());
        } else {
            if (!ends_with(cp, rev))
                throw std::logic_error("pingpong_decompose: lost the reversed-suffix invariant");
            cp = subword(cp, 0, cp.length() - cw.length());
        }
        if (!is_palindrome(cp))
            throw std::logic_error("pingpong_decompose: peeled remainder is not a palindrome");
        cw = rev;
        o = o == Side::Prefix ? Side::Suffix : Side::Prefix;
        ++m;
    }

    if (cp.length() == cw.length()) {
        if (!(cp == cw)) throw std::logic_error("pingpong_decompose: equal lengths but cp != cw");
        return {PingPongResult::Tag::Case2, Word(w.rank()), Word(w.rank()), m + 1};
    }

    Word q = o == Side::Prefix ? subword(cw, 0, cw.length() - cp.length())
                               : subword(cw, cp.length(), cw.length());
    const bool fits = o == Side::Prefix ? ends_with(cw, cp) : starts_with(cw, cp);
    if (!fits || !is_palindrome(q))
        throw std::logic_error("pingpong_decompose: base extraction failed");
    return {PingPongResult::Tag::Case1, std::move(q), std::move(cp), m};
}

WidthDecomposition palindromic_width_leq2(const Word& w) {
    WidthDecomposition d{WidthDecomposition::Tag::Identity, {}, {}, {}, {}};
    if (w.empty()) return d;

    if (is_palindrome(w)) {
        d.tag = WidthDecomposition::Tag::Palindrome;
        d.p = w;
        d.factors = std::make_pair(w, Word(w.rank()));
        return d;
    }

    auto [a, core] = cyclic_reduce(w);
    if (is_palindrome(core)) {
        // a is nonempty here, otherwise w itself were a palindrome.
        d.tag = WidthDecomposition::Tag::ConjPalindrome;
        d.conjugator = a;
        d.p = core;
        d.factors = conjugated_factors(a, core, std::nullopt);
        return d;
    }
    if (auto split = split_concat_two_palindromes(core)) {
        d.p = split->first;
        d.q = split->second;
        if (a.empty()) {
            d.tag = WidthDecomposition::Tag::TwoPalindromes;
            d.factors = *split;
        } else {
            d.tag = WidthDecomposition::Tag::ConjTwoPalindromes;
            d.conjugator = a;
            d.factors = conjugated_factors(a, split->first, split->second);
        }
        return d;
    }
    d.tag = WidthDecomposition::Tag::MoreThanTwo;
    return d;
}

WidthDecomposition classify_primitive_form(const Word& w) {
    if (w.rank().n() != 2)
        throw RankMismatchError("classify_primitive_form: rank-2 words only");
    if (!is_primitive(w))
        throw NotPrimitiveError("classify_primitive_form: " + to_string(w) + " is not primitive");
    WidthDecomposition d = palindromic_width_leq2(w);
    if (d.tag == WidthDecomposition::Tag::MoreThanTwo ||
        d.tag == WidthDecomposition::Tag::Identity)
        throw std::logic_error("classify_primitive_form: primitive " + to_string(w) +
                               " escaped the four forms");
    return d;
}

namespace detail {

std::pair<std::vector<bool>, std::vector<bool>> palindromic_edge_flags(const Word& w) {
    const auto ls = w.letters();
    const int n = w.length();
    // Manacher radii over the letter array interleaved with separators:
    // transformed index t is a letter when odd (ls[t/2]) and a separator when
    // even; expansions only ever compare positions of equal parity.
    const int m = 2 * n + 1;
    std::vector<int> radius(static_cast<std::size_t>(m), 0);
    auto same = [&](int a, int b) {
        if (a % 2 == 0) return true;  // separator vs separator
        return ls[static_cast<std::size_t>(a / 2)] == ls[static_cast<std::size_t>(b / 2)];
    };
    int center = 0;
    int right = 0;
    for (int i = 1; i < m; ++i) {
        int& r = radius[static_cast<std::size_t>(i)];
        if (i < right) r = std::min(right - i, radius[static_cast<std::size_t>(2 * center - i)]);
        while (i - r - 1 >= 0 && i + r + 1 < m && same(i - r - 1, i + r + 1)) ++r;
        if (i + r > right) {
            center = i;
            right = i + r;
        }
    }

    std::vector<bool> prefix(static_cast<std::size_t>(n) + 1, false);
    std::vector<bool> suffix(static_cast<std::size_t>(n) + 1, false);
    prefix[0] = suffix[0] = true;
    for (int k = 1; k <= n; ++k) {
        prefix[static_cast<std::size_t>(k)] = radius[static_cast<std::size_t>(k)] == k;
        suffix[static_cast<std::size_t>(k)] = radius[static_cast<std::size_t>(2 * n - k)] == k;
    }
    return {std::move(prefix), std::move(suffix)};
}

std::optional<std::pair<Word, Word>> split_concat_two_palindromes_fast(const Word& w) {
    if (w.empty()) throw PreconditionViolatedError("split_concat_two_palindromes_fast: empty word");
    const auto [prefix, suffix] = palindromic_edge_flags(w);
    const int n = w.length();
    for (int k = 1; k < n; ++k)
        if (prefix[static_cast<std::size_t>(k)] && suffix[static_cast<std::size_t>(n - k)])
            return std::make_pair(subword(w, 0, k), subword(w, k, n));
    return std::nullopt;
}

}  // namespace detail

}  // namespace fgpal
