#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "fgpal/word.hpp"

namespace fgpal {

// Palindrome-product structure of reduced words in any rank: splitting a
// word into two juxtaposed palindromes, the ping-pong normal form of a
// palindrome extended by a word, and a complete decider for palindromic
// width <= 2 with explicit witnesses.

enum class Side { Prefix, Suffix };

/// Normal form of a palindrome p against a word w whose side-appropriate
/// concatenation with p is a reduced palindrome. Case1: p = r (q r)^m and
/// w = q r (Prefix) or w = r q (Suffix) for palindromes q, r and m >= 0.
/// Case2: w is itself a palindrome and p = w^m with m >= 1.
struct PingPongResult {
    enum class Tag { Case1, Case2 };
    Tag tag;
    Word q;  // Case1 only
    Word r;  // Case1 only
    int m;
};

/// Verdict of the width decider, with witnesses. The group-level factors
/// (u, v) satisfy w = u * v with both factors palindromes and are present for
/// every verdict of width 1 or 2.
struct WidthDecomposition {
    enum class Tag {
        Identity,
        Palindrome,
        TwoPalindromes,
        ConjPalindrome,
        ConjTwoPalindromes,
        MoreThanTwo,
    };
    Tag tag;
    std::optional<Word> conjugator;  // ConjPalindrome, ConjTwoPalindromes
    std::optional<Word> p;           // all width-1/2 forms
    std::optional<Word> q;           // TwoPalindromes, ConjTwoPalindromes
    std::optional<std::pair<Word, Word>> factors;
};

/// The split of nonempty w into two nonempty juxtaposed palindromes with the
/// smallest first part, if one exists.
std::optional<std::pair<Word, Word>> split_concat_two_palindromes(const Word& w);

/// Every double-palindrome split of w, ordered by increasing first-part
/// length.
std::vector<std::pair<Word, Word>> all_double_palindrome_splits(const Word& w);

/// Given a palindrome p with |p| <= |w| whose concatenation with w (p on the
/// given side) is a cancellation-free reduced palindrome, peels p off:
/// Prefix returns the palindrome q with w = q p; Suffix returns q with
/// w = p q; when |p| = |w| the remainder is empty and w = p.
Word easy_case_extract(const Word& p, const Word& w, Side side);

/// Ping-pong normal form: repeatedly strips a reversed copy of the word part
/// off the palindrome part, flipping sides, until the palindrome part is no
/// longer than the word part. Among valid (q, r, m) representations this
/// peel order returns the one with maximal m; when w is a palindrome and p a
/// power of it, Case2 is reported.
PingPongResult pingpong_decompose(const Word& p, const Word& w, Side side);

/// Complete decider for palindromic width <= 2 in any rank. Identity for the
/// empty word; Palindrome for width 1; the two-palindrome and conjugated
/// forms for width 2; MoreThanTwo when the width exceeds two (the exact
/// width is not computed in that case).
WidthDecomposition palindromic_width_leq2(const Word& w);

/// palindromic_width_leq2 restricted to rank-2 primitives, for which
/// MoreThanTwo can never occur; throws NotPrimitiveError otherwise.
WidthDecomposition classify_primitive_form(const Word& w);

namespace detail {

/// flags.first[k] is true iff the length-k prefix of w is a palindrome,
/// flags.second[k] likewise for the length-k suffix; k ranges 0..|w|.
/// Linear time (Manacher radii); must agree with the naive scan.
std::pair<std::vector<bool>, std::vector<bool>> palindromic_edge_flags(const Word& w);

/// split_concat_two_palindromes via palindromic_edge_flags.
std::optional<std::pair<Word, Word>> split_concat_two_palindromes_fast(const Word& w);

}  // namespace detail

}  // namespace fgpal
