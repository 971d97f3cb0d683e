#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "fgpal/word.hpp"

namespace fgpal {

// Independent brute-force ground truth for the rank-2 theory: primitivity by
// greedy Whitehead reduction, bounded word enumeration, and exhaustive
// two-palindrome product search. Nothing here touches the circle
// construction.

/// One automorphism of the rank-2 free group from the finite Whitehead set,
/// given by the images of the generators. The set is closed under inversion.
struct WhiteheadMove {
    std::string_view name;
    Word x_image;
    Word y_image;
};

/// The materialized rank-2 Whitehead set: the eight signed letter
/// permutations plus the twelve one-sided multiplications and conjugations
/// by a single letter.
const std::vector<WhiteheadMove>& whitehead_moves();

/// Applies a move letterwise and freely reduces.
Word apply_whitehead(const WhiteheadMove& move, const Word& w);

/// Primitivity oracle: greedily applies any move that strictly shrinks the
/// cyclically reduced length until none does, then answers true iff the
/// minimum has cyclic length 1. Rests on the classical fact that a
/// non-minimal primitive always admits a length-reducing Whitehead move.
bool whitehead_primitive(const Word& w);

/// Single-consumer stream of all freely reduced words of length <= max_len,
/// ordered by length and then lexicographically by letter (x < x^-1 < y <
/// y^-1 < ...). The count at length L >= 1 is 2n * (2n-1)^(L-1).
class WordStream {
public:
    WordStream(int max_len, Rank rank = Rank(2));

    std::optional<Word> next();

private:
    bool advance();

    int max_len_;
    Rank rank_;
    int length_ = 0;
    bool started_ = false;
    std::vector<int> keys_;
};

/// The stream, collected.
std::vector<Word> enumerate_words(int max_len, Rank rank = Rank(2));

/// All palindromes of length <= max_len, in the stream's order. Generated
/// from half-words, not by filtering, so the cost is proportional to the
/// output.
std::vector<Word> enumerate_palindromes(int max_len, Rank rank = Rank(2));

/// Exhaustive search for palindromes u, v with |u|, |v| <= bound and
/// u * v = w in the group; the first hit in enumeration order, if any.
/// Requires bound >= |w|. Verdicts are exact for cyclically reduced words
/// with bound >= |w| and conservative otherwise (a factorization needing
/// longer factors than the bound is reported as absent).
std::optional<std::pair<Word, Word>> product_two_palindromes_oracle(const Word& w, int bound);

}  // namespace fgpal
