#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "fgpal/errors.hpp"

namespace fgpal {

/// Number of generators of the ambient free group. At most 26 so that every
/// generator serializes as one latin letter.
class Rank {
public:
    explicit Rank(int n) : n_(n) {
        if (n < 1 || n > 26) throw Error("rank must be between 1 and 26");
    }
    int n() const { return n_; }

    friend bool operator==(Rank a, Rank b) { return a.n_ == b.n_; }

private:
    int n_;
};

/// One alphabet symbol: a 0-based generator index and a sign. Sign -1 is the
/// inverse letter.
struct Letter {
    std::int8_t gen;
    std::int8_t sign;

    Letter inverse() const { return {gen, static_cast<std::int8_t>(-sign)}; }
    bool is_inverse_of(Letter o) const { return gen == o.gen && sign == -o.sign; }

    /// Enumeration key; orders letters x < x^-1 < y < y^-1 < ...
    int key() const { return 2 * gen + (sign < 0 ? 1 : 0); }

    friend bool operator==(const Letter& a, const Letter& b) {
        return a.gen == b.gen && a.sign == b.sign;
    }
    friend std::strong_ordering operator<=>(const Letter& a, const Letter& b) {
        return a.key() <=> b.key();
    }
};

Letter make_letter(int generator, int sign);

/// A freely reduced word, the universal currency of every operation here.
/// Immutable after construction; the constructor rejects letter sequences
/// that are not freely reduced or that refer to generators outside the rank.
class Word {
public:
    explicit Word(Rank rank) : rank_(rank) {}
    Word(Rank rank, std::vector<Letter> letters);

    Rank rank() const { return rank_; }
    int length() const { return static_cast<int>(letters_.size()); }
    bool empty() const { return letters_.empty(); }
    std::span<const Letter> letters() const { return letters_; }
    Letter front() const { return letters_.front(); }
    Letter back() const { return letters_.back(); }
    Letter operator[](int i) const { return letters_[static_cast<std::size_t>(i)]; }

    friend bool operator==(const Word& a, const Word& b) {
        return a.rank_ == b.rank_ && a.letters_ == b.letters_;
    }
    /// Orders by rank, then length, then letter keys; matches enumeration order.
    friend std::strong_ordering operator<=>(const Word& a, const Word& b);

private:
    Rank rank_;
    std::vector<Letter> letters_;
};

/// Signed generator counts of a rank-2 word.
struct ExponentPair {
    int x_sum = 0;
    int y_sum = 0;

    bool coprime() const;
    bool sum_is_odd() const { return ((x_sum + y_sum) % 2 + 2) % 2 == 1; }
    int total_abs() const;

    friend bool operator==(const ExponentPair&, const ExponentPair&) = default;
};

/// Free reduction of a raw letter sequence: the unique reduced word equal to
/// it in the group. Single stack scan; confluence of free reduction makes the
/// result order-independent.
Word reduce(Rank rank, std::span<const Letter> raw);

/// Group product: juxtapose and cancel at the seam.
Word concat_group(const Word& u, const Word& v);

/// Concatenation asserted to have no cancellation at the seam; the result has
/// length |u| + |v|. Throws CancellationAtSeamError when the hypothesis fails.
Word concat_wc(const Word& u, const Word& v);

/// Group inverse: letters reversed with signs flipped.
Word invert(const Word& w);

/// Letter sequence reversed, signs kept. Reversal of a reduced word is
/// reduced; the map is an involution.
Word reverse(const Word& w);

/// True iff w reads the same forwards and backwards. The empty word counts.
bool is_palindrome(const Word& w);

/// Componentwise signed letter counts, one entry per generator.
std::vector<int> exponent_sums(const Word& w);

/// Rank-2 convenience for exponent_sums.
ExponentPair exponent_pair(const Word& w);

/// First and last letters are not mutually inverse (vacuously true for the
/// empty word and single letters).
bool is_cyclically_reduced(const Word& w);

/// Splits w as conjugator * core * conjugator^-1 with no cancellation in the
/// three-fold concatenation; the core is cyclically reduced and the
/// conjugator is the maximal such prefix.
std::pair<Word, Word> cyclic_reduce(const Word& w);

/// The |w| cyclic permutations of a cyclically reduced word, starting from w
/// itself. Duplicates are retained for periodic words so that rotations stay
/// in bijection with starting positions.
std::vector<Word> rotations(const Word& w);

/// Letters [begin, end) of w as a word; a contiguous slice of a reduced word
/// is reduced.
Word subword(const Word& w, int begin, int end);

bool starts_with(const Word& w, const Word& prefix);
bool ends_with(const Word& w, const Word& suffix);

/// w concatenated with itself m times (m >= 0), all seams cancellation-free.
Word power_wc(const Word& w, int m);

}  // namespace fgpal
