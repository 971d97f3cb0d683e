#include "fgpal/word.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace fgpal {

namespace {

void check_letter_range(Rank rank, Letter l) {
    if (l.gen < 0 || l.gen >= rank.n())
        throw LetterOutOfRangeError("letter generator " + std::to_string(int(l.gen)) +
                                    " outside rank " + std::to_string(rank.n()));
    if (l.sign != 1 && l.sign != -1)
        throw Error("letter sign must be +1 or -1");
}

}  // namespace

Letter make_letter(int generator, int sign) {
    if (generator < 0 || generator > 25) throw LetterOutOfRangeError("generator index out of range");
    if (sign != 1 && sign != -1) throw Error("letter sign must be +1 or -1");
    return {static_cast<std::int8_t>(generator), static_cast<std::int8_t>(sign)};
}

Word::Word(Rank rank, std::vector<Letter> letters) : rank_(rank), letters_(std::move(letters)) {
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        check_letter_range(rank_, letters_[i]);
        if (i > 0 && letters_[i - 1].is_inverse_of(letters_[i]))
            throw Error("word is not freely reduced at position " + std::to_string(i));
    }
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (auto c = a.rank_.n() <=> b.rank_.n(); c != 0) return c;
    if (auto c = a.letters_.size() <=> b.letters_.size(); c != 0) return c;
    return std::lexicographical_compare_three_way(a.letters_.begin(), a.letters_.end(),
                                                  b.letters_.begin(), b.letters_.end());
}

bool ExponentPair::coprime() const {
    return std::gcd(std::abs(x_sum), std::abs(y_sum)) == 1;
}

int ExponentPair::total_abs() const { return std::abs(x_sum) + std::abs(y_sum); }

Word reduce(Rank rank, std::span<const Letter> raw) {
    std::vector<Letter> out;
    out.reserve(raw.size());
    for (Letter l : raw) {
        check_letter_range(rank, l);
        if (!out.empty() && out.back().is_inverse_of(l))
            out.pop_back();
        else
            out.push_back(l);
    }
    return Word(rank, std::move(out));
}

Word concat_group(const Word& u, const Word& v) {
    if (!(u.rank() == v.rank())) throw RankMismatchError("concat_group: rank mismatch");
    std::vector<Letter> out(u.letters().begin(), u.letters().end());
    for (Letter l : v.letters()) {
        if (!out.empty() && out.back().is_inverse_of(l))
            out.pop_back();
        else
            out.push_back(l);
    }
    return Word(u.rank(), std::move(out));
}

Word concat_wc(const Word& u, const Word& v) {
    if (!(u.rank() == v.rank())) throw RankMismatchError("concat_wc: rank mismatch");
    if (!u.empty() && !v.empty() && u.back().is_inverse_of(v.front()))
        throw CancellationAtSeamError("concat_wc: cancellation at the seam");
    std::vector<Letter> out;
    out.reserve(static_cast<std::size_t>(u.length() + v.length()));
    out.insert(out.end(), u.letters().begin(), u.letters().end());
    out.insert(out.end(), v.letters().begin(), v.letters().end());
    return Word(u.rank(), std::move(out));
}

Word invert(const Word& w) {
    std::vector<Letter> out;
    out.reserve(static_cast<std::size_t>(w.length()));
    for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
        out.push_back(it->inverse());
    return Word(w.rank(), std::move(out));
}

Word reverse(const Word& w) {
    std::vector<Letter> out(w.letters().rbegin(), w.letters().rend());
    return Word(w.rank(), std::move(out));
}

bool is_palindrome(const Word& w) {
    auto ls = w.letters();
    for (std::size_t i = 0, j = ls.size(); i + 1 < j; ++i, --j)
        if (!(ls[i] == ls[j - 1])) return false;
    return true;
}

std::vector<int> exponent_sums(const Word& w) {
    std::vector<int> sums(static_cast<std::size_t>(w.rank().n()), 0);
    for (Letter l : w.letters()) sums[static_cast<std::size_t>(l.gen)] += l.sign;
    return sums;
}

ExponentPair exponent_pair(const Word& w) {
    if (w.rank().n() != 2) throw RankMismatchError("exponent_pair: rank-2 words only");
    auto sums = exponent_sums(w);
    return {sums[0], sums[1]};
}

bool is_cyclically_reduced(const Word& w) {
    return w.empty() || !w.front().is_inverse_of(w.back());
}

std::pair<Word, Word> cyclic_reduce(const Word& w) {
    int i = 0;
    int j = w.length() - 1;
    while (i < j && w[i].is_inverse_of(w[j])) {
        ++i;
        --j;
    }
    return {subword(w, 0, i), subword(w, i, j + 1)};
}

std::vector<Word> rotations(const Word& w) {
    if (!is_cyclically_reduced(w))
        throw NotCyclicallyReducedError("rotations: word is not cyclically reduced");
    const int n = w.length();
    std::vector<Word> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int s = 0; s < n; ++s) {
        std::vector<Letter> ls;
        ls.reserve(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) ls.push_back(w[(s + i) % n]);
        out.emplace_back(w.rank(), std::move(ls));
    }
    return out;
}

Word subword(const Word& w, int begin, int end) {
    if (begin < 0 || end > w.length() || begin > end)
        throw Error("subword: bad slice bounds");
    std::vector<Letter> ls(w.letters().begin() + begin, w.letters().begin() + end);
    return Word(w.rank(), std::move(ls));
}

bool starts_with(const Word& w, const Word& prefix) {
    if (prefix.length() > w.length()) return false;
    return std::equal(prefix.letters().begin(), prefix.letters().end(), w.letters().begin());
}

bool ends_with(const Word& w, const Word& suffix) {
    if (suffix.length() > w.length()) return false;
    return std::equal(suffix.letters().rbegin(), suffix.letters().rend(), w.letters().rbegin());
}

Word power_wc(const Word& w, int m) {
    if (m < 0) throw Error("power_wc: negative exponent");
    Word acc(w.rank());
    for (int i = 0; i < m; ++i) acc = concat_wc(acc, w);
    return acc;
}

}  // namespace fgpal
