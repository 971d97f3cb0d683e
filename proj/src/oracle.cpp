#include "fgpal/oracle.hpp"

#include <algorithm>
#include <string>

#include "fgpal/format.hpp"

namespace fgpal {

namespace {

struct MoveSpec {
    const char* name;
    const char* x_image;
    const char* y_image;
};

// The rank-2 Whitehead set. Uppercase marks an inverse letter. The first
// eight entries are the signed permutations of {x, y}; the rest multiply or
// conjugate one generator by one letter. Each row's inverse is again a row.
constexpr MoveSpec kWhiteheadTable[] = {
    {"id", "x", "y"},
    {"x->X", "X", "y"},
    {"y->Y", "x", "Y"},
    {"x->X,y->Y", "X", "Y"},
    {"swap", "y", "x"},
    {"x->y,y->X", "y", "X"},
    {"x->Y,y->x", "Y", "x"},
    {"x->Y,y->X", "Y", "X"},
    {"x->xy", "xy", "y"},
    {"x->xY", "xY", "y"},
    {"x->yx", "yx", "y"},
    {"x->Yx", "Yx", "y"},
    {"x->Yxy", "Yxy", "y"},
    {"x->yxY", "yxY", "y"},
    {"y->yx", "x", "yx"},
    {"y->yX", "x", "yX"},
    {"y->xy", "x", "xy"},
    {"y->Xy", "x", "Xy"},
    {"y->Xyx", "x", "Xyx"},
    {"y->xyX", "x", "xyX"},
};

int cyclic_length(const Word& w) { return cyclic_reduce(w).second.length(); }

}  // namespace

const std::vector<WhiteheadMove>& whitehead_moves() {
    static const std::vector<WhiteheadMove> moves = [] {
        std::vector<WhiteheadMove> out;
        out.reserve(std::size(kWhiteheadTable));
        for (const MoveSpec& spec : kWhiteheadTable)
            out.push_back({spec.name, parse_word(spec.x_image), parse_word(spec.y_image)});
        return out;
    }();
    return moves;
}

Word apply_whitehead(const WhiteheadMove& move, const Word& w) {
    if (w.rank().n() != 2) throw RankMismatchError("apply_whitehead: rank-2 words only");
    std::vector<Letter> out;
    out.reserve(static_cast<std::size_t>(3 * w.length()));
    for (Letter l : w.letters()) {
        const Word& image = l.gen == 0 ? move.x_image : move.y_image;
        if (l.sign > 0) {
            for (Letter im : image.letters()) {
                if (!out.empty() && out.back().is_inverse_of(im))
                    out.pop_back();
                else
                    out.push_back(im);
            }
        } else {
            for (auto it = image.letters().rbegin(); it != image.letters().rend(); ++it) {
                const Letter im = it->inverse();
                if (!out.empty() && out.back().is_inverse_of(im))
                    out.pop_back();
                else
                    out.push_back(im);
            }
        }
    }
    return Word(w.rank(), std::move(out));
}

bool whitehead_primitive(const Word& w) {
    if (w.rank().n() != 2) throw RankMismatchError("whitehead_primitive: rank-2 words only");
    Word cur = cyclic_reduce(w).second;
    if (cur.empty()) return false;

    bool improved = true;
    while (improved && cur.length() > 1) {
        improved = false;
        for (const WhiteheadMove& move : whitehead_moves()) {
            const Word image = apply_whitehead(move, cur);
            if (cyclic_length(image) < cur.length()) {
                cur = cyclic_reduce(image).second;
                improved = true;
                break;
            }
        }
    }
    return cur.length() == 1;
}

WordStream::WordStream(int max_len, Rank rank) : max_len_(max_len), rank_(rank) {
    if (max_len < 0) throw Error("WordStream: negative maximum length");
}

bool WordStream::advance() {
    const int letter_count = 2 * rank_.n();
    // Two keys clash when they name a letter and its inverse.
    auto clashes = [](int a, int b) { return (a ^ b) == 1; };
    auto smallest_from = [&](int pos) {
        for (std::size_t i = static_cast<std::size_t>(pos); i < keys_.size(); ++i) {
            int v = 0;
            while (i > 0 && clashes(keys_[i - 1], v)) ++v;
            keys_[i] = v;
        }
    };

    int i = static_cast<int>(keys_.size()) - 1;
    while (i >= 0) {
        int v = keys_[static_cast<std::size_t>(i)] + 1;
        while (v < letter_count && i > 0 && clashes(keys_[static_cast<std::size_t>(i - 1)], v)) ++v;
        if (v < letter_count) {
            keys_[static_cast<std::size_t>(i)] = v;
            smallest_from(i + 1);
            return true;
        }
        --i;
    }
    // Exhausted this length; start the next one with the all-smallest word.
    ++length_;
    if (length_ > max_len_) return false;
    keys_.assign(static_cast<std::size_t>(length_), 0);
    smallest_from(0);
    return true;
}

std::optional<Word> WordStream::next() {
    if (!started_) {
        started_ = true;
        if (max_len_ < 0) return std::nullopt;
        return Word(rank_);  // the empty word opens the stream
    }
    if (!advance()) return std::nullopt;
    std::vector<Letter> ls;
    ls.reserve(keys_.size());
    for (int k : keys_) ls.push_back(make_letter(k / 2, k % 2 == 0 ? 1 : -1));
    return Word(rank_, std::move(ls));
}

std::vector<Word> enumerate_words(int max_len, Rank rank) {
    WordStream stream(max_len, rank);
    std::vector<Word> out;
    while (auto w = stream.next()) out.push_back(std::move(*w));
    return out;
}

std::vector<Word> enumerate_palindromes(int max_len, Rank rank) {
    std::vector<Word> out;
    out.emplace_back(rank);
    if (max_len < 1) return out;

    // A palindrome is determined by its half: h * reverse(h) for even length,
    // h * mid * reverse(h) for odd length with mid not cancelling against the
    // end of h. Grouped by total length, halves in stream order.
    std::vector<std::vector<Word>> halves_by_len(static_cast<std::size_t>(max_len / 2 + 1));
    for (const Word& h : enumerate_words(max_len / 2, rank))
        halves_by_len[static_cast<std::size_t>(h.length())].push_back(h);

    std::vector<Letter> singles;
    for (int g = 0; g < rank.n(); ++g)
        for (int s : {1, -1}) singles.push_back(make_letter(g, s));

    for (int len = 1; len <= max_len; ++len) {
        const int half = len / 2;
        for (const Word& h : halves_by_len[static_cast<std::size_t>(half)]) {
            if (len % 2 == 0) {
                out.push_back(concat_wc(h, reverse(h)));
            } else {
                for (Letter mid : singles) {
                    if (!h.empty() && h.back().is_inverse_of(mid)) continue;
                    std::vector<Letter> ls(h.letters().begin(), h.letters().end());
                    ls.push_back(mid);
                    ls.insert(ls.end(), h.letters().rbegin(), h.letters().rend());
                    out.emplace_back(rank, std::move(ls));
                }
            }
        }
    }
    return out;
}

std::optional<std::pair<Word, Word>> product_two_palindromes_oracle(const Word& w, int bound) {
    if (bound < w.length())
        throw PreconditionViolatedError("product_two_palindromes_oracle: bound below |w|");

    const auto wl = w.letters();
    std::vector<Letter> buffer;
    for (const Word& u : enumerate_palindromes(bound, w.rank())) {
        // v = u^-1 * w cancels exactly the longest common prefix of u and w.
        const auto ul = u.letters();
        std::size_t lcp = 0;
        while (lcp < ul.size() && lcp < wl.size() && ul[lcp] == wl[lcp]) ++lcp;
        const std::size_t v_len = ul.size() + wl.size() - 2 * lcp;
        if (v_len > static_cast<std::size_t>(bound)) continue;

        buffer.clear();
        for (std::size_t i = ul.size(); i > lcp; --i) buffer.push_back(ul[i - 1].inverse());
        buffer.insert(buffer.end(), wl.begin() + static_cast<std::ptrdiff_t>(lcp), wl.end());
        bool pal = true;
        for (std::size_t i = 0, j = buffer.size(); i + 1 < j; ++i, --j)
            if (!(buffer[i] == buffer[j - 1])) {
                pal = false;
                break;
            }
        if (pal) return std::make_pair(u, Word(w.rank(), buffer));
    }
    return std::nullopt;
}

}  // namespace fgpal
