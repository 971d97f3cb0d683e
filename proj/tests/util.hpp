#pragma once

#include <random>
#include <vector>

#include "fgpal/format.hpp"
#include "fgpal/word.hpp"

namespace fgpal::testutil {

/// Shorthand for rank-2 word literals in tests.
inline Word W(std::string_view s) { return parse_word(s, Rank(2)); }

/// Uniformly random raw letter sequence (not necessarily reduced).
inline std::vector<Letter> random_raw(std::mt19937& rng, int len, int rank_n = 2) {
    std::uniform_int_distribution<int> gen(0, rank_n - 1);
    std::uniform_int_distribution<int> sign(0, 1);
    std::vector<Letter> out;
    out.reserve(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i)
        out.push_back(make_letter(gen(rng), sign(rng) ? 1 : -1));
    return out;
}

/// Random freely reduced word of exactly the given length.
inline Word random_word(std::mt19937& rng, int len, int rank_n = 2) {
    const Rank rank(rank_n);
    std::uniform_int_distribution<int> pick(0, 2 * rank_n - 1);
    std::vector<Letter> out;
    out.reserve(static_cast<std::size_t>(len));
    while (static_cast<int>(out.size()) < len) {
        const int key = pick(rng);
        const Letter l = make_letter(key / 2, key % 2 == 0 ? 1 : -1);
        if (!out.empty() && out.back().is_inverse_of(l)) continue;
        out.push_back(l);
    }
    return Word(rank, std::move(out));
}

}  // namespace fgpal::testutil
