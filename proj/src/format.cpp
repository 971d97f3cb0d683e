#include "fgpal/format.hpp"

#include <cctype>

namespace fgpal {

namespace {

constexpr std::string_view kAllLetters = "abcdefghijklmnopqrstuvwxyz";
constexpr int kMaxExponent = 1 << 20;

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

}  // namespace

std::string_view alphabet_for(Rank rank) {
    if (rank.n() == 2) return "xy";
    return kAllLetters.substr(0, static_cast<std::size_t>(rank.n()));
}

char letter_char(Rank rank, Letter l) {
    char c = alphabet_for(rank)[static_cast<std::size_t>(l.gen)];
    return l.sign < 0 ? static_cast<char>(std::toupper(static_cast<unsigned char>(c))) : c;
}

std::string to_string(const Word& w) {
    if (w.empty()) return "1";
    std::string out;
    out.reserve(static_cast<std::size_t>(w.length()));
    for (Letter l : w.letters()) out.push_back(letter_char(w.rank(), l));
    return out;
}

Word parse_word(std::string_view text, Rank rank) {
    const std::string_view alpha = alphabet_for(rank);
    std::vector<Letter> raw;
    std::size_t i = 0;
    bool saw_one = false;
    bool saw_letter = false;

    while (i < text.size()) {
        char c = text[i];
        if (is_space(c)) {
            ++i;
            continue;
        }
        if (c == '1') {
            saw_one = true;
            ++i;
            continue;
        }
        if (!std::isalpha(static_cast<unsigned char>(c)))
            throw ParseError(std::string("unexpected character '") + c + "' in word");
        const bool upper = std::isupper(static_cast<unsigned char>(c)) != 0;
        const char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        const std::size_t pos = alpha.find(lower);
        if (pos == std::string_view::npos)
            throw ParseError(std::string("letter '") + c + "' is outside the rank-" +
                             std::to_string(rank.n()) + " alphabet");
        saw_letter = true;
        Letter base = make_letter(static_cast<int>(pos), upper ? -1 : 1);
        ++i;

        long long exponent = 1;
        if (i < text.size() && text[i] == '^') {
            ++i;
            bool negative = false;
            if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
                negative = text[i] == '-';
                ++i;
            }
            if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
                throw ParseError("expected an integer after '^'");
            exponent = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                exponent = exponent * 10 + (text[i] - '0');
                if (exponent > kMaxExponent) throw ParseError("exponent too large");
                ++i;
            }
            if (negative) exponent = -exponent;
        }

        Letter l = exponent < 0 ? base.inverse() : base;
        for (long long k = 0; k < (exponent < 0 ? -exponent : exponent); ++k) raw.push_back(l);
    }

    if (saw_one && saw_letter)
        throw ParseError("'1' denotes the empty word and cannot be mixed with letters");
    if (!saw_one && !saw_letter)
        throw ParseError("no word found; write '1' for the empty word");

    return reduce(rank, raw);
}

}  // namespace fgpal
