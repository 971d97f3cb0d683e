#pragma once

#include <string>
#include <string_view>

#include "fgpal/word.hpp"

namespace fgpal {

// Word text format. Lowercase letters denote generators, the matching
// uppercase letter the inverse; the empty word prints as "1". Rank 2 uses the
// alphabet x, y (after the classical generator names); other ranks use a, b,
// c, ... in generator order.

/// Alphabet for a given rank, one lowercase char per generator.
std::string_view alphabet_for(Rank rank);

/// Compact character for one letter.
char letter_char(Rank rank, Letter l);

/// Compact form of w; "1" for the empty word.
std::string to_string(const Word& w);

/// Parses compact form, plus `x^-1 y^3`-style exponent notation with optional
/// whitespace between letter groups. Always returns the free reduction.
Word parse_word(std::string_view text, Rank rank = Rank(2));

}  // namespace fgpal
