#pragma once

#include <vector>

#include "fgpal/word.hpp"

namespace fgpal {

// The circle construction of Osborne and Zieschang for rank 2: |X| + |Y|
// equally spaced points on a circle, the first |X| labeled with the x-letter
// and the rest with the y-letter, read off with clockwise step |X|. Every
// cyclically reduced primitive with exponent sums (X, Y) arises from exactly
// one choice of first point.

/// The labeled point circle. Point indices are 1-based around the circle in
/// clockwise order, matching the usual p_1 .. p_n notation; `labels` is
/// 0-based storage, so p_i carries labels[i - 1].
struct CircleDiagram {
    int point_count;             // n = |X| + |Y|
    std::vector<Letter> labels;  // first |X| entries are the x-letter
    int step;                    // |X|
    int x_sign;
    int y_sign;
};

/// 1-based index of the point where reading starts.
struct FirstPoint {
    int index;
};

/// Builds the diagram for exponent sums (X, Y).
/// Requires (X, Y) != (0, 0) and gcd(|X|, |Y|) = 1.
CircleDiagram build_diagram(int X, int Y);

/// Reads the word for one choice of first point: the labels of every |X|-th
/// point clockwise. The result is cyclically reduced and primitive with
/// exponent sums (X, Y).
Word oz_word(const CircleDiagram& diagram, FirstPoint first);

/// All |X| + |Y| cyclically reduced primitives with exponent sums (X, Y), one
/// per first point, pairwise distinct and mutual rotations.
std::vector<Word> conjugacy_class(int X, int Y);

/// Fast primitivity test for a nonempty cyclically reduced rank-2 word:
/// reject unless |X| + |Y| = |w|, place letter j at circular position
/// j * min(|X|, |Y|) mod |w| rejecting collisions, and accept iff the x-type
/// letters occupy consecutive places around the circle. Integer arithmetic
/// throughout.
bool is_primitive_fast(const Word& w);

/// Primitivity of an arbitrary rank-2 word: cyclically reduce, then test the
/// core. The empty word is not primitive.
bool is_primitive(const Word& w);

}  // namespace fgpal
