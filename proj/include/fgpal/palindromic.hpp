#pragma once

#include <utility>

#include "fgpal/word.hpp"

namespace fgpal {

// Palindromes among the cyclically reduced primitives of rank 2. A conjugacy
// class with odd exponent-sum total contains exactly one palindrome; a class
// with even total contains none, but contains exactly one word of the shape
// x^eps * (palindrome) and one of the shape y^delta * (palindrome).

/// First point that makes the circle construction read off the palindrome,
/// together with the distinguished point lying on the diagram's symmetry
/// line. Both indices are 1-based.
struct FirstPointSolution {
    int k;
    int symmetry_point;
};

/// The near-palindromic pair of an even-total class: the unique rotations
/// x_form = x^epsilon * w and y_form = y^delta * v with w, v palindromes of
/// length |X| + |Y| - 1. The prefix signs match the signs of X and Y.
struct NearPalindromicPair {
    Word x_form;
    Word y_form;
    int epsilon;
    int delta;
};

/// Solves for the first point whose reading is the palindrome. The reading
/// visits position k + j*|X| (mod n), so the midpoint visit lands on the
/// symmetry point p_m exactly when k = m - |X|*(n-1)/2 (mod n); m is
/// (|X|+1)/2 when |X| is odd and |X| + (|Y|+1)/2 when |Y| is odd. Residues
/// are normalized into 1..n. Requires gcd(|X|, |Y|) = 1 and X + Y odd.
FirstPointSolution palindromic_first_point(int X, int Y);

/// The unique palindrome in the conjugacy class of primitives with exponent
/// sums (X, Y); requires gcd(|X|, |Y|) = 1 and X + Y odd.
Word palindromic_primitive(int X, int Y);

/// Both near-palindromic forms of an even-total class, found by scanning all
/// |X| + |Y| first points. (The symmetry congruence
/// k = m - |X|*n/2 (mod n) with m one of the two symmetry points is an
/// equivalent closed form; the scan doubles as a uniqueness check.)
/// Requires gcd(|X|, |Y|) = 1 and X + Y even.
NearPalindromicPair near_palindromic_pair(int X, int Y);

/// The palindromic basis {palindromic_primitive(A, B),
/// palindromic_primitive(X, Y)}; requires AY - BX in {+1, -1} and both
/// totals odd. The pair is verified with is_basis before it is returned.
std::pair<Word, Word> palindromic_basis(int A, int B, int X, int Y);

/// Nielsen's commutator criterion: {u, v} is a basis of the rank-2 free
/// group iff the cyclically reduced core of u v u^-1 v^-1 is a rotation of
/// x y x^-1 y^-1 or of its inverse.
bool is_basis(const Word& u, const Word& v);

}  // namespace fgpal
