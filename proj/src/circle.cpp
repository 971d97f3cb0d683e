#include "fgpal/circle.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>

namespace fgpal {

CircleDiagram build_diagram(int X, int Y) {
    if (X == 0 && Y == 0) throw ZeroPairError("build_diagram: (0, 0) has no primitive");
    const int ax = std::abs(X);
    const int ay = std::abs(Y);
    if (std::gcd(ax, ay) != 1)
        throw NotCoprimeError("build_diagram: |" + std::to_string(X) + "| and |" +
                              std::to_string(Y) + "| are not coprime");

    CircleDiagram d;
    d.point_count = ax + ay;
    d.step = ax;
    d.x_sign = X >= 0 ? 1 : -1;
    d.y_sign = Y >= 0 ? 1 : -1;
    d.labels.reserve(static_cast<std::size_t>(d.point_count));
    const Letter lx = make_letter(0, d.x_sign);
    const Letter ly = make_letter(1, d.y_sign);
    for (int i = 0; i < ax; ++i) d.labels.push_back(lx);
    for (int i = 0; i < ay; ++i) d.labels.push_back(ly);
    return d;
}

Word oz_word(const CircleDiagram& diagram, FirstPoint first) {
    const int n = diagram.point_count;
    if (first.index < 1 || first.index > n)
        throw PreconditionViolatedError("oz_word: first point out of range 1.." +
                                        std::to_string(n));
    std::vector<Letter> letters;
    letters.reserve(static_cast<std::size_t>(n));
    int pos = first.index - 1;  // p_i maps to 0-based position i - 1
    for (int j = 0; j < n; ++j) {
        letters.push_back(diagram.labels[static_cast<std::size_t>(pos)]);
        pos = (pos + diagram.step) % n;
    }
    return Word(Rank(2), std::move(letters));
}

std::vector<Word> conjugacy_class(int X, int Y) {
    const CircleDiagram d = build_diagram(X, Y);
    std::vector<Word> out;
    out.reserve(static_cast<std::size_t>(d.point_count));
    for (int i = 1; i <= d.point_count; ++i) out.push_back(oz_word(d, FirstPoint{i}));
    return out;
}

bool is_primitive_fast(const Word& w) {
    if (w.rank().n() != 2) throw RankMismatchError("is_primitive_fast: rank-2 words only");
    if (w.empty()) throw EmptyWordError("is_primitive_fast: empty word");
    if (!is_cyclically_reduced(w))
        throw NotCyclicallyReducedError("is_primitive_fast: word is not cyclically reduced");

    const ExponentPair sums = exponent_pair(w);
    const int n = w.length();
    // Mixed-sign letters make |X| + |Y| < |w|, so this also rejects them.
    if (sums.total_abs() != n) return false;

    const int step = std::min(std::abs(sums.x_sum), std::abs(sums.y_sum));
    std::vector<bool> occupied(static_cast<std::size_t>(n), false);
    std::vector<int> x_positions;
    for (int j = 1; j <= n; ++j) {
        const int pos = static_cast<int>((static_cast<long long>(j) * step) % n);
        if (occupied[static_cast<std::size_t>(pos)]) return false;  // |X|, |Y| share a factor
        occupied[static_cast<std::size_t>(pos)] = true;
        if (w[j - 1].gen == 0) x_positions.push_back(pos);
    }

    const int k = static_cast<int>(x_positions.size());
    if (k <= 1) return true;  // zero or one x-type letter is vacuously consecutive
    std::sort(x_positions.begin(), x_positions.end());
    int breaks = 0;
    for (int i = 0; i < k; ++i) {
        const int cur = x_positions[static_cast<std::size_t>(i)];
        const int next = x_positions[static_cast<std::size_t>((i + 1) % k)];
        if ((next - cur + n) % n != 1) ++breaks;
    }
    return breaks <= 1;
}

bool is_primitive(const Word& w) {
    if (w.rank().n() != 2) throw RankMismatchError("is_primitive: rank-2 words only");
    if (w.empty()) return false;
    return is_primitive_fast(cyclic_reduce(w).second);
}

}  // namespace fgpal
