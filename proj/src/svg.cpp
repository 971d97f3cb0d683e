#include "fgpal/svg.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "fgpal/circle.hpp"
#include "fgpal/format.hpp"

namespace fgpal {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kCenter = 210.0;
constexpr double kRadius = 150.0;

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v + 0.0);  // normalize -0
    return buf;
}

/// Point p_i sits at angle 90 deg - (i - 1) * 360 deg / n, read clockwise.
double point_angle(int index, int n) { return kPi / 2 - 2.0 * kPi * (index - 1) / n; }

std::string coord(double angle, double radius) {
    return num(kCenter + radius * std::cos(angle)) + "," + num(kCenter - radius * std::sin(angle));
}

}  // namespace

std::string render_circle_svg(int X, int Y, int first_point) {
    const CircleDiagram d = build_diagram(X, Y);
    const int n = d.point_count;
    if (first_point < 1 || first_point > n)
        throw PreconditionViolatedError("render_circle_svg: first point out of range");

    const int ax = std::abs(X);
    const int ay = std::abs(Y);
    // Symmetry point on the mirror line: the middle x point when |X| is odd,
    // otherwise the middle y point (|Y| is odd whenever |X| is even, and in
    // the even-total case both points lie on the same diameter).
    const int sym = (ax % 2 == 1) ? (ax + 1) / 2 : ax + (ay + 1) / 2;
    const double sym_angle = point_angle(sym, n);

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"420\" "
           "height=\"420\" viewBox=\"0 0 420 420\">\n";
    svg += "<rect width=\"420\" height=\"420\" fill=\"white\"/>\n";
    svg += "<text x=\"10\" y=\"20\" font-family=\"monospace\" font-size=\"14\">X=" +
           std::to_string(X) + " Y=" + std::to_string(Y) + " n=" + std::to_string(n) +
           " step=" + std::to_string(d.step) + " first=" + std::to_string(first_point) +
           "</text>\n";
    svg += "<circle cx=\"" + num(kCenter) + "\" cy=\"" + num(kCenter) + "\" r=\"" + num(kRadius) +
           "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";

    // Symmetry line: the full diameter through the symmetry point.
    {
        const double r = kRadius * 1.12;
        const std::string a = coord(sym_angle, r);
        const std::string b = coord(sym_angle + kPi, r);
        const auto comma_a = a.find(',');
        const auto comma_b = b.find(',');
        svg += "<line x1=\"" + a.substr(0, comma_a) + "\" y1=\"" + a.substr(comma_a + 1) +
               "\" x2=\"" + b.substr(0, comma_b) + "\" y2=\"" + b.substr(comma_b + 1) +
               "\" stroke=\"gray\" stroke-width=\"1\" stroke-dasharray=\"6,4\"/>\n";
    }

    // Visit-order polygon from the chosen first point.
    {
        std::string points;
        int pos = first_point;
        for (int j = 0; j < n; ++j) {
            if (j > 0) points += " ";
            points += coord(point_angle(pos, n), kRadius);
            pos = (pos - 1 + d.step) % n + 1;
        }
        points += " " + coord(point_angle(first_point, n), kRadius);
        svg += "<polyline points=\"" + points +
               "\" fill=\"none\" stroke=\"steelblue\" stroke-width=\"1.5\"/>\n";
    }

    // Distinguished points with their letter labels; the first point gets a ring.
    for (int i = 1; i <= n; ++i) {
        const double angle = point_angle(i, n);
        const std::string c = coord(angle, kRadius);
        const auto comma = c.find(',');
        if (i == first_point) {
            svg += "<circle cx=\"" + c.substr(0, comma) + "\" cy=\"" + c.substr(comma + 1) +
                   "\" r=\"9\" fill=\"none\" stroke=\"steelblue\" stroke-width=\"1.5\"/>\n";
        }
        svg += "<circle cx=\"" + c.substr(0, comma) + "\" cy=\"" + c.substr(comma + 1) +
               "\" r=\"4\" fill=\"black\"/>\n";
        const std::string lc = coord(angle, kRadius + 24.0);
        const auto lcomma = lc.find(',');
        svg += "<text x=\"" + lc.substr(0, lcomma) + "\" y=\"" + lc.substr(lcomma + 1) +
               "\" font-family=\"monospace\" font-size=\"16\" text-anchor=\"middle\" "
               "dominant-baseline=\"middle\">" +
               letter_char(Rank(2), d.labels[static_cast<std::size_t>(i - 1)]) + "</text>\n";
    }

    svg += "</svg>\n";
    return svg;
}

}  // namespace fgpal
