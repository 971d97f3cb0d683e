#include "fgpal/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "fgpal/circle.hpp"
#include "fgpal/decomposition.hpp"
#include "fgpal/format.hpp"
#include "fgpal/oracle.hpp"
#include "fgpal/palindromic.hpp"
#include "fgpal/svg.hpp"

namespace fgpal {

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitDisagree = 1;
constexpr int kExitInput = 2;
constexpr int kExitIo = 3;

int parse_int(const std::string& text, const char* what) {
    try {
        std::size_t used = 0;
        const int value = std::stoi(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return value;
    } catch (const std::exception&) {
        throw ParseError(std::string(what) + ": expected an integer, got '" + text + "'");
    }
}

const char* tag_name(WidthDecomposition::Tag tag) {
    switch (tag) {
        case WidthDecomposition::Tag::Identity: return "identity";
        case WidthDecomposition::Tag::Palindrome: return "palindrome";
        case WidthDecomposition::Tag::TwoPalindromes: return "two-palindromes";
        case WidthDecomposition::Tag::ConjPalindrome: return "conj-palindrome";
        case WidthDecomposition::Tag::ConjTwoPalindromes: return "conj-two-palindromes";
        case WidthDecomposition::Tag::MoreThanTwo: return "more-than-two";
    }
    return "?";
}

void emit(std::ostream& out, const json& j) { out << j.dump() << "\n"; }

struct ConstructArgs {
    std::string x, y;
    int first_point = 1;
    bool all = false;
    bool json_mode = false;
};

struct WordArgs {
    std::string word;
    bool oracle = false;
    bool json_mode = false;
    int rank = 2;
};

int cmd_construct(const ConstructArgs& a, std::ostream& out) {
    const int X = parse_int(a.x, "X");
    const int Y = parse_int(a.y, "Y");
    const CircleDiagram d = build_diagram(X, Y);
    if (a.all) {
        json words = json::array();
        for (const Word& w : conjugacy_class(X, Y)) {
            if (!a.json_mode) out << to_string(w) << "\n";
            words.push_back(to_string(w));
        }
        if (a.json_mode)
            emit(out, {{"command", "construct"}, {"exponent_sums", {X, Y}}, {"words", words}});
        return kExitOk;
    }
    const Word w = oz_word(d, FirstPoint{a.first_point});
    if (a.json_mode)
        emit(out, {{"command", "construct"},
                   {"exponent_sums", {X, Y}},
                   {"first_point", a.first_point},
                   {"word", to_string(w)}});
    else
        out << to_string(w) << "\n";
    return kExitOk;
}

int cmd_palprim(const std::string& xs, const std::string& ys, bool json_mode, std::ostream& out) {
    const int X = parse_int(xs, "X");
    const int Y = parse_int(ys, "Y");
    const Word w = palindromic_primitive(X, Y);
    if (json_mode)
        emit(out, {{"command", "palprim"},
                   {"exponent_sums", {X, Y}},
                   {"first_point", palindromic_first_point(X, Y).k},
                   {"word", to_string(w)}});
    else
        out << to_string(w) << "\n";
    return kExitOk;
}

int cmd_nearpal(const std::string& xs, const std::string& ys, bool json_mode, std::ostream& out) {
    const int X = parse_int(xs, "X");
    const int Y = parse_int(ys, "Y");
    const NearPalindromicPair pair = near_palindromic_pair(X, Y);
    const Word xw = subword(pair.x_form, 1, pair.x_form.length());
    const Word yv = subword(pair.y_form, 1, pair.y_form.length());
    if (json_mode) {
        emit(out, {{"command", "nearpal"},
                   {"exponent_sums", {X, Y}},
                   {"x_form",
                    {{"word", to_string(pair.x_form)},
                     {"palindrome", to_string(xw)},
                     {"epsilon", pair.epsilon}}},
                   {"y_form",
                    {{"word", to_string(pair.y_form)},
                     {"palindrome", to_string(yv)},
                     {"delta", pair.delta}}}});
    } else {
        out << letter_char(Rank(2), pair.x_form.front()) << "|" << to_string(xw) << "\n";
        out << letter_char(Rank(2), pair.y_form.front()) << "|" << to_string(yv) << "\n";
    }
    return kExitOk;
}

int cmd_palbasis(const std::string& as, const std::string& bs, const std::string& xs,
                 const std::string& ys, bool json_mode, std::ostream& out) {
    const int A = parse_int(as, "A");
    const int B = parse_int(bs, "B");
    const int X = parse_int(xs, "X");
    const int Y = parse_int(ys, "Y");
    const auto [p, q] = palindromic_basis(A, B, X, Y);
    if (json_mode)
        emit(out, {{"command", "palbasis"},
                   {"first", {{"exponent_sums", {A, B}}, {"word", to_string(p)}}},
                   {"second", {{"exponent_sums", {X, Y}}, {"word", to_string(q)}}}});
    else
        out << to_string(p) << "\n" << to_string(q) << "\n";
    return kExitOk;
}

int cmd_primitive(const WordArgs& a, std::ostream& out) {
    const Word w = parse_word(a.word, Rank(2));
    const bool fast = is_primitive(w);
    bool agree = true;
    json j = {{"command", "primitive"}, {"word", to_string(w)}, {"primitive", fast}};
    if (a.oracle) {
        const bool oracle = whitehead_primitive(w);
        agree = oracle == fast;
        j["oracle"] = {{"primitive", oracle}, {"agrees", agree}};
    }
    if (a.json_mode)
        emit(out, j);
    else {
        out << (fast ? "true" : "false") << "\n";
        if (a.oracle) out << (agree ? "oracle: agree" : "oracle: disagree") << "\n";
    }
    return agree ? kExitOk : kExitDisagree;
}

int cmd_decompose(const WordArgs& a, std::ostream& out) {
    const Word w = parse_word(a.word, Rank(a.rank));
    const WidthDecomposition d = palindromic_width_leq2(w);

    json witnesses = json::object();
    std::string line = tag_name(d.tag);
    if (d.conjugator) {
        line += " a=" + to_string(*d.conjugator);
        witnesses["a"] = to_string(*d.conjugator);
    }
    if (d.p) {
        line += " p=" + to_string(*d.p);
        witnesses["p"] = to_string(*d.p);
    }
    if (d.q) {
        line += " q=" + to_string(*d.q);
        witnesses["q"] = to_string(*d.q);
    }
    if (d.factors) {
        line += "; factors: " + to_string(d.factors->first) + " * " + to_string(d.factors->second);
        witnesses["factors"] = {to_string(d.factors->first), to_string(d.factors->second)};
    }

    bool agree = true;
    json j = {{"command", "decompose"},
              {"word", to_string(w)},
              {"tag", tag_name(d.tag)},
              {"witnesses", witnesses},
              {"exponent_sums", exponent_sums(w)}};
    std::string oracle_line;
    if (a.oracle) {
        const int bound = std::max(12, w.length());
        const auto found = product_two_palindromes_oracle(w, bound);
        const bool narrow = d.tag != WidthDecomposition::Tag::MoreThanTwo;
        agree = found.has_value() == narrow;
        oracle_line = agree ? "oracle: agree" : "oracle: disagree";
        json o = {{"bound", bound}, {"found", found.has_value()}, {"agrees", agree}};
        if (found) o["factors"] = {to_string(found->first), to_string(found->second)};
        j["oracle"] = o;
    }

    if (a.json_mode)
        emit(out, j);
    else {
        out << line << "\n";
        if (a.oracle) out << oracle_line << "\n";
    }
    return agree ? kExitOk : kExitDisagree;
}

int cmd_circle(const std::string& xs, const std::string& ys, const std::string& path,
               int first_point, bool json_mode, std::ostream& out) {
    const int X = parse_int(xs, "X");
    const int Y = parse_int(ys, "Y");
    const std::string svg = render_circle_svg(X, Y, first_point);
    std::ofstream file(path, std::ios::binary);
    if (!file || !(file << svg) || !file.flush())
        throw std::ios_base::failure("cannot write " + path);
    if (json_mode)
        emit(out, {{"command", "circle"},
                   {"exponent_sums", {X, Y}},
                   {"first_point", first_point},
                   {"path", path},
                   {"points", std::abs(X) + std::abs(Y)}});
    else
        out << "wrote " << path << "\n";
    return kExitOk;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Primitive elements and palindromes in the rank-2 free group"};
    app.require_subcommand(1);

    ConstructArgs construct_args;
    auto* construct = app.add_subcommand(
        "construct", "Circle-construction primitive with exponent sums (X, Y)");
    construct->add_option("X", construct_args.x)->required();
    construct->add_option("Y", construct_args.y)->required();
    construct->add_option("--first-point", construct_args.first_point,
                          "First point index, 1-based");
    construct->add_flag("--all", construct_args.all, "Print the whole conjugacy class");
    construct->add_flag("--json", construct_args.json_mode);

    std::string pp_x, pp_y;
    bool pp_json = false;
    auto* palprim =
        app.add_subcommand("palprim", "The unique palindromic primitive for odd X + Y");
    palprim->add_option("X", pp_x)->required();
    palprim->add_option("Y", pp_y)->required();
    palprim->add_flag("--json", pp_json);

    std::string np_x, np_y;
    bool np_json = false;
    auto* nearpal =
        app.add_subcommand("nearpal", "The two near-palindromic forms for even X + Y");
    nearpal->add_option("X", np_x)->required();
    nearpal->add_option("Y", np_y)->required();
    nearpal->add_flag("--json", np_json);

    std::string pb_a, pb_b, pb_x, pb_y;
    bool pb_json = false;
    auto* palbasis = app.add_subcommand("palbasis", "Palindromic basis for (A, B), (X, Y)");
    palbasis->add_option("A", pb_a)->required();
    palbasis->add_option("B", pb_b)->required();
    palbasis->add_option("X", pb_x)->required();
    palbasis->add_option("Y", pb_y)->required();
    palbasis->add_flag("--json", pb_json);

    WordArgs prim_args;
    auto* primitive = app.add_subcommand("primitive", "Fast primitivity test");
    primitive->add_option("WORD", prim_args.word)->required();
    primitive->add_flag("--oracle", prim_args.oracle, "Cross-check with Whitehead reduction");
    primitive->add_flag("--json", prim_args.json_mode);

    WordArgs dec_args;
    auto* decompose =
        app.add_subcommand("decompose", "Palindromic width <= 2 decomposition with witnesses");
    decompose->add_option("WORD", dec_args.word)->required();
    decompose->add_option("--rank", dec_args.rank, "Rank of the ambient free group")
        ->check(CLI::Range(1, 26));
    decompose->add_flag("--oracle", dec_args.oracle,
                        "Cross-check with the exhaustive palindrome-product search");
    decompose->add_flag("--json", dec_args.json_mode);

    std::string ci_x, ci_y, ci_out;
    int ci_first = 1;
    bool ci_json = false;
    auto* circle = app.add_subcommand("circle", "Render the circle diagram as SVG");
    circle->add_option("X", ci_x)->required();
    circle->add_option("Y", ci_y)->required();
    circle->add_option("OUT", ci_out, "Output SVG path")->required();
    circle->add_option("--first-point", ci_first, "First point for the visit polygon");
    circle->add_flag("--json", ci_json);

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "fgpal: " << e.what() << "\n";
        return kExitInput;
    }

    try {
        if (construct->parsed()) return cmd_construct(construct_args, out);
        if (palprim->parsed()) return cmd_palprim(pp_x, pp_y, pp_json, out);
        if (nearpal->parsed()) return cmd_nearpal(np_x, np_y, np_json, out);
        if (palbasis->parsed()) return cmd_palbasis(pb_a, pb_b, pb_x, pb_y, pb_json, out);
        if (primitive->parsed()) return cmd_primitive(prim_args, out);
        if (decompose->parsed()) return cmd_decompose(dec_args, out);
        if (circle->parsed()) return cmd_circle(ci_x, ci_y, ci_out, ci_first, ci_json, out);
    } catch (const std::ios_base::failure& e) {
        err << "fgpal: " << e.what() << "\n";
        return kExitIo;
    } catch (const Error& e) {
        err << "fgpal: " << e.what() << "\n";
        return kExitInput;
    }
    err << "fgpal: no command given\n";
    return kExitInput;
}

}  // namespace fgpal
