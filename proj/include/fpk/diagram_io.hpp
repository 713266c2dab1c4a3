#pragma once

/// Text format for freely periodic diagrams ("fpdiagram v1").
///
///   fpdiagram v1
///   p=3 q=1 n=2
///   L0 -> R1
///   L1 -> R0
///
/// Line-oriented UTF-8. `#` starts a comment, blank lines are ignored, and
/// the two header lines must come first among the significant lines. Each
/// remaining line is one oriented strand, `<endpoint> -> <endpoint>`, where
/// an endpoint is L<index> or R<index> with index in [0, n-1]. q may be any
/// integer (twist counts are naturally signed); it is reduced mod p on input.
///
/// Serialization is canonical: no comments, single spaces, strands sorted by
/// their `from` endpoint (Left before Right, then by index), LF endings.

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fpk/diagram.hpp"
#include "fpk/errors.hpp"

namespace fpk {

namespace detail {

struct Token {
    std::string_view text;
    int column;  // 1-based start column
};

/// Splits one line into whitespace-separated tokens, dropping any comment.
inline std::vector<Token> tokenize_line(std::string_view line) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == '#') break;
        if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
            ++i;
            continue;
        }
        std::size_t begin = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' &&
               line[i] != '\r' && line[i] != '#') {
            ++i;
        }
        tokens.push_back(
            {line.substr(begin, i - begin), static_cast<int>(begin + 1)});
    }
    return tokens;
}

inline std::int64_t parse_int(std::string_view text, int line, int column,
                              const std::string& what) {
    std::int64_t value = 0;
    auto [ptr, ec] =
        std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw SyntaxError("expected integer for " + what + ", got '" +
                          std::string(text) + "'",
                          line, column);
    }
    return value;
}

/// Parses `key=<int>` with a fixed expected key.
inline std::int64_t parse_keyval(const Token& tok, std::string_view key,
                                 int line) {
    if (tok.text.size() < key.size() + 1 ||
        tok.text.substr(0, key.size()) != key ||
        tok.text[key.size()] != '=') {
        throw SyntaxError("expected '" + std::string(key) + "=<int>', got '" +
                          std::string(tok.text) + "'",
                          line, tok.column);
    }
    return parse_int(tok.text.substr(key.size() + 1), line,
                     tok.column + static_cast<int>(key.size()) + 1,
                     std::string(key));
}

inline Endpoint parse_endpoint(const Token& tok, int line) {
    if (tok.text.size() < 2 || (tok.text[0] != 'L' && tok.text[0] != 'R')) {
        throw SyntaxError("expected endpoint L<index> or R<index>, got '" +
                          std::string(tok.text) + "'",
                          line, tok.column);
    }
    Side side = tok.text[0] == 'L' ? Side::left : Side::right;
    std::string_view digits = tok.text.substr(1);
    for (char c : digits) {
        if (c < '0' || c > '9') {
            throw SyntaxError("invalid endpoint index in '" +
                              std::string(tok.text) + "'",
                              line, tok.column);
        }
    }
    return Endpoint{side, parse_int(digits, line, tok.column + 1, "index")};
}

}  // namespace detail

/// Parses the fpdiagram v1 text format. Throws SyntaxError (with line and
/// column) on malformed text, InvalidParameters on bad p, q, or n, and
/// InvalidTangle when the strand list violates a tangle invariant.
inline FreelyPeriodicDiagram parse_diagram(std::string_view text) {
    enum class Expect { header, params, strands };
    Expect state = Expect::header;

    std::int64_t p = 0, q = 0, n = 0;
    std::vector<Strand> strands;

    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(
            pos, eol == std::string_view::npos ? text.size() - pos
                                               : eol - pos);
        ++line_no;
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;

        std::vector<detail::Token> tokens = detail::tokenize_line(line);
        if (tokens.empty()) continue;

        switch (state) {
            case Expect::header: {
                if (tokens.size() != 2 || tokens[0].text != "fpdiagram" ||
                    tokens[1].text != "v1") {
                    throw SyntaxError("expected header 'fpdiagram v1'",
                                      line_no, tokens[0].column);
                }
                state = Expect::params;
                break;
            }
            case Expect::params: {
                if (tokens.size() != 3) {
                    throw SyntaxError("expected 'p=<int> q=<int> n=<int>'",
                                      line_no, tokens[0].column);
                }
                p = detail::parse_keyval(tokens[0], "p", line_no);
                q = detail::parse_keyval(tokens[1], "q", line_no);
                n = detail::parse_keyval(tokens[2], "n", line_no);
                state = Expect::strands;
                break;
            }
            case Expect::strands: {
                if (tokens.size() != 3 || tokens[1].text != "->") {
                    throw SyntaxError(
                        "expected strand '<endpoint> -> <endpoint>'", line_no,
                        tokens.size() > 1 ? tokens[1].column
                                          : tokens[0].column);
                }
                Endpoint from = detail::parse_endpoint(tokens[0], line_no);
                Endpoint to = detail::parse_endpoint(tokens[2], line_no);
                strands.push_back({from, to});
                break;
            }
        }
    }

    if (state == Expect::header) {
        throw SyntaxError("missing header 'fpdiagram v1'", line_no, 1);
    }
    if (state == Expect::params) {
        throw SyntaxError("missing parameter line 'p=<int> q=<int> n=<int>'",
                          line_no, 1);
    }
    if (n < 1) {
        throw InvalidParameters(
            "diagram: n must be >= 1 (a knot diagram crosses the cut), got " +
            std::to_string(n));
    }
    return FreelyPeriodicDiagram(p, q,
                                 FundamentalTangle(n, std::move(strands)));
}

/// Canonical serialization; parse_diagram(serialize_diagram(d)) == d up to
/// strand order, and serialization of a parsed canonical file is identical
/// to the file.
inline std::string serialize_diagram(const FreelyPeriodicDiagram& d) {
    std::vector<Strand> sorted = d.tangle().strands();
    std::sort(sorted.begin(), sorted.end(),
              [](const Strand& a, const Strand& b) { return a.from < b.from; });

    std::string out = "fpdiagram v1\n";
    out += "p=" + std::to_string(d.p()) + " q=" + std::to_string(d.q()) +
           " n=" + std::to_string(d.tangle().endpoints_per_edge()) + "\n";
    for (const Strand& s : sorted) {
        out += to_string(s.from) + " -> " + to_string(s.to) + "\n";
    }
    return out;
}

}  // namespace fpk
