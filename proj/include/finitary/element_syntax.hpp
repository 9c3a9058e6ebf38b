#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "finitary/algebra.hpp"

namespace finitary {

/// Literal syntax for algebra elements: `3/2 |a><b| + |c><c| - 2 |a><a|`.
/// Terms are symbols |p><q| with an optional rational coefficient, joined by
/// `+` / `-`. Class labels may contain any character except '>' and '|'.
inline AlgebraElement parse_element(BasisPtr basis, std::string_view text) {
    AlgebraElement out(basis);
    const FinitaryPoset& poset = basis->poset();
    std::size_t pos = 0;
    auto fail = [&](const std::string& why) {
        throw std::invalid_argument("algebra literal: " + why + " at offset " + std::to_string(pos) +
                                    " in '" + std::string(text) + "'");
    };
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };

    skip_ws();
    if (pos == text.size()) fail("empty element");
    if (text.compare(pos, 1, "0") == 0 && pos + 1 == text.size()) return out;  // the zero element

    bool first = true;
    while (pos < text.size()) {
        skip_ws();
        Rational sign = 1;
        if (text[pos] == '+' || text[pos] == '-') {
            if (text[pos] == '-') sign = -1;
            ++pos;
            skip_ws();
        } else if (!first) {
            fail("expected '+' or '-' between terms");
        }
        // optional rational coefficient
        Rational coeff = 1;
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/' || text[pos] == '.'))
            ++pos;
        if (pos > start) coeff = parse_rational(text.substr(start, pos - start));
        skip_ws();
        if (pos >= text.size() || text[pos] != '|') fail("expected '|' opening a symbol");
        ++pos;
        std::size_t p_start = pos;
        while (pos < text.size() && text[pos] != '>') ++pos;
        if (pos >= text.size()) fail("unterminated symbol: missing '>'");
        std::string p_label(text.substr(p_start, pos - p_start));
        ++pos;
        if (pos >= text.size() || text[pos] != '<') fail("expected '><' inside a symbol");
        ++pos;
        std::size_t q_start = pos;
        while (pos < text.size() && text[pos] != '|') ++pos;
        if (pos >= text.size()) fail("unterminated symbol: missing closing '|'");
        std::string q_label(text.substr(q_start, pos - q_start));
        ++pos;

        out.add_term(basis->at(poset.index_of(p_label), poset.index_of(q_label)), sign * coeff);
        first = false;
        skip_ws();
    }
    return out;
}

inline std::string format_element(const AlgebraElement& element) {
    if (element.is_zero()) return "0";
    const AlgebraBasis& basis = *element.basis();
    const FinitaryPoset& poset = basis.poset();
    std::string out;
    for (const auto& [i, c] : element.terms()) {
        const auto [p, q] = basis.pair(i);
        Rational magnitude = c < 0 ? Rational(-c) : c;
        if (out.empty()) {
            if (c < 0) out += "- ";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (magnitude != 1) out += format_rational(magnitude) + " ";
        out += "|" + poset.label(p) + "><" + poset.label(q) + "|";
    }
    return out;
}

}  // namespace finitary
