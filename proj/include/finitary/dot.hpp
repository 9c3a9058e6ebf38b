#pragma once

#include <sstream>
#include <string>

#include "finitary/nerve.hpp"
#include "finitary/poset.hpp"

namespace finitary {

namespace detail {
inline std::string dot_quote(const std::string& label) {
    std::string out = "\"";
    for (char c : label) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}
}  // namespace detail

/// Hasse diagram of the covering relation. rankdir=BT keeps the arrows
/// pointing up the page, the way these diagrams are drawn.
inline std::string hasse_dot(const FinitaryPoset& poset) {
    std::ostringstream out;
    out << "digraph hasse {\n  rankdir=BT;\n";
    for (std::size_t x = 0; x < poset.size(); ++x)
        out << "  " << detail::dot_quote(poset.label(x)) << ";\n";
    for (const auto& [x, y] : poset.covering_pairs())
        out << "  " << detail::dot_quote(poset.label(x)) << " -> "
            << detail::dot_quote(poset.label(y)) << ";\n";
    out << "}\n";
    return out.str();
}

/// 1-skeleton of a simplicial complex as an undirected graph.
inline std::string nerve_dot(const SimplicialComplex& complex) {
    std::ostringstream out;
    out << "graph nerve {\n";
    for (const auto& v : complex.vertices()) out << "  " << detail::dot_quote(v) << ";\n";
    for (const auto& face : complex.faces())
        if (face.size() == 2)
            out << "  " << detail::dot_quote(face[0]) << " -- " << detail::dot_quote(face[1])
                << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace finitary
