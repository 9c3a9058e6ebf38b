#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "finitary/observation_table.hpp"
#include "finitary/poset.hpp"

namespace finitary {

/// Plain-text registration grid: a header row of observer names under an
/// "event" column, then one +/- row per event. Labels must be free of
/// whitespace (the canonical coordinate labels are).
inline std::string table_to_text(const ObservationTable& table) {
    std::size_t width = 5;  // "event"
    for (const auto& e : table.events()) width = std::max(width, e.size());
    std::ostringstream out;
    out << "event";
    out << std::string(width - 5 + 2, ' ');
    for (std::size_t l = 0; l < table.observer_count(); ++l) {
        if (l) out << "  ";
        out << table.observers()[l];
    }
    out << "\n";
    for (std::size_t i = 0; i < table.event_count(); ++i) {
        const std::string& label = table.events()[i];
        out << label << std::string(width - label.size() + 2, ' ');
        for (std::size_t l = 0; l < table.observer_count(); ++l) {
            if (l) out << std::string(table.observers()[l].size() + 1, ' ');
            out << (table.registered(i, l) ? '+' : '-');
        }
        out << "\n";
    }
    return out.str();
}

inline ObservationTable table_from_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::string> observers;
    std::vector<std::string> events;
    std::vector<std::vector<bool>> rows;
    bool header_seen = false;
    while (std::getline(in, line)) {
        std::istringstream fields(line);
        std::vector<std::string> tokens;
        std::string token;
        while (fields >> token) tokens.push_back(token);
        if (tokens.empty() || tokens.front().front() == '#') continue;
        if (!header_seen) {
            observers.assign(tokens.begin() + 1, tokens.end());
            header_seen = true;
            continue;
        }
        if (tokens.size() != observers.size() + 1)
            throw std::invalid_argument("table text: row '" + tokens.front() +
                                        "' does not match the observer count");
        events.push_back(tokens.front());
        std::vector<bool> row;
        for (std::size_t l = 1; l < tokens.size(); ++l) {
            if (tokens[l] == "+")
                row.push_back(true);
            else if (tokens[l] == "-")
                row.push_back(false);
            else
                throw std::invalid_argument("table text: cell must be '+' or '-', got '" + tokens[l] + "'");
        }
        rows.push_back(std::move(row));
    }
    if (!header_seen) throw std::invalid_argument("table text: missing header row");
    return ObservationTable::from_rows(std::move(events), std::move(observers), rows);
}

/// Strict relations of the substitute, one arrow per line, the same style
/// the four-point circle example is usually written in.
inline std::string poset_to_text(const FinitaryPoset& poset) {
    std::ostringstream out;
    out << "classes:";
    for (const auto& cls : poset.classes()) {
        out << " {";
        for (std::size_t i = 0; i < cls.size(); ++i) out << (i ? "," : "") << cls[i];
        out << "}";
    }
    out << "\n";
    for (const auto& [x, y] : poset.strict_pairs())
        out << poset.label(x) << " -> " << poset.label(y) << "\n";
    return out.str();
}

}  // namespace finitary
