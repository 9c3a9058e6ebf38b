#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "finitary/bool_matrix.hpp"

namespace finitary {

/// Boolean events x observers registration matrix: cell (i, lambda) is true
/// iff observer lambda registered event i. Labels are opaque strings.
///
/// Invariants enforced at construction: distinct event labels, distinct
/// observer labels, matrix dimensions match, and every event is registered
/// by at least one observer (an event nobody saw carries no observational
/// content and is rejected at ingest).
class ObservationTable {
public:
    ObservationTable(std::vector<std::string> events,
                     std::vector<std::string> observers,
                     BoolMatrix registered)
        : events_(std::move(events)),
          observers_(std::move(observers)),
          registered_(std::move(registered)) {
        if (registered_.rows() != events_.size() || registered_.cols() != observers_.size())
            throw std::invalid_argument("observation table: matrix dimensions do not match labels");
        check_distinct(events_, "event");
        check_distinct(observers_, "observer");
        for (std::size_t i = 0; i < events_.size(); ++i) {
            bool seen = false;
            for (std::size_t l = 0; l < observers_.size() && !seen; ++l) seen = registered_(i, l);
            if (!seen)
                throw std::invalid_argument("observation table: event '" + events_[i] +
                                            "' is registered by no observer");
        }
    }

    /// Convenience: rows given as vectors of booleans, one per event.
    static ObservationTable from_rows(std::vector<std::string> events,
                                      std::vector<std::string> observers,
                                      const std::vector<std::vector<bool>>& rows) {
        BoolMatrix m(events.size(), observers.size());
        if (rows.size() != events.size())
            throw std::invalid_argument("observation table: row count does not match event count");
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != observers.size())
                throw std::invalid_argument("observation table: row width does not match observer count");
            for (std::size_t l = 0; l < rows[i].size(); ++l) m.set(i, l, rows[i][l]);
        }
        return ObservationTable(std::move(events), std::move(observers), std::move(m));
    }

    const std::vector<std::string>& events() const { return events_; }
    const std::vector<std::string>& observers() const { return observers_; }
    bool registered(std::size_t event, std::size_t observer) const {
        return registered_(event, observer);
    }
    const BoolMatrix& matrix() const { return registered_; }

    std::size_t event_count() const { return events_.size(); }
    std::size_t observer_count() const { return observers_.size(); }

    bool operator==(const ObservationTable&) const = default;

private:
    static void check_distinct(const std::vector<std::string>& labels, const char* what) {
        std::set<std::string> seen;
        for (const auto& l : labels)
            if (!seen.insert(l).second)
                throw std::invalid_argument(std::string("observation table: duplicate ") + what +
                                            " label '" + l + "'");
    }

    std::vector<std::string> events_;
    std::vector<std::string> observers_;
    BoolMatrix registered_;
};

/// The sets Lambda_i: for each event, which observers registered it.
struct RegistrationSets {
    std::map<std::string, std::set<std::string>> lambda;
};

inline RegistrationSets registration_sets(const ObservationTable& table) {
    RegistrationSets result;
    for (std::size_t i = 0; i < table.event_count(); ++i) {
        std::set<std::string> who;
        for (std::size_t l = 0; l < table.observer_count(); ++l)
            if (table.registered(i, l)) who.insert(table.observers()[l]);
        result.lambda.emplace(table.events()[i], std::move(who));
    }
    return result;
}

/// Observer x observer matrix: entry (l, m) is true iff some single event was
/// registered by both. Symmetric; the diagonal entry for an observer is true
/// exactly when it registered anything at all.
inline BoolMatrix overlap_matrix(const ObservationTable& table) {
    const std::size_t m = table.observer_count();
    BoolMatrix overlap(m, m);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a; b < m; ++b) {
            bool shared = false;
            for (std::size_t i = 0; i < table.event_count() && !shared; ++i)
                shared = table.registered(i, a) && table.registered(i, b);
            overlap.set(a, b, shared);
            overlap.set(b, a, shared);
        }
    return overlap;
}

}  // namespace finitary
