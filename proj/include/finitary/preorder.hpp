#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "finitary/bool_matrix.hpp"
#include "finitary/observation_table.hpp"

namespace finitary {

/// A quasiorder (reflexive transitive relation) on a labelled carrier set.
struct Preorder {
    std::vector<std::string> carrier;
    BoolMatrix rel;  // rel(i, j) <=> i comes before j in the quasiorder

    void validate() const {
        if (rel.rows() != carrier.size() || rel.cols() != carrier.size())
            throw std::logic_error("preorder: matrix does not match carrier");
        if (!rel.is_reflexive()) throw std::logic_error("preorder: relation is not reflexive");
        if (!rel.is_transitive()) throw std::logic_error("preorder: relation is not transitive");
    }
};

/// Sorkin quasiorder of a table: i comes before j exactly when every observer
/// that registered j also registered i (the registration set of j is
/// contained in that of i). Reflexivity and transitivity are automatic for
/// set inclusion but asserted anyway.
inline Preorder quasiorder_from_table(const ObservationTable& table) {
    const std::size_t n = table.event_count();
    const std::size_t m = table.observer_count();
    Preorder pre{table.events(), BoolMatrix(n, n)};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            bool subset = true;
            for (std::size_t l = 0; l < m && subset; ++l)
                if (table.registered(j, l) && !table.registered(i, l)) subset = false;
            pre.rel.set(i, j, subset);
        }
    pre.validate();
    return pre;
}

}  // namespace finitary
