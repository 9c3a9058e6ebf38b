#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "finitary/ideals.hpp"
#include "finitary/topology.hpp"

namespace finitary {

/// Outcome of checking that the two spatializations of one poset agree: the
/// Rota topology of the incidence algebra's primitive spectrum against the
/// Alexandrov (Sorkin) topology of the poset itself. theorem_holds is
/// expected to be true on every valid input; false flags an implementation
/// bug and comes with the first open set in the symmetric difference.
struct RotaReport {
    std::set<std::pair<std::string, std::string>> rho;
    FiniteTopology rota_topology;
    FiniteTopology sorkin_topology;
    bool theorem_holds = false;
    std::optional<std::vector<std::string>> witness;
};

/// First open set present in exactly one of the two families, in canonical
/// family order; nullopt when the families agree.
inline std::optional<std::vector<std::string>> first_topology_difference(
    const FiniteTopology& lhs, const FiniteTopology& rhs) {
    std::vector<std::vector<std::size_t>> diff;
    std::set_symmetric_difference(lhs.opens().begin(), lhs.opens().end(), rhs.opens().begin(),
                                  rhs.opens().end(), std::back_inserter(diff));
    if (diff.empty()) return std::nullopt;
    std::vector<std::string> labels;
    for (std::size_t p : diff.front()) labels.push_back(lhs.points()[p]);
    return labels;
}

inline RotaReport verify_theorem(const FinitaryPoset& poset) {
    BasisPtr basis = make_basis(poset);

    std::set<std::pair<std::string, std::string>> rho_labels;
    for (const auto& [r, s] : rota_relation(basis)) rho_labels.emplace(poset.label(r), poset.label(s));

    std::vector<std::string> points;
    for (std::size_t i = 0; i < poset.size(); ++i) points.push_back(poset.label(i));

    FiniteTopology rota = topology_from_relation(points, rho_labels);
    FiniteTopology sorkin = alexandrov_topology(poset);

    RotaReport report{std::move(rho_labels), rota, sorkin, rota.opens() == sorkin.opens(),
                      std::nullopt};
    if (!report.theorem_holds) report.witness = first_topology_difference(rota, sorkin);
    return report;
}

}  // namespace finitary
