#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "finitary/geometry.hpp"
#include "finitary/nerve.hpp"
#include "finitary/observation_table.hpp"
#include "finitary/poset.hpp"
#include "finitary/topology.hpp"
#include "finitary/verify.hpp"

namespace finitary {

using nlohmann::json;

// nlohmann objects keep keys sorted, arrays keep the order written here, so
// dumping the same value twice is byte-identical; canonical output for CI
// diffing comes for free.

// --- observation tables ------------------------------------------------------

inline json table_to_json(const ObservationTable& table) {
    json events = json::array();
    for (std::size_t i = 0; i < table.event_count(); ++i) {
        json registered_by = json::array();
        for (std::size_t l = 0; l < table.observer_count(); ++l)
            if (table.registered(i, l)) registered_by.push_back(table.observers()[l]);
        events.push_back({{"label", table.events()[i]}, {"registered_by", registered_by}});
    }
    return {{"observers", table.observers()}, {"events", events}};
}

inline ObservationTable table_from_json(const json& j) {
    if (!j.is_object() || !j.contains("observers") || !j.contains("events"))
        throw std::invalid_argument("table json: expected {observers, events}");
    std::vector<std::string> observers = j.at("observers").get<std::vector<std::string>>();
    std::vector<std::string> events;
    std::vector<std::vector<bool>> rows;
    for (const auto& entry : j.at("events")) {
        events.push_back(entry.at("label").get<std::string>());
        std::vector<bool> row(observers.size(), false);
        for (const auto& name : entry.at("registered_by")) {
            const std::string who = name.get<std::string>();
            auto it = std::find(observers.begin(), observers.end(), who);
            if (it == observers.end())
                throw std::invalid_argument("table json: unknown observer '" + who + "'");
            row[static_cast<std::size_t>(it - observers.begin())] = true;
        }
        rows.push_back(std::move(row));
    }
    return ObservationTable::from_rows(std::move(events), std::move(observers), rows);
}

// --- posets ------------------------------------------------------------------

inline json poset_to_json(const FinitaryPoset& poset) {
    json classes = json::array();
    for (const auto& cls : poset.classes()) classes.push_back(cls);
    json order = json::array();
    for (const auto& [x, y] : poset.strict_pairs())
        order.push_back({poset.label(x), poset.label(y)});
    json covering = json::array();
    for (const auto& [x, y] : poset.covering_pairs())
        covering.push_back({poset.label(x), poset.label(y)});
    return {{"classes", classes}, {"order", order}, {"covering", covering}};
}

/// Accepts the poset_to_json schema; "order" lists the strict pairs (the
/// reflexive part is implied) and "covering", when present, is re-derived and
/// must agree.
inline FinitaryPoset poset_from_json(const json& j) {
    if (!j.is_object() || !j.contains("classes") || !j.contains("order"))
        throw std::invalid_argument("poset json: expected {classes, order}");
    std::vector<std::vector<std::string>> classes =
        j.at("classes").get<std::vector<std::vector<std::string>>>();

    std::vector<std::string> canonical;
    for (auto& cls : classes) {
        if (cls.empty()) throw std::invalid_argument("poset json: empty class");
        std::sort(cls.begin(), cls.end());
        canonical.push_back(cls.front());
    }
    auto index = [&](const std::string& label) {
        auto it = std::find(canonical.begin(), canonical.end(), label);
        if (it == canonical.end())
            throw std::invalid_argument("poset json: unknown class '" + label + "'");
        return static_cast<std::size_t>(it - canonical.begin());
    };

    BoolMatrix order(classes.size(), classes.size());
    for (std::size_t i = 0; i < classes.size(); ++i) order.set(i, i, true);
    for (const auto& pair : j.at("order")) {
        if (!pair.is_array() || pair.size() != 2)
            throw std::invalid_argument("poset json: order entries must be pairs");
        order.set(index(pair.at(0).get<std::string>()), index(pair.at(1).get<std::string>()), true);
    }
    FinitaryPoset poset(std::move(classes), std::move(order));
    if (j.contains("covering")) {
        std::set<std::pair<std::string, std::string>> given, derived;
        for (const auto& pair : j.at("covering"))
            given.emplace(pair.at(0).get<std::string>(), pair.at(1).get<std::string>());
        for (const auto& [x, y] : poset.covering_pairs()) derived.emplace(poset.label(x), poset.label(y));
        if (given != derived)
            throw std::invalid_argument("poset json: covering does not match the order");
    }
    return poset;
}

// --- topologies and reports ----------------------------------------------------

inline json topology_to_json(const FiniteTopology& topology) {
    json opens = json::array();
    for (std::size_t k = 0; k < topology.open_count(); ++k) opens.push_back(topology.open_labels(k));
    return {{"points", topology.points()}, {"opens", opens}};
}

inline json report_to_json(const RotaReport& report) {
    json rho = json::array();
    for (const auto& [r, s] : report.rho) rho.push_back({r, s});
    json out = {{"rho", rho},
                {"rota_topology", topology_to_json(report.rota_topology)},
                {"sorkin_topology", topology_to_json(report.sorkin_topology)},
                {"theorem_holds", report.theorem_holds}};
    if (report.witness) out["witness"] = *report.witness;
    return out;
}

// --- covering specs ------------------------------------------------------------

/// Exact rational fields accept JSON strings ("3/5", "0.6", "-3/4") or
/// integers. Floating-point literals are rejected: a binary double cannot
/// encode bounds like 0.6 exactly, and membership here is decided exactly.
inline Rational rational_from_json(const json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_number_float())
        throw std::invalid_argument(
            "covering json: floating-point numbers are not exact; write the value as a string");
    throw std::invalid_argument("covering json: expected a rational as string or integer");
}

inline json rational_to_json(const Rational& r) {
    if (denominator(r) == 1 && numerator(r).is_zero()) return 0;
    return format_rational(r);
}

inline json spec_to_json(const CoveringSpec& spec) {
    json space;
    switch (spec.space.kind) {
        case SpaceKind::circle: space = {{"kind", "circle"}}; break;
        case SpaceKind::interval: space = {{"kind", "interval"}}; break;
        case SpaceKind::box: space = {{"kind", "box"}, {"dimension", spec.space.dimension}}; break;
    }
    json regions = json::array();
    for (const auto& [label, region] : spec.regions) {
        json entry = {{"observer", label}};
        if (const auto* arc = std::get_if<Arc>(&region.shape)) {
            entry["arc"] = {{"start", rational_to_json(arc->start)},
                            {"length", rational_to_json(arc->length)}};
        } else {
            const auto& axes = std::get<std::vector<AxisInterval>>(region.shape);
            if (axes.size() == 1) {
                entry["interval"] = {rational_to_json(axes[0].lo), rational_to_json(axes[0].hi)};
            } else {
                json box = json::array();
                for (const auto& axis : axes)
                    box.push_back({rational_to_json(axis.lo), rational_to_json(axis.hi)});
                entry["box"] = box;
            }
        }
        regions.push_back(entry);
    }
    return {{"space", space}, {"regions", regions}};
}

/// Schema: {"space": {"kind": "circle"|"interval"|"box", "dimension"?: 1..3},
///          "regions": [{"observer": s, "arc": {"start": q, "length": q}}
///                      | {"observer": s, "interval": [q, q]}
///                      | {"observer": s, "box": [[q, q], ...]}]}
/// Arc angles are rational multiples of pi.
inline CoveringSpec spec_from_json(const json& j) {
    if (!j.is_object() || !j.contains("space") || !j.contains("regions"))
        throw std::invalid_argument("covering json: expected {space, regions}");
    CoveringSpec spec;
    const json& space = j.at("space");
    const std::string kind = space.at("kind").get<std::string>();
    if (kind == "circle") {
        spec.space = ModelSpace::circle();
    } else if (kind == "interval") {
        spec.space = ModelSpace::interval();
    } else if (kind == "box") {
        spec.space = ModelSpace::box(space.at("dimension").get<std::size_t>());
    } else {
        throw std::invalid_argument("covering json: unknown space kind '" + kind + "'");
    }
    for (const auto& entry : j.at("regions")) {
        const std::string observer = entry.at("observer").get<std::string>();
        if (entry.contains("arc")) {
            const json& arc = entry.at("arc");
            spec.regions.emplace_back(observer, arc_region(rational_from_json(arc.at("start")),
                                                           rational_from_json(arc.at("length"))));
        } else if (entry.contains("interval")) {
            const json& iv = entry.at("interval");
            spec.regions.emplace_back(observer,
                                      interval_region({{rational_from_json(iv.at(0)),
                                                        rational_from_json(iv.at(1))}}));
        } else if (entry.contains("box")) {
            std::vector<AxisInterval> axes;
            for (const auto& iv : entry.at("box"))
                axes.push_back({rational_from_json(iv.at(0)), rational_from_json(iv.at(1))});
            spec.regions.emplace_back(observer, interval_region(std::move(axes)));
        } else {
            throw std::invalid_argument("covering json: region needs arc, interval or box");
        }
    }
    spec.validate();
    return spec;
}

// --- nerves ---------------------------------------------------------------------

inline json nerve_to_json(const SimplicialComplex& complex) {
    json faces = json::array();
    for (const auto& face : complex.faces()) faces.push_back(face);
    json maximal = json::array();
    for (const auto& face : complex.maximal_faces()) maximal.push_back(face);
    return {{"vertices", complex.vertices()},
            {"faces", faces},
            {"maximal_faces", maximal},
            {"dimension", complex.dimension()}};
}

}  // namespace finitary
