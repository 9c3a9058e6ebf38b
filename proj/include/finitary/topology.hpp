#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "finitary/bool_matrix.hpp"
#include "finitary/poset.hpp"

namespace finitary {

/// A finite topology given by its full family of open sets. Opens are stored
/// canonically: each open is a sorted vector of point indices and the family
/// is sorted lexicographically, so equality of families is plain equality.
class FiniteTopology {
public:
    FiniteTopology(std::vector<std::string> points, std::vector<std::vector<std::size_t>> opens)
        : points_(std::move(points)), opens_(std::move(opens)) {
        for (auto& open : opens_) {
            std::sort(open.begin(), open.end());
            for (std::size_t p : open)
                if (p >= points_.size()) throw std::logic_error("topology: open set mentions unknown point");
        }
        std::sort(opens_.begin(), opens_.end());
        opens_.erase(std::unique(opens_.begin(), opens_.end()), opens_.end());
    }

    const std::vector<std::string>& points() const { return points_; }
    const std::vector<std::vector<std::size_t>>& opens() const { return opens_; }
    std::size_t open_count() const { return opens_.size(); }

    std::vector<std::string> open_labels(std::size_t k) const {
        std::vector<std::string> out;
        for (std::size_t p : opens_[k]) out.push_back(points_[p]);
        return out;
    }

    bool contains_open(const std::set<std::string>& labels) const {
        std::vector<std::size_t> open;
        for (const auto& l : labels) open.push_back(point_index(l));
        std::sort(open.begin(), open.end());
        return std::binary_search(opens_.begin(), opens_.end(), open);
    }

    std::size_t point_index(const std::string& label) const {
        auto it = std::find(points_.begin(), points_.end(), label);
        if (it == points_.end()) throw std::invalid_argument("topology: unknown point '" + label + "'");
        return static_cast<std::size_t>(it - points_.begin());
    }

    /// x is in the closure of {y} iff x lies in every open containing y.
    /// For an Alexandrov topology this recovers the underlying order.
    BoolMatrix specialization_order() const {
        const std::size_t n = points_.size();
        BoolMatrix order(n, n, true);
        for (const auto& open : opens_) {
            std::vector<bool> inside(n, false);
            for (std::size_t p : open) inside[p] = true;
            for (std::size_t y : open)
                for (std::size_t x = 0; x < n; ++x)
                    if (!inside[x]) order.set(x, y, false);
        }
        return order;
    }

    void validate() const {
        const std::size_t n = points_.size();
        std::vector<std::size_t> everything(n);
        for (std::size_t i = 0; i < n; ++i) everything[i] = i;
        if (!std::binary_search(opens_.begin(), opens_.end(), std::vector<std::size_t>{}))
            throw std::logic_error("topology: empty set is not open");
        if (!std::binary_search(opens_.begin(), opens_.end(), everything))
            throw std::logic_error("topology: full point set is not open");
        for (const auto& a : opens_)
            for (const auto& b : opens_) {
                std::vector<std::size_t> u, v;
                std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(u));
                std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(v));
                if (!std::binary_search(opens_.begin(), opens_.end(), u))
                    throw std::logic_error("topology: not closed under union");
                if (!std::binary_search(opens_.begin(), opens_.end(), v))
                    throw std::logic_error("topology: not closed under intersection");
            }
    }

    bool operator==(const FiniteTopology&) const = default;

private:
    std::vector<std::string> points_;
    std::vector<std::vector<std::size_t>> opens_;
};

namespace detail {

// Full open-set families are exponential in the point count; the subset
// enumeration below is intended for desk-scale spaces only.
inline constexpr std::size_t max_enumerable_points = 20;

/// Opens of the Alexandrov topology of a reflexive-transitive relation:
/// subsets closed under predecessors (y in U and x before y imply x in U).
inline std::vector<std::vector<std::size_t>> predecessor_closed_sets(const BoolMatrix& rel) {
    const std::size_t n = rel.rows();
    if (n > max_enumerable_points)
        throw std::domain_error("topology: too many points to enumerate the open-set family");
    std::vector<std::uint64_t> predecessors(n, 0);
    for (std::size_t y = 0; y < n; ++y)
        for (std::size_t x = 0; x < n; ++x)
            if (rel(x, y)) predecessors[y] |= std::uint64_t{1} << x;
    std::vector<std::vector<std::size_t>> opens;
    for (std::uint64_t mask = 0;; ++mask) {
        bool closed = true;
        for (std::size_t y = 0; y < n && closed; ++y)
            if ((mask >> y) & 1) closed = (predecessors[y] & ~mask) == 0;
        if (closed) {
            std::vector<std::size_t> open;
            for (std::size_t y = 0; y < n; ++y)
                if ((mask >> y) & 1) open.push_back(y);
            opens.push_back(std::move(open));
        }
        if (mask + 1 == (std::uint64_t{1} << n)) break;
    }
    return opens;
}

}  // namespace detail

/// Alexandrov topology of the partial order: opens are the predecessor-closed
/// sets. The convention is fixed by convergence: x -> y means the constant
/// sequence at x converges to y, so y lies in the closure of {x} and every
/// open set containing y must contain x. The minimal open neighbourhood of y
/// is therefore { x : x -> y }.
inline FiniteTopology alexandrov_topology(const FinitaryPoset& poset) {
    std::vector<std::string> points;
    for (std::size_t i = 0; i < poset.size(); ++i) points.push_back(poset.label(i));
    return FiniteTopology(std::move(points), detail::predecessor_closed_sets(poset.order_matrix()));
}

/// The strongest topology in which, for every pair (x, y) of the relation,
/// the constant sequence at x converges to y: the Alexandrov topology of the
/// reflexive-transitive closure. The relation itself need not be reflexive,
/// transitive or antisymmetric.
inline FiniteTopology topology_from_relation(
    const std::vector<std::string>& points,
    const std::set<std::pair<std::string, std::string>>& relation) {
    const std::size_t n = points.size();
    auto index = [&](const std::string& l) {
        auto it = std::find(points.begin(), points.end(), l);
        if (it == points.end())
            throw std::invalid_argument("topology_from_relation: unknown point '" + l + "'");
        return static_cast<std::size_t>(it - points.begin());
    };
    BoolMatrix rel(n, n);
    for (const auto& [x, y] : relation) rel.set(index(x), index(y), true);
    rel.close_reflexive_transitive();
    return FiniteTopology(points, detail::predecessor_closed_sets(rel));
}

}  // namespace finitary
