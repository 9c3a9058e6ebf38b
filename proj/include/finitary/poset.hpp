#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "finitary/bool_matrix.hpp"
#include "finitary/preorder.hpp"

namespace finitary {

/// Finitary substitute: the T0 quotient of an event set by mutual
/// quasiorder. Points are equivalence classes of events; the partial order
/// x -> y descends from the quasiorder. The covering relation (Hasse
/// diagram) is the transitive reduction of the strict order.
///
/// Classes are kept in a canonical order: each class lists its member labels
/// sorted, classes are sorted by their canonical label (lexicographically
/// least member), and all outputs downstream inherit this ordering.
class FinitaryPoset {
public:
    FinitaryPoset(std::vector<std::vector<std::string>> classes, BoolMatrix order)
        : classes_(std::move(classes)), order_(std::move(order)) {
        canonicalize();
        validate();
        covering_ = transitive_reduction();
    }

    std::size_t size() const { return classes_.size(); }
    const std::vector<std::vector<std::string>>& classes() const { return classes_; }
    const std::vector<std::string>& class_members(std::size_t x) const { return classes_[x]; }

    /// Canonical label of a class: its lexicographically least member.
    const std::string& label(std::size_t x) const { return classes_[x].front(); }

    std::size_t index_of(const std::string& class_label) const {
        for (std::size_t x = 0; x < classes_.size(); ++x)
            if (classes_[x].front() == class_label) return x;
        throw std::invalid_argument("poset: unknown class '" + class_label + "'");
    }

    bool order(std::size_t x, std::size_t y) const { return order_(x, y); }
    const BoolMatrix& order_matrix() const { return order_; }

    const std::vector<std::pair<std::size_t, std::size_t>>& covering_pairs() const {
        return covering_;
    }

    std::vector<std::pair<std::size_t, std::size_t>> strict_pairs() const {
        std::vector<std::pair<std::size_t, std::size_t>> out;
        for (std::size_t x = 0; x < size(); ++x)
            for (std::size_t y = 0; y < size(); ++y)
                if (x != y && order_(x, y)) out.emplace_back(x, y);
        return out;
    }

    bool operator==(const FinitaryPoset&) const = default;

    void validate() const {
        if (order_.rows() != classes_.size() || order_.cols() != classes_.size())
            throw std::logic_error("poset: order matrix does not match classes");
        std::set<std::string> seen;
        for (const auto& cls : classes_) {
            if (cls.empty()) throw std::logic_error("poset: empty class");
            for (const auto& member : cls)
                if (!seen.insert(member).second)
                    throw std::logic_error("poset: classes do not partition the events");
        }
        if (!order_.is_reflexive()) throw std::logic_error("poset: order is not reflexive");
        if (!order_.is_transitive()) throw std::logic_error("poset: order is not transitive");
        if (!order_.is_antisymmetric()) throw std::logic_error("poset: order is not antisymmetric");
    }

private:
    void canonicalize() {
        for (auto& cls : classes_) std::sort(cls.begin(), cls.end());
        std::vector<std::size_t> perm(classes_.size());
        for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
        std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
            return classes_[a].front() < classes_[b].front();
        });
        std::vector<std::vector<std::string>> classes(classes_.size());
        BoolMatrix order(classes_.size(), classes_.size());
        for (std::size_t i = 0; i < perm.size(); ++i) {
            classes[i] = std::move(classes_[perm[i]]);
            for (std::size_t j = 0; j < perm.size(); ++j) order.set(i, j, order_(perm[i], perm[j]));
        }
        classes_ = std::move(classes);
        order_ = std::move(order);
    }

    // Strict cover: x < y with no z strictly between. O(n^3) triple scan is
    // plenty at the scale these posets have.
    std::vector<std::pair<std::size_t, std::size_t>> transitive_reduction() const {
        std::vector<std::pair<std::size_t, std::size_t>> cover;
        for (std::size_t x = 0; x < size(); ++x)
            for (std::size_t y = 0; y < size(); ++y) {
                if (x == y || !order_(x, y)) continue;
                bool direct = true;
                for (std::size_t z = 0; z < size() && direct; ++z)
                    if (z != x && z != y && order_(x, z) && order_(z, y)) direct = false;
                if (direct) cover.emplace_back(x, y);
            }
        return cover;
    }

    std::vector<std::vector<std::string>> classes_;
    BoolMatrix order_;
    std::vector<std::pair<std::size_t, std::size_t>> covering_;
};

/// Quotient of a quasiorder by mutual comparability: classes are the
/// i <-> j (both ways) equivalence classes, and the induced relation on
/// classes is a partial order. The induced relation is checked to be
/// class-independent before representatives are trusted.
inline FinitaryPoset quotient_poset(const Preorder& pre) {
    pre.validate();
    const std::size_t n = pre.carrier.size();

    std::vector<std::size_t> class_of(n, SIZE_MAX);
    std::vector<std::vector<std::size_t>> members;
    for (std::size_t i = 0; i < n; ++i) {
        if (class_of[i] != SIZE_MAX) continue;
        class_of[i] = members.size();
        members.push_back({i});
        for (std::size_t j = i + 1; j < n; ++j)
            if (class_of[j] == SIZE_MAX && pre.rel(i, j) && pre.rel(j, i)) {
                class_of[j] = class_of[i];
                members[class_of[i]].push_back(j);
            }
    }

    const std::size_t k = members.size();
    BoolMatrix order(k, k);
    for (std::size_t x = 0; x < k; ++x)
        for (std::size_t y = 0; y < k; ++y) {
            const bool related = pre.rel(members[x].front(), members[y].front());
            for (std::size_t i : members[x])
                for (std::size_t j : members[y])
                    if (pre.rel(i, j) != related)
                        throw std::logic_error("quotient: relation is not class-independent");
            order.set(x, y, related);
        }

    std::vector<std::vector<std::string>> classes(k);
    for (std::size_t x = 0; x < k; ++x)
        for (std::size_t i : members[x]) classes[x].push_back(pre.carrier[i]);
    return FinitaryPoset(std::move(classes), std::move(order));
}

inline FinitaryPoset poset_from_table(const ObservationTable& table) {
    return quotient_poset(quasiorder_from_table(table));
}

/// Poset with singleton classes built from the reflexive-transitive closure
/// of the given strict pairs. Handy for fixtures (chains, diamonds, fences).
inline FinitaryPoset poset_from_cover(
    const std::vector<std::string>& labels,
    const std::vector<std::pair<std::string, std::string>>& below) {
    BoolMatrix rel(labels.size(), labels.size());
    auto index = [&](const std::string& l) {
        auto it = std::find(labels.begin(), labels.end(), l);
        if (it == labels.end()) throw std::invalid_argument("poset_from_cover: unknown label '" + l + "'");
        return static_cast<std::size_t>(it - labels.begin());
    };
    for (const auto& [a, b] : below) rel.set(index(a), index(b), true);
    rel.close_reflexive_transitive();
    std::vector<std::vector<std::string>> classes;
    for (const auto& l : labels) classes.push_back({l});
    return FinitaryPoset(std::move(classes), std::move(rel));
}

/// Limit points of the eventually-constant sequence x, x, ...: every class y
/// with x -> y (including x itself).
inline std::set<std::string> limits(const FinitaryPoset& poset, const std::string& class_label) {
    const std::size_t x = poset.index_of(class_label);
    std::set<std::string> out;
    for (std::size_t y = 0; y < poset.size(); ++y)
        if (poset.order(x, y)) out.insert(poset.label(y));
    return out;
}

}  // namespace finitary
