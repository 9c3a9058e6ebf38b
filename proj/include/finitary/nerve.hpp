#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "finitary/geometry.hpp"
#include "finitary/observation_table.hpp"

namespace finitary {

/// Abstract simplicial complex on labelled vertices. Faces are nonempty
/// sorted label sets; the family must be downward closed.
class SimplicialComplex {
public:
    SimplicialComplex(std::vector<std::string> vertices,
                      std::set<std::vector<std::string>> faces)
        : vertices_(std::move(vertices)), faces_(std::move(faces)) {
        std::set<std::string> known(vertices_.begin(), vertices_.end());
        if (known.size() != vertices_.size())
            throw std::invalid_argument("complex: duplicate vertex labels");
        for (const auto& face : faces_) {
            if (face.empty()) throw std::invalid_argument("complex: empty face");
            if (!std::is_sorted(face.begin(), face.end()) ||
                std::adjacent_find(face.begin(), face.end()) != face.end())
                throw std::invalid_argument("complex: face labels must be sorted and distinct");
            for (const auto& v : face)
                if (!known.count(v))
                    throw std::invalid_argument("complex: face mentions unknown vertex '" + v + "'");
        }
        for (const auto& face : faces_) {
            if (face.size() == 1) continue;
            for (std::size_t skip = 0; skip < face.size(); ++skip) {
                std::vector<std::string> sub;
                for (std::size_t i = 0; i < face.size(); ++i)
                    if (i != skip) sub.push_back(face[i]);
                if (!faces_.count(sub))
                    throw std::logic_error("complex: face family is not downward closed");
            }
        }
    }

    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::set<std::vector<std::string>>& faces() const { return faces_; }

    bool is_face(const std::set<std::string>& labels) const {
        return faces_.count({labels.begin(), labels.end()}) != 0;
    }

    /// Dimension of the complex: largest face size minus one (-1 when there
    /// are no faces at all).
    int dimension() const {
        std::size_t largest = 0;
        for (const auto& face : faces_) largest = std::max(largest, face.size());
        return static_cast<int>(largest) - 1;
    }

    std::vector<std::vector<std::string>> maximal_faces() const {
        std::vector<std::vector<std::string>> out;
        for (const auto& face : faces_) {
            bool maximal = true;
            for (const auto& other : faces_)
                if (&other != &face && other.size() > face.size() &&
                    std::includes(other.begin(), other.end(), face.begin(), face.end())) {
                    maximal = false;
                    break;
                }
            if (maximal) out.push_back(face);
        }
        return out;
    }

    bool subcomplex_of(const SimplicialComplex& other) const {
        return std::includes(other.faces_.begin(), other.faces_.end(), faces_.begin(), faces_.end());
    }

    bool operator==(const SimplicialComplex&) const = default;

private:
    std::vector<std::string> vertices_;
    std::set<std::vector<std::string>> faces_;
};

namespace detail {

inline constexpr std::size_t max_nerve_vertices = 20;

/// Set of circle angles as a union of disjoint open intervals within [0, 2],
/// in units of pi. An arc wrapping through 0 splits into two parts; the
/// single point 0 itself is deliberately not represented; open sets are
/// never singletons, so emptiness of finite intersections is unaffected.
struct AngleSet {
    std::vector<std::pair<Rational, Rational>> parts;  // open (lo, hi), lo < hi

    static AngleSet of_arc(const Arc& arc) {
        AngleSet s;
        const Rational end = arc.start + arc.length;
        if (end <= 2) {
            s.parts.emplace_back(arc.start, end);
        } else {
            s.parts.emplace_back(arc.start, Rational(2));
            if (end - 2 > 0) s.parts.emplace_back(Rational(0), end - 2);
        }
        return s;
    }

    AngleSet intersect(const AngleSet& other) const {
        AngleSet out;
        for (const auto& [alo, ahi] : parts)
            for (const auto& [blo, bhi] : other.parts) {
                const Rational lo = std::max(alo, blo);
                const Rational hi = std::min(ahi, bhi);
                if (lo < hi) out.parts.emplace_back(lo, hi);
            }
        return out;
    }

    bool empty() const { return parts.empty(); }
};

struct BoxSet {
    std::vector<AxisInterval> axes;  // empty marker: any axis with lo >= hi
    bool degenerate = false;

    static BoxSet of_region(const std::vector<AxisInterval>& intervals) {
        return {intervals, false};
    }

    BoxSet intersect(const BoxSet& other) const {
        BoxSet out;
        out.degenerate = degenerate || other.degenerate;
        for (std::size_t d = 0; d < axes.size() && !out.degenerate; ++d) {
            AxisInterval meet{std::max(axes[d].lo, other.axes[d].lo),
                              std::min(axes[d].hi, other.axes[d].hi)};
            if (!(meet.lo < meet.hi)) out.degenerate = true;
            out.axes.push_back(meet);
        }
        return out;
    }

    bool empty() const { return degenerate; }
};

/// Level-by-level face construction: a k-face survives iff its running
/// region intersection stays nonempty, and extending only past the largest
/// member index visits every subset once.
template <typename SetT>
std::set<std::vector<std::string>> faces_by_intersection(
    const std::vector<std::string>& labels, const std::vector<SetT>& sets) {
    struct Node {
        std::vector<std::size_t> members;
        SetT meet;
    };
    std::set<std::vector<std::string>> faces;
    std::vector<Node> frontier;
    for (std::size_t v = 0; v < sets.size(); ++v)
        if (!sets[v].empty()) frontier.push_back({{v}, sets[v]});

    while (!frontier.empty()) {
        std::vector<Node> next;
        for (const auto& node : frontier) {
            std::vector<std::string> face;
            for (std::size_t v : node.members) face.push_back(labels[v]);
            std::sort(face.begin(), face.end());
            faces.insert(std::move(face));
            for (std::size_t v = node.members.back() + 1; v < sets.size(); ++v) {
                SetT meet = node.meet.intersect(sets[v]);
                if (meet.empty()) continue;
                Node extended{node.members, std::move(meet)};
                extended.members.push_back(v);
                next.push_back(std::move(extended));
            }
        }
        frontier = std::move(next);
    }
    return faces;
}

}  // namespace detail

/// Nerve of the covering, computed exactly: a set of observers spans a face
/// iff their regions have a common point, decided in closed form (interval
/// intersection per axis; arc intersection with wrap-around split).
inline SimplicialComplex nerve_exact(const CoveringSpec& spec) {
    spec.validate();
    if (spec.regions.size() > detail::max_nerve_vertices)
        throw std::domain_error("nerve: too many regions to enumerate faces");

    std::vector<std::string> labels;
    for (const auto& [label, region] : spec.regions) labels.push_back(label);

    std::set<std::vector<std::string>> faces;
    if (spec.space.kind == SpaceKind::circle) {
        std::vector<detail::AngleSet> sets;
        for (const auto& [label, region] : spec.regions)
            sets.push_back(detail::AngleSet::of_arc(std::get<Arc>(region.shape)));
        faces = detail::faces_by_intersection(labels, sets);
    } else {
        std::vector<detail::BoxSet> sets;
        for (const auto& [label, region] : spec.regions)
            sets.push_back(detail::BoxSet::of_region(std::get<std::vector<AxisInterval>>(region.shape)));
        faces = detail::faces_by_intersection(labels, sets);
    }
    return SimplicialComplex(std::move(labels), std::move(faces));
}

/// Finite-sample estimate of the nerve: a set of observers spans a face iff
/// some single event was registered by all of them. Always a subcomplex of
/// the exact nerve when the table came from the same covering.
inline SimplicialComplex nerve_empirical(const ObservationTable& table) {
    std::set<std::vector<std::string>> faces;
    for (std::size_t i = 0; i < table.event_count(); ++i) {
        std::vector<std::string> who;
        for (std::size_t l = 0; l < table.observer_count(); ++l)
            if (table.registered(i, l)) who.push_back(table.observers()[l]);
        std::sort(who.begin(), who.end());
        if (who.size() > detail::max_nerve_vertices)
            throw std::domain_error("nerve: event registered by too many observers to enumerate faces");
        const std::size_t subsets = std::size_t{1} << who.size();
        for (std::size_t mask = 1; mask < subsets; ++mask) {
            std::vector<std::string> face;
            for (std::size_t b = 0; b < who.size(); ++b)
                if ((mask >> b) & 1) face.push_back(who[b]);
            faces.insert(std::move(face));
        }
    }
    return SimplicialComplex(table.observers(), std::move(faces));
}

inline std::size_t space_dimension(const ModelSpace& space) { return space.dimension; }

}  // namespace finitary
