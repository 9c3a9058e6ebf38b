#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "finitary/observation_table.hpp"
#include "finitary/rational.hpp"

namespace finitary {

/// Model spaces for synthetic coverings. Circle angles are measured as exact
/// rational multiples of pi in [0, 2); interval and box coordinates are exact
/// rationals in the open unit interval per axis. Keeping everything rational
/// makes strict open membership and region intersection decidable, so there
/// is no floating point anywhere in the geometry.
enum class SpaceKind { circle, interval, box };

struct ModelSpace {
    SpaceKind kind = SpaceKind::interval;
    std::size_t dimension = 1;  // 1 for circle/interval, 1..3 for box

    static ModelSpace circle() { return {SpaceKind::circle, 1}; }
    static ModelSpace interval() { return {SpaceKind::interval, 1}; }
    static ModelSpace box(std::size_t d) {
        if (d < 1 || d > 3) throw std::invalid_argument("model space: box dimension must be 1..3");
        return {SpaceKind::box, d};
    }

    bool operator==(const ModelSpace&) const = default;
};

/// Angle as a multiple of pi reduced into [0, 2).
inline Rational normalize_angle(Rational a) {
    const BigInt num = numerator(a), den = denominator(a);
    BigInt whole = num / den;                       // truncates toward zero
    Rational r = a - Rational(whole - whole % 2);   // shift by an even integer
    while (r < 0) r += 2;
    while (r >= 2) r -= 2;
    return r;
}

/// Open circular arc, stored as (start, length) in units of pi with
/// 0 < length < 2, making wrap-around unambiguous.
struct Arc {
    Rational start;   // normalized into [0, 2)
    Rational length;  // in (0, 2)

    bool operator==(const Arc&) const = default;
};

inline bool arc_contains(const Arc& arc, const Rational& angle) {
    const Rational delta = normalize_angle(angle - arc.start);
    return delta > 0 && delta < arc.length;
}

/// Open interval along one axis, within the closed unit interval.
struct AxisInterval {
    Rational lo;
    Rational hi;

    bool operator==(const AxisInterval&) const = default;
    bool contains(const Rational& x) const { return lo < x && x < hi; }
};

/// Observation region: an arc on the circle, or one open interval per axis
/// on an interval/box space. Regions model areas homeomorphic to open balls,
/// so membership is strictly open; boundary points are never registered.
struct Region {
    std::variant<Arc, std::vector<AxisInterval>> shape;

    bool operator==(const Region&) const = default;
};

inline Region arc_region(Rational start, Rational length) {
    if (!(length > 0 && length < 2))
        throw std::invalid_argument("region: arc length must lie strictly between 0 and 2 pi");
    return Region{Arc{normalize_angle(std::move(start)), std::move(length)}};
}

inline Region interval_region(std::vector<AxisInterval> axes) {
    if (axes.empty()) throw std::invalid_argument("region: no axes");
    for (const auto& axis : axes) {
        if (!(axis.lo < axis.hi)) throw std::invalid_argument("region: empty axis interval");
        if (axis.lo < 0 || axis.hi > 1)
            throw std::invalid_argument("region: interval outside the unit box");
    }
    return Region{std::move(axes)};
}

struct CoveringSpec {
    ModelSpace space;
    std::vector<std::pair<std::string, Region>> regions;  // (observer label, region)

    void validate() const {
        if (regions.empty()) throw std::invalid_argument("covering: needs at least one region");
        std::set<std::string> seen;
        for (const auto& [label, region] : regions) {
            if (!seen.insert(label).second)
                throw std::invalid_argument("covering: duplicate observer '" + label + "'");
            if (space.kind == SpaceKind::circle) {
                if (!std::holds_alternative<Arc>(region.shape))
                    throw std::invalid_argument("covering: circle regions must be arcs");
            } else {
                const auto* axes = std::get_if<std::vector<AxisInterval>>(&region.shape);
                if (!axes || axes->size() != space.dimension)
                    throw std::invalid_argument("covering: region does not match the space dimension");
            }
        }
    }

    bool operator==(const CoveringSpec&) const = default;
};

inline bool region_contains(const Region& region, const std::vector<Rational>& coords) {
    if (const auto* arc = std::get_if<Arc>(&region.shape)) return arc_contains(*arc, coords.at(0));
    const auto& axes = std::get<std::vector<AxisInterval>>(region.shape);
    for (std::size_t d = 0; d < axes.size(); ++d)
        if (!axes[d].contains(coords.at(d))) return false;
    return true;
}

// --- sampling ---------------------------------------------------------------

struct SampleMode {
    enum class Kind { grid, uniform } kind = Kind::grid;
    std::size_t count = 0;
    std::uint64_t seed = 0;

    static SampleMode grid(std::size_t n) { return {Kind::grid, n, 0}; }
    static SampleMode uniform(std::size_t n, std::uint64_t seed) {
        return {Kind::uniform, n, seed};
    }
};

struct SampledEvent {
    std::string label;
    std::vector<Rational> coords;
};

/// Canonical label of an angle r*pi: "0", "pi", "pi/2", "3pi/2", "2pi/5", ...
inline std::string angle_label(const Rational& of_pi) {
    if (of_pi == 0) return "0";
    const std::string num = numerator(of_pi).str();
    const std::string den = denominator(of_pi).str();
    std::string out = num == "1" ? "pi" : num + "pi";
    if (den != "1") out += "/" + den;
    return out;
}

inline std::string coordinate_label(const ModelSpace& space, const std::vector<Rational>& coords) {
    if (space.kind == SpaceKind::circle) return angle_label(coords.at(0));
    if (space.kind == SpaceKind::interval) return format_rational(coords.at(0));
    std::string out = "(";
    for (std::size_t d = 0; d < coords.size(); ++d) {
        if (d) out += ",";
        out += format_rational(coords[d]);
    }
    return out + ")";
}

/// Grid mode: n equally spaced points: angles 2*pi*k/n on the circle, the
/// interior lattice k/(n+1) (k = 1..n) per axis otherwise (so a d-box yields
/// n^d points). Uniform mode: reproducible dyadic-rational points, drawn as
/// the low 32 bits of successive mt19937_64 outputs (k/2^32 per coordinate;
/// zero rejected on open axes, exact duplicate points dropped).
inline std::vector<SampledEvent> sample_events(const ModelSpace& space, const SampleMode& mode) {
    if (mode.count == 0) throw std::invalid_argument("sample_events: sample count must be positive");
    std::vector<SampledEvent> out;

    auto push = [&](std::vector<Rational> coords) {
        for (const auto& existing : out)
            if (existing.coords == coords) return;  // duplicate sample point
        out.push_back({coordinate_label(space, coords), std::move(coords)});
    };

    if (mode.kind == SampleMode::Kind::grid) {
        if (space.kind == SpaceKind::circle) {
            for (std::size_t k = 0; k < mode.count; ++k)
                push({Rational(2 * BigInt(k), BigInt(mode.count))});
        } else {
            const std::size_t d = space.dimension;
            std::vector<std::size_t> idx(d, 1);
            while (true) {
                std::vector<Rational> coords;
                for (std::size_t a = 0; a < d; ++a)
                    coords.emplace_back(BigInt(idx[a]), BigInt(mode.count + 1));
                push(std::move(coords));
                std::size_t a = d;
                while (a > 0 && idx[a - 1] == mode.count) idx[--a] = 1;
                if (a == 0) break;
                ++idx[a - 1];
            }
        }
        return out;
    }

    std::mt19937_64 engine(mode.seed);
    const BigInt denom = BigInt(1) << 32;
    for (std::size_t k = 0; k < mode.count; ++k) {
        std::vector<Rational> coords;
        for (std::size_t a = 0; a < space.dimension; ++a) {
            std::uint64_t draw = engine() & 0xFFFFFFFFull;
            if (space.kind == SpaceKind::circle) {
                coords.emplace_back(2 * BigInt(draw), denom);
            } else {
                while (draw == 0) draw = engine() & 0xFFFFFFFFull;
                coords.emplace_back(BigInt(draw), denom);
            }
        }
        push(std::move(coords));
    }
    return out;
}

inline std::vector<SampledEvent> sample_events(const CoveringSpec& spec, const SampleMode& mode) {
    return sample_events(spec.space, mode);
}

// --- tabulation --------------------------------------------------------------

struct TabulateResult {
    ObservationTable table;
    std::size_t dropped_events = 0;  // events inside no region
};

/// Registration table of a covering against sampled events: cell (i, lambda)
/// is true iff event i lies strictly inside region lambda. Events covered by
/// no region carry no observation and are dropped (counted, not an error:
/// partial coverings are legitimate experiments).
inline TabulateResult tabulate(const CoveringSpec& spec, const std::vector<SampledEvent>& events) {
    spec.validate();
    std::vector<std::string> labels;
    std::vector<std::vector<bool>> rows;
    std::size_t dropped = 0;

    for (const auto& event : events) {
        if (event.coords.size() != spec.space.dimension)
            throw std::invalid_argument("tabulate: event '" + event.label +
                                        "' does not match the space dimension");
        std::vector<Rational> coords = event.coords;
        if (spec.space.kind == SpaceKind::circle) {
            coords[0] = normalize_angle(coords[0]);
        } else {
            for (const auto& x : coords)
                if (x <= 0 || x >= 1)
                    throw std::invalid_argument("tabulate: event '" + event.label +
                                                "' lies outside the space");
        }
        std::vector<bool> row;
        bool any = false;
        for (const auto& [label, region] : spec.regions) {
            const bool inside = region_contains(region, coords);
            row.push_back(inside);
            any = any || inside;
        }
        if (!any) {
            ++dropped;
            continue;
        }
        labels.push_back(event.label);
        rows.push_back(std::move(row));
    }

    std::vector<std::string> observers;
    for (const auto& [label, region] : spec.regions) observers.push_back(label);
    return {ObservationTable::from_rows(std::move(labels), std::move(observers), rows), dropped};
}

}  // namespace finitary
