#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "finitary/geometry.hpp"

namespace finitary {

/// Four observers on the circle; the standard pseudocircle experiment. With
/// the four-point grid 0, pi/2, pi, 3pi/2 the registration table is
///
///            O1  O2  O3  O4
///     0       +   -   -   -
///     pi/2    +   +   -   +
///     pi      -   +   -   -
///     3pi/2   +   +   +   -
///
/// and the substitute is the four-point pseudocircle. Quoted bounds for O3
/// vary and some contradict the table above (an arc reaching 2pi/3 would
/// register 0 and pi/2 too); the fixture pins the table-consistent arc
/// around 3pi/2, mirroring O4's arc around pi/2.
inline CoveringSpec paper_circle() {
    CoveringSpec spec;
    spec.space = ModelSpace::circle();
    spec.regions = {
        {"O1", arc_region(Rational(4, 3), Rational(4, 3))},  // (-2pi/3, 2pi/3)
        {"O2", arc_region(Rational(1, 3), Rational(4, 3))},  // (pi/3, 5pi/3)
        {"O3", arc_region(Rational(5, 4), Rational(1, 2))},  // (-3pi/4, -pi/4)
        {"O4", arc_region(Rational(1, 4), Rational(1, 2))},  // (pi/4, 3pi/4)
    };
    spec.validate();
    return spec;
}

/// Three overlapping intervals covering (0, 1); every pair and the triple
/// intersect, so the exact nerve is a full triangle: a 2-dimensional nerve
/// over a 1-dimensional space, the classic dimension artifact.
inline CoveringSpec paper_interval() {
    CoveringSpec spec;
    spec.space = ModelSpace::interval();
    spec.regions = {
        {"O1", interval_region({{Rational(0), Rational(3, 5)}})},
        {"O2", interval_region({{Rational(2, 5), Rational(1)}})},
        {"O3", interval_region({{Rational(1, 5), Rational(4, 5)}})},
    };
    spec.validate();
    return spec;
}

inline std::vector<std::string> fixture_names() { return {"paper-circle", "paper-interval"}; }

inline std::optional<CoveringSpec> fixture_by_name(std::string_view name) {
    if (name == "paper-circle") return paper_circle();
    if (name == "paper-interval") return paper_interval();
    return std::nullopt;
}

}  // namespace finitary
