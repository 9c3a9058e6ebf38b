#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "finitary/observation_table.hpp"

namespace finitary {

/// All randomized suites draw from std::mt19937_64, whose output sequence is
/// fixed by the standard, through the explicit rejection sampler below,
/// never through distribution objects, whose mappings vary across standard
/// libraries. A (seed, algorithm) pair therefore reproduces bit-identically
/// everywhere.
using Engine = std::mt19937_64;

/// Uniform integer in [0, bound) by rejection on raw 64-bit draws.
inline std::uint64_t uniform_below(Engine& engine, std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("uniform_below: bound must be positive");
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t draw = engine();
    while (draw >= limit) draw = engine();
    return draw % bound;
}

/// Random observation table: the event count is uniform in [1, max_events],
/// the observer count uniform in [1, max_observers], and each event's
/// observer set an independent uniform draw from the nonempty subsets
/// (a uniform bitmask in [1, 2^m - 1]). Labels are e1..en and O1..Om.
inline ObservationTable random_table(Engine& engine, std::size_t max_events,
                                     std::size_t max_observers) {
    if (max_events == 0 || max_observers == 0)
        throw std::invalid_argument("random_table: bounds must be positive");
    if (max_observers > 62) throw std::invalid_argument("random_table: too many observers");
    const std::size_t n = 1 + uniform_below(engine, max_events);
    const std::size_t m = 1 + uniform_below(engine, max_observers);

    std::vector<std::string> events, observers;
    for (std::size_t i = 1; i <= n; ++i) events.push_back("e" + std::to_string(i));
    for (std::size_t l = 1; l <= m; ++l) observers.push_back("O" + std::to_string(l));

    BoolMatrix registered(n, m);
    const std::uint64_t subsets = (std::uint64_t{1} << m) - 1;
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint64_t mask = 1 + uniform_below(engine, subsets);
        for (std::size_t l = 0; l < m; ++l) registered.set(i, l, (mask >> l) & 1);
    }
    return ObservationTable(std::move(events), std::move(observers), std::move(registered));
}

}  // namespace finitary
