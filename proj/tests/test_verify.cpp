#include <catch2/catch_amalgamated.hpp>

#include "finitary/poset.hpp"
#include "finitary/verify.hpp"

#include "support/test_oracles.hpp"

using namespace finitary;

TEST_CASE("Rota and Sorkin topologies coincide on the pseudocircle") {
    const auto poset = poset_from_cover({"x", "y", "z", "w"},
                                        {{"x", "z"}, {"x", "w"}, {"y", "z"}, {"y", "w"}});
    const auto report = verify_theorem(poset);
    CHECK(report.theorem_holds);
    CHECK(report.rota_topology.open_count() == 7);
    CHECK(report.sorkin_topology.open_count() == 7);
    CHECK_FALSE(report.witness.has_value());
    CHECK(report.rho == std::set<std::pair<std::string, std::string>>{
                            {"x", "z"}, {"x", "w"}, {"y", "z"}, {"y", "w"}});
}

TEST_CASE("one-point space holds trivially") {
    const auto report = verify_theorem(poset_from_cover({"s"}, {}));
    CHECK(report.theorem_holds);
    CHECK(report.rota_topology.open_count() == 2);  // {} and {s}
}

TEST_CASE("theorem holds on random tables") {
    Engine engine(61);
    for (int trial = 0; trial < 150; ++trial) {
        const auto poset = testsupport::random_poset(engine, 10, 6);
        const auto report = verify_theorem(poset);
        REQUIRE(report.theorem_holds);
    }
}

TEST_CASE("topology difference reporting produces a minimal witness") {
    const FiniteTopology discrete({"a", "b"}, {{}, {0}, {1}, {0, 1}});
    const FiniteTopology chain({"a", "b"}, {{}, {0}, {0, 1}});
    const auto witness = first_topology_difference(chain, discrete);
    REQUIRE(witness.has_value());
    CHECK(*witness == std::vector<std::string>{"b"});  // first family difference: {b}
    CHECK_FALSE(first_topology_difference(chain, chain).has_value());
}
