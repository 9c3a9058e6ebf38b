#include <catch2/catch_amalgamated.hpp>

#include "finitary/observation_table.hpp"
#include "finitary/random_tables.hpp"

using namespace finitary;

namespace {

ObservationTable circle_table() {
    return ObservationTable::from_rows(
        {"0", "pi/2", "pi", "3pi/2"}, {"O1", "O2", "O3", "O4"},
        {{1, 0, 0, 0}, {1, 1, 0, 1}, {0, 1, 0, 0}, {1, 1, 1, 0}});
}

}  // namespace

TEST_CASE("table invariants are enforced at ingest") {
    CHECK_THROWS_AS(ObservationTable::from_rows({"a", "a"}, {"O1"}, {{1}, {1}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(ObservationTable::from_rows({"a"}, {"O1", "O1"}, {{1, 1}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(ObservationTable::from_rows({"a"}, {"O1"}, {{1}, {1}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(ObservationTable::from_rows({"a", "b"}, {"O1"}, {{1}, {0}}),
                    std::invalid_argument);  // b registered by nobody
}

TEST_CASE("registration sets of the circle table") {
    const auto lambda = registration_sets(circle_table()).lambda;
    CHECK(lambda.at("pi/2") == std::set<std::string>{"O1", "O2", "O4"});
    CHECK(lambda.at("0") == std::set<std::string>{"O1"});
    CHECK(lambda.at("pi") == std::set<std::string>{"O2"});
    CHECK(lambda.at("3pi/2") == std::set<std::string>{"O1", "O2", "O3"});
}

TEST_CASE("registration sets, single observer all plus") {
    const auto table = ObservationTable::from_rows({"a", "b", "c"}, {"O1"}, {{1}, {1}, {1}});
    for (const auto& [event, who] : registration_sets(table).lambda)
        CHECK(who == std::set<std::string>{"O1"});
}

TEST_CASE("registration sets read off rows") {
    const auto table =
        ObservationTable::from_rows({"e1", "e2", "e3"}, {"O1", "O2"}, {{1, 0}, {1, 1}, {0, 1}});
    const auto lambda = registration_sets(table).lambda;
    CHECK(lambda.at("e1") == std::set<std::string>{"O1"});
    CHECK(lambda.at("e2") == std::set<std::string>{"O1", "O2"});
    CHECK(lambda.at("e3") == std::set<std::string>{"O2"});
}

TEST_CASE("overlap matrix of the circle table") {
    const auto table = circle_table();
    const auto overlap = overlap_matrix(table);
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = 0; b < 4; ++b) {
            const bool expected = !((a == 2 && b == 3) || (a == 3 && b == 2));
            CHECK(overlap(a, b) == expected);
        }
}

TEST_CASE("overlap matrix: disjoint and identical columns") {
    const auto disjoint =
        ObservationTable::from_rows({"a", "b"}, {"O1", "O2"}, {{1, 0}, {0, 1}});
    CHECK_FALSE(overlap_matrix(disjoint)(0, 1));

    const auto identical = ObservationTable::from_rows({"a"}, {"O1", "O2"}, {{1, 1}});
    CHECK(overlap_matrix(identical)(0, 1));
}

TEST_CASE("overlap matrix is symmetric on random tables") {
    Engine engine(2024);
    for (int trial = 0; trial < 50; ++trial) {
        const auto table = random_table(engine, 10, 6);
        const auto overlap = overlap_matrix(table);
        for (std::size_t a = 0; a < table.observer_count(); ++a)
            for (std::size_t b = 0; b < table.observer_count(); ++b)
                CHECK(overlap(a, b) == overlap(b, a));
    }
}
