#include <catch2/catch_amalgamated.hpp>

#include "finitary/fixtures.hpp"
#include "finitary/nerve.hpp"
#include "finitary/random_tables.hpp"

#include "support/test_oracles.hpp"

using namespace finitary;
using testsupport::random_circle_covering;

namespace {

std::set<std::string> face(std::initializer_list<const char*> labels) {
    std::set<std::string> out;
    for (const char* l : labels) out.insert(l);
    return out;
}

}  // namespace

TEST_CASE("interval fixture nerve is a full triangle") {
    const auto nerve = nerve_exact(paper_interval());
    CHECK(nerve.dimension() == 2);
    CHECK(nerve.faces().size() == 7);
    CHECK(nerve.is_face(face({"O1", "O2", "O3"})));
    const auto maximal = nerve.maximal_faces();
    REQUIRE(maximal.size() == 1);
    CHECK(maximal[0] == std::vector<std::string>{"O1", "O2", "O3"});
}

TEST_CASE("disjoint intervals give isolated vertices") {
    CoveringSpec spec;
    spec.space = ModelSpace::interval();
    spec.regions = {{"O1", interval_region({{Rational(0), Rational(1, 4)}})},
                    {"O2", interval_region({{Rational(1, 2), Rational(1)}})}};
    const auto nerve = nerve_exact(spec);
    CHECK(nerve.dimension() == 0);
    CHECK(nerve.faces().size() == 2);
    CHECK_FALSE(nerve.is_face(face({"O1", "O2"})));
}

TEST_CASE("circle fixture: exact nerve and its maximal faces") {
    const auto nerve = nerve_exact(paper_circle());
    // every pair except {O3, O4} overlaps; both triples through O1, O2 exist
    CHECK(nerve.is_face(face({"O1", "O2", "O3"})));
    CHECK(nerve.is_face(face({"O1", "O2", "O4"})));
    CHECK_FALSE(nerve.is_face(face({"O3", "O4"})));
    CHECK(nerve.faces().size() == 11);

    auto maximal = nerve.maximal_faces();
    std::set<std::vector<std::string>> maximal_set(maximal.begin(), maximal.end());
    CHECK(maximal_set == std::set<std::vector<std::string>>{{"O1", "O2", "O3"},
                                                            {"O1", "O2", "O4"}});
}

TEST_CASE("circle fixture: empirical nerve at the four-point grid") {
    const auto spec = paper_circle();
    const auto result = tabulate(spec, sample_events(spec, SampleMode::grid(4)));
    const auto empirical = nerve_empirical(result.table);
    CHECK(empirical.is_face(face({"O1", "O2", "O3"})));  // via event 3pi/2
    CHECK(empirical.is_face(face({"O1", "O2", "O4"})));  // via event pi/2
    CHECK_FALSE(empirical.is_face(face({"O3", "O4"})));
    CHECK(empirical.subcomplex_of(nerve_exact(spec)));
}

TEST_CASE("empirical nerve needs a jointly registered event") {
    const auto table = ObservationTable::from_rows({"a", "b"}, {"O1", "O2"}, {{1, 0}, {0, 1}});
    const auto nerve = nerve_empirical(table);
    CHECK(nerve.faces().size() == 2);  // two vertices, no edge
    CHECK(nerve.dimension() == 0);
}

TEST_CASE("empirical nerves are subcomplexes of exact nerves") {
    Engine engine(71);
    for (int trial = 0; trial < 40; ++trial) {
        const auto spec = random_circle_covering(engine, 6);
        const auto result = tabulate(spec, sample_events(spec, SampleMode::grid(50)));
        if (result.table.event_count() == 0) continue;
        CHECK(nerve_empirical(result.table).subcomplex_of(nerve_exact(spec)));
    }
}

TEST_CASE("adding events never removes empirical faces") {
    Engine engine(72);
    for (int trial = 0; trial < 20; ++trial) {
        const auto spec = random_circle_covering(engine, 5);
        const auto coarse = tabulate(spec, sample_events(spec, SampleMode::grid(10)));
        const auto fine = tabulate(spec, sample_events(spec, SampleMode::grid(40)));
        if (coarse.table.event_count() == 0 || fine.table.event_count() == 0) continue;
        // grid(40) contains grid(10)'s angles (10 divides 40): refinement only adds
        CHECK(nerve_empirical(coarse.table).subcomplex_of(nerve_empirical(fine.table)));
    }
}

TEST_CASE("nerve face families are downward closed") {
    Engine engine(73);
    for (int trial = 0; trial < 20; ++trial) {
        const auto spec = random_circle_covering(engine, 5);
        CHECK_NOTHROW(nerve_exact(spec));  // construction validates closure
        const auto result = tabulate(spec, sample_events(spec, SampleMode::grid(30)));
        if (result.table.event_count() > 0) CHECK_NOTHROW(nerve_empirical(result.table));
    }
}

TEST_CASE("box regions intersect per axis") {
    CoveringSpec spec;
    spec.space = ModelSpace::box(2);
    spec.regions = {
        {"O1", interval_region({{Rational(0), Rational(1, 2)}, {Rational(0), Rational(1, 2)}})},
        {"O2", interval_region({{Rational(1, 4), Rational(3, 4)}, {Rational(1, 4), Rational(3, 4)}})},
        {"O3", interval_region({{Rational(0), Rational(1)}, {Rational(5, 8), Rational(1)}})}};
    const auto nerve = nerve_exact(spec);
    CHECK(nerve.is_face(face({"O1", "O2"})));
    CHECK_FALSE(nerve.is_face(face({"O1", "O3"})));  // second axes (0,1/2), (5/8,1) are disjoint
    CHECK(nerve.is_face(face({"O2", "O3"})));
    CHECK_FALSE(nerve.is_face(face({"O1", "O2", "O3"})));

    const auto result = tabulate(spec, sample_events(spec, SampleMode::grid(7)));
    CHECK(nerve_empirical(result.table).subcomplex_of(nerve));
}

TEST_CASE("an all-dropped sampling leaves an empty pipeline") {
    CoveringSpec spec;
    spec.space = ModelSpace::interval();
    spec.regions = {{"O1", interval_region({{Rational(0), Rational(1, 100)}})}};
    const auto result = tabulate(spec, sample_events(spec, SampleMode::grid(3)));
    CHECK(result.table.event_count() == 0);
    CHECK(result.dropped_events == 3);
    const auto nerve = nerve_empirical(result.table);
    CHECK(nerve.dimension() == -1);
    CHECK(nerve.faces().empty());
}

TEST_CASE("wrap-around arcs intersect correctly") {
    CoveringSpec spec;
    spec.space = ModelSpace::circle();
    // one arc through zero, one across it, one far away
    spec.regions = {{"O1", arc_region(Rational(7, 4), Rational(1, 2))},   // (7pi/4, pi/4)
                    {"O2", arc_region(Rational(0), Rational(1, 8))},      // (0, pi/8)
                    {"O3", arc_region(Rational(1), Rational(1, 4))}};     // (pi, 5pi/4)
    const auto nerve = nerve_exact(spec);
    CHECK(nerve.is_face(face({"O1", "O2"})));
    CHECK_FALSE(nerve.is_face(face({"O1", "O3"})));
    CHECK_FALSE(nerve.is_face(face({"O2", "O3"})));
}
