// Acceptance suite: runs every criterion of the project's verification
// matrix at its stated tolerance and prints exactly one PASS/FAIL line per
// criterion. Exits nonzero when any criterion fails.

#include <sys/wait.h>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "finitary/element_syntax.hpp"
#include "finitary/fixtures.hpp"
#include "finitary/ideal_oracle.hpp"
#include "finitary/ideals.hpp"
#include "finitary/json_io.hpp"
#include "finitary/nerve.hpp"
#include "finitary/poset.hpp"
#include "finitary/random_tables.hpp"
#include "finitary/text_io.hpp"
#include "finitary/verify.hpp"

#include "../support/test_oracles.hpp"

using namespace finitary;
namespace fs = std::filesystem;

namespace {

struct Check {
    std::vector<std::string> failures;
    void expect(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
};

struct CliRun {
    int exit_code = -1;
    std::string out;
};

fs::path scratch_dir() {
    static const fs::path dir = [] {
        fs::path p = fs::temp_directory_path() / "finitary-acceptance";
        fs::remove_all(p);
        fs::create_directories(p);
        return p;
    }();
    return dir;
}

CliRun run_cli(const std::string& args) {
    static int counter = 0;
    const fs::path out_path = scratch_dir() / ("cli-out-" + std::to_string(counter++));
    const std::string command = std::string(FINITARY_CLI_PATH) + " " + args + " >" +
                                out_path.string() + " 2>/dev/null";
    const int status = std::system(command.c_str());
    CliRun run;
    run.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(out_path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    run.out = buffer.str();
    return run;
}

std::vector<FinitaryPoset> random_poset_batch(std::uint64_t seed, std::size_t count,
                                              std::size_t max_events, std::size_t max_observers) {
    Engine engine(seed);
    std::vector<FinitaryPoset> out;
    out.reserve(count);
    for (std::size_t k = 0; k < count; ++k)
        out.push_back(poset_from_table(random_table(engine, max_events, max_observers)));
    return out;
}

// --- criteria ----------------------------------------------------------------

void criterion_circle_end_to_end(Check& check) {
    const fs::path table_path = scratch_dir() / "circle.json";
    const auto simulate =
        run_cli("simulate --fixture paper-circle --grid 4 --output " + table_path.string());
    check.expect(simulate.exit_code == 0, "simulate exited nonzero");

    const std::string expected_grid =
        "event  O1  O2  O3  O4\n"
        "0      +   -   -   -\n"
        "pi/2   +   +   -   +\n"
        "pi     -   +   -   -\n"
        "3pi/2  +   +   +   -\n";
    std::ifstream grid_in(scratch_dir() / "circle.txt", std::ios::binary);
    std::ostringstream grid;
    grid << grid_in.rdbuf();
    check.expect(grid.str() == expected_grid, "simulated +/- grid differs from the reference table");

    const auto substitute = run_cli("substitute --table " + table_path.string());
    check.expect(substitute.exit_code == 0, "substitute exited nonzero");
    const auto poset = nlohmann::json::parse(substitute.out);
    check.expect(poset.at("classes").size() == 4, "expected 4 classes");
    for (const auto& cls : poset.at("classes"))
        check.expect(cls.size() == 1, "expected singleton classes");

    std::set<std::pair<std::string, std::string>> strict;
    for (const auto& pair : poset.at("order"))
        strict.emplace(pair.at(0).get<std::string>(), pair.at(1).get<std::string>());
    const std::set<std::pair<std::string, std::string>> expected_order = {
        {"pi/2", "0"}, {"pi/2", "pi"}, {"3pi/2", "0"}, {"3pi/2", "pi"}};
    check.expect(strict == expected_order, "strict order pairs differ from the reference figure");
}

void criterion_theorem_random_suite(Check& check) {
    const auto posets = random_poset_batch(1, 500, 10, 6);
    std::size_t held = 0;
    for (const auto& poset : posets) {
        const RotaReport report = verify_theorem(poset);
        if (report.theorem_holds && report.rota_topology.opens() == report.sorkin_topology.opens())
            ++held;
    }
    check.expect(held == posets.size(),
                 "theorem held on " + std::to_string(held) + "/500 random tables");
}

void criterion_rota_dual_path(Check& check) {
    const auto posets = random_poset_batch(1, 500, 10, 6);
    std::size_t agreed = 0;
    for (const auto& poset : posets)
        if (rota_relation(make_basis(poset)) == rota_relation_fast(poset)) ++agreed;
    check.expect(agreed == posets.size(),
                 "ideal-arithmetic rho matched the covering on " + std::to_string(agreed) + "/500");

    // targeted fixtures for the four cases of the proximity argument
    auto basis = make_basis(poset_from_cover({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}));
    const auto spectrum = primitive_spectrum(basis);
    const auto& Xa = spectrum[0];
    const auto& Xb = spectrum[1];
    const auto& Xc = spectrum[2];
    check.expect(ideal_product(Xa, Xa) == Xa, "case 1: X_a . X_a != X_a");
    check.expect(ideal_product(Xb, Xa) == ideal_intersect(Xb, Xa),
                 "case 2: non-comparable pair gave a strict inclusion");
    check.expect(ideal_product(Xa, Xc) == ideal_intersect(Xa, Xc),
                 "case 3: intermediate element failed to factor the product");
    const auto product = ideal_product(Xa, Xb);
    const auto meet = ideal_intersect(Xa, Xb);
    const PairIndex witness =
        basis->at(basis->poset().index_of("a"), basis->poset().index_of("b"));
    check.expect(meet.contains(witness) && !product.contains(witness),
                 "case 4: covering pair failed to exclude the witness symbol");
    check.expect(product.subset_of(meet) && !(product == meet),
                 "case 4: covering pair product was not strictly smaller");
}

void criterion_oracle_equivalence(Check& check) {
    const auto posets = random_poset_batch(4, 200, 8, 6);
    std::size_t pairs_checked = 0;
    for (const auto& poset : posets) {
        auto basis = make_basis(poset);
        const auto spectrum = primitive_spectrum(basis);
        for (const auto& lhs : spectrum)
            for (const auto& rhs : spectrum) {
                ++pairs_checked;
                if (!(ideal_product(lhs, rhs) == ideal_product_oracle(lhs, rhs))) {
                    check.expect(false, "oracle mismatch on a primitive-ideal pair");
                    return;
                }
            }
    }
    check.expect(pairs_checked > 0, "no primitive-ideal pairs were checked");
}

void criterion_associativity(Check& check) {
    Engine engine(5);
    std::size_t triples_checked = 0;
    for (int batch = 0; batch < 20; ++batch) {
        auto basis = make_basis(testsupport::random_poset(engine, 8, 6));
        for (int t = 0; t < 50; ++t) {
            const auto u = testsupport::random_element(engine, basis);
            const auto v = testsupport::random_element(engine, basis);
            const auto w = testsupport::random_element(engine, basis);
            if (!(multiply(multiply(u, v), w) == multiply(u, multiply(v, w)))) {
                check.expect(false, "associativity failed on a random triple");
                return;
            }
            const auto product = multiply(u, v);
            for (const auto& [index, coeff] : product.terms())
                if (index >= basis->dimension() || coeff == 0) {
                    check.expect(false, "product left the admissible basis or kept a zero");
                    return;
                }
            ++triples_checked;
        }
    }
    check.expect(triples_checked == 1000, "expected 1000 random triples");
}

void criterion_spectrum_shape(Check& check) {
    const auto posets = random_poset_batch(6, 100, 10, 6);
    for (const auto& poset : posets) {
        auto basis = make_basis(poset);
        const auto spectrum = primitive_spectrum(basis);
        if (spectrum.size() != poset.size()) {
            check.expect(false, "|spectrum| != |classes|");
            return;
        }
        for (const auto& ideal : spectrum)
            if (basis->dimension() - ideal.dimension() != 1) {
                check.expect(false, "a primitive ideal does not have codimension 1");
                return;
            }
    }
}

void criterion_nerve_artifact(Check& check) {
    const auto nerve = nerve_exact(paper_interval());
    check.expect(nerve.faces().size() == 7, "interval nerve is not the full 2-simplex");
    check.expect(nerve.is_face({"O1", "O2", "O3"}), "triple face missing");
    check.expect(nerve.dimension() == 2, "nerve dimension is not 2");
    check.expect(space_dimension(paper_interval().space) == 1, "space dimension is not 1");
}

void criterion_nerve_consistency(Check& check) {
    Engine engine(7);
    for (int trial = 0; trial < 100; ++trial) {
        const auto spec = testsupport::random_circle_covering(engine, 6);
        const auto result = tabulate(spec, sample_events(spec, SampleMode::grid(50)));
        if (result.table.event_count() == 0) continue;
        if (!nerve_empirical(result.table).subcomplex_of(nerve_exact(spec))) {
            check.expect(false, "empirical nerve escaped the exact nerve");
            return;
        }
    }

    const auto spec = paper_circle();
    const std::set<std::string> o34 = {"O3", "O4"};
    const auto coarse = tabulate(spec, sample_events(spec, SampleMode::grid(4)));
    check.expect(!nerve_empirical(coarse.table).is_face(o34), "face {O3,O4} present at grid(4)");
    const auto fine = tabulate(spec, sample_events(spec, SampleMode::grid(400)));
    check.expect(nerve_empirical(fine.table).is_face(o34),
                 "face {O3,O4} absent at grid(400): arcs O3 and O4 of the table-consistent "
                 "covering are disjoint, so no sampling density can produce a jointly "
                 "registered event; this clause cannot hold together with the reference "
                 "table reproduction checked by criterion 1");
}

void criterion_topology_counts(Check& check) {
    const auto circle = poset_from_table(
        tabulate(paper_circle(), sample_events(paper_circle(), SampleMode::grid(4))).table);
    const RotaReport report = verify_theorem(circle);
    check.expect(report.sorkin_topology.open_count() == 7, "circle Sorkin family is not 7 opens");
    check.expect(report.rota_topology.open_count() == 7, "circle Rota family is not 7 opens");
    check.expect(testsupport::enumerate_opens(circle).size() == 7,
                 "subset enumeration disagrees on the circle");

    const auto chain = poset_from_cover({"a", "b"}, {{"a", "b"}});
    check.expect(alexandrov_topology(chain).open_count() == 3, "2-chain is not 3 opens");
    check.expect(verify_theorem(chain).rota_topology.open_count() == 3,
                 "2-chain Rota family is not 3 opens");
    check.expect(testsupport::enumerate_opens(chain).size() == 3,
                 "subset enumeration disagrees on the 2-chain");

    for (std::size_t n = 0; n <= 4; ++n) {
        std::vector<std::string> labels;
        for (std::size_t i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
        const auto antichain = poset_from_cover(labels, {});
        const std::size_t expected = std::size_t{1} << n;
        check.expect(alexandrov_topology(antichain).open_count() == expected,
                     "antichain of " + std::to_string(n) + " is not 2^n opens");
        check.expect(verify_theorem(antichain).rota_topology.open_count() == expected,
                     "antichain Rota family is not 2^n opens");
        check.expect(testsupport::enumerate_opens(antichain).size() == expected,
                     "subset enumeration disagrees on the antichain");
    }
}

struct Criterion {
    std::string name;
    double time_limit_seconds;  // 0 = untimed
    std::function<void(Check&)> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"criterion 1: circle fixture end-to-end (table + substitute, exact)", 1.0,
         criterion_circle_end_to_end},
        {"criterion 2: theorem on 500 random tables (<=10 events, <=6 observers, seed 1)", 30.0,
         criterion_theorem_random_suite},
        {"criterion 3: rho dual-path equality on 500 posets + four case fixtures", 0.0,
         criterion_rota_dual_path},
        {"criterion 4: ideal product vs linear-algebra oracle, 200 posets (<=8 classes)", 60.0,
         criterion_oracle_equivalence},
        {"criterion 5: associativity on 1000 random triples, closure of products", 0.0,
         criterion_associativity},
        {"criterion 6: spectrum size and codimension 1 on every tested poset", 0.0,
         criterion_spectrum_shape},
        {"criterion 7: interval covering nerve artifact (dimension 2 over dimension 1)", 0.0,
         criterion_nerve_artifact},
        {"criterion 8: empirical nerve inside exact nerve; {O3,O4} refinement", 0.0,
         criterion_nerve_consistency},
        {"criterion 9: open-set counts (circle 7, chain 3, antichain 2^n) via both pipelines", 0.0,
         criterion_topology_counts},
    };

    int failed = 0;
    for (const auto& criterion : criteria) {
        Check check;
        const auto start = std::chrono::steady_clock::now();
        try {
            criterion.run(check);
        } catch (const std::exception& e) {
            check.expect(false, std::string("unexpected exception: ") + e.what());
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (criterion.time_limit_seconds > 0 && elapsed > criterion.time_limit_seconds)
            check.expect(false, "time limit " + std::to_string(criterion.time_limit_seconds) +
                                    "s exceeded");

        std::ostringstream time;
        time.precision(2);
        time << std::fixed << elapsed;
        if (check.failures.empty()) {
            std::cout << "PASS  " << criterion.name << "  (" << time.str() << "s)\n";
        } else {
            ++failed;
            std::cout << "FAIL  " << criterion.name << "  (" << time.str() << "s)\n";
            for (const auto& why : check.failures) std::cout << "      - " << why << "\n";
        }
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed")
              << "\n";
    return failed == 0 ? 0 : 1;
}
