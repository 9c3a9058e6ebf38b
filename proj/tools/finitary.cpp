// Command-line front end for the finitary toolkit: synthesize observation
// tables from geometric coverings, build finitary substitutes and their
// incidence algebras, and machine-check that the Rota topology of the
// primitive spectrum coincides with the Sorkin topology of the substitute.
//
// Exit codes: 0 all checks pass, 1 a theorem/oracle check was falsified
// (bug sentinel), 2 usage or input error.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "finitary/dot.hpp"
#include "finitary/element_syntax.hpp"
#include "finitary/fixtures.hpp"
#include "finitary/geometry.hpp"
#include "finitary/ideal_oracle.hpp"
#include "finitary/ideals.hpp"
#include "finitary/json_io.hpp"
#include "finitary/nerve.hpp"
#include "finitary/poset.hpp"
#include "finitary/random_tables.hpp"
#include "finitary/text_io.hpp"
#include "finitary/verify.hpp"

namespace {

using namespace finitary;

struct PipelineConfig {
    // input source (exactly one)
    std::string table_file;
    std::string poset_file;
    std::string spec_file;
    std::string fixture;
    // sampling for geometric sources
    std::size_t grid = 0;
    std::size_t uniform = 0;
    // global
    std::string format = "json";
    std::string output;
    std::uint64_t seed = 0;
    // verification
    bool oracle = false;
    std::size_t dim_bound = 64;
    std::size_t random_count = 0;
    std::size_t max_events = 10;
    std::size_t max_observers = 6;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_output(const PipelineConfig& config, const std::string& content) {
    if (config.output.empty()) {
        std::cout << content;
        if (!content.empty() && content.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(config.output, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write '" + config.output + "'");
    out << content;
}

bool looks_like_json(const std::string& content) {
    for (char c : content) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        return c == '{';
    }
    return false;
}

ObservationTable load_table(const std::string& path) {
    const std::string content = read_file(path);
    if (looks_like_json(content)) return table_from_json(json::parse(content));
    return table_from_text(content);
}

CoveringSpec resolve_spec(const PipelineConfig& config) {
    if (!config.fixture.empty()) {
        auto spec = fixture_by_name(config.fixture);
        if (!spec) throw std::invalid_argument("unknown fixture '" + config.fixture + "'");
        return *spec;
    }
    return spec_from_json(json::parse(read_file(config.spec_file)));
}

SampleMode resolve_sampling(const PipelineConfig& config) {
    if (config.uniform > 0) return SampleMode::uniform(config.uniform, config.seed);
    return SampleMode::grid(config.grid > 0 ? config.grid : 4);
}

bool has_geometric_source(const PipelineConfig& config) {
    return !config.fixture.empty() || !config.spec_file.empty();
}

TabulateResult resolve_table(const PipelineConfig& config) {
    if (!config.table_file.empty()) return {load_table(config.table_file), 0};
    const CoveringSpec spec = resolve_spec(config);
    return tabulate(spec, sample_events(spec, resolve_sampling(config)));
}

FinitaryPoset resolve_poset(const PipelineConfig& config) {
    if (!config.poset_file.empty())
        return poset_from_json(json::parse(read_file(config.poset_file)));
    return poset_from_table(resolve_table(config).table);
}

void add_input_options(CLI::App* cmd, PipelineConfig& config, bool with_poset = false) {
    auto* table = cmd->add_option("--table", config.table_file, "observation table file (json or text grid)");
    auto* spec = cmd->add_option("--spec", config.spec_file, "covering spec file (json)");
    auto* fixture = cmd->add_option("--fixture", config.fixture,
                                    "built-in covering fixture (paper-circle, paper-interval)");
    table->excludes(spec)->excludes(fixture);
    spec->excludes(fixture);
    if (with_poset) {
        auto* poset = cmd->add_option("--poset", config.poset_file, "poset file (json)");
        poset->excludes(table)->excludes(spec)->excludes(fixture);
    }
    auto* grid = cmd->add_option("--grid", config.grid, "sample n grid points (default 4)")
                     ->check(CLI::Range(std::size_t{1}, std::size_t{1000000}));
    cmd->add_option("--uniform", config.uniform, "sample n seeded pseudo-random points")
        ->check(CLI::Range(std::size_t{1}, std::size_t{1000000}))
        ->excludes(grid);
}

int run_simulate(const PipelineConfig& config) {
    if (!has_geometric_source(config))
        throw CLI::ValidationError("simulate", "needs --spec or --fixture");
    const TabulateResult result = resolve_table(config);
    std::cerr << "dropped events (covered by no region): " << result.dropped_events << "\n";
    if (config.format == "text") {
        write_output(config, table_to_text(result.table));
    } else if (config.output.empty()) {
        write_output(config, table_to_json(result.table).dump(2) + "\n");
    } else {
        // file mode emits both representations, json at the given path
        std::ofstream json_out(config.output, std::ios::binary);
        if (!json_out) throw std::invalid_argument("cannot write '" + config.output + "'");
        json_out << table_to_json(result.table).dump(2) << "\n";
        std::string text_path = config.output;
        const std::string suffix = ".json";
        if (text_path.size() > suffix.size() &&
            text_path.compare(text_path.size() - suffix.size(), suffix.size(), suffix) == 0)
            text_path.resize(text_path.size() - suffix.size());
        text_path += ".txt";
        std::ofstream text_out(text_path, std::ios::binary);
        text_out << table_to_text(result.table);
        std::cerr << "wrote " << config.output << " and " << text_path << "\n";
    }
    return 0;
}

int run_substitute(const PipelineConfig& config) {
    const FinitaryPoset poset = resolve_poset(config);
    if (config.format == "dot")
        write_output(config, hasse_dot(poset));
    else if (config.format == "text")
        write_output(config, poset_to_text(poset));
    else
        write_output(config, poset_to_json(poset).dump(2) + "\n");
    return 0;
}

int run_algebra(const PipelineConfig& config, const std::vector<std::string>& product_exprs) {
    const FinitaryPoset poset = resolve_poset(config);
    BasisPtr basis = make_basis(poset);
    const auto spectrum = primitive_spectrum(basis);

    std::optional<std::string> product_text;
    if (!product_exprs.empty()) {
        AlgebraElement lhs = parse_element(basis, product_exprs.at(0));
        AlgebraElement rhs = parse_element(basis, product_exprs.at(1));
        product_text = format_element(multiply(lhs, rhs));
    }

    if (config.format == "text") {
        std::ostringstream out;
        out << "dimension: " << basis->dimension() << "\n";
        out << "classes: " << poset.size() << "\n";
        for (std::size_t s = 0; s < spectrum.size(); ++s)
            out << "X[" << poset.label(s) << "]: dimension " << spectrum[s].dimension() << "\n";
        if (product_text) out << "product: " << *product_text << "\n";
        write_output(config, out.str());
    } else {
        json spectrum_json = json::array();
        for (std::size_t s = 0; s < spectrum.size(); ++s)
            spectrum_json.push_back(
                {{"class", poset.label(s)}, {"dimension", spectrum[s].dimension()}});
        json out = {{"dimension", basis->dimension()}, {"spectrum", spectrum_json}};
        if (product_text) out["product"] = *product_text;
        write_output(config, out.dump(2) + "\n");
    }
    return 0;
}

int run_rota(const PipelineConfig& config) {
    const FinitaryPoset poset = resolve_poset(config);
    BasisPtr basis = make_basis(poset);
    const auto by_ideals = rota_relation(basis);
    const auto by_cover = rota_relation_fast(poset);
    const bool agree = by_ideals == by_cover;

    if (config.format == "text") {
        std::ostringstream out;
        for (const auto& [r, s] : by_ideals)
            out << poset.label(r) << " -> " << poset.label(s) << "\n";
        out << (agree ? "covering relation: agrees\n" : "covering relation: MISMATCH\n");
        write_output(config, out.str());
    } else {
        json rho = json::array();
        for (const auto& [r, s] : by_ideals) rho.push_back({poset.label(r), poset.label(s)});
        json cover = json::array();
        for (const auto& [r, s] : by_cover) cover.push_back({poset.label(r), poset.label(s)});
        write_output(config,
                     json{{"rho", rho}, {"covering", cover}, {"agree", agree}}.dump(2) + "\n");
    }
    return agree ? 0 : 1;
}

struct OracleOutcome {
    std::string status = "off";  // off | ok | mismatch | skipped
    std::string detail;
};

OracleOutcome run_oracle_check(const FinitaryPoset& poset, std::size_t dim_bound) {
    OracleOutcome outcome;
    BasisPtr basis = make_basis(poset);
    const auto spectrum = primitive_spectrum(basis);
    try {
        for (const auto& lhs : spectrum)
            for (const auto& rhs : spectrum)
                if (!(ideal_product(lhs, rhs) == ideal_product_oracle(lhs, rhs, dim_bound))) {
                    outcome.status = "mismatch";
                    return outcome;
                }
        outcome.status = "ok";
    } catch (const OracleLimitError& e) {
        outcome.status = "skipped";
        outcome.detail = e.what();
    }
    return outcome;
}

int run_verify(const PipelineConfig& config) {
    json instances = json::array();
    bool all_hold = true;
    std::size_t oracle_skips = 0;

    auto record = [&](const std::string& name, const FinitaryPoset& poset) {
        const RotaReport report = verify_theorem(poset);
        json entry = {{"instance", name}, {"report", report_to_json(report)}};
        all_hold = all_hold && report.theorem_holds;
        if (config.oracle) {
            const OracleOutcome outcome = run_oracle_check(poset, config.dim_bound);
            entry["oracle"] = outcome.status;
            if (!outcome.detail.empty()) entry["oracle_detail"] = outcome.detail;
            if (outcome.status == "mismatch") all_hold = false;
            if (outcome.status == "skipped") ++oracle_skips;
        }
        instances.push_back(std::move(entry));
    };

    if (config.random_count > 0) {
        Engine engine(config.seed);
        for (std::size_t k = 0; k < config.random_count; ++k) {
            const ObservationTable table =
                random_table(engine, config.max_events, config.max_observers);
            record("random-" + std::to_string(k), poset_from_table(table));
        }
    } else {
        record("input", resolve_poset(config));
    }

    if (config.format == "text") {
        std::ostringstream out;
        std::size_t held = 0;
        for (const auto& entry : instances)
            if (entry.at("report").at("theorem_holds").get<bool>()) ++held;
        out << "instances: " << instances.size() << "\n";
        out << "theorem holds: " << held << "/" << instances.size() << "\n";
        if (config.oracle) out << "oracle skips: " << oracle_skips << "\n";
        out << (all_hold ? "PASS\n" : "FAIL\n");
        write_output(config, out.str());
    } else {
        json out = {{"instances", instances}, {"all_hold", all_hold}};
        if (config.oracle) out["oracle_skips"] = oracle_skips;
        write_output(config, out.dump(2) + "\n");
    }
    return all_hold ? 0 : 1;
}

int run_nerve(const PipelineConfig& config, std::string mode) {
    if (mode == "auto") mode = has_geometric_source(config) ? "exact" : "empirical";
    if (mode == "exact" && !has_geometric_source(config))
        throw CLI::ValidationError("nerve", "exact mode needs a geometric --spec or --fixture");

    SimplicialComplex complex = [&] {
        if (mode == "exact") return nerve_exact(resolve_spec(config));
        return nerve_empirical(resolve_table(config).table);
    }();

    std::optional<std::size_t> space_dim;
    if (has_geometric_source(config)) {
        space_dim = space_dimension(resolve_spec(config).space);
        if (complex.dimension() > static_cast<int>(*space_dim))
            std::cerr << "warning: nerve dimension " << complex.dimension()
                      << " exceeds space dimension " << *space_dim
                      << " (geometric realization artifact)\n";
    }

    if (config.format == "dot") {
        write_output(config, nerve_dot(complex));
    } else if (config.format == "text") {
        std::ostringstream out;
        out << "mode: " << mode << "\n";
        out << "dimension: " << complex.dimension();
        if (space_dim) out << " (space dimension " << *space_dim << ")";
        out << "\nmaximal faces:";
        for (const auto& face : complex.maximal_faces()) {
            out << " {";
            for (std::size_t i = 0; i < face.size(); ++i) out << (i ? "," : "") << face[i];
            out << "}";
        }
        out << "\n";
        write_output(config, out.str());
    } else {
        json out = nerve_to_json(complex);
        out["mode"] = mode;
        if (space_dim) out["space_dimension"] = *space_dim;
        write_output(config, out.dump(2) + "\n");
    }
    return 0;
}

int run_export_dot(const PipelineConfig& config, const std::string& kind) {
    if (kind == "hasse") {
        write_output(config, hasse_dot(resolve_poset(config)));
    } else if (kind == "nerve-exact") {
        write_output(config, nerve_dot(nerve_exact(resolve_spec(config))));
    } else {
        write_output(config, nerve_dot(nerve_empirical(resolve_table(config).table)));
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    PipelineConfig config;
    CLI::App app{"finitary: finitary topological models and their incidence algebras"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", config.format, "output format")
        ->check(CLI::IsMember({"json", "text", "dot"}))
        ->capture_default_str();
    app.add_option("--output", config.output, "write output to a file instead of stdout");
    app.add_option("--seed", config.seed, "seed for pseudo-random sampling and random suites")
        ->capture_default_str();

    auto* simulate = app.add_subcommand("simulate", "synthesize an observation table from a covering");
    add_input_options(simulate, config);

    auto* substitute = app.add_subcommand("substitute", "finitary substitute of a table");
    add_input_options(substitute, config, true);

    std::vector<std::string> product_exprs;
    auto* algebra = app.add_subcommand("algebra", "incidence algebra summary (dimension, spectrum)");
    add_input_options(algebra, config, true);
    algebra
        ->add_option("--product", product_exprs,
                     "multiply two elements given in literal syntax, e.g. '3/2 |a><b| + |c><c|'")
        ->expected(2);

    auto* rota = app.add_subcommand("rota", "Rota relation via ideal arithmetic and via covering");
    add_input_options(rota, config, true);

    auto* verify = app.add_subcommand("verify", "check Rota topology == Sorkin topology");
    add_input_options(verify, config, true);
    verify->add_option("--random", config.random_count, "run a randomized suite of n tables")
        ->check(CLI::Range(std::size_t{1}, std::size_t{100000}));
    verify->add_option("--max-events", config.max_events, "event bound for random tables")
        ->capture_default_str();
    verify->add_option("--max-observers", config.max_observers, "observer bound for random tables")
        ->capture_default_str();
    verify->add_flag("--oracle", config.oracle, "cross-check ideal products by exact linear algebra");
    verify->add_option("--dim-bound", config.dim_bound, "oracle dimension bound")
        ->check(CLI::Range(std::size_t{1}, std::size_t{4096}))
        ->capture_default_str();

    std::string nerve_mode = "auto";
    auto* nerve = app.add_subcommand("nerve", "nerve of a covering (exact) or of a table (empirical)");
    add_input_options(nerve, config);
    nerve->add_option("--mode", nerve_mode, "exact | empirical | auto")
        ->check(CLI::IsMember({"exact", "empirical", "auto"}));

    std::string dot_kind = "hasse";
    auto* export_dot = app.add_subcommand("export-dot", "DOT export of a Hasse diagram or nerve skeleton");
    add_input_options(export_dot, config, true);
    export_dot->add_option("--kind", dot_kind, "hasse | nerve-exact | nerve-empirical")
        ->check(CLI::IsMember({"hasse", "nerve-exact", "nerve-empirical"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(simulate)) return run_simulate(config);
        if (app.got_subcommand(substitute)) return run_substitute(config);
        if (app.got_subcommand(algebra)) return run_algebra(config, product_exprs);
        if (app.got_subcommand(rota)) return run_rota(config);
        if (app.got_subcommand(verify)) return run_verify(config);
        if (app.got_subcommand(nerve)) return run_nerve(config, nerve_mode);
        if (app.got_subcommand(export_dot)) return run_export_dot(config, dot_kind);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "internal check failed: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
