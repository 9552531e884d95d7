#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <unistd.h>

#include <knotfit/cli.hpp>
#include <knotfit/experiment.hpp>

using namespace knotfit;

namespace {

std::filesystem::path temp_dir() {
    const auto dir = std::filesystem::temp_directory_path() /
                     ("knotfit_test_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir);
    return dir;
}

ExperimentConfig small_spiral_config() {
    ExperimentConfig config;
    config.curve = CurveSpec::defaults(CurveKind::archimedean_spiral);
    config.curve.sample_count = 24;
    config.iteration_sweep = {10, 25};
    config.methods = {Method::dea, Method::ga};
    config.dea.locations_count = 8;
    config.master_seed = 99;
    return config;
}

}  // namespace

TEST_CASE("sweep produces one row per iteration/method pair", "[experiment]") {
    const auto outcome = run_experiment(small_spiral_config());
    REQUIRE(outcome.table.rows.size() == 4);
    CHECK(outcome.table.rows[0].method == "dea");
    CHECK(outcome.table.rows[1].method == "ga");
    CHECK(outcome.table.rows[0].iterations == 10);
    CHECK(outcome.table.rows[2].iterations == 25);
    CHECK(outcome.any_feasible());
}

TEST_CASE("rows satisfy the cost identity", "[experiment]") {
    const auto outcome = run_experiment(small_spiral_config());
    for (const auto& row : outcome.table.rows) {
        if (!std::isfinite(row.cost)) continue;
        const double expected = row.control_points * std::max(row.euclidean_distance,
                                                              kDistanceFloor);
        CHECK(std::abs(row.cost - expected) <= 1e-9 * expected);
        CHECK(row.rmse == row.euclidean_distance / std::sqrt(24.0));
    }
}

TEST_CASE("experiments reproduce except for wall time", "[experiment]") {
    const auto a = run_experiment(small_spiral_config());
    const auto b = run_experiment(small_spiral_config());
    REQUIRE(a.table.rows.size() == b.table.rows.size());
    for (std::size_t i = 0; i < a.table.rows.size(); ++i) {
        CHECK(a.table.rows[i].seed == b.table.rows[i].seed);
        CHECK(a.table.rows[i].rmse == b.table.rows[i].rmse);
        CHECK(a.table.rows[i].euclidean_distance == b.table.rows[i].euclidean_distance);
        CHECK(a.table.rows[i].control_points == b.table.rows[i].control_points);
        CHECK(a.table.rows[i].cost == b.table.rows[i].cost);
        CHECK(a.table.rows[i].fitness == b.table.rows[i].fitness);
    }
    CHECK(a.best_cost == b.best_cost);
}

TEST_CASE("repeats add rows with distinct derived seeds", "[experiment]") {
    auto config = small_spiral_config();
    config.methods = {Method::dea};
    config.iteration_sweep = {10};
    config.repeats = 3;
    const auto outcome = run_experiment(config);
    REQUIRE(outcome.table.rows.size() == 3);
    CHECK(outcome.table.rows[0].seed != outcome.table.rows[1].seed);
    CHECK(outcome.table.rows[1].seed != outcome.table.rows[2].seed);
}

TEST_CASE("config validation", "[experiment]") {
    auto config = small_spiral_config();
    config.iteration_sweep = {};
    CHECK_THROWS_AS(run_experiment(config), std::domain_error);
    config.iteration_sweep = {25, 10};
    CHECK_THROWS_AS(run_experiment(config), std::domain_error);
    config = small_spiral_config();
    config.methods = {};
    CHECK_THROWS_AS(run_experiment(config), std::domain_error);
}

TEST_CASE("emit_outputs writes table, curve, and svg files", "[experiment]") {
    const auto dir = temp_dir();
    const auto outcome = run_experiment(small_spiral_config());
    OutputPaths paths{dir / "table.csv", dir / "plot.svg", dir / "curve.json"};
    emit_outputs(outcome, paths);

    REQUIRE(std::filesystem::exists(paths.table));
    REQUIRE(std::filesystem::exists(dir / "table.json"));
    REQUIRE(std::filesystem::exists(paths.svg));
    REQUIRE(std::filesystem::exists(paths.curve));

    const auto parsed = results_from_csv(load_text(paths.table));
    CHECK(parsed.rows.size() == 4);
    const auto curve = curve_from_json(nlohmann::json::parse(load_text(paths.curve)));
    CHECK(std::get<BSplineCurve<2>>(curve).degree() == 3);
    std::filesystem::remove_all(dir);
}

TEST_CASE("cli generate then fit from csv", "[experiment][cli]") {
    const auto dir = temp_dir();
    const auto csv = (dir / "spiral.csv").string();
    CHECK(run_cli({"generate", "--curve", "spiral", "--samples", "24", "--out", csv}) == 0);

    const auto& pts = std::get<std::vector<Vec2>>(load_points_csv(csv));
    CHECK(pts.size() == 24);

    const int code = run_cli({"fit", "--curve", "csv", "--csv", csv, "--method", "dea",
                              "--iterations", "5,10", "--locations", "6", "--seed", "3",
                              "--out-table", (dir / "t.csv").string(),
                              "--out-svg", (dir / "p.svg").string(),
                              "--out-curve", (dir / "c.json").string()});
    CHECK(code == 0);
    const auto table = results_from_csv(load_text(dir / "t.csv"));
    CHECK(table.rows.size() == 2);
    std::filesystem::remove_all(dir);
}

TEST_CASE("cli exit codes", "[experiment][cli]") {
    const auto dir = temp_dir();

    // usage: unknown option
    CHECK(run_cli({"fit", "--nope"}) == kExitUsage);
    // usage: missing required output paths
    CHECK(run_cli({"fit", "--curve", "spiral", "--iterations", "5"}) == kExitUsage);

    // format: malformed csv
    const auto bad = dir / "bad.csv";
    save_text(bad, "1,2\n3,4,5\n");
    CHECK(run_cli({"fit", "--curve", "csv", "--csv", bad.string(), "--iterations", "5",
                   "--out-table", (dir / "t.csv").string(), "--out-svg",
                   (dir / "p.svg").string(), "--out-curve", (dir / "c.json").string()}) ==
          kExitFormat);

    // infeasible: 3 points cannot support a cubic on any genome
    const auto tiny = dir / "tiny.csv";
    save_text(tiny, "0,0\n1,1\n2,0\n");
    CHECK(run_cli({"fit", "--curve", "csv", "--csv", tiny.string(), "--iterations", "5",
                   "--locations", "4", "--out-table", (dir / "t2.csv").string(), "--out-svg",
                   (dir / "p2.svg").string(), "--out-curve", (dir / "c2.json").string()}) ==
          kExitInfeasible);
    // the table still records the infeasible rows
    const auto table = results_from_csv(load_text(dir / "t2.csv"));
    REQUIRE(table.rows.size() == 1);
    CHECK(table.rows[0].fitness == 0.0);
    CHECK(std::isinf(table.rows[0].cost));

    std::filesystem::remove_all(dir);
}

TEST_CASE("cli angle override changes generated points", "[experiment][cli]") {
    const auto dir = temp_dir();
    const auto deg = dir / "deg.csv";
    const auto rad = dir / "rad.csv";
    CHECK(run_cli({"generate", "--curve", "vivaldi", "--samples", "11", "--out",
                   deg.string()}) == 0);
    CHECK(run_cli({"generate", "--curve", "vivaldi", "--samples", "11", "--t-min", "-6.28",
                   "--t-max", "6.28", "--angles", "radians", "--out", rad.string()}) == 0);
    CHECK(load_text(deg) != load_text(rad));
    std::filesystem::remove_all(dir);
}
