#include <catch_amalgamated.hpp>

#include <cmath>
#include <numeric>
#include <random>

#include <knotfit/dea.hpp>

using namespace knotfit;

namespace {

dea::AlternativesModel<int> binary_model(int variables) {
    dea::AlternativesModel<int> model;
    model.alternatives.assign(variables, {0, 1});
    return model;
}

dea::State state_with(std::vector<std::vector<int>> locations, std::vector<int> la_sizes) {
    dea::State state;
    state.locations = std::move(locations);
    for (int la : la_sizes) state.cumulative.emplace_back(la, 0.0);
    return state;
}

}  // namespace

TEST_CASE("convergence schedule endpoints and interior", "[dea]") {
    dea::Config config;
    config.pp_first = 0.1;
    config.power = 1.0;
    config.loops_number = 100;
    CHECK(dea::convergence_pp(1, config) == 0.1);
    CHECK(dea::convergence_pp(100, config) == 1.0);
    CHECK(dea::convergence_pp(50, config) ==
          Catch::Approx(0.1 + 0.9 * 49.0 / 99.0).margin(1e-15));

    double previous = 0.0;
    for (int loop = 1; loop <= 100; ++loop) {
        const double pp = dea::convergence_pp(loop, config);
        CHECK(pp >= previous);
        previous = pp;
    }

    config.loops_number = 1;
    CHECK(dea::convergence_pp(1, config) == 1.0);
    CHECK_THROWS_AS(dea::convergence_pp(2, config), std::domain_error);
}

TEST_CASE("cumulative fitness with no spreading", "[dea]") {
    auto state = state_with({{2}}, {5});
    dea::Config config;
    config.effective_radius = 0;
    const std::vector<double> fitnesses{3.5};
    dea::accumulate_fitness(state, fitnesses, config);
    CHECK(state.cumulative[0] == std::vector<double>{0, 0, 3.5, 0, 0});
    CHECK(state.best_location == std::vector<int>{2});
    CHECK(state.best_fitness == 3.5);
}

TEST_CASE("cumulative fitness with triangular spreading", "[dea]") {
    auto state = state_with({{2}}, {5});
    dea::Config config;
    config.effective_radius = 1;
    dea::accumulate_fitness(state, std::vector<double>{1.0}, config);
    CHECK(state.cumulative[0] == std::vector<double>{0, 0.5, 1.0, 0.5, 0});
}

TEST_CASE("cumulative fitness reflects at the edges", "[dea]") {
    auto state = state_with({{0}}, {5});
    dea::Config config;
    config.effective_radius = 1;
    dea::accumulate_fitness(state, std::vector<double>{1.0}, config);
    CHECK(state.cumulative[0] == std::vector<double>{1.5, 0.5, 0, 0, 0});

    auto top = state_with({{4}}, {5});
    dea::accumulate_fitness(top, std::vector<double>{1.0}, config);
    CHECK(top.cumulative[0] == std::vector<double>{0, 0, 0, 0.5, 1.5});
}

TEST_CASE("negative fitness is rejected", "[dea]") {
    auto state = state_with({{0}}, {3});
    dea::Config config;
    CHECK_THROWS_AS(dea::accumulate_fitness(state, std::vector<double>{-1.0}, config),
                    std::domain_error);
}

TEST_CASE("reflection conserves the spread mass", "[dea]") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        const int la = 1 + static_cast<int>(rng() % 8);
        dea::Config config;
        config.effective_radius = static_cast<int>(rng() % 4);
        const int alt = static_cast<int>(rng() % la);
        const double f = 0.25 + static_cast<double>(rng() % 100);

        auto state = state_with({{alt}}, {la});
        dea::accumulate_fitness(state, std::vector<double>{f}, config);

        double expected = 0.0;
        const int re = config.effective_radius;
        for (int k = -re; k <= re; ++k) expected += f * (re + 1 - std::abs(k)) / (re + 1.0);
        const double total =
            std::accumulate(state.cumulative[0].begin(), state.cumulative[0].end(), 0.0);
        REQUIRE(total == Catch::Approx(expected).margin(1e-12));
    }
}

TEST_CASE("probability assembly around the best location", "[dea]") {
    dea::Config config;

    // two alternatives: the single non-best alternative takes all of 1-PP
    auto two = state_with({{0}, {1}}, {2});
    dea::accumulate_fitness(two, std::vector<double>{1.0, 0.5}, config);
    auto probs = dea::finalize_probabilities(two, 0.7, config);
    CHECK(probs[0][0] == Catch::Approx(0.7).margin(1e-15));
    CHECK(probs[0][1] == Catch::Approx(0.3).margin(1e-15));

    // three alternatives with non-best AF {1, 3} and PP = 0.5
    auto three = state_with({{0}}, {3});
    three.best_location = {0};
    three.best_fitness = 1.0;
    three.cumulative[0] = {5.0, 1.0, 3.0};  // best entry is zeroed by finalize
    config.epsilon = 1e-15;                 // keep the epsilon shift negligible
    probs = dea::finalize_probabilities(three, 0.5, config);
    CHECK(probs[0][0] == Catch::Approx(0.5).margin(1e-12));
    CHECK(probs[0][1] == Catch::Approx(0.125).margin(1e-12));
    CHECK(probs[0][2] == Catch::Approx(0.375).margin(1e-12));

    // PP = 1 collapses onto the best alternative
    auto final_loop = state_with({{1}}, {4});
    dea::accumulate_fitness(final_loop, std::vector<double>{2.0}, config);
    probs = dea::finalize_probabilities(final_loop, 1.0, config);
    CHECK(probs[0][1] == 1.0);
    CHECK(probs[0][0] == 0.0);
    CHECK(probs[0][2] == 0.0);
    CHECK(probs[0][3] == 0.0);
}

TEST_CASE("probabilities sum to one for every variable", "[dea]") {
    std::mt19937_64 rng(8);
    dea::Config config;
    for (int trial = 0; trial < 100; ++trial) {
        const int nv = 1 + static_cast<int>(rng() % 5);
        std::vector<int> la(nv);
        for (auto& v : la) v = 1 + static_cast<int>(rng() % 6);
        std::vector<std::vector<int>> locations(3, std::vector<int>(nv));
        for (auto& loc : locations)
            for (int j = 0; j < nv; ++j) loc[j] = static_cast<int>(rng() % la[j]);
        auto state = state_with(locations, la);
        const std::vector<double> fitnesses{static_cast<double>(rng() % 10),
                                            static_cast<double>(rng() % 10),
                                            static_cast<double>(rng() % 10)};
        dea::accumulate_fitness(state, fitnesses, config);
        const double pp = static_cast<double>(rng() % 101) / 100.0;
        const auto probs = dea::finalize_probabilities(state, pp, config);
        for (const auto& pj : probs) {
            double sum = 0.0;
            for (double v : pj) {
                CHECK(v >= 0.0);
                sum += v;
            }
            REQUIRE(sum == Catch::Approx(1.0).margin(1e-12));
        }
    }
}

TEST_CASE("sampling follows the distribution", "[dea]") {
    dea::Config config;
    config.locations_count = 1;
    std::mt19937_64 rng(13);

    // degenerate distribution always picks the unit-mass alternative
    const std::vector<std::vector<double>> degenerate{{1.0, 0.0}, {1.0, 0.0}, {1.0, 0.0}};
    for (int trial = 0; trial < 50; ++trial) {
        const auto locations = dea::sample_locations(degenerate, config, rng);
        CHECK(locations[0] == std::vector<int>{0, 0, 0});
    }

    // empirical frequency of a 0.75 alternative over 1e5 draws
    const std::vector<std::vector<double>> biased{{0.25, 0.75}};
    int ones = 0;
    const int draws = 100000;
    for (int i = 0; i < draws; ++i) ones += dea::sample_locations(biased, config, rng)[0][0];
    CHECK(std::abs(static_cast<double>(ones) / draws - 0.75) <= 0.01);
}

TEST_CASE("run finds the better of two alternatives", "[dea]") {
    dea::Config config;
    config.locations_count = 5;
    config.loops_number = 20;
    config.seed = 123;
    const auto result = dea::run(
        binary_model(1), [](std::span<const int> loc) { return loc[0] == 1 ? 1.0 : 0.0; },
        config);
    CHECK(result.best_location == std::vector<int>{1});
    CHECK(result.best_fitness == 1.0);
}

TEST_CASE("constant fitness is returned unchanged", "[dea]") {
    dea::Config config;
    config.locations_count = 4;
    config.loops_number = 10;
    const auto result =
        dea::run(binary_model(6), [](std::span<const int>) { return 2.5; }, config);
    CHECK(result.best_fitness == 2.5);
}

TEST_CASE("best-ever trace is monotone and runs reproduce bit-for-bit", "[dea]") {
    dea::Config config;
    config.locations_count = 8;
    config.loops_number = 60;
    config.seed = 999;
    auto fitness = [](std::span<const int> loc) {
        double score = 0.0;
        for (std::size_t j = 0; j < loc.size(); ++j)
            score += loc[j] == (j % 2 ? 1 : 0) ? 1.0 : 0.0;
        return score;
    };
    const auto a = dea::run(binary_model(10), fitness, config);
    const auto b = dea::run(binary_model(10), fitness, config);
    CHECK(a.best_location == b.best_location);
    CHECK(a.best_fitness == b.best_fitness);
    REQUIRE(a.best_fitness_trace == b.best_fitness_trace);
    for (std::size_t i = 1; i < a.best_fitness_trace.size(); ++i)
        CHECK(a.best_fitness_trace[i] >= a.best_fitness_trace[i - 1]);
}

TEST_CASE("config validation", "[dea]") {
    dea::Config config;
    config.effective_radius = 1;  // binary model: max LA/4 = 0
    CHECK_THROWS_AS(
        dea::run(binary_model(3), [](std::span<const int>) { return 0.0; }, config),
        std::domain_error);
    config.effective_radius = 0;
    config.pp_first = 1.5;
    CHECK_THROWS_AS(
        dea::run(binary_model(3), [](std::span<const int>) { return 0.0; }, config),
        std::domain_error);
}
