#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "benchmark_curves.hpp"
#include "csv.hpp"
#include "dea.hpp"
#include "fit.hpp"
#include "ga.hpp"
#include "genome.hpp"
#include "parameterize.hpp"
#include "results.hpp"
#include "rng.hpp"
#include "serialize.hpp"
#include "svg.hpp"

namespace knotfit {

enum class CurveKind { epitrochoid, archimedean_spiral, vivaldi, csv };

inline const char* to_string(CurveKind k) noexcept {
    switch (k) {
        case CurveKind::epitrochoid: return "epitrochoid";
        case CurveKind::archimedean_spiral: return "spiral";
        case CurveKind::vivaldi: return "vivaldi";
        case CurveKind::csv: return "csv";
    }
    return "?";
}

// Benchmark curve selection with the standard benchmark defaults baked in.
struct CurveSpec {
    CurveKind kind = CurveKind::epitrochoid;
    double a = 5.0;
    double b = 1.0;
    double h = 4.0;
    double t_min = -180.0;
    double t_max = 180.0;
    int sample_count = 361;
    std::optional<AngleUnit> angle_unit;  // unset: degrees for epitrochoid/vivaldi, radians for spiral
    std::filesystem::path csv_path;

    static CurveSpec defaults(CurveKind kind) {
        CurveSpec spec;
        spec.kind = kind;
        switch (kind) {
            case CurveKind::epitrochoid:
                break;  // a=5, b=1, h=4, t in [-180, 180] deg, 361 points
            case CurveKind::archimedean_spiral:
                spec.a = 2.0;
                spec.t_min = 0.0;
                spec.t_max = std::numbers::pi;
                spec.sample_count = 100;
                break;
            case CurveKind::vivaldi:
                spec.a = 0.5;
                spec.t_min = -360.0;
                spec.t_max = 360.0;
                spec.sample_count = 241;
                break;
            case CurveKind::csv:
                break;
        }
        return spec;
    }
};

inline PointData materialize(const CurveSpec& spec) {
    switch (spec.kind) {
        case CurveKind::epitrochoid:
            return epitrochoid(spec.a, spec.b, spec.h, spec.t_min, spec.t_max, spec.sample_count,
                               spec.angle_unit.value_or(AngleUnit::degrees));
        case CurveKind::archimedean_spiral:
            return archimedean_spiral(spec.a, spec.t_min, spec.t_max, spec.sample_count,
                                      spec.angle_unit.value_or(AngleUnit::radians));
        case CurveKind::vivaldi:
            return vivaldi(spec.a, spec.t_min, spec.t_max, spec.sample_count,
                           spec.angle_unit.value_or(AngleUnit::degrees));
        case CurveKind::csv:
            return load_points_csv(spec.csv_path);
    }
    throw std::domain_error("materialize: unknown curve kind");
}

enum class Method { dea, ga };

inline const char* to_string(Method m) noexcept {
    return m == Method::dea ? "dea" : "ga";
}

struct ExperimentConfig {
    CurveSpec curve;
    std::vector<Method> methods{Method::dea};
    std::vector<int> iteration_sweep{100};
    dea::Config dea;
    ga::Config ga;
    ParamMethod param_method = ParamMethod::centripetal;
    int degree = 3;
    int repeats = 1;
    std::uint64_t master_seed = 1;
};

struct ExperimentOutcome {
    ResultsTable table;
    PointData points;
    std::optional<CurveData> best_curve;  // lowest-cost feasible fit across all rows
    double best_cost = std::numeric_limits<double>::infinity();

    bool any_feasible() const noexcept { return best_curve.has_value(); }
};

namespace detail {

// Memoizing fitness over genomes. Pure by construction (evaluate_genome is
// deterministic), so caching only saves repeated solves as the optimizer
// converges onto few distinct genomes.
template <std::size_t N>
class GenomeFitness {
  public:
    GenomeFitness(std::span<const Vec<N>> points, const ParameterAssignment& assignment,
                  int degree)
        : points_(points), assignment_(assignment), degree_(degree),
          key_(assignment.size(), '0') {}

    // DEA location: free-bit alternative indices (0/1), endpoints implied.
    double operator()(std::span<const int> location) {
        key_.assign(key_.size(), '0');
        for (std::size_t i = 0; i < location.size(); ++i) key_[i + 1] = location[i] ? '1' : '0';
        return evaluate_key();
    }

    // GA genome: full bitstring including the pinned endpoints.
    double from_bits(std::span<const std::uint8_t> bits) {
        key_.assign(key_.size(), '0');
        for (std::size_t i = 0; i < bits.size(); ++i) key_[i] = bits[i] ? '1' : '0';
        return evaluate_key();
    }

  private:
    double evaluate_key() {
        if (const auto it = cache_.find(key_); it != cache_.end()) return it->second;
        std::vector<std::uint8_t> bits(key_.size());
        for (std::size_t i = 0; i < key_.size(); ++i) bits[i] = key_[i] == '1';
        const auto record = evaluate_genome(KnotGenome(std::move(bits)), points_, assignment_,
                                            degree_);
        cache_.emplace(key_, record.fitness);
        return record.fitness;
    }

    std::span<const Vec<N>> points_;
    const ParameterAssignment& assignment_;
    int degree_;
    std::string key_;
    std::unordered_map<std::string, double> cache_;
};

template <std::size_t N>
ExperimentOutcome run_experiment_impl(const ExperimentConfig& config,
                                      std::vector<Vec<N>> points) {
    const ParameterAssignment assignment =
        parameterize(std::span<const Vec<N>>(points), config.param_method);
    const std::size_t count = points.size();
    const int free_bits = static_cast<int>(count) - 2;

    dea::AlternativesModel<int> model;
    model.alternatives.assign(free_bits, {0, 1});

    ExperimentOutcome outcome;
    std::uint64_t row_index = 0;
    for (const int iterations : config.iteration_sweep) {
        for (const Method method : config.methods) {
            for (int repeat = 0; repeat < config.repeats; ++repeat, ++row_index) {
                const std::uint64_t seed = derive_seed(config.master_seed, row_index);
                GenomeFitness<N> fitness(points, assignment, config.degree);

                const auto start = std::chrono::steady_clock::now();
                std::optional<KnotGenome> best;
                if (method == Method::dea) {
                    dea::Config dea_config = config.dea;
                    dea_config.loops_number = iterations;
                    dea_config.seed = seed;
                    const auto result = dea::run(model, std::ref(fitness), dea_config);
                    std::vector<std::uint8_t> free(result.best_location.size());
                    for (std::size_t i = 0; i < free.size(); ++i)
                        free[i] = static_cast<std::uint8_t>(result.best_location[i]);
                    best = KnotGenome::from_free_bits(free);
                } else {
                    ga::Config ga_config = config.ga;
                    ga_config.generations = iterations;
                    ga_config.population_size = config.dea.locations_count;  // same budget
                    ga_config.seed = seed;
                    const auto result = ga::run(
                        [&fitness](std::span<const std::uint8_t> bits) {
                            return fitness.from_bits(bits);
                        },
                        static_cast<int>(count), ga_config);
                    best = KnotGenome(result.best);
                }
                const double wall_ms =
                    std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                              start)
                        .count();

                const auto record = evaluate_genome(*best, std::span<const Vec<N>>(points),
                                                    assignment, config.degree);
                ResultRow row;
                row.iterations = iterations;
                row.method = to_string(method);
                row.control_points = best->selected_count() + config.degree + 1;
                row.seed = seed;
                row.wall_time_ms = wall_ms;
                if (record.feasible) {
                    row.rmse = record.report->rmse;
                    row.euclidean_distance = record.report->euclidean_distance;
                    row.cost = record.cost;
                    row.fitness = record.fitness;
                    if (record.cost < outcome.best_cost) {
                        outcome.best_cost = record.cost;
                        outcome.best_curve = record.report->curve;
                    }
                } else {
                    row.rmse = std::numeric_limits<double>::infinity();
                    row.euclidean_distance = std::numeric_limits<double>::infinity();
                    row.cost = std::numeric_limits<double>::infinity();
                    row.fitness = 0.0;
                }
                outcome.table.rows.push_back(std::move(row));
            }
        }
    }
    outcome.points = std::move(points);
    return outcome;
}

}  // namespace detail

// One row per (iteration count, method, repeat), seeds derived from the master
// seed by row index. Infeasible optimizer outcomes become rows with fitness 0
// and infinite cost; the sweep never aborts.
inline ExperimentOutcome run_experiment(const ExperimentConfig& config) {
    if (config.iteration_sweep.empty())
        throw std::domain_error("experiment: iteration sweep must be non-empty");
    for (std::size_t i = 0; i < config.iteration_sweep.size(); ++i) {
        if (config.iteration_sweep[i] < 1)
            throw std::domain_error("experiment: iteration counts must be >= 1");
        if (i > 0 && config.iteration_sweep[i] <= config.iteration_sweep[i - 1])
            throw std::domain_error("experiment: iteration sweep must be ascending");
    }
    if (config.methods.empty()) throw std::domain_error("experiment: no method selected");
    if (config.repeats < 1) throw std::domain_error("experiment: repeats must be >= 1");
    if (config.degree < 1) throw std::domain_error("experiment: degree must be >= 1");

    PointData data = materialize(config.curve);
    return std::visit(
        [&](auto& points) { return detail::run_experiment_impl(config, std::move(points)); },
        data);
}

struct OutputPaths {
    std::filesystem::path table;  // results CSV; JSON twin written next to it
    std::filesystem::path svg;
    std::filesystem::path curve;
};

// Results CSV + JSON always; fitted-curve JSON and the SVG overlay only when
// some row produced a feasible fit.
inline void emit_outputs(const ExperimentOutcome& outcome, const OutputPaths& paths) {
    if (!paths.table.empty()) {
        save_text(paths.table, results_to_csv(outcome.table));
        std::filesystem::path json_path = paths.table;
        json_path.replace_extension(".json");
        save_text(json_path, results_to_json(outcome.table).dump(2) + "\n");
    }
    if (!outcome.best_curve) return;
    if (!paths.curve.empty())
        save_text(paths.curve, curve_to_json(*outcome.best_curve).dump(2) + "\n");
    if (!paths.svg.empty()) {
        const std::string svg = std::visit(
            [&](const auto& curve) {
                constexpr std::size_t dim = std::decay_t<decltype(curve)>::dim;
                const auto& points = std::get<std::vector<Vec<dim>>>(outcome.points);
                return render_overlay_svg(std::span<const Vec<dim>>(points), curve);
            },
            *outcome.best_curve);
        save_text(paths.svg, svg);
    }
}

}  // namespace knotfit
