#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

#include "rng.hpp"

namespace knotfit::ga {

// Plain textbook GA over bitstrings: tournament selection, one-point
// crossover, per-bit flip mutation, elitism. The first and last bit are
// pinned to 0 (endpoint parameters are already end knots).

struct Config {
    int population_size = 40;
    int generations = 100;
    double crossover_rate = 0.9;
    std::optional<double> mutation_rate;  // per free bit; default 1/genome_length
    int tournament_size = 3;
    int elitism_count = 1;
    std::uint64_t seed = 1;
};

struct Result {
    std::vector<std::uint8_t> best;
    double best_fitness = 0.0;
    std::vector<double> best_fitness_trace;  // best-ever after each generation
};

namespace detail {

inline int tournament_pick(std::span<const double> fitnesses, int tournament_size,
                           std::mt19937_64& rng) {
    int winner = uniform_index(rng, static_cast<int>(fitnesses.size()));
    for (int k = 1; k < tournament_size; ++k) {
        const int challenger = uniform_index(rng, static_cast<int>(fitnesses.size()));
        if (fitnesses[challenger] > fitnesses[winner]) winner = challenger;
    }
    return winner;
}

}  // namespace detail

template <typename F>
Result run(F&& fitness, int genome_length, const Config& config) {
    if (genome_length < 3)
        throw std::domain_error("ga: genome_length must be >= 3 (two pinned endpoint bits)");
    if (config.population_size < 1) throw std::domain_error("ga: population_size must be >= 1");
    if (config.generations < 1) throw std::domain_error("ga: generations must be >= 1");
    if (!(config.crossover_rate >= 0.0 && config.crossover_rate <= 1.0))
        throw std::domain_error("ga: crossover_rate outside [0,1]");
    const double mutation = config.mutation_rate.value_or(1.0 / genome_length);
    if (!(mutation >= 0.0 && mutation <= 1.0))
        throw std::domain_error("ga: mutation_rate outside [0,1]");
    if (config.tournament_size < 1 || config.tournament_size > config.population_size)
        throw std::domain_error("ga: tournament_size outside [1, population_size]");
    if (config.elitism_count < 0 || config.elitism_count >= config.population_size)
        throw std::domain_error("ga: elitism_count must be < population_size");

    std::mt19937_64 rng(config.seed);
    const int free_first = 1;
    const int free_last = genome_length - 2;

    std::vector<std::vector<std::uint8_t>> population(
        config.population_size, std::vector<std::uint8_t>(genome_length, 0));
    for (auto& genome : population)
        for (int b = free_first; b <= free_last; ++b)
            genome[b] = static_cast<std::uint8_t>(uniform_index(rng, 2));

    std::vector<double> fitnesses(config.population_size);
    auto evaluate_all = [&] {
        for (int i = 0; i < config.population_size; ++i)
            fitnesses[i] = fitness(std::span<const std::uint8_t>(population[i]));
    };
    evaluate_all();

    Result result;
    result.best_fitness = -1.0;
    auto track_best = [&] {
        for (int i = 0; i < config.population_size; ++i)
            if (fitnesses[i] > result.best_fitness) {
                result.best_fitness = fitnesses[i];
                result.best = population[i];
            }
    };
    track_best();

    std::vector<int> order(config.population_size);
    for (int gen = 0; gen < config.generations; ++gen) {
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return fitnesses[a] > fitnesses[b]; });

        std::vector<std::vector<std::uint8_t>> next;
        next.reserve(config.population_size);
        for (int e = 0; e < config.elitism_count; ++e) next.push_back(population[order[e]]);

        while (static_cast<int>(next.size()) < config.population_size) {
            auto child_a = population[detail::tournament_pick(fitnesses, config.tournament_size, rng)];
            auto child_b = population[detail::tournament_pick(fitnesses, config.tournament_size, rng)];
            if (unit_double(rng) < config.crossover_rate) {
                const int cut = 1 + uniform_index(rng, genome_length - 2);  // in [1, len-2]
                for (int b = cut; b < genome_length; ++b) std::swap(child_a[b], child_b[b]);
            }
            for (auto* child : {&child_a, &child_b})
                for (int b = free_first; b <= free_last; ++b)
                    if (unit_double(rng) < mutation) (*child)[b] ^= 1;
            next.push_back(std::move(child_a));
            if (static_cast<int>(next.size()) < config.population_size)
                next.push_back(std::move(child_b));
        }
        population = std::move(next);
        evaluate_all();
        track_best();
        result.best_fitness_trace.push_back(result.best_fitness);
    }
    return result;
}

}  // namespace knotfit::ga
