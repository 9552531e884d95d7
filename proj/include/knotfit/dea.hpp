#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

#include "rng.hpp"

namespace knotfit::dea {

// Discrete dolphin echolocation: per-variable categorical sampling sharpened
// around the loop's best location by a convergence schedule PP.

struct Config {
    int locations_count = 20;  // N_L
    int loops_number = 100;
    double pp_first = 0.1;    // PP at loop 1; grows to 1 at the final loop
    double power = 1.0;       // exponent of the convergence curve
    int effective_radius = 0; // Re: neighborhood half-width in alternative index space
    double epsilon = 1e-9;    // AF floor, relative to the loop's best fitness
    std::uint64_t seed = 1;
};

// Per-variable alternative values, sorted; the engine works on indices into
// these lists, callers map indices back to values.
template <typename Alt>
struct AlternativesModel {
    std::vector<std::vector<Alt>> alternatives;

    int variables_count() const noexcept { return static_cast<int>(alternatives.size()); }
    int alternative_count(int variable) const noexcept {
        return static_cast<int>(alternatives[variable].size());
    }
    int max_alternative_count() const noexcept {
        std::size_t m = 0;
        for (const auto& a : alternatives) m = std::max(m, a.size());
        return static_cast<int>(m);
    }

    // Sorted either direction, distinct; reflection treats neighbors by index.
    void validate() const {
        for (const auto& a : alternatives) {
            if (a.empty())
                throw std::domain_error("alternatives model: every variable needs an alternative");
            bool ascending = true, descending = true;
            for (std::size_t i = 1; i < a.size(); ++i) {
                ascending = ascending && a[i - 1] < a[i];
                descending = descending && a[i] < a[i - 1];
            }
            if (!ascending && !descending)
                throw std::domain_error(
                    "alternatives model: alternatives must be sorted and distinct");
        }
    }
};

struct State {
    std::vector<std::vector<int>> locations;       // N_L x N_V alternative indices
    std::vector<std::vector<double>> cumulative;   // AF per variable, length LA_j
    std::vector<int> best_location;                // this loop's best
    double best_fitness = 0.0;
    int loop_index = 0;
};

struct Result {
    std::vector<int> best_location;
    double best_fitness = 0.0;
    std::vector<double> best_fitness_trace;  // best-ever after each loop
};

// Observer payload, handed out once per loop after probabilities are built.
struct LoopView {
    int loop = 0;
    double pp = 0.0;
    const State& state;
    const std::vector<std::vector<double>>& probabilities;
    std::span<const double> location_fitnesses;
    const std::vector<int>& best_ever_location;
    double best_ever_fitness = 0.0;
};
using LoopObserver = std::function<void(const LoopView&)>;

inline void validate(const Config& config, int max_alternative_count) {
    if (config.locations_count < 1) throw std::domain_error("dea: locations_count must be >= 1");
    if (config.loops_number < 1) throw std::domain_error("dea: loops_number must be >= 1");
    if (!(config.pp_first > 0.0 && config.pp_first < 1.0))
        throw std::domain_error("dea: pp_first must lie in (0,1)");
    if (!(config.power > 0.0)) throw std::domain_error("dea: power must be positive");
    if (config.effective_radius < 0) throw std::domain_error("dea: effective_radius must be >= 0");
    if (config.effective_radius > max_alternative_count / 4)
        throw std::domain_error("dea: effective_radius above 1/4 of the search space");
    if (!(config.epsilon > 0.0)) throw std::domain_error("dea: epsilon must be positive");
}

// PP(loop) = PP_1 + (1 - PP_1) * (loop^Power - 1) / (LoopsNumber^Power - 1).
// Endpoints are pinned exactly: PP_1 at loop 1, 1 at the final loop.
inline double convergence_pp(int loop_index, const Config& config) {
    if (loop_index < 1 || loop_index > config.loops_number)
        throw std::domain_error("convergence_pp: loop index outside the schedule");
    if (loop_index == config.loops_number) return 1.0;
    if (loop_index == 1) return config.pp_first;
    const double num = std::pow(static_cast<double>(loop_index), config.power) - 1.0;
    const double den = std::pow(static_cast<double>(config.loops_number), config.power) - 1.0;
    return config.pp_first + (1.0 - config.pp_first) * (num / den);
}

namespace detail {

// Out-of-range indices fold back as if a mirror sat on each edge:
// -m -> m-1 and (count-1)+m -> count-m.
inline int reflect_index(int index, int count) {
    while (index < 0 || index >= count) {
        if (index < 0)
            index = -index - 1;
        else
            index = 2 * count - 1 - index;
    }
    return index;
}

}  // namespace detail

template <typename Alt>
State initial_state(const AlternativesModel<Alt>& model, const Config& config,
                    std::mt19937_64& rng) {
    State state;
    state.cumulative.resize(model.variables_count());
    for (int j = 0; j < model.variables_count(); ++j)
        state.cumulative[j].assign(model.alternative_count(j), 0.0);
    state.locations.assign(config.locations_count, std::vector<int>(model.variables_count()));
    for (auto& location : state.locations)
        for (int j = 0; j < model.variables_count(); ++j)
            location[j] = uniform_index(rng, model.alternative_count(j));
    return state;
}

// Rebuilds AF from this loop's fitnesses: each location spreads its fitness
// over the alternatives within effective_radius of its own, with triangular
// weights (Re+1-|k|)/(Re+1) and reflective edges. Also records the loop best.
inline void accumulate_fitness(State& state, std::span<const double> location_fitnesses,
                               const Config& config) {
    if (location_fitnesses.size() != state.locations.size())
        throw std::domain_error("accumulate_fitness: one fitness per location required");
    for (double f : location_fitnesses)
        if (!(f >= 0.0)) throw std::domain_error("accumulate_fitness: fitness must be >= 0");

    for (auto& af : state.cumulative) std::fill(af.begin(), af.end(), 0.0);
    const int re = config.effective_radius;
    const double denom = re + 1.0;
    for (std::size_t i = 0; i < state.locations.size(); ++i) {
        const double f = location_fitnesses[i];
        const auto& location = state.locations[i];
        for (std::size_t j = 0; j < location.size(); ++j) {
            auto& af = state.cumulative[j];
            const int count = static_cast<int>(af.size());
            for (int k = -re; k <= re; ++k) {
                const double w = (re + 1 - std::abs(k)) / denom;
                af[detail::reflect_index(location[j] + k, count)] += w * f;
            }
        }
    }

    std::size_t best = 0;
    for (std::size_t i = 1; i < location_fitnesses.size(); ++i)
        if (location_fitnesses[i] > location_fitnesses[best]) best = i;
    state.best_location = state.locations[best];
    state.best_fitness = location_fitnesses[best];
}

// Adds the epsilon floor, zeroes the best alternatives, and assigns PP to the
// best alternative of each variable with the remaining 1-PP shared over the
// others in proportion to their AF. Consumes the AF buffers.
inline std::vector<std::vector<double>> finalize_probabilities(State& state, double pp,
                                                               const Config& config) {
    if (!(pp >= 0.0 && pp <= 1.0))
        throw std::domain_error("finalize_probabilities: pp outside [0,1]");
    if (state.best_location.size() != state.cumulative.size())
        throw std::domain_error("finalize_probabilities: accumulate_fitness has not run");

    double eps = config.epsilon * state.best_fitness;
    if (!(eps > 0.0)) eps = config.epsilon;

    std::vector<std::vector<double>> probabilities(state.cumulative.size());
    for (std::size_t j = 0; j < state.cumulative.size(); ++j) {
        auto& af = state.cumulative[j];
        auto& prob = probabilities[j];
        prob.assign(af.size(), 0.0);
        if (af.size() == 1) {
            prob[0] = 1.0;
            continue;
        }
        const int best = state.best_location[j];
        for (auto& v : af) v += eps;
        af[best] = 0.0;
        const double sum = std::accumulate(af.begin(), af.end(), 0.0);
        for (std::size_t i = 0; i < af.size(); ++i) prob[i] = (1.0 - pp) * af[i] / sum;
        prob[best] = pp;
    }
    return probabilities;
}

// Next locations: every variable of every location drawn independently,
// location-major / variable-minor, from one seeded stream.
inline std::vector<std::vector<int>> sample_locations(
    const std::vector<std::vector<double>>& probabilities, const Config& config,
    std::mt19937_64& rng) {
    std::vector<std::vector<int>> next(config.locations_count,
                                       std::vector<int>(probabilities.size()));
    for (auto& location : next)
        for (std::size_t j = 0; j < probabilities.size(); ++j)
            location[j] = sample_categorical(probabilities[j], rng);
    return next;
}

// Full optimization run. The fitness callback must be total (return 0 for
// infeasible locations) and pure. Returns the best-ever location (elitist
// tracking across loops) plus the best-ever fitness after each loop.
template <typename Alt, typename F>
Result run(const AlternativesModel<Alt>& model, F&& fitness, const Config& config,
           const LoopObserver& observer = {}) {
    model.validate();
    validate(config, model.max_alternative_count());

    std::mt19937_64 rng(config.seed);
    State state = initial_state(model, config, rng);

    Result result;
    result.best_fitness = -1.0;  // replaced by the first loop (fitness is >= 0)
    result.best_fitness_trace.reserve(config.loops_number);

    std::vector<double> fitnesses(config.locations_count);
    for (int loop = 1; loop <= config.loops_number; ++loop) {
        state.loop_index = loop;
        const double pp = convergence_pp(loop, config);
        for (std::size_t i = 0; i < state.locations.size(); ++i)
            fitnesses[i] = fitness(std::span<const int>(state.locations[i]));
        accumulate_fitness(state, fitnesses, config);
        if (state.best_fitness > result.best_fitness) {
            result.best_fitness = state.best_fitness;
            result.best_location = state.best_location;
        }
        result.best_fitness_trace.push_back(result.best_fitness);
        const auto probabilities = finalize_probabilities(state, pp, config);
        if (observer)
            observer(LoopView{loop, pp, state, probabilities, fitnesses, result.best_location,
                              result.best_fitness});
        if (loop < config.loops_number)
            state.locations = sample_locations(probabilities, config, rng);
    }
    return result;
}

}  // namespace knotfit::dea
