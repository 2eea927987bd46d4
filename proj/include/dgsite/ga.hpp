#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "dgsite/objective.hpp"
#include "dgsite/rng.hpp"

namespace dgsite {

struct GaConfig {
    int population_size = 40;
    int iterations = 30;
    double crossover_rate = 0.8;
    double mutation_rate = 0.1;
    int elite_count = 2;
    int tournament_size = 3;
    std::uint64_t seed = 1;
};

void validate(const GaConfig& cfg);

struct Individual {
    CandidateSolution cand;
    double f = 0.0;
};

struct GaRun {
    CandidateSolution best;
    ObjectiveBreakdown best_breakdown;
    std::vector<double> history; // best f after each generation; non-increasing
    long evaluations = 0;        // total objective calls
};

// Buses uniform over the candidate set, sizes uniform inside the bounds.
std::vector<CandidateSolution> init_population(const GaConfig& cfg,
                                               std::span<const int> candidate_buses,
                                               const SizeBounds& bounds, Rng& rng);

// Tournament over distinct individuals; the lowest f wins.
const Individual& tournament_select(std::span<const Individual> population, int tournament_size,
                                    Rng& rng);

// With probability crossover_rate the bus genes are swapped or kept
// (uniform discrete crossover) and the sizes are blended arithmetically;
// otherwise the children are copies. Children are always feasible.
std::pair<CandidateSolution, CandidateSolution> crossover(const CandidateSolution& a,
                                                          const CandidateSolution& b,
                                                          double crossover_rate, Rng& rng);

// Independently with probability mutation_rate: resample the bus uniformly,
// and perturb the size by a uniform step of 10% of the range, clipped.
CandidateSolution mutate(const CandidateSolution& ind, double mutation_rate,
                         std::span<const int> candidate_buses, const SizeBounds& bounds,
                         Rng& rng);

// Called after each generation with the new population; used for
// instrumentation in tests.
using GenerationObserver = std::function<void(int generation, std::span<const Individual>)>;

// Full cycle: init, evaluate, tournament selection, crossover, mutation,
// elitism. Deterministic for a fixed (seed, config, inputs).
GaRun run_ga(const GaConfig& cfg, const ObjectiveContext& ctx, const WeightVector& weights,
             std::span<const int> candidate_buses, const GenerationObserver& observer = {});

} // namespace dgsite
