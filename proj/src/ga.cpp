#include "dgsite/ga.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "dgsite/common.hpp"

namespace dgsite {

void validate(const GaConfig& cfg) {
    if (cfg.population_size < 2) throw ValidationError("population_size must be at least 2");
    if (cfg.iterations < 1) throw ValidationError("iterations must be at least 1");
    if (cfg.crossover_rate < 0.0 || cfg.crossover_rate > 1.0)
        throw ValidationError("crossover_rate must be in [0, 1]");
    if (cfg.mutation_rate < 0.0 || cfg.mutation_rate > 1.0)
        throw ValidationError("mutation_rate must be in [0, 1]");
    if (cfg.elite_count < 0 || cfg.elite_count >= cfg.population_size)
        throw ValidationError("elite_count must be smaller than the population");
    if (cfg.tournament_size < 2) throw ValidationError("tournament_size must be at least 2");
}

std::vector<CandidateSolution> init_population(const GaConfig& cfg,
                                               std::span<const int> candidate_buses,
                                               const SizeBounds& bounds, Rng& rng) {
    if (candidate_buses.empty()) throw ValidationError("candidate bus set is empty");
    std::vector<CandidateSolution> population;
    population.reserve(cfg.population_size);
    for (int i = 0; i < cfg.population_size; ++i) {
        CandidateSolution cand;
        cand.bus = candidate_buses[rng.uniform_int(0, static_cast<int>(candidate_buses.size()) - 1)];
        cand.p_dg_kw = rng.uniform(bounds.min_kw, bounds.max_kw);
        population.push_back(cand);
    }
    return population;
}

const Individual& tournament_select(std::span<const Individual> population, int tournament_size,
                                    Rng& rng) {
    // Partial Fisher-Yates: distinct entrants and a fixed number of draws.
    const int n = static_cast<int>(population.size());
    const int entrants = std::min(tournament_size, n);
    std::vector<int> indices(n);
    std::iota(indices.begin(), indices.end(), 0);
    int best = -1;
    for (int k = 0; k < entrants; ++k) {
        std::swap(indices[k], indices[rng.uniform_int(k, n - 1)]);
        if (best < 0 || population[indices[k]].f < population[best].f) best = indices[k];
    }
    return population[best];
}

std::pair<CandidateSolution, CandidateSolution> crossover(const CandidateSolution& a,
                                                          const CandidateSolution& b,
                                                          double crossover_rate, Rng& rng) {
    CandidateSolution c1 = a;
    CandidateSolution c2 = b;
    if (rng.bernoulli(crossover_rate)) {
        if (rng.bernoulli(0.5)) std::swap(c1.bus, c2.bus);
        double alpha = rng.uniform();
        c1.p_dg_kw = alpha * a.p_dg_kw + (1.0 - alpha) * b.p_dg_kw;
        c2.p_dg_kw = (1.0 - alpha) * a.p_dg_kw + alpha * b.p_dg_kw;
    }
    return {c1, c2};
}

CandidateSolution mutate(const CandidateSolution& ind, double mutation_rate,
                         std::span<const int> candidate_buses, const SizeBounds& bounds,
                         Rng& rng) {
    CandidateSolution out = ind;
    if (rng.bernoulli(mutation_rate))
        out.bus = candidate_buses[rng.uniform_int(0, static_cast<int>(candidate_buses.size()) - 1)];
    if (rng.bernoulli(mutation_rate)) {
        double step = rng.uniform(-0.1, 0.1) * (bounds.max_kw - bounds.min_kw);
        out.p_dg_kw = std::clamp(out.p_dg_kw + step, bounds.min_kw, bounds.max_kw);
    }
    return out;
}

GaRun run_ga(const GaConfig& cfg, const ObjectiveContext& ctx, const WeightVector& weights,
             std::span<const int> candidate_buses, const GenerationObserver& observer) {
    validate(cfg);

    Rng rng(cfg.seed);
    GaRun run;
    double best_f = std::numeric_limits<double>::infinity();

    auto evaluated = [&](const CandidateSolution& cand) {
        auto breakdown = evaluate(ctx, cand, weights);
        ++run.evaluations;
        if (breakdown.f < best_f) {
            best_f = breakdown.f;
            run.best = cand;
            run.best_breakdown = breakdown;
        }
        return Individual{cand, breakdown.f};
    };

    std::vector<Individual> population;
    population.reserve(cfg.population_size);
    for (const auto& cand : init_population(cfg, candidate_buses, ctx.bounds(), rng))
        population.push_back(evaluated(cand));

    run.history.reserve(cfg.iterations);
    for (int gen = 0; gen < cfg.iterations; ++gen) {
        std::stable_sort(population.begin(), population.end(),
                         [](const Individual& a, const Individual& b) { return a.f < b.f; });

        std::vector<Individual> next(population.begin(), population.begin() + cfg.elite_count);
        next.reserve(cfg.population_size);
        while (static_cast<int>(next.size()) < cfg.population_size) {
            const auto& p1 = tournament_select(population, cfg.tournament_size, rng);
            const auto& p2 = tournament_select(population, cfg.tournament_size, rng);
            auto [c1, c2] = crossover(p1.cand, p2.cand, cfg.crossover_rate, rng);
            c1 = mutate(c1, cfg.mutation_rate, candidate_buses, ctx.bounds(), rng);
            c2 = mutate(c2, cfg.mutation_rate, candidate_buses, ctx.bounds(), rng);
            next.push_back(evaluated(c1));
            if (static_cast<int>(next.size()) < cfg.population_size) next.push_back(evaluated(c2));
        }
        population = std::move(next);
        run.history.push_back(best_f);
        if (observer) observer(gen, population);
    }
    return run;
}

} // namespace dgsite
